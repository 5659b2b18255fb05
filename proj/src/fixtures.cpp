#include "migraph/fixtures.hpp"

namespace migraph::fixtures {

MigrationGraph fig1() {
    std::vector<Component> components;
    for (int i = 1; i <= 12; ++i) components.push_back({"v" + std::to_string(i), "", {}});
    std::vector<Edge> edges = {
        {"v12", "v9"}, {"v11", "v9"}, {"v10", "v9"}, {"v8", "v9"}, {"v9", "v7"},
        {"v7", "v8"},  {"v8", "v6"},  {"v7", "v5"},  {"v5", "v6"}, {"v6", "v5"},
        {"v6", "v4"},  {"v5", "v4"},  {"v4", "v3"},  {"v4", "v2"}, {"v4", "v1"},
    };
    return build_graph(std::move(components), std::move(edges));
}

MigrationGraph gitlab() {
    auto comp = [](const char* id, const char* label, const char* cluster) {
        return Component{id, label, {{"cluster", cluster}}};
    };
    std::vector<Component> components = {
        comp("web-clients", "WebClients", "nginx"),
        comp("nginx", "Nginx", "nginx"),
        comp("ssh-clients", "SSHClients", "ssh"),
        comp("gitlab-shell", "GitLab Shell", "ssh"),
        comp("workhorse", "Workhorse", "core"),
        comp("puma", "Puma", "core"),
        comp("gitaly", "Gitaly", "core"),
        comp("sidekiq", "Sidekiq", "core"),
        comp("postgresql", "PostgreSQL", "ds"),
        comp("redis", "Redis", "ds"),
        comp("object-storage", "ObjectStorage", "ds"),
        comp("ldap", "LDAP", "id"),
        comp("keycloak", "Keycloak", "id"),
        comp("smtp", "SMTP", "aux"),
        comp("mailroom", "Mailroom", "aux"),
        comp("prometheus", "Prometheus", "aux"),
        comp("kas", "KAS", "kas"),
        comp("agentk", "AgentK", "kas"),
        comp("pg-at-rest", "PostgreSQL data-at-rest encryption", "pg-at-rest"),
    };

    std::vector<Edge> edges;
    auto mutual = [&edges](const char* a, const char* b) {
        edges.push_back({a, b});
        edges.push_back({b, a});
    };
    // intra-cluster dependencies
    mutual("web-clients", "nginx");
    mutual("ssh-clients", "gitlab-shell");
    mutual("puma", "workhorse");
    mutual("puma", "gitaly");
    mutual("puma", "sidekiq");
    mutual("postgresql", "redis");
    mutual("postgresql", "object-storage");
    mutual("ldap", "keycloak");
    mutual("smtp", "mailroom");
    mutual("smtp", "prometheus");
    mutual("kas", "agentk");
    // cluster-to-cluster dependencies
    edges.push_back({"nginx", "workhorse"});
    edges.push_back({"gitlab-shell", "gitaly"});
    edges.push_back({"kas", "puma"});
    edges.push_back({"puma", "postgresql"});
    edges.push_back({"gitaly", "object-storage"});
    edges.push_back({"puma", "ldap"});
    edges.push_back({"sidekiq", "smtp"});

    return build_graph(std::move(components), std::move(edges));
}

}  // namespace migraph::fixtures
