#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "migraph/cli.hpp"
#include "migraph/dot_export.hpp"
#include "migraph/errors.hpp"
#include "migraph/fixtures.hpp"
#include "migraph/json_io.hpp"
#include "migraph/report.hpp"

using namespace migraph;

namespace {

const std::string kFixtureDir = MIGRAPH_FIXTURE_DIR;

std::string fig1_path() { return kFixtureDir + "/fig1.json"; }
std::string gitlab_path() { return kFixtureDir + "/gitlab.json"; }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
    std::size_t count = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size()))
        ++count;
    return count;
}

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    CliResult r;
    r.code = cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("serialization is canonical and matches the shipped fixtures") {
    CHECK(serialize_graph(fixtures::fig1()) == read_file(fig1_path()));
    CHECK(serialize_graph(fixtures::gitlab()) == read_file(gitlab_path()));

    for (const std::string& path : {fig1_path(), gitlab_path()}) {
        MigrationGraph g = load_graph_file(path);
        CHECK(serialize_graph(parse_graph(serialize_graph(g))) == serialize_graph(g));
    }
}

TEST_CASE("parse accepts minimal documents and ignores unknown keys") {
    MigrationGraph empty = parse_graph(
        R"({"format_version": "1", "components": [], "dependencies": []})");
    CHECK(empty.empty());
    CHECK(parse_graph(serialize_graph(empty)).empty());

    MigrationGraph g = parse_graph(R"({
        "format_version": "1",
        "generator": "something else",
        "components": [
            {"id": "b", "note": 3},
            {"id": "a", "label": "The A", "meta": {"tier": "1"}}
        ],
        "dependencies": [{"source": "b", "target": "a", "weight": 9}]
    })");
    CHECK(g.node_count() == 2);
    CHECK(g.edge_count() == 1);
    CHECK(g.component("a").label == "The A");
    CHECK(g.component("a").meta.at("tier") == "1");

    // both top-level arrays are mandatory
    CHECK_THROWS_AS(parse_graph(R"({"format_version": "1", "components": [{"id": "x"}]})"),
                    SchemaError);
}

TEST_CASE("parse rejects malformed and mis-shaped documents") {
    CHECK_THROWS_AS(parse_graph("not json at all"), SyntaxError);
    CHECK_THROWS_AS(parse_graph("{\"format_version\": \"1\""), SyntaxError);

    CHECK_THROWS_AS(parse_graph(R"({"components": []})"), SchemaError);
    CHECK_THROWS_AS(parse_graph(R"({"format_version": "2", "components": []})"), SchemaError);
    CHECK_THROWS_AS(parse_graph(R"({"format_version": "1", "components": {}})"), SchemaError);
    CHECK_THROWS_AS(parse_graph(R"({"format_version": "1", "components": [{"label": "x"}]})"),
                    SchemaError);
    CHECK_THROWS_AS(
        parse_graph(R"({"format_version": "1", "components": [{"id": "a", "label": 3}]})"),
        SchemaError);
    CHECK_THROWS_AS(
        parse_graph(R"({"format_version": "1", "components": [{"id": "a", "meta": [1]}]})"),
        SchemaError);
    CHECK_THROWS_AS(parse_graph(
                        R"({"format_version": "1", "components": [{"id": "a", "meta": {"k": 1}}]})"),
                    SchemaError);
    CHECK_THROWS_AS(
        parse_graph(
            R"({"format_version": "1", "components": [{"id": "a"}], "dependencies": [{"source": "a"}]})"),
        SchemaError);

    // element context in the message
    try {
        parse_graph(
            R"({"format_version": "1", "components": [{"id": "a"}, {"id": 7}], "dependencies": []})");
        FAIL("expected SchemaError");
    } catch (const SchemaError& e) {
        CHECK(std::string(e.what()).find("components[1]") != std::string::npos);
    }

    // graph-level validation still applies
    CHECK_THROWS_AS(
        parse_graph(
            R"({"format_version": "1", "components": [{"id": "a"}], "dependencies": [{"source": "a", "target": "zz"}]})"),
        UnknownEndpoint);

    CHECK_THROWS_AS(load_graph_file(temp_path("migraph_does_not_exist.json")), SyntaxError);
}

TEST_CASE("save and load round-trip through a file") {
    std::string path = temp_path("migraph_roundtrip.json");
    save_graph_file(fixtures::gitlab(), path);
    CHECK(serialize_graph(load_graph_file(path)) == serialize_graph(fixtures::gitlab()));
    std::filesystem::remove(path);
}

TEST_CASE("dot export modes") {
    MigrationGraph g = fixtures::fig1();

    std::string flat = export_dot(g, DotMode::flat);
    CHECK(flat.rfind("digraph migration {\n", 0) == 0);
    CHECK(flat.find("  \"v1\";\n") != std::string::npos);
    CHECK(flat.find("  \"v12\" -> \"v9\";\n") != std::string::npos);
    CHECK(count_occurrences(flat, "->") == 15);
    CHECK(flat.back() == '\n');

    std::string clustered = export_dot(g, DotMode::clustered);
    CHECK(count_occurrences(clustered, "subgraph cluster_") == 9);
    CHECK(count_occurrences(clustered, "style=dashed;") == 9);
    CHECK(count_occurrences(clustered, "->") == 15);

    std::string condensed = export_dot(g, DotMode::condensed);
    CHECK(count_occurrences(condensed, "[label=") == 9);
    CHECK(count_occurrences(condensed, "->") == 8);
    CHECK(condensed.find("c7 [label=\"v5 (2)\"];") != std::string::npos);
    CHECK(condensed.find("c8 [label=\"v7 (3)\"];") != std::string::npos);

    std::string labeled = export_dot(fixtures::gitlab(), DotMode::flat);
    CHECK(labeled.find("\"pg-at-rest\" [label=\"PostgreSQL data-at-rest encryption\"];") !=
          std::string::npos);

    for (DotMode mode : {DotMode::flat, DotMode::clustered, DotMode::condensed})
        CHECK(export_dot(MigrationGraph{}, mode) == "digraph migration {\n}\n");
}

TEST_CASE("round2 and format2") {
    CHECK(round2(1.23456) == doctest::Approx(1.23));
    CHECK(round2(1.237) == doctest::Approx(1.24));
    CHECK(round2(-1.237) == doctest::Approx(-1.24));
    CHECK(round2(8.0) == doctest::Approx(8.0));
    CHECK(format2(8.0) == "8.00");
    CHECK(format2(6.452842166007064) == "6.45");
    CHECK(format2(2.9444389791664403) == "2.94");
}

TEST_CASE("comparison report on fig1") {
    ComparisonReport r = compare_report(fixtures::fig1());
    CHECK(r.n == 12);
    REQUIRE(r.rows.size() == 5);

    CHECK(round2(r.rows[0].expected) == doctest::Approx(2.48));
    CHECK(round2(r.rows[0].observed) == doctest::Approx(1.33));
    CHECK(round2(r.rows[1].expected) == doctest::Approx(4.83));
    CHECK(r.rows[1].observed == doctest::Approx(9.0));
    CHECK(r.rows[1].observed_integral);
    CHECK(round2(r.rows[2].expected) == doctest::Approx(1.39));
    CHECK(round2(r.rows[2].observed) == doctest::Approx(0.71));
    CHECK(round2(r.rows[3].expected) == doctest::Approx(3.46));
    CHECK(r.rows[3].observed == doctest::Approx(5.0));
    CHECK(round2(r.rows[4].expected) == doctest::Approx(1.94));
    CHECK(r.rows[4].observed == doctest::Approx(5.0));

    std::string rendered = render_comparison(r);
    CHECK(rendered.rfind("metric                    | formula        | expected | observed\n",
                         0) == 0);
    CHECK(rendered.find("Cluster count             | n / ln n       |     4.83 | 9\n") !=
          std::string::npos);
}

TEST_CASE("comparison report on the gitlab model") {
    ComparisonReport r = compare_report(fixtures::gitlab());
    CHECK(r.n == 19);
    CHECK(round2(r.rows[0].expected) == doctest::Approx(2.94));
    CHECK(round2(r.rows[0].observed) == doctest::Approx(2.38));
    CHECK(round2(r.rows[1].expected) == doctest::Approx(6.45));
    CHECK(r.rows[1].observed == doctest::Approx(8.0));
    CHECK(round2(r.rows[2].expected) == doctest::Approx(1.48));
    CHECK(round2(r.rows[2].observed) == doctest::Approx(0.92));
    CHECK(round2(r.rows[3].expected) == doctest::Approx(4.36));
    CHECK(r.rows[3].observed == doctest::Approx(3.0));
    CHECK(round2(r.rows[4].expected) == doctest::Approx(2.19));
    CHECK(r.rows[4].observed == doctest::Approx(3.0));
}

TEST_CASE("comparison report edge cases") {
    MigrationGraph one = build_graph({{"solo", "", {}}}, {});
    ComparisonReport r = compare_report(one);
    CHECK(r.n == 1);
    for (const ComparisonRow& row : r.rows) CHECK(std::isnan(row.expected));
    CHECK(r.rows[0].observed == doctest::Approx(1.0));
    CHECK(r.rows[1].observed == doctest::Approx(1.0));
    CHECK(r.rows[2].observed == doctest::Approx(0.0));
    CHECK(r.rows[3].observed == doctest::Approx(1.0));

    std::string rendered = render_comparison(r);
    CHECK(rendered.find("|        - |") != std::string::npos);

    CHECK_THROWS_AS(compare_report(MigrationGraph{}), OutOfRange);
}

TEST_CASE("expected-behavior table rows") {
    CHECK(table1_row(10) == "10 | 2 | 4 | 1 | 2 | 3");
    CHECK(table1_row(100) == "100 | 5 | 22 | 2 | 5 | 10");
    CHECK(table1_row(1000) == "1000 | 7 | 145 | 5 | 21 | 32");
    CHECK(table1_row(10000) == "10000 | 9 | 1086 | 11 | 118 | 100");
    CHECK(table1_row(100000) == "100000 | 12 | 8686 | 27 | 754 | 316");
    CHECK(table1_row(1000000) == "1000000 | 14 | 72382 | 72 | 5239 | 1000");
    CHECK(table1_row(10000000) == "10000000 | 16 | 620421 | 196 | 38492 | 3162");
    CHECK(table1_row(100000000) == "100000000 | 18 | 5428681 | 543 | 294706 | 10000");
    CHECK(table1_row(1000000000) == "1000000000 | 21 | 48254942 | 1526 | 2328539 | 31623");

    std::string table = render_table1({10, 100});
    CHECK(table == "n | size | count | sd | depth(cons) | depth(optim)\n"
                   "10 | 2 | 4 | 1 | 2 | 3\n"
                   "100 | 5 | 22 | 2 | 5 | 10\n");
}

TEST_CASE("cli analyze") {
    CliResult r = run_cli({"analyze", fig1_path()});
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    CHECK(r.out.find("components: 12\n") != std::string::npos);
    CHECK(r.out.find("dependencies: 15\n") != std::string::npos);
    CHECK(r.out.find("clusters (length): 9\n") != std::string::npos);
    CHECK(r.out.find("depth: 5\n") != std::string::npos);
    CHECK(r.out.find("width: 3\n") != std::string::npos);
    CHECK(r.out.find("cluster sizes: min 1 | max 3 | mean 1.33 | sd 0.71\n") !=
          std::string::npos);
    CHECK(r.out.find("Cluster count") != std::string::npos);

    CliResult j = run_cli({"analyze", gitlab_path(), "--json"});
    CHECK(j.code == 0);
    nlohmann::json doc = nlohmann::json::parse(j.out);
    CHECK(doc["components"] == 19);
    CHECK(doc["dependencies"] == 29);
    CHECK(doc["length"] == 8);
    CHECK(doc["depth"] == 3);
    CHECK(doc["width"] == 4);
    REQUIRE(doc["comparison"].size() == 5);
    CHECK(doc["comparison"][1]["metric"] == "Cluster count");
    CHECK(doc["comparison"][1]["expected"].get<double>() ==
          doctest::Approx(6.452842166007064).epsilon(1e-12));
    CHECK(doc["comparison"][1]["observed"] == 8.0);
}

TEST_CASE("cli plan") {
    CliResult r = run_cli({"plan", fig1_path()});
    CHECK(r.code == 0);
    CHECK(r.out.find("length: 9\n") != std::string::npos);
    CHECK(r.out.find("depth: 5\n") != std::string::npos);
    CHECK(r.out.find("T(1): {v1} {v2} {v3}\n") != std::string::npos);
    CHECK(r.out.find("T(3): {v5,v6}\n") != std::string::npos);
    CHECK(r.out.find("T(4): {v7,v8,v9}\n") != std::string::npos);
    CHECK(r.out.find("strategies: 36\n") != std::string::npos);

    CliResult j = run_cli({"plan", fig1_path(), "--json"});
    CHECK(j.code == 0);
    nlohmann::json doc = nlohmann::json::parse(j.out);
    CHECK(doc["length"] == 9);
    CHECK(doc["depth"] == 5);
    CHECK(doc["strategy_count"] == "36");
    REQUIRE(doc["levels"].size() == 5);
    CHECK(doc["levels"][0] == nlohmann::json({{"v1"}, {"v2"}, {"v3"}}));
    CHECK(doc["levels"][4].size() == 3);
}

TEST_CASE("cli step") {
    CliResult r = run_cli({"step", fig1_path(), "--migrate", "v1"});
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    MigrationGraph next = parse_graph(r.out);
    CHECK(next.node_count() == 11);
    CHECK(next.edge_count() == 14);
    CHECK(!next.contains("v1"));

    CliResult noop = run_cli({"step", fig1_path(), "--migrate", "v4"});
    CHECK(noop.code == 0);
    CHECK(noop.err == "note: 'v4' is not migratable; graph unchanged\n");
    CHECK(noop.out == read_file(fig1_path()));

    std::string out_path = temp_path("migraph_step_out.json");
    CliResult to_file = run_cli({"step", fig1_path(), "--migrate", "v2", "-o", out_path});
    CHECK(to_file.code == 0);
    CHECK(to_file.out.empty());
    MigrationGraph stepped = load_graph_file(out_path);
    CHECK(stepped.node_count() == 11);
    CHECK(!stepped.contains("v2"));
    std::filesystem::remove(out_path);

    CliResult bad = run_cli({"step", fig1_path(), "--migrate", "zzz"});
    CHECK(bad.code == 1);
    CHECK(bad.err.rfind("error:", 0) == 0);
}

TEST_CASE("cli patterns") {
    CliResult r = run_cli({"patterns", fig1_path(), "--min-fan", "3"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "FanIn focus=v9 arity=4 members=v10,v11,v12,v8,v9\n"
          "FanOut focus=v4 arity=3 members=v1,v2,v3,v4\n"
          "MutualPair focus=v5 arity=2 members=v5,v6\n"
          "Cycle focus=v7 arity=3 members=v7,v8,v9\n"
          "summary: Isolated=0 FanIn=1 FanOut=1 MutualPair=1 Cycle=1\n"
          "arity histogram: 2=1 3=2 4=1\n");

    CliResult g = run_cli({"patterns", gitlab_path()});
    CHECK(g.code == 0);
    CHECK(g.out.find("Isolated focus=pg-at-rest arity=1 members=pg-at-rest\n") !=
          std::string::npos);
    CHECK(g.out.find("FanIn focus=puma arity=4") != std::string::npos);
    CHECK(g.out.find("FanOut focus=puma arity=5") != std::string::npos);
    CHECK(g.out.find("Cycle focus=gitaly arity=4 members=gitaly,puma,sidekiq,workhorse"
                     " non-simple\n") != std::string::npos);
    CHECK(g.out.find("summary: Isolated=1 FanIn=7 FanOut=8 MutualPair=4 Cycle=3\n") !=
          std::string::npos);

    CHECK(run_cli({"patterns", fig1_path(), "--min-fan", "1"}).code == 2);
}

TEST_CASE("cli sample partition") {
    CliResult a = run_cli({"sample", "partition", "--n", "6", "--seed", "5"});
    CliResult b = run_cli({"sample", "partition", "--n", "6", "--seed", "5"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);

    std::set<int> items;
    std::istringstream lines(a.out);
    std::string line;
    while (std::getline(lines, line)) {
        std::istringstream fields(line);
        int v = 0;
        while (fields >> v) items.insert(v);
    }
    CHECK(items == std::set<int>{1, 2, 3, 4, 5, 6});

    CHECK(run_cli({"sample", "partition", "--n", "6", "--seed", "6"}).out != a.out);
}

TEST_CASE("cli seed fallback via environment") {
    CliResult flagged = run_cli({"sample", "partition", "--n", "9", "--seed", "7"});

    setenv("MIGRAPH_SEED", "7", 1);
    CliResult env = run_cli({"sample", "partition", "--n", "9"});
    setenv("MIGRAPH_SEED", "junk", 1);
    CliResult bad = run_cli({"sample", "partition", "--n", "9"});
    unsetenv("MIGRAPH_SEED");
    CliResult none = run_cli({"sample", "partition", "--n", "9"});
    CliResult zero = run_cli({"sample", "partition", "--n", "9", "--seed", "0"});

    CHECK(env.code == 0);
    CHECK(env.out == flagged.out);
    CHECK(bad.code == 2);
    CHECK(none.out == zero.out);
}

TEST_CASE("cli sample graph") {
    std::string out_path = temp_path("migraph_sampled.json");
    CliResult to_file =
        run_cli({"sample", "graph", "--n", "20", "--c", "1", "--seed", "7", "-o", out_path});
    CliResult to_stdout = run_cli({"sample", "graph", "--n", "20", "--c", "1", "--seed", "7"});
    CHECK(to_file.code == 0);
    CHECK(to_file.out.empty());
    CHECK(read_file(out_path) == to_stdout.out);
    CHECK(load_graph_file(out_path).node_count() == 20);
    std::filesystem::remove(out_path);
}

TEST_CASE("cli stats") {
    CliResult table = run_cli({"stats", "table1", "--n", "10,1000000000"});
    CHECK(table.code == 0);
    CHECK(table.out == "n | size | count | sd | depth(cons) | depth(optim)\n"
                       "10 | 2 | 4 | 1 | 2 | 3\n"
                       "1000000000 | 21 | 48254942 | 1526 | 2328539 | 31623\n");

    CHECK(run_cli({"stats", "table1", "--n", "10,1"}).code == 2);
    CHECK(run_cli({"stats", "table1", "--n", "ten"}).code == 2);

    CliResult bound = run_cli({"stats", "bound", "--n", "1000", "--s", "2.718281828459045"});
    CHECK(bound.code == 0);
    CHECK(bound.out == "151.238907\n");
    CHECK(run_cli({"stats", "bound", "--n", "1000", "--s", "1"}).out == "144.764827\n");

    CHECK(run_cli({"stats", "connectivity", "--c", "10"}).out == "0.999955\n");
    CHECK(run_cli({"stats", "connectivity", "--c", "0"}).out == "0.367879\n");
}

TEST_CASE("cli montecarlo") {
    CliResult r = run_cli({"montecarlo", "--n", "100", "--trials", "50", "--seed", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("expected cluster count (exact): 28.6253\n") != std::string::npos);
    CHECK(r.out.find("observed cluster count: mean ") != std::string::npos);

    CliResult j = run_cli({"montecarlo", "--n", "100", "--trials", "50", "--seed", "1",
                           "--json"});
    CHECK(j.code == 0);
    nlohmann::json doc = nlohmann::json::parse(j.out);
    CHECK(doc["n"] == 100);
    CHECK(doc["trials"] == 50);
    CHECK(doc["expected"]["cluster_count_exact"].get<double>() ==
          doctest::Approx(28.625281856727458).epsilon(1e-9));
    CHECK(doc["observed"]["cluster_count_mean"].get<double>() > 1.0);
    CHECK(doc["low_sample"] == false);

    CliResult again = run_cli({"montecarlo", "--n", "100", "--trials", "50", "--seed", "1",
                               "--json"});
    CHECK(again.out == j.out);

    CliResult single = run_cli({"montecarlo", "--n", "50", "--trials", "1", "--seed", "3"});
    CHECK(single.out.find("warning: single trial") != std::string::npos);
}

TEST_CASE("cli export-dot") {
    CliResult r = run_cli({"export-dot", fig1_path(), "--mode", "condensed"});
    CHECK(r.code == 0);
    CHECK(r.out == export_dot(fixtures::fig1(), DotMode::condensed));

    CHECK(run_cli({"export-dot", fig1_path(), "--mode", "bogus"}).code == 2);
}

TEST_CASE("cli exit codes") {
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"no-such-command"}).code == 2);
    CHECK(run_cli({"--help"}).code == 0);
    CHECK(run_cli({"analyze", "--help"}).code == 0);

    CliResult missing = run_cli({"analyze", temp_path("migraph_missing.json")});
    CHECK(missing.code == 1);
    CHECK(missing.err.rfind("error:", 0) == 0);

    std::string bad_path = temp_path("migraph_bad.json");
    std::ofstream(bad_path) << "{ nope";
    CHECK(run_cli({"analyze", bad_path}).code == 1);
    std::filesystem::remove(bad_path);

    CHECK(run_cli({"montecarlo", "--n", "1", "--trials", "10"}).code == 2);
    CHECK(run_cli({"sample", "partition", "--n", "0"}).code == 2);
}
