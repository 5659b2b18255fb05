#include "migraph/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "migraph/errors.hpp"

namespace migraph {

namespace {

using json = nlohmann::ordered_json;

std::string require_string(const json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) throw SchemaError(where + ": missing \"" + key + "\"");
    if (!it->is_string()) throw SchemaError(where + ": \"" + key + "\" must be a string");
    return it->get<std::string>();
}

}  // namespace

MigrationGraph parse_graph(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SyntaxError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw SchemaError("document root must be an object");
    std::string version = require_string(doc, "format_version", "document");
    if (version != "1") throw SchemaError("unsupported format_version \"" + version + "\"");

    auto comps_it = doc.find("components");
    if (comps_it == doc.end() || !comps_it->is_array())
        throw SchemaError("document: \"components\" must be an array");
    auto deps_it = doc.find("dependencies");
    if (deps_it == doc.end() || !deps_it->is_array())
        throw SchemaError("document: \"dependencies\" must be an array");

    std::vector<Component> components;
    components.reserve(comps_it->size());
    std::size_t index = 0;
    for (const json& entry : *comps_it) {
        std::string where = "components[" + std::to_string(index++) + "]";
        if (!entry.is_object()) throw SchemaError(where + ": must be an object");
        Component c;
        c.id = require_string(entry, "id", where);
        if (auto it = entry.find("label"); it != entry.end()) {
            if (!it->is_string()) throw SchemaError(where + ": \"label\" must be a string");
            c.label = it->get<std::string>();
        }
        if (auto it = entry.find("meta"); it != entry.end()) {
            if (!it->is_object()) throw SchemaError(where + ": \"meta\" must be an object");
            for (auto& [key, value] : it->items()) {
                if (!value.is_string())
                    throw SchemaError(where + ": meta \"" + key + "\" must be a string");
                c.meta[key] = value.get<std::string>();
            }
        }
        components.push_back(std::move(c));
    }

    std::vector<Edge> dependencies;
    dependencies.reserve(deps_it->size());
    index = 0;
    for (const json& entry : *deps_it) {
        std::string where = "dependencies[" + std::to_string(index++) + "]";
        if (!entry.is_object()) throw SchemaError(where + ": must be an object");
        dependencies.push_back(
            {require_string(entry, "source", where), require_string(entry, "target", where)});
    }
    return build_graph(std::move(components), std::move(dependencies));
}

std::string serialize_graph(const MigrationGraph& g) {
    json doc;
    doc["format_version"] = "1";
    doc["components"] = json::array();
    for (const Component& c : g.components()) {
        json entry;
        entry["id"] = c.id;
        if (!c.label.empty()) entry["label"] = c.label;
        if (!c.meta.empty()) {
            json meta;
            for (const auto& [key, value] : c.meta) meta[key] = value;
            entry["meta"] = meta;
        }
        doc["components"].push_back(std::move(entry));
    }
    doc["dependencies"] = json::array();
    for (const Edge& e : g.edges()) {
        json entry;
        entry["source"] = e.source;
        entry["target"] = e.target;
        doc["dependencies"].push_back(std::move(entry));
    }
    return doc.dump(2) + "\n";
}

MigrationGraph load_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SyntaxError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_graph(buffer.str());
}

void save_graph_file(const MigrationGraph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw SyntaxError("cannot open '" + path + "' for writing");
    out << serialize_graph(g);
}

}  // namespace migraph
