#pragma once

#include <string>
#include <string_view>

#include "migraph/graph.hpp"

namespace migraph {

// Graph document, format_version "1":
// {
//   "format_version": "1",
//   "components": [{"id": "...", "label": "...", "meta": {"k": "v"}}, ...],
//   "dependencies": [{"source": "...", "target": "..."}, ...]
// }
// label and meta are optional and omitted when empty on output.

// Throws SyntaxError (malformed JSON), SchemaError (wrong shape, with element
// context) or any build_graph error.
MigrationGraph parse_graph(std::string_view text);

// Canonical bytes: components and dependencies sorted lexicographically,
// two-space indent, trailing newline. parse(serialize(g)) == g.
std::string serialize_graph(const MigrationGraph& g);

// Convenience file wrappers; parse errors carry the path.
MigrationGraph load_graph_file(const std::string& path);
void save_graph_file(const MigrationGraph& g, const std::string& path);

}  // namespace migraph
