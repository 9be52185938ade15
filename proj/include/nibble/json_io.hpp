#ifndef NIBBLE_JSON_IO_HPP
#define NIBBLE_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "nibble/coloring.hpp"
#include "nibble/hypergraph.hpp"

namespace nibble {

// Instance format: {"num_vertices": n, "rank": k, "edges": [[v, ...], ...]}
nlohmann::json instance_to_json(const Hypergraph& h);
Hypergraph instance_from_json(const nlohmann::json& j, bool allow_duplicates = false);

// Lists format: {"lists": {"<vertex>": ["c1", ...], ...}}
nlohmann::json lists_to_json(const ListAssignment& lists);
ListAssignment lists_from_json(const nlohmann::json& j, std::size_t num_vertices);

// Coloring format:
// {"colors": {"<vertex>": "<color>", ...},
//  "provenance": {"<vertex>": "nibble:<round>" | "completion", ...}}
nlohmann::json coloring_to_json(const Coloring& coloring, const ColorTable& table);
Coloring coloring_from_json(const nlohmann::json& j, const ColorTable& table,
                            std::size_t num_vertices);

nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

} // namespace nibble

#endif
