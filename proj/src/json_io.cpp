#include "nibble/json_io.hpp"

#include <fstream>
#include <set>

namespace nibble {

using nlohmann::json;

json instance_to_json(const Hypergraph& h) {
    json j;
    j["num_vertices"] = h.num_vertices();
    j["rank"] = h.rank();
    json edges = json::array();
    for (const Edge& e : h.edges()) edges.push_back(e);
    j["edges"] = std::move(edges);
    return j;
}

Hypergraph instance_from_json(const json& j, bool allow_duplicates) {
    if (!j.contains("num_vertices") || !j.contains("rank") || !j.contains("edges"))
        throw InputError("instance needs num_vertices, rank and edges");
    std::size_t n = j.at("num_vertices").get<std::size_t>();
    std::size_t k = j.at("rank").get<std::size_t>();
    std::vector<Edge> edges;
    std::set<Edge> seen;
    for (const auto& je : j.at("edges")) {
        Edge e = normalize_edge(je.get<Edge>(), n, k);
        if (!seen.insert(e).second && !allow_duplicates)
            throw InputError("duplicate edge in instance (pass allow-dup to dedup)");
        edges.push_back(std::move(e));
    }
    return Hypergraph(n, k, std::move(edges));
}

json lists_to_json(const ListAssignment& lists) {
    json entries = json::object();
    for (std::size_t v = 0; v < lists.lists.size(); ++v) {
        json names = json::array();
        for (ColorId c : lists.lists[v]) names.push_back(lists.table.name(c));
        entries[std::to_string(v)] = std::move(names);
    }
    json j;
    j["lists"] = std::move(entries);
    return j;
}

ListAssignment lists_from_json(const json& j, std::size_t num_vertices) {
    if (!j.contains("lists")) throw InputError("lists file needs a lists object");
    const json& entries = j.at("lists");
    std::vector<std::string> all_names;
    for (const auto& [key, value] : entries.items())
        for (const auto& name : value) all_names.push_back(name.get<std::string>());

    ListAssignment out;
    out.table = ColorTable(std::move(all_names));
    out.lists.assign(num_vertices, {});
    for (const auto& [key, value] : entries.items()) {
        std::size_t v = std::stoull(key);
        if (v >= num_vertices) throw InputError("list vertex id out of range: " + key);
        std::vector<ColorId> ids;
        for (const auto& name : value) ids.push_back(out.table.id(name.get<std::string>()));
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        out.lists[v] = std::move(ids);
    }
    return out;
}

json coloring_to_json(const Coloring& coloring, const ColorTable& table) {
    json colors = json::object();
    json prov = json::object();
    for (std::size_t v = 0; v < coloring.colors.size(); ++v) {
        if (coloring.colors[v] == kNoColor) continue;
        std::string key = std::to_string(v);
        colors[key] = table.name(coloring.colors[v]);
        if (coloring.provenance[v] == kProvenanceCompletion)
            prov[key] = "completion";
        else
            prov[key] = "nibble:" + std::to_string(coloring.provenance[v]);
    }
    json j;
    j["colors"] = std::move(colors);
    j["provenance"] = std::move(prov);
    return j;
}

Coloring coloring_from_json(const json& j, const ColorTable& table, std::size_t num_vertices) {
    Coloring out(num_vertices);
    if (!j.contains("colors")) throw InputError("coloring file needs a colors object");
    for (const auto& [key, value] : j.at("colors").items()) {
        std::size_t v = std::stoull(key);
        if (v >= num_vertices) throw InputError("colored vertex id out of range: " + key);
        out.colors[v] = table.id(value.get<std::string>());
    }
    if (j.contains("provenance")) {
        for (const auto& [key, value] : j.at("provenance").items()) {
            std::size_t v = std::stoull(key);
            if (v >= num_vertices) continue;
            std::string s = value.get<std::string>();
            if (s == "completion")
                out.provenance[v] = kProvenanceCompletion;
            else if (s.rfind("nibble:", 0) == 0)
                out.provenance[v] = static_cast<std::int32_t>(std::stol(s.substr(7)));
        }
    }
    return out;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path);
    json j;
    in >> j;
    return j;
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write file: " + path);
    out << j.dump(2) << "\n";
}

} // namespace nibble
