#include "autodel/sidecar.hpp"

#include <cstdint>

#include "autodel/errors.hpp"

namespace autodel {

using nlohmann::json;

namespace {

json group_to_json(const FiniteGroup& g) {
    if (!g.spec().empty()) return g.spec();
    json j;
    j["order"] = g.order();
    std::vector<int> flat;
    flat.reserve(static_cast<std::size_t>(g.order()) * static_cast<std::size_t>(g.order()));
    for (const auto& row : g.table()) flat.insert(flat.end(), row.begin(), row.end());
    j["table"] = flat;
    return j;
}

FiniteGroup group_from_json(const json& j) {
    if (j.is_string()) return parse_group_spec(j.get<std::string>());
    if (!j.is_object() || !j.contains("order") || !j.contains("table"))
        throw input_error("group field must be a spec string or an {order, table} object");
    const int n = j.at("order").get<int>();
    const auto flat = j.at("table").get<std::vector<int>>();
    if (n < 1 || flat.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        throw input_error("group table has the wrong number of entries");
    std::vector<std::vector<int>> table(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a)
        table[static_cast<std::size_t>(a)].assign(flat.begin() + static_cast<std::ptrdiff_t>(a) * n,
                                                  flat.begin() + static_cast<std::ptrdiff_t>(a + 1) * n);
    return FiniteGroup::from_table(std::move(table));
}

json bigint_to_json(const bigint& v) {
    if (v <= std::numeric_limits<std::int64_t>::max()) return static_cast<std::int64_t>(v);
    return v.str();
}

} // namespace

json witness_to_json(const Witness& w) {
    json j;
    j["graph6"] = to_graph6(w.graph);
    if (w.has_vertex_target())
        j["target"] = {{"vertex", w.vertex_target()}};
    else
        j["target"] = {{"edge", {w.edge_target().u, w.edge_target().v}}};
    j["gamma1"] = group_to_json(w.gamma1);
    j["gamma2"] = group_to_json(w.gamma2);
    j["landmarks"] = json::object();
    for (const auto& [name, v] : w.landmarks.names) j["landmarks"][name] = v;
    return j;
}

Witness witness_from_json(const json& j) {
    Witness w;
    w.graph = from_graph6(j.at("graph6").get<std::string>());
    const json& t = j.at("target");
    if (t.contains("vertex")) {
        w.target = t.at("vertex").get<int>();
    } else if (t.contains("edge")) {
        auto e = t.at("edge").get<std::vector<int>>();
        if (e.size() != 2) throw input_error("edge target must have two endpoints");
        w.target = EdgeTarget{std::min(e[0], e[1]), std::max(e[0], e[1])};
    } else {
        throw input_error("target must contain 'vertex' or 'edge'");
    }
    w.gamma1 = group_from_json(j.at("gamma1"));
    w.gamma2 = group_from_json(j.at("gamma2"));
    if (j.contains("landmarks"))
        for (auto it = j.at("landmarks").begin(); it != j.at("landmarks").end(); ++it)
            w.landmarks.set(it.key(), it.value().get<int>());
    return w;
}

json report_to_json(const VerificationReport& r) {
    json j;
    j["pass"] = r.pass();
    j["aut_before_order"] = bigint_to_json(r.aut_before_order);
    j["aut_after_order"] = bigint_to_json(r.aut_after_order);
    j["iso_before"] = r.iso_before;
    j["iso_after"] = r.iso_after;
    if (r.map_before) j["map_before"] = *r.map_before;
    if (r.map_after) j["map_after"] = *r.map_after;
    j["elapsed_before_s"] = r.elapsed_before_s;
    j["elapsed_after_s"] = r.elapsed_after_s;
    j["resource_limited"] = r.resource_limited;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

json search_result_to_json(const SearchResult& r) {
    json j;
    j["found"] = r.found ? witness_to_json(*r.found) : json{};
    j["exhausted_up_to"] = r.exhausted_up_to;
    j["counts"] = json::object();
    for (const auto& [n, c] : r.counts) j["counts"][std::to_string(n)] = c;
    return j;
}

} // namespace autodel
