#pragma once

#include <json.hpp>

#include "snw/bounds.hpp"
#include "snw/reduction.hpp"
#include "snw/seymour.hpp"

namespace snw {

// All report serialization uses ordered_json with fields inserted in the
// documented order, so identical inputs produce byte-identical documents.
using json = nlohmann::ordered_json;

inline json to_json(const VertexSet& s) { return json(s.members()); }

inline json to_json(const SeymourReport& r) {
    json j;
    j["n"] = r.n;
    j["girth"] = reachable(r.girth) ? json(r.girth) : json("inf");
    j["seymour_vertices"] = to_json(r.seymour);
    j["ratios"] = json::array();
    for (const auto& e : r.ratios) j["ratios"].push_back({{"v", e.v}, {"d1", e.d1}, {"d2", e.d2}});
    j["best_lambda"] =
        r.best ? json{{"num", r.best->num()}, {"den", r.best->den()}} : json("unbounded");
    j["subset_witness"] = r.subset_witness ? to_json(*r.subset_witness) : json(nullptr);
    return j;
}

inline json to_json(const ReductionTrace& t) {
    json j;
    j["lambda"] = {{"num", t.lambda.num()}, {"den", t.lambda.den()}};
    j["initial_n"] = t.initial.n();
    j["final_n"] = t.final_graph.n();
    j["steps"] = json::array();
    for (const auto& s : t.steps) {
        if (s.kind == ReductionStep::Kind::edge_removal)
            j["steps"].push_back({{"kind", "edge_removal"}, {"u", s.edge.first}, {"v", s.edge.second}});
        else
            j["steps"].push_back({{"kind", "vertex_restriction"}, {"kept", to_json(s.kept)}});
    }
    return j;
}

inline json to_json(const std::vector<BoundRow>& rows) {
    json j = json::array();
    for (const auto& r : rows)
        j.push_back({{"m", r.m},
                     {"snc_root", r.snc_root},
                     {"liang_xu_root", r.liang_xu_root},
                     {"asym_paper", r.asym_paper},
                     {"asym_lx", r.asym_lx}});
    return j;
}

// Table plus the reference constants the rows are compared against (at m = 2
// the snc_root column loses to the Chen-Shen-Yuster value).
inline json bounds_document(const std::vector<BoundRow>& rows) {
    json j;
    j["rows"] = to_json(rows);
    j["references"] = {{"csy_root", csy_root()},
                       {"csy_claimed", csy_claimed_constant},
                       {"zhang_zhou_lambda3", zhang_zhou_lambda3}};
    return j;
}

}  // namespace snw
