#pragma once

// Structured (JSON, stable key order) views of the result types.  Needs nlohmann/json.

#include "mixplat.hpp"

#include <nlohmann/json.hpp>

namespace mixplat::report {

using Json = nlohmann::ordered_json;

inline Json str(const SqrtThreeRat& x) { return x.str(); }
inline Json str(const CycNum& x) { return x.str(); }
inline Json str(const CycInt& x) { return point_text(x); }

inline Json interval(const RealInterval& x, int digits = 20) {
    return Json{{"lo", x.lo()}, {"hi", x.hi()}, {"text", x.str(digits)}};
}

inline Json units(const std::vector<UnitClass>& cs) {
    Json a = Json::array();
    for (auto& c : cs)
        a.push_back({{"representative", str(c.representative)}, {"modulus_sq", str(c.modulus_sq)},
                     {"exponent", c.exponent}, {"conjugate_same_class", c.conjugate_same_class}});
    return Json{{"count", cs.size()}, {"classes", a}};
}

inline Json validation(const ValidationReport& r) {
    Json j{{"ok", r.ok}};
    if (!r.ok) {
        j["code"] = r.code;
        j["message"] = r.message;
        if (r.where) j["where"] = str(*r.where);
    }
    return j;
}

inline Json types(const PeriodicTiling& t) {
    TilingIndex ix(t);
    ix.require_ok();
    Json census = Json::object();
    for (auto& [k, n] : triangle_census(ix)) census[to_string(k)] = n;
    auto chk = check_type_constraints(t);
    Json j{{"census", census}, {"constraints_pass", chk.pass}};
    if (!chk.pass) j["witness"] = chk.witness;
    return j;
}

inline Json symmetry(const SymmetryGroup& g) {
    Json cs = Json::array();
    for (auto& c : g.centres) cs.push_back({{"centre", str(c.centre())}, {"order", c.order}});
    Json j{{"tag", g.tag},
           {"point_order", g.point_order()},
           {"has_reflections", g.has_reflections()},
           {"t1", str(g.t1)},
           {"t2", str(g.t2)},
           {"min_translation_sq", str(g.min_translation_sq)},
           {"rotation_centres", cs}};
    bool has3 = false;
    for (auto& c : g.centres) has3 = has3 || c.order % 3 == 0;
    if (has3) {
        auto l = rotation_centre_lattice(g);
        j["order3_lattice"] = {{"side_sq", str(l.side_sq)}, {"covering_radius_sq", str(l.covering_radius_sq)}};
    }
    return j;
}

inline Json riscs(const RiscSearch& r) {
    Json a = Json::array();
    for (auto& x : r.riscs) a.push_back({{"kind", to_string(x.kind)}, {"centre", str(x.centre())}, {"tiles", x.tiles.size()}});
    Json j{{"ok", r.ok}, {"count", r.riscs.size()}, {"riscs", a}};
    if (!r.ok) {
        j["failure"] = r.failure;
        j["uncovered_squares"] = r.uncovered_squares;
    }
    return j;
}

inline Json pairs(const std::vector<RiscPair>& ps) {
    Json a = Json::array();
    for (auto& p : ps)
        a.push_back({{"kinds", to_string(p.first) + "-" + to_string(p.second)},
                     {"centre_dist_sq", str(p.centre_dist_sq)},
                     {"tiles", p.tiles.size()}});
    return Json{{"count", ps.size()}, {"configurations", a}};
}

inline Json classification(const ShortTranslationClassification& c) {
    Json a = Json::array();
    for (auto& x : c.tilings)
        a.push_back({{"name", x.name},
                     {"triangles", x.tiling.count(TileKind::Triangle)},
                     {"squares", x.tiling.count(TileKind::Square)},
                     {"min_translation_sq", str(min_translation_sq(x.tiling))},
                     {"from", to_string(x.source.first) + "-" + to_string(x.source.second)},
                     {"centre_dist_sq", str(x.source.centre_dist_sq)}});
    return Json{{"count", c.tilings.size()}, {"tilings", a}, {"failures", c.failures}};
}

inline Json noace(const TetTypeCounts& r) {
    Json j{{"d", r.d}, {"feasible", r.feasible}, {"sigma", r.sigma.get_str()}};
    if (r.feasible) {
        j["a"] = r.a;
        j["b"] = r.b;
        j["c"] = r.c;
        j["sigma_even"] = r.sigma_even();
    }
    return j;
}

inline Json area(const AreaObstruction& r) {
    Json s = Json::array();
    for (auto& x : r.solutions) s.push_back({{"triangles", x.triangles}, {"squares", x.squares}});
    return Json{{"area", str(r.area)}, {"solutions", s}, {"reason", r.reason}};
}

inline Json audit(const InequalityAudit& a) {
    return Json{{"ordering", a.ordering < 0 ? "less" : a.ordering > 0 ? "greater" : "equal"},
                {"difference", str(a.difference)},
                {"certificate", a.certificate}};
}

inline Json orbits(const HalfEdgeOrbitReport& r) {
    Json fo = Json::object();
    for (auto& [k, n] : r.face_orbits) fo[k] = n;
    return Json{{"faces", r.faces},
                {"half_edges", r.half_edges},
                {"face_orbits", fo},
                {"pentagon_orbits", r.pentagon_orbits},
                {"hexagon_orbits", r.hexagon_orbits},
                {"short_orbits", r.short_orbits},
                {"long_orbits", r.long_orbits},
                {"square_square_orbits", r.square_square_orbits},
                {"orbit_sizes", r.orbit_sizes},
                {"bookkeeping_ok", r.bookkeeping_ok},
                {"proxy_consistent", r.proxy_consistent}};
}

inline Json slop(const SlopReport& r) {
    Json cs = Json::array();
    for (auto& c : r.cases) {
        Json j{{"case", c.label}, {"excluded", c.excluded}};
        if (c.excluded) j["reason"] = c.reason;
        else {
            j["merged"] = c.merged;
            j["max_merged"] = c.max_merged;
            j["contradiction"] = c.contradiction;
        }
        cs.push_back(j);
    }
    return Json{{"group", r.group},
                {"long_orbits", r.long_orbits},
                {"pentagon_orbits", r.pentagon_orbits},
                {"allowed_counts", r.allowed},
                {"cases", cs},
                {"all_cases_contradict", r.all_contradict}};
}

inline Json dual(const PeriodicTiling& t) {
    auto d = dual_tessellation(t);
    Json fs = Json::array();
    std::map<std::string, int> counts;
    for (auto& f : d.faces) {
        ++counts[f.type];
        fs.push_back({{"type", f.type}, {"area", str(f.area)}});
    }
    Json c = Json::object();
    for (auto& [k, n] : counts) c[k] = n;
    return Json{{"faces", fs},
                {"type_counts", c},
                {"total_area", str(d.total_area)},
                {"covolume", str(t.covolume())},
                {"area_matches", d.total_area == t.covolume()},
                {"duality_verified", d.duality_verified},
                {"roundtrip", duality_roundtrip(t)}};
}

inline Json cell(const VoronoiCell& c) {
    Json fs = Json::array();
    for (std::size_t k = 0; k < c.faces.size(); ++k)
        fs.push_back({{"neighbour", str(c.neighbours[k])}, {"centre", str(c.faces[k].centre)},
                      {"radius_sq", str(c.faces[k].radius_sq)}});
    Json cos = Json::array();
    for (auto& x : c.dihedral_cos) cos.push_back(str(x));
    return Json{{"apex", str(c.apex.z)},
                {"apex_height_sq", str(c.apex.height_sq)},
                {"faces", fs},
                {"dihedral_cos", cos},
                {"redundant_checked", c.redundant_checked},
                {"avoids_far_faces", c.avoids_far_faces}};
}

inline Json decomposition(const std::vector<DecompositionSolution>& s) {
    Json a = Json::array();
    for (auto& x : s) a.push_back({{"n1", x.n1}, {"n2", x.n2}, {"residual", interval(x.residual, 12)}});
    return Json{{"count", s.size()}, {"solutions", a}};
}

inline Json volume_table(const VolumeTableReport& r) {
    Json rows = Json::array();
    for (auto& row : r.rows) {
        Json j{{"name", row.name}, {"volume", interval(row.volume, 15)}};
        if (row.refusal) j["refusal"] = *row.refusal;
        else {
            j["decomposition"] = decomposition(row.solutions)["solutions"];
            j["clean"] = row.solutions.empty();
        }
        rows.push_back(j);
    }
    return Json{{"rows", rows}, {"diagnostics", r.diagnostics}};
}

}  // namespace mixplat::report
