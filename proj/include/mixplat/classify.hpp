#pragma once

#include "fixtures.hpp"
#include "hyperbolic.hpp"
#include "named.hpp"
#include "patch.hpp"
#include "symmetry.hpp"
#include "tiling.hpp"

#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace mixplat {

// ---- rotation-invariant square carriers ----

enum class RiscKind { Left, Right };

inline std::string to_string(RiscKind k) { return k == RiscKind::Left ? "left" : "right"; }

struct Risc {
    CycInt centre6;  // six times the rotation centre
    RiscKind kind = RiscKind::Left;
    std::vector<Tile> tiles;
    PlanarIsometry placement;  // template to tiling
    CycNum centre() const { return to_rat(centre6) * Rational(1, 6); }
};

namespace detail {

inline std::set<TileKey> key_set(const std::vector<Tile>& ts) {
    std::set<TileKey> s;
    for (auto& t : ts) s.insert(t.normalised().key());
    return s;
}

// Boundary edges of a union of tiles: directed edges whose reverse is absent.
inline std::vector<std::pair<CycInt, CycInt>> boundary_edges(const std::vector<Tile>& ts) {
    std::set<std::pair<std::array<std::int64_t, 4>, std::array<std::int64_t, 4>>> dir;
    for (auto& t : ts)
        for (std::size_t j = 0; j < t.size(); ++j) dir.insert({t.vertex(j).coeffs(), t.vertex(j + 1).coeffs()});
    std::vector<std::pair<CycInt, CycInt>> out;
    for (auto& [a, b] : dir)
        if (!dir.count({b, a})) out.emplace_back(CycInt(a), CycInt(b));
    return out;
}

inline SqrtThreeRat clearance_sq(const std::vector<Tile>& ts, const CycNum& c) {
    std::optional<SqrtThreeRat> best;
    for (auto& [a, b] : boundary_edges(ts)) {
        SqrtThreeRat d = dist_sq_point_segment(c, to_rat(a), to_rat(b));
        if (!best || d < *best) best = d;
    }
    return best.value_or(SqrtThreeRat());
}

}  // namespace detail

struct RiscTemplate {
    RiscKind kind;
    std::vector<Tile> tiles;
    CycInt centre6;
    SqrtThreeRat disk_radius_sq;  // guaranteed open disk about the centre
    Tile core;                    // the triangle the centre sits in
    CycNum centre() const { return to_rat(centre6) * Rational(1, 6); }
};

inline SqrtThreeRat left_disk_radius_sq() { return {Rational(13, 12), Rational(1, 3)}; }  // (1 + 1/(2 sqrt3))^2
inline SqrtThreeRat right_disk_radius_sq() { return {Rational(4, 3), Rational(2, 3)}; }   // (1 + 1/sqrt3)^2
inline SqrtThreeRat ell_sq() { return {Rational(13, 3), Rational(4, 3)}; }                // (2 + 1/sqrt3)^2

// Both templates, checked once: order-3 invariance, central triangle, disk clearance.
inline const std::vector<RiscTemplate>& risc_templates() {
    static const std::vector<RiscTemplate> all = [] {
        std::vector<RiscTemplate> v;
        for (auto [kind, src, r2] : {std::tuple{RiscKind::Left, fixtures::risc_left, left_disk_radius_sq()},
                                     std::tuple{RiscKind::Right, fixtures::risc_right, right_disk_radius_sq()}}) {
            RiscTemplate t{kind, parse_tiles(src).tiles, CycInt(4, 0, -2, 0), r2, {}};
            auto rho = rotation_about(t.centre6, 4);
            if (!rho) throw std::logic_error("template centre is not an admissible rotation centre");
            auto keys = detail::key_set(t.tiles);
            for (auto& tile : t.tiles)
                if (!keys.count(rho->apply(tile).normalised().key()))
                    throw std::logic_error("template is not invariant under its order-3 rotation");
            bool found = false;
            for (auto& tile : t.tiles)
                if (tile.kind == TileKind::Triangle && tile.centre6() == t.centre6) { t.core = tile; found = true; }
            if (!found) throw std::logic_error("template centre is not a triangle centroid");
            if (detail::clearance_sq(t.tiles, t.centre()) < r2)
                throw std::logic_error("template does not contain its guaranteed disk");
            v.push_back(std::move(t));
        }
        return v;
    }();
    return all;
}

// Isometries of the plane taking tile a onto tile b (same kind).
inline std::vector<PlanarIsometry> isometries_onto(const Tile& a, const Tile& b) {
    std::vector<PlanarIsometry> out;
    if (a.kind != b.kind) return out;
    TileKey target = b.normalised().key();
    for (int refl = 0; refl < 2; ++refl)
        for (int k = 0; k < 12; ++k)
            for (auto& w : b.vertices) {
                PlanarIsometry g{k, refl == 1, CycInt()};
                g.trans = w - g.apply(a.vertices[0]);
                if (g.apply(a).normalised().key() == target &&
                    std::find(out.begin(), out.end(), g) == out.end())
                    out.push_back(g);
            }
    return out;
}

struct RiscSearch {
    bool ok = true;
    std::vector<Risc> riscs;
    std::vector<std::size_t> uncovered_squares;  // indices into tiles()
    std::string failure;
};

inline RiscSearch find_riscs(const PeriodicTiling& t) {
    TilingIndex ix(t);
    ix.require_ok();
    auto g = symmetry_group(t);
    bool has3 = false;
    for (auto& c : g.centres) has3 = has3 || c.order % 3 == 0;
    if (!has3) throw std::invalid_argument("symmetry group has no rotation of order 3");

    RiscSearch res;
    std::set<std::array<std::int64_t, 4>> right_centres, seen;
    std::set<TileKey> covered;
    // right first so that the larger carrier wins where both fit
    for (auto it = risc_templates().rbegin(); it != risc_templates().rend(); ++it) {
        const RiscTemplate& tpl = *it;
        for (auto& tri : t.tiles()) {
            if (tri.kind != TileKind::Triangle) continue;
            for (auto& m : isometries_onto(tpl.core, tri)) {
                bool all = true;
                for (auto& tile : tpl.tiles)
                    if (!t.contains(m.apply(tile))) { all = false; break; }
                if (!all) continue;
                CycInt c6 = m.apply_scaled(tpl.centre6, 6);
                auto rho = rotation_about(c6, 4);
                if (!rho || !preserves(t, *rho)) continue;
                auto key = t.frame().reduce_scaled(c6, 6).coeffs();
                if (tpl.kind == RiscKind::Left && right_centres.count(key)) continue;
                if (!seen.insert(key).second) continue;
                if (tpl.kind == RiscKind::Right) right_centres.insert(key);
                Risc r{c6, tpl.kind, {}, m};
                for (auto& tile : tpl.tiles) {
                    r.tiles.push_back(m.apply(tile));
                    covered.insert(t.reduce(m.apply(tile)).key());
                }
                res.riscs.push_back(std::move(r));
            }
        }
    }
    for (std::size_t i = 0; i < t.tiles().size(); ++i)
        if (t.tiles()[i].kind == TileKind::Square && !covered.count(t.tiles()[i].key())) res.uncovered_squares.push_back(i);
    if (!res.uncovered_squares.empty()) {
        res.ok = false;
        res.failure = std::to_string(res.uncovered_squares.size()) + " square(s) lie in no carrier";
    }
    return res;
}

// ---- pairs of carriers ----

struct RiscPair {
    RiscKind first, second;
    CycInt centre6_first, centre6_second;
    SqrtThreeRat centre_dist_sq;
    std::vector<Tile> tiles;  // union
};

namespace detail {

using PointKey = std::array<std::int64_t, 4>;

// Congruence key of marked tile sets: tiles and marks in six-scaled coordinates, minimised over
// the 24 linear isometries and over the choice of mark used as origin.
inline std::vector<std::int64_t> congruence_key(const std::vector<Tile>& tiles, const std::vector<CycInt>& marks6,
                                                const std::vector<int>& mark_tags, bool all_origins = true) {
    std::vector<std::int64_t> best;
    std::size_t origins = all_origins ? marks6.size() : 1;
    for (int refl = 0; refl < 2; ++refl)
        for (int k = 0; k < 12; ++k)
            for (std::size_t o = 0; o < origins; ++o) {
                PlanarIsometry lin{k, refl == 1, CycInt()};
                CycInt origin = lin.apply(marks6[o]);
                std::vector<std::vector<std::int64_t>> ts;
                for (auto& t : tiles) {
                    std::vector<PointKey> vs;
                    for (auto& v : t.vertices) vs.push_back((lin.apply(v * std::int64_t(6)) - origin).coeffs());
                    std::sort(vs.begin(), vs.end());
                    std::vector<std::int64_t> flat{static_cast<std::int64_t>(t.kind)};
                    for (auto& p : vs) flat.insert(flat.end(), p.begin(), p.end());
                    ts.push_back(std::move(flat));
                }
                std::sort(ts.begin(), ts.end());
                std::vector<std::int64_t> key{mark_tags[o]};
                std::vector<std::vector<std::int64_t>> ms;
                for (std::size_t j = 0; j < marks6.size(); ++j) {
                    if (j == o) continue;
                    auto c = (lin.apply(marks6[j]) - origin).coeffs();
                    ms.push_back({mark_tags[j], c[0], c[1], c[2], c[3]});
                }
                std::sort(ms.begin(), ms.end());
                for (auto& m : ms) key.insert(key.end(), m.begin(), m.end());
                for (auto& t : ts) key.insert(key.end(), t.begin(), t.end());
                if (best.empty() || key < best) best = std::move(key);
            }
    return best;
}

}  // namespace detail

// Two carriers sharing at least one tile, with centres closer than the threshold and a consistent
// union; one representative per congruence class.  `only` restricts both to one kind.
inline std::vector<RiscPair> enumerate_risc_pairs(const SqrtThreeRat& max_centre_dist_sq,
                                                  std::optional<RiscKind> only = std::nullopt) {
    if (max_centre_dist_sq.sign() <= 0) throw std::invalid_argument("threshold must be positive");
    const auto& tpls = risc_templates();
    std::vector<RiscPair> out;
    std::set<std::vector<std::int64_t>> seen;
    for (std::size_t ia = 0; ia < tpls.size(); ++ia)
        for (std::size_t ib = ia; ib < tpls.size(); ++ib) {
            const RiscTemplate &A = tpls[ia], &B = tpls[ib];
            if (only && (A.kind != *only || B.kind != *only)) continue;
            std::vector<PlanarIsometry> tried;
            for (auto& ta : A.tiles)
                for (auto& tb : B.tiles)
                    for (auto& m : isometries_onto(tb, ta)) {
                        if (std::find(tried.begin(), tried.end(), m) != tried.end()) continue;
                        tried.push_back(m);
                        CycInt cb = m.apply_scaled(B.centre6, 6);
                        if (cb == A.centre6) continue;
                        SqrtThreeRat d2 = to_rat(norm4(cb - A.centre6)) / SqrtThreeRat(Rational(144));
                        if (!(d2 < max_centre_dist_sq)) continue;
                        PatchBuilder pb;
                        bool ok = true;
                        for (auto& t : A.tiles) ok = ok && pb.add(t);
                        for (auto& t : B.tiles) ok = ok && pb.add(m.apply(t));
                        if (!ok) continue;
                        auto key = detail::congruence_key(pb.tiles(), {A.centre6, cb},
                                                          {static_cast<int>(A.kind), static_cast<int>(B.kind)});
                        if (!seen.insert(key).second) continue;
                        out.push_back({A.kind, B.kind, A.centre6, cb, d2, pb.tiles()});
                    }
        }
    std::sort(out.begin(), out.end(), [](auto& x, auto& y) {
        if (x.centre_dist_sq != y.centre_dist_sq) return x.centre_dist_sq < y.centre_dist_sq;
        return std::pair{x.first, x.second} < std::pair{y.first, y.second};
    });
    return out;
}

struct ClassifiedTiling {
    std::string name;  // Q, E, R, or "unnamed"
    PeriodicTiling tiling;
    RiscPair source;
};

struct ShortTranslationClassification {
    std::vector<ClassifiedTiling> tilings;  // distinct up to isometry
    std::vector<std::string> failures;      // configurations that did not extend
};

inline std::string name_of(const PeriodicTiling& t) {
    auto cf = canonical_form(t);
    for (auto& [n, ref] : {std::pair{"Q", make_Q()}, std::pair{"E", make_E()}, std::pair{"R", make_R()}})
        if (canonical_form(ref) == cf) return n;
    return "unnamed";
}

inline ShortTranslationClassification classify_short_translation_tilings() {
    ShortTranslationClassification res;
    std::set<CanonicalForm> seen;
    for (auto& pair : enumerate_risc_pairs(ell_sq())) {
        auto c = complete_symmetric(pair.tiles, pair.centre6_first, pair.centre6_second);
        if (!c.failure.empty() || c.tilings.empty()) {
            res.failures.push_back(c.failure.empty() ? "configuration does not extend to a tiling" : c.failure);
            continue;
        }
        for (auto& t : c.tilings)
            if (seen.insert(canonical_form(t)).second) res.tilings.push_back({name_of(t), t, pair});
    }
    return res;
}

// ---- local search around a square ----

struct SegmentPatchClass {
    std::vector<Tile> tiles;  // tiles whose interior meets [p, c], in one representative
    CycInt p6, c6;
    std::size_t completions = 0;
    bool forbidden = false;  // a square other than the seed meets the segment next to the triangle
};

struct LocalPatchResult {
    bool refused = false;
    std::string refusal;
    std::size_t candidates = 0;     // centroids tried
    std::size_t admissible = 0;     // centroids with a consistent rotated seed
    std::size_t completions = 0;
    std::size_t nodes = 0;
    std::vector<SegmentPatchClass> classes;
    bool forbidden_seen = false;
};

namespace detail {

// Does the open interior of a convex ccw tile meet the closed segment [p6, c6]?  Six-scaled.
inline bool interior_meets_segment(const Tile& t, const CycInt& p6, const CycInt& c6) {
    // inside edge j: cross(b - a, x - a) > 0 with x = p + s (c - p), s in [0, 1]
    SqrtThreeRat lo(Rational(0)), hi(Rational(1));
    bool lo_strict = false, hi_strict = false;
    CycInt d = c6 - p6;
    for (std::size_t j = 0; j < t.size(); ++j) {
        CycInt a = t.vertex(j) * std::int64_t(6), e = (t.vertex(j + 1) - t.vertex(j)) * std::int64_t(6);
        SqrtThreeRat f0 = to_rat(e.re2() * (p6 - a).im2() - e.im2() * (p6 - a).re2());
        SqrtThreeRat sl = to_rat(e.re2() * d.im2() - e.im2() * d.re2());
        if (sl.is_zero()) {
            if (f0.sign() <= 0) return false;
            continue;
        }
        SqrtThreeRat root = -f0 / sl;
        if (sl.sign() > 0) {
            if (root > lo || (root == lo && !lo_strict)) { lo = root; lo_strict = true; }
        } else {
            if (root < hi || (root == hi && !hi_strict)) { hi = root; hi_strict = true; }
        }
    }
    if (lo < hi) return true;
    return lo == hi && !lo_strict && !hi_strict;
}

// Closed unit edge [a, b] meets closed segment [p6, c6]?  a, b integral.
inline bool edge_meets_segment(const CycInt& a, const CycInt& b, const CycInt& p6, const CycInt& c6) {
    CycInt a6 = a * std::int64_t(6), b6 = b * std::int64_t(6);
    int o1 = cross_sign(b6 - a6, p6 - a6), o2 = cross_sign(b6 - a6, c6 - a6);
    int o3 = cross_sign(c6 - p6, a6 - p6), o4 = cross_sign(c6 - p6, b6 - p6);
    if (o1 == 0 && o2 == 0) {
        // collinear: overlap of projections
        auto proj = [&](const CycInt& x) { return dot4(x - p6, c6 - p6); };
        SqrtThreeInt pa = proj(a6), pb = proj(b6), pc = proj(c6);
        SqrtThreeInt mn = pa < pb ? pa : pb, mx = pa < pb ? pb : pa;
        return !(mx.sign() < 0) && !(pc < mn);
    }
    return o1 * o2 <= 0 && o3 * o4 <= 0;
}

inline std::vector<CycInt> nearby_lattice_points(int steps, double radius) {
    std::set<PointKey> seen{CycInt().coeffs()};
    std::vector<CycInt> frontier{CycInt()}, all{CycInt()};
    for (int s = 0; s < steps; ++s) {
        std::vector<CycInt> next;
        for (auto& p : frontier)
            for (auto& d : unit_directions()) {
                CycInt q = p + d;
                double x = q.re_approx(), y = q.im_approx();
                if (x * x + y * y > radius * radius) continue;
                if (seen.insert(q.coeffs()).second) { next.push_back(q); all.push_back(q); }
            }
        frontier = std::move(next);
    }
    return all;
}

}  // namespace detail

inline SqrtThreeRat nearest_centre_bound_sq() { return {Rational(7, 9), Rational(4, 9)}; }  // ((2 + sqrt3)/3)^2

// All ways to tile along the segment from a triangle centroid p to the centre of the unit square
// at the origin, with the patch invariant under the order-3 rotation about p and every tile within
// radius_sq of the square's centre.  Classes are taken up to isometry of the crossing tiles.
inline LocalPatchResult local_patch_search(const SqrtThreeRat& radius_sq = SqrtThreeRat(Rational(16)),
                                           const SqrtThreeRat& max_dist_sq = nearest_centre_bound_sq(),
                                           const SqrtThreeRat& radius_cap = SqrtThreeRat(Rational(16)),
                                           std::size_t node_limit = 2000000) {
    LocalPatchResult res;
    if (radius_cap < radius_sq) {
        double est = 3.14159265358979 * radius_sq.approx() / (0.4330127018922193);
        res.refused = true;
        std::ostringstream os;
        os << "radius^2 " << radius_sq.approx() << " exceeds the cap " << radius_cap.approx() << " (about "
           << static_cast<long>(est) << " triangles of area to explore)";
        res.refusal = os.str();
        return res;
    }
    const Tile seed = Tile::make(TileKind::Square, CycInt(), 0);
    const CycInt c6 = seed.centre6();
    // centroid of a triangle within sqrt(max_dist_sq) of c: vertices within that plus 1/sqrt3
    double reach = std::sqrt(max_dist_sq.approx()) + 0.58 + 0.71 + 1e-9;
    std::map<TileKey, Tile> cands;
    for (auto& v : detail::nearby_lattice_points(6, reach))
        for (int k = 0; k < 12; ++k) {
            Tile tri = Tile::make(TileKind::Triangle, v, k).normalised();
            SqrtThreeRat d2 = to_rat(norm4(tri.centre6() - c6)) / SqrtThreeRat(Rational(144));
            if (max_dist_sq < d2) continue;
            if (!tiles_compatible(tri, seed)) continue;
            cands.emplace(tri.key(), tri);
        }

    std::map<std::vector<std::int64_t>, std::size_t> class_of;
    for (auto& [key, tri] : cands) {
        ++res.candidates;
        CycInt p6 = tri.centre6();
        auto rho = rotation_about(p6, 4);
        if (!rho) continue;
        PlanarIsometry rho2 = rho->compose(*rho);
        auto add_orbit = [&](PatchBuilder& b, const Tile& t) { return b.add(t) && b.add(rho->apply(t)) && b.add(rho2.apply(t)); };
        PatchBuilder start;
        if (!add_orbit(start, seed) || !add_orbit(start, tri)) continue;
        ++res.admissible;
        auto within = [&](const Tile& t) {
            return !(radius_sq < to_rat(norm4(t.centre6() - c6)) / SqrtThreeRat(Rational(144)));
        };
        std::function<void(const PatchBuilder&)> dfs = [&](const PatchBuilder& b) {
            if (++res.nodes > node_limit) throw std::runtime_error("local patch search exceeded its node limit");
            auto e = b.open_edge([&](const CycInt& a, const CycInt& z) { return detail::edge_meets_segment(a, z, p6, c6); });
            if (!e) {
                ++res.completions;
                std::vector<Tile> crossing;
                for (auto& t : b.tiles())
                    if (detail::interior_meets_segment(t, p6, c6)) crossing.push_back(t);
                auto k = detail::congruence_key(crossing, {p6, c6}, {0, 1}, false);
                auto [it, fresh] = class_of.emplace(k, res.classes.size());
                if (fresh) {
                    SegmentPatchClass cl{crossing, p6, c6, 0, false};
                    // a square adjacent to the triangle, other than the seed, crossing the segment
                    for (auto& t : crossing)
                        if (t.kind == TileKind::Square && !(t.normalised().key() == seed.normalised().key())) {
                            for (std::size_t j = 0; j < t.size(); ++j)
                                for (std::size_t i = 0; i < tri.size(); ++i)
                                    if (t.vertex(j) == tri.vertex(i + 1) && t.vertex(j + 1) == tri.vertex(i)) cl.forbidden = true;
                        }
                    res.forbidden_seen = res.forbidden_seen || cl.forbidden;
                    res.classes.push_back(std::move(cl));
                }
                ++res.classes[it->second].completions;
                return;
            }
            CycInt a = e->first, end = a + unit_directions()[e->second];
            for (TileKind kind : {TileKind::Triangle, TileKind::Square}) {
                Tile t = Tile::make(kind, end, e->second + 6);
                if (!within(t)) continue;
                PatchBuilder next = b;
                if (add_orbit(next, t)) dfs(next);
            }
        };
        dfs(start);
    }
    return res;
}

// ---- counting obstructions ----

struct TetTypeCounts {
    bool feasible = false;
    std::int64_t a = 0, b = 0, c = 0;  // TTTT, OOTT, OTTT tetrahedra
    std::int64_t d = 0;                // squares
    Rational sigma;                    // octahedra, d / 6
    bool sigma_integral() const { return sigma.get_den() == 1; }
    bool sigma_even() const { return sigma_integral() && sigma.get_num() % 2 == 0; }
};

// d = 2b + 3c, d = 2b, d = 3(4a + c) over the nonnegative integers.
inline TetTypeCounts noace_count_solver(std::int64_t d) {
    if (d < 1) throw std::invalid_argument("square count must be positive");
    TetTypeCounts r;
    r.d = d;
    r.sigma = Rational(static_cast<long>(d), 6);
    r.sigma.canonicalize();
    // the first two force c = 0, then b = d/2 and a = d/12
    if (d % 12 == 0) {
        r.feasible = true;
        r.b = d / 2;
        r.a = d / 12;
        r.c = 0;
    }
    return r;
}

struct AreaSolution {
    std::int64_t triangles, squares;
};

struct AreaObstruction {
    SqrtThreeRat area;
    std::vector<AreaSolution> solutions;  // empty: the length is excluded
    std::string reason;
};

// Hexagonal fundamental domain of side sqrt(ell_sq) against n1 sqrt3/4 + n2 with n1, n2 >= 1.
inline AreaObstruction area_obstruction(const SqrtThreeRat& ell_sq) {
    if (ell_sq.sign() <= 0) throw std::invalid_argument("squared length must be positive");
    AreaObstruction r;
    r.area = ell_sq * SqrtThreeRat(Rational(0), Rational(1, 2));
    Rational n1 = r.area.sqrt3_part() * 4, n2 = r.area.rational_part();
    if (n1.get_den() != 1 || n2.get_den() != 1) {
        r.reason = "coefficients " + n1.get_str() + ", " + n2.get_str() + " are not both integers";
    } else if (n1 < 1 || n2 < 1) {
        r.reason = "(" + n1.get_str() + ", " + n2.get_str() + ") needs at least one tile of each kind";
    } else {
        r.solutions.push_back({n1.get_num().get_si(), n2.get_num().get_si()});
        r.reason = "unique solution";
    }
    return r;
}

struct InequalityAudit {
    int ordering = 0;  // sign of lhs - rhs
    SqrtThreeRat difference;
    std::string certificate;
};

// Exact comparison: lhs - rhs = p + q sqrt3, decided by the signs of p, q and of p^2 - 3q^2.
inline InequalityAudit audit_inequality(const SqrtThreeRat& lhs, const SqrtThreeRat& rhs) {
    InequalityAudit r;
    r.difference = lhs - rhs;
    r.ordering = r.difference.sign();
    const Rational &p = r.difference.rational_part(), &q = r.difference.sqrt3_part();
    std::ostringstream os;
    os << "lhs - rhs = " << r.difference.str() << "; ";
    if (sgn(q) == 0) os << "rational part has sign " << sgn(p);
    else if (sgn(p) == 0) os << "sqrt3 part has sign " << sgn(q);
    else if (sgn(p) == sgn(q)) os << "both parts have sign " << sgn(p);
    else os << "p^2 - 3q^2 = " << Rational(p * p - 3 * q * q).get_str() << " so the sign follows the "
            << (sgn(Rational(p * p - 3 * q * q)) > 0 ? "rational" : "sqrt3") << " part";
    os << " => " << (r.ordering < 0 ? "less" : r.ordering > 0 ? "greater" : "equal");
    r.certificate = os.str();
    return r;
}

// ---- half-edges of the dual tessellation ----

enum class EdgeClass { Short, Long, SquareSquare };

inline std::string to_string(EdgeClass c) {
    switch (c) {
        case EdgeClass::Short: return "short";
        case EdgeClass::Long: return "long";
        default: return "square-square";
    }
}

struct HalfEdgeOrbitReport {
    std::size_t faces = 0, half_edges = 0;
    std::map<std::string, int> face_orbits;  // by face type
    int pentagon_orbits = 0, hexagon_orbits = 0;
    int short_orbits = 0, long_orbits = 0, square_square_orbits = 0;
    std::vector<int> face_orbit;        // per dual face
    std::vector<int> half_edge_orbit;   // per half-edge id
    std::vector<EdgeClass> half_edge_class;
    std::vector<std::size_t> orbit_sizes;  // half-edge orbits
    std::vector<std::size_t> orbit_reps;
    bool bookkeeping_ok = false;
    bool proxy_consistent = false;  // both faces at every dual edge agree on its class
    // slot s of face f (ccw, two per dual edge) -> half-edge id
    std::vector<std::vector<std::size_t>> face_slots;
    std::vector<std::string> face_types;
};

namespace detail {

struct HalfEdgeTable {
    std::map<std::pair<PointKey, PointKey>, std::size_t> ids;  // (reduced midpoint, endpoint) six-scaled
    std::vector<std::pair<CycInt, CycInt>> geom;              // midpoint, endpoint
    std::vector<EdgeClass> cls;

    std::pair<PointKey, PointKey> key(const LatticeFrame& f, const CycInt& mid6, const CycInt& end6) const {
        CycInt m = f.reduce_scaled(mid6, 6);
        CycInt s = m - mid6;
        return {m.coeffs(), (end6 + s).coeffs()};
    }
};

inline std::size_t find_root(std::vector<std::size_t>& p, std::size_t x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
}

}  // namespace detail

inline HalfEdgeOrbitReport halfedge_orbit_analysis(const PeriodicTiling& t, const SymmetryGroup& g) {
    if (!is_symmetry_group_of(g, t)) throw std::invalid_argument("group does not preserve the tiling");
    TilingIndex ix(t);
    ix.require_ok();
    const LatticeFrame& f = t.frame();
    HalfEdgeOrbitReport r;
    detail::HalfEdgeTable tab;
    bool consistent = true;
    auto vtx = ix.vertices();
    r.faces = vtx.size();
    for (auto& v : vtx) {
        std::vector<std::size_t> slots;
        std::size_t n = v.corners.size();
        for (std::size_t m = 0; m < n; ++m) {
            const Corner &c0 = v.corners[m], &c1 = v.corners[(m + 1) % n];
            CycInt e0 = t.tiles()[c0.tile].centre6() + c0.shift * std::int64_t(6);
            CycInt e1 = t.tiles()[c1.tile].centre6() + c1.shift * std::int64_t(6);
            CycInt mid6 = v.point * std::int64_t(6) + unit_directions()[c0.k_prev] * std::int64_t(3);
            EdgeClass cls = c0.kind == TileKind::Triangle && c1.kind == TileKind::Triangle ? EdgeClass::Short
                            : c0.kind == TileKind::Square && c1.kind == TileKind::Square ? EdgeClass::SquareSquare
                                                                                         : EdgeClass::Long;
            for (auto* e : {&e0, &e1}) {
                auto k = tab.key(f, mid6, *e);
                auto [it, fresh] = tab.ids.emplace(k, tab.geom.size());
                if (fresh) {
                    tab.geom.emplace_back(CycInt(k.first), CycInt(k.second));
                    tab.cls.push_back(cls);
                } else if (tab.cls[it->second] != cls) {
                    consistent = false;
                }
                slots.push_back(it->second);
            }
        }
        r.face_slots.push_back(std::move(slots));
        r.face_types.push_back(face_type(v));
    }
    r.half_edges = tab.geom.size();
    r.half_edge_class = tab.cls;
    r.proxy_consistent = consistent;

    auto elements = elements_modulo(g, f);
    std::vector<std::size_t> hp(r.half_edges), fp(r.faces);
    std::iota(hp.begin(), hp.end(), 0);
    std::iota(fp.begin(), fp.end(), 0);
    auto image = [&](const PlanarIsometry& el, std::size_t h) {
        auto [m, e] = tab.geom[h];
        auto k = tab.key(f, el.apply_scaled(m, 6), el.apply_scaled(e, 6));
        auto it = tab.ids.find(k);
        if (it == tab.ids.end()) throw std::logic_error("group element does not preserve the half-edges");
        return it->second;
    };
    for (auto& el : elements) {
        for (std::size_t h = 0; h < r.half_edges; ++h) {
            std::size_t a = detail::find_root(hp, h), b = detail::find_root(hp, image(el, h));
            if (a != b) hp[a] = b;
        }
        for (std::size_t v = 0; v < r.faces; ++v) {
            auto w = ix.vertex_index(el.apply(vtx[v].point));
            if (!w) throw std::logic_error("group element does not preserve the vertices");
            std::size_t a = detail::find_root(fp, v), b = detail::find_root(fp, *w);
            if (a != b) fp[a] = b;
        }
    }
    std::map<std::size_t, int> hid, fid;
    r.half_edge_orbit.resize(r.half_edges);
    for (std::size_t h = 0; h < r.half_edges; ++h) {
        std::size_t root = detail::find_root(hp, h);
        auto [it, fresh] = hid.emplace(root, static_cast<int>(hid.size()));
        if (fresh) {
            r.orbit_reps.push_back(h);
            r.orbit_sizes.push_back(0);
            switch (tab.cls[h]) {
                case EdgeClass::Short: ++r.short_orbits; break;
                case EdgeClass::Long: ++r.long_orbits; break;
                default: ++r.square_square_orbits;
            }
        }
        r.half_edge_orbit[h] = it->second;
        ++r.orbit_sizes[it->second];
        if (tab.cls[h] != tab.cls[r.orbit_reps[it->second]]) r.proxy_consistent = false;
    }
    r.face_orbit.resize(r.faces);
    for (std::size_t v = 0; v < r.faces; ++v) {
        std::size_t root = detail::find_root(fp, v);
        auto [it, fresh] = fid.emplace(root, static_cast<int>(fid.size()));
        if (fresh) ++r.face_orbits[r.face_types[v]];
        r.face_orbit[v] = it->second;
    }
    for (auto& [type, n] : r.face_orbits) {
        if (type.size() == 5) r.pentagon_orbits += n;
        if (type.size() == 6) r.hexagon_orbits += n;
    }
    // orbit-stabiliser: |G/L| / |Stab(rep)| must equal the orbit size, summing to the total
    std::size_t total = 0;
    bool ok = true;
    for (std::size_t o = 0; o < r.orbit_reps.size(); ++o) {
        std::size_t stab = 0;
        for (auto& el : elements) stab += image(el, r.orbit_reps[o]) == r.orbit_reps[o];
        if (stab == 0 || elements.size() % stab != 0 || elements.size() / stab != r.orbit_sizes[o]) ok = false;
        total += r.orbit_sizes[o];
    }
    r.bookkeeping_ok = ok && total == r.half_edges;
    return r;
}

// ---- the orbit-merging contradiction on E ----

struct SlopCase {
    std::string label;     // e.g. "X=a" or "X=a, Y=s(a)"
    bool excluded = false;
    std::string reason;
    std::vector<std::size_t> merged;  // sizes of merged classes of long orbits, descending
    std::size_t max_merged = 0;
    bool contradiction = false;       // some class exceeds every allowed count
};

struct SlopReport {
    std::string group;
    int long_orbits = 0;
    int pentagon_orbits = 0;
    std::set<int> allowed;            // orbit counts compatible with a 2pi/3 dihedral angle
    std::vector<SlopCase> cases;
    bool all_contradict = false;
};

// m copies of 2pi/3 around an edge must make 2pi/n for an integer n.
inline std::set<int> allowed_identification_counts() {
    std::set<int> s;
    for (int m = 1; m <= 12; ++m)
        for (int n = 1; n <= 12; ++n)
            if (m * n == 3) s.insert(m);
    return s;
}

inline SlopReport slop_case_check(const std::string& group_kind) {
    if (group_kind != "p6" && group_kind != "p3") throw std::invalid_argument("group must be p6 or p3");
    PeriodicTiling e = make_E();
    SymmetryGroup full = symmetry_group(e);
    PeriodicTiling t(full.t1, full.t2, fundamental_domain(e, full.t1, full.t2));
    SymmetryGroup grp = group_kind == "p6" ? full : rotation_subgroup(full, 3);
    auto rep = halfedge_orbit_analysis(t, grp);
    TilingIndex ix(t);
    SlopReport out;
    out.group = group_kind;
    out.long_orbits = rep.long_orbits;
    out.pentagon_orbits = rep.pentagon_orbits;
    out.allowed = allowed_identification_counts();

    // pentagon labels h0..h9 ccw from the short edge
    auto labels = [&](std::size_t face) {
        const auto& s = rep.face_slots[face];
        std::size_t start = s.size();
        for (std::size_t j = 0; j < s.size(); j += 2)
            if (rep.half_edge_class[s[j]] == EdgeClass::Short) start = j;
        if (start == s.size()) throw std::logic_error("pentagon without a short edge");
        std::vector<std::size_t> l;
        for (std::size_t j = 0; j < s.size(); ++j) l.push_back(s[(start + j) % s.size()]);
        return l;
    };
    // the other face along a half-edge
    auto across = [&](std::size_t face, std::size_t he) {
        for (std::size_t g = 0; g < rep.face_slots.size(); ++g)
            if (g != face && std::count(rep.face_slots[g].begin(), rep.face_slots[g].end(), he)) return g;
        throw std::logic_error("half-edge on a single face");
    };
    std::optional<std::size_t> a, b;
    for (std::size_t fc = 0; fc < rep.faces; ++fc) {
        if (rep.face_types[fc].size() != 5) continue;
        auto& slot = rep.face_types[across(fc, labels(fc)[0])].size() == 6 ? b : a;
        if (!slot) slot = fc;
    }
    if (!a || !b) throw std::logic_error("pentagon classes not found");
    auto sigma = full.rotations[6];
    if (!sigma) throw std::logic_error("no half-turn in the full group");
    auto face_image = [&](const PlanarIsometry& g, std::size_t fc) {
        auto w = ix.vertex_index(g.apply(ix.vertices()[fc].point));
        if (!w) throw std::logic_error("half-turn does not preserve the vertices");
        return *w;
    };

    // gamma carries X onto target reversing the boundary orientation and keeping the short edge:
    // label i goes to label 1 - i
    auto merge = [&](const std::vector<std::pair<std::size_t, std::size_t>>& gluings) {
        std::vector<std::size_t> p(rep.orbit_reps.size());
        std::iota(p.begin(), p.end(), 0);
        for (auto [x, target] : gluings) {
            auto lx = labels(x), lt = labels(target);
            for (std::size_t i = 0; i < 10; ++i) {
                std::size_t hx = lx[i], ht = lt[(11 - i) % 10];
                if (rep.half_edge_class[hx] != EdgeClass::Long) continue;
                std::size_t u = detail::find_root(p, rep.half_edge_orbit[hx]);
                std::size_t v = detail::find_root(p, rep.half_edge_orbit[ht]);
                if (u != v) p[u] = v;
            }
        }
        std::map<std::size_t, std::size_t> sizes;
        for (std::size_t o = 0; o < p.size(); ++o)
            if (rep.half_edge_class[rep.orbit_reps[o]] == EdgeClass::Long) ++sizes[detail::find_root(p, o)];
        std::vector<std::size_t> v;
        for (auto& [k, n] : sizes) v.push_back(n);
        std::sort(v.rbegin(), v.rend());
        return v;
    };
    auto finish = [&](SlopCase c, const std::vector<std::pair<std::size_t, std::size_t>>& gl) {
        c.merged = merge(gl);
        c.max_merged = c.merged.empty() ? 0 : c.merged.front();
        c.contradiction = c.max_merged > *out.allowed.rbegin();
        return c;
    };
    // the face across X's short edge is the image of a pentagon, so X cannot border the hexagon there
    auto short_edge_faces_pentagon = [&](std::size_t x) { return rep.face_types[across(x, labels(x)[0])].size() == 5; };

    auto same_orbit = [&](std::size_t f1, std::size_t f2) { return rep.face_orbit[f1] == rep.face_orbit[f2]; };
    if (group_kind == "p6") {
        for (auto [name, x] : {std::pair{"X=a", *a}, std::pair{"X=b", *b}}) {
            SlopCase c{name};
            if (!short_edge_faces_pentagon(x)) {
                c.excluded = true;
                c.reason = "the face across the short edge of X is a hexagon, not a pentagon";
                out.cases.push_back(c);
                continue;
            }
            out.cases.push_back(finish(c, {{x, *b}}));
        }
    } else {
        std::size_t sa = face_image(*sigma, *a), sb = face_image(*sigma, *b);
        if (same_orbit(sa, *a) || same_orbit(sb, *b)) throw std::logic_error("half-turn lies in the subgroup");
        std::vector<std::pair<std::string, std::size_t>> reps{{"a", *a}, {"s(a)", sa}, {"b", *b}, {"s(b)", sb}};
        for (auto& [xn, x] : reps)
            for (auto& [yn, y] : reps) {
                SlopCase c{"X=" + xn + ", Y=" + yn};
                if (!short_edge_faces_pentagon(x) || !short_edge_faces_pentagon(y)) {
                    c.excluded = true;
                    c.reason = "a face across a short edge would be a hexagon, not a pentagon";
                } else if (x == y) {
                    c.excluded = true;
                    c.reason = "X = Y would put b and s(b) in one orbit of the subgroup";
                }
                if (c.excluded) { out.cases.push_back(c); continue; }
                out.cases.push_back(finish(c, {{x, *b}, {y, sb}}));
            }
    }
    out.all_contradict = true;
    for (auto& c : out.cases)
        if (!c.excluded && !c.contradiction) out.all_contradict = false;
    return out;
}

}  // namespace mixplat
