#pragma once

#include "patch.hpp"
#include "tiling.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace mixplat {

inline bool preserves(const PeriodicTiling& t, const PlanarIsometry& g) {
    for (auto& tile : t.tiles())
        if (!t.contains(g.apply(tile))) return false;
    return true;
}

struct RotationCentre {
    CycInt centre6;  // six times the fixed point, reduced into the cell
    int order = 1;
    CycNum centre() const { return to_rat(centre6) * Rational(1, 6); }
};

struct SymmetryGroup {
    CycInt t1, t2;  // reduced basis of the full translation lattice
    // one element per rotation angle (index = power of z), identity included; nullopt if absent
    std::array<std::optional<PlanarIsometry>, 12> rotations;
    std::vector<RotationCentre> centres;  // maximal order, one per lattice class of fixed points
    std::array<std::optional<PlanarIsometry>, 12> reflections;  // orientation reversing, by angle
    std::string tag;
    SqrtThreeRat min_translation_sq;

    std::vector<PlanarIsometry> point_reps() const {
        std::vector<PlanarIsometry> r;
        for (auto& g : rotations)
            if (g) r.push_back(*g);
        return r;
    }
    int point_order() const { return static_cast<int>(point_reps().size()); }
    bool has_reflections() const {
        for (auto& g : reflections)
            if (g) return true;
        return false;
    }
};

inline std::string tag_for_order(int n) {
    switch (n) {
        case 6: return "p6";
        case 4: return "p4";
        case 3: return "p3";
        case 2: return "p2";
        default: return "p1";
    }
}

// Rotation centres can only be tile centres, vertices or edge midpoints, so the search is finite.
inline SymmetryGroup symmetry_group(const PeriodicTiling& input) {
    PeriodicTiling t = with_full_translation_lattice(input);
    TilingIndex ix(t);
    ix.require_ok();
    const LatticeFrame& f = t.frame();
    SymmetryGroup g;
    g.t1 = t.t1();
    g.t2 = t.t2();
    g.min_translation_sq = min_translation_sq(t);
    g.rotations[0] = PlanarIsometry{};

    std::set<std::array<std::int64_t, 4>> cands;
    for (auto& tile : t.tiles()) {
        cands.insert(f.reduce_scaled(tile.centre6(), 6).coeffs());
        for (std::size_t j = 0; j < tile.size(); ++j)
            cands.insert(f.reduce_scaled((tile.vertex(j) + tile.vertex(j + 1)) * std::int64_t(3), 6).coeffs());
    }
    for (auto& v : ix.vertices()) cands.insert((v.point * std::int64_t(6)).coeffs());

    for (auto& c : cands) {
        CycInt c6{c};
        for (int n : {6, 4, 3, 2}) {
            auto rho = rotation_about(c6, 12 / n);
            if (!rho || !preserves(t, *rho)) continue;
            g.centres.push_back({c6, n});
            PlanarIsometry p = *rho;
            for (int m = 1; m < n; ++m) {
                if (!g.rotations[p.rot]) g.rotations[p.rot] = p;
                p = p.compose(*rho);
            }
            break;
        }
    }
    int maxorder = 1;
    for (auto& c : g.centres) maxorder = std::max(maxorder, c.order);
    g.tag = tag_for_order(maxorder);

    const CycInt& v0 = t.tiles()[0].vertices[0];
    for (int k = 0; k < 12; ++k)
        for (auto& v : ix.vertices()) {
            PlanarIsometry r{k, true, CycInt()};
            r.trans = v.point - r.apply(v0);
            if (preserves(t, r)) { g.reflections[k] = r; break; }
        }
    return g;
}

// The orientation-preserving subgroup of index order(g)/order: keeps rotations by multiples of 360/order.
inline SymmetryGroup rotation_subgroup(const SymmetryGroup& g, int order) {
    if (order <= 0 || 12 % order != 0) throw std::invalid_argument("bad subgroup order");
    SymmetryGroup h = g;
    int step = 12 / order;
    for (int k = 0; k < 12; ++k)
        if (k % step != 0) h.rotations[k].reset();
    h.reflections = {};
    h.centres.clear();
    int maxorder = 1;
    for (auto& c : g.centres) {
        int n = std::gcd(c.order, order);
        if (n > 1) h.centres.push_back({c.centre6, n});
        maxorder = std::max(maxorder, n);
    }
    h.tag = tag_for_order(maxorder);
    return h;
}

inline bool is_symmetry_group_of(const SymmetryGroup& g, const PeriodicTiling& t) {
    for (auto& r : g.point_reps())
        if (!preserves(t, r)) return false;
    return preserves(t, PlanarIsometry::translation(g.t1)) && preserves(t, PlanarIsometry::translation(g.t2));
}

// Every group element modulo the lattice of `frame` (a sublattice of the group's translations).
inline std::vector<PlanarIsometry> elements_modulo(const SymmetryGroup& g, const LatticeFrame& frame) {
    auto c1 = frame.coords_if_lattice(g.t1), c2 = frame.coords_if_lattice(g.t2);
    std::vector<CycInt> tr;
    std::set<std::array<std::int64_t, 4>> seen;
    // coset representatives of the group lattice modulo the frame lattice
    LatticeFrame gf(g.t1, g.t2);
    auto a1 = gf.coords_if_lattice(frame.t1()), a2 = gf.coords_if_lattice(frame.t2());
    if (!a1 || !a2) throw std::invalid_argument("frame lattice is not contained in the group lattice");
    std::int64_t idx = std::llabs(a1->first * a2->second - a1->second * a2->first);
    (void)c1;
    (void)c2;
    for (std::int64_t i = 0; i < idx; ++i)
        for (std::int64_t j = 0; j < idx; ++j) {
            CycInt s = frame.reduce(gf.at(i, j));
            if (seen.insert(s.coeffs()).second) tr.push_back(s);
        }
    if (static_cast<std::int64_t>(tr.size()) != idx) throw std::logic_error("coset enumeration failed");
    std::vector<PlanarIsometry> out;
    for (auto& r : g.point_reps())
        for (auto& s : tr) out.push_back(PlanarIsometry::translation(s).compose(r));
    return out;
}

struct RotationCentreLattice {
    SqrtThreeRat side_sq;              // t^2 / 3
    SqrtThreeRat covering_radius_sq;   // t^2 / 9
    std::vector<RotationCentre> centres;  // order divisible by 3
};

// Order-3 fixed points form a triangular lattice of side t/sqrt3, t the shortest translation.
inline RotationCentreLattice rotation_centre_lattice(const SymmetryGroup& g) {
    RotationCentreLattice out;
    for (auto& c : g.centres)
        if (c.order % 3 == 0) out.centres.push_back(c);
    if (out.centres.empty()) throw std::invalid_argument("group has no rotation of order 3");
    SqrtThreeRat t2 = g.min_translation_sq;
    out.side_sq = t2 / SqrtThreeRat(Rational(3));
    out.covering_radius_sq = t2 / SqrtThreeRat(Rational(9));
    // Check: nearest neighbours of every centre lie at side_sq, with exactly six of them.
    LatticeFrame f(g.t1, g.t2);
    SqrtThreeInt side36 = SqrtThreeInt();
    for (auto& a : out.centres) {
        std::optional<SqrtThreeInt> best;
        int count = 0;
        for (auto& b : out.centres)
            for (int i = -3; i <= 3; ++i)
                for (int j = -3; j <= 3; ++j) {
                    CycInt d = b.centre6 + f.at(i, j) * std::int64_t(6) - a.centre6;
                    if (d.is_zero()) continue;
                    SqrtThreeInt n = norm4(d);  // 4 * 36 * |d/6|^2
                    if (!best || n < *best) { best = n; count = 1; }
                    else if (n == *best) ++count;
                }
        if (count != 6) throw std::logic_error("order-3 centres do not form a triangular lattice");
        side36 = *best;
    }
    SqrtThreeRat side = to_rat(side36) / SqrtThreeRat(Rational(144));
    if (side != out.side_sq) throw std::logic_error("triangular lattice side differs from t^2/3");
    return out;
}

}  // namespace mixplat
