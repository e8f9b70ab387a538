#pragma once

#include "fixtures.hpp"
#include "patch.hpp"
#include "tiling.hpp"

#include <stdexcept>

namespace mixplat {

namespace detail {
inline PeriodicTiling one_per_class(const PeriodicTiling& t) { return PeriodicTiling(t.t1(), t.t2(), t.tiles()); }

inline PeriodicTiling complete_unique(const char* fixture, const CycInt& p6, const CycInt& q6) {
    auto r = complete_symmetric(parse_tiles(fixture).tiles, p6, q6);
    if (r.tilings.size() != 1) throw std::logic_error("named tiling does not have a unique completion");
    return r.tilings.front();
}
}  // namespace detail

// Square lattice, one square per period.
inline PeriodicTiling make_square_tiling() {
    return PeriodicTiling(CycInt(1), CycInt::imag_unit(), {Tile::make(TileKind::Square, CycInt(), 0)});
}

// Triangle lattice, two triangles per period.
inline PeriodicTiling make_triangle_tiling() {
    CycInt w = CycInt::omega();
    return PeriodicTiling(CycInt(1), w, {Tile::make(TileKind::Triangle, CycInt(), 0), Tile::make(TileKind::Triangle, CycInt(1), 2)});
}

// Q: left member of the pair of non-examples (8 triangles, 3 squares per period).
inline PeriodicTiling make_Q() { return detail::one_per_class(parse_tiling(fixtures::nonexample_left)); }

// The snub square tiling, right member of the pair; every triangle is OOT.
inline PeriodicTiling make_snub_square() { return detail::one_per_class(parse_tiling(fixtures::nonexample_right)); }

// E: completion of the middle two-centre configuration under its two order-3 rotations.
inline PeriodicTiling make_E() {
    static const PeriodicTiling t = detail::complete_unique(fixtures::two_centre_middle, CycInt(0, 4, 0, -2), CycInt(-6, -4, 0, 2));
    return t;
}

// R: completion of the right two-centre configuration.
inline PeriodicTiling make_R() {
    static const PeriodicTiling t = detail::complete_unique(fixtures::two_centre_right, CycInt(6, 4, 0, -2), CycInt(0, -4, 0, 2));
    return t;
}

// Same tiling as make_Q, rebuilt from the left two-centre configuration.
inline PeriodicTiling make_Q_from_centres() {
    return detail::complete_unique(fixtures::two_centre_left, CycInt(6, 4, 0, -2), CycInt(12, 8, 0, -4));
}

// Stand-in for a cusp with six tetrahedra and two octahedra: the snub square tiling over an
// index-6 sublattice, giving 24 triangles and 12 squares per period.
inline PeriodicTiling make_six_two_fixture() {
    PeriodicTiling s = make_snub_square();
    return PeriodicTiling(s.t1() * std::int64_t(3), s.t2() * std::int64_t(2),
                          fundamental_domain(s, s.t1() * std::int64_t(3), s.t2() * std::int64_t(2)));
}

inline PeriodicTiling builtin_tiling(const std::string& name) {
    if (name == "Q") return make_Q();
    if (name == "R") return make_R();
    if (name == "E") return make_E();
    if (name == "snub") return make_snub_square();
    if (name == "square") return make_square_tiling();
    if (name == "triangle") return make_triangle_tiling();
    if (name == "six-two") return make_six_two_fixture();
    throw std::invalid_argument("unknown builtin tiling '" + name + "'");
}

}  // namespace mixplat
