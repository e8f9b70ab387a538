#include <mixplat/hyperbolic.hpp>
#include <mixplat/named.hpp>

#include <gtest/gtest.h>

using namespace mixplat;

namespace {

SqrtThreeRat sq3(const Rational& a, const Rational& b = 0) { return {a, b}; }

const CycNum one{Rational(1)};
const CycNum i_unit = CycNum::imag_unit();

CycNum tet_apex() { return (CycNum(Rational(3)) + i_unit * CycNum::sqrt3()) * Rational(1, 6); }

bool spans_edge(const IdealPolyhedron& p, std::size_t a, std::size_t b) {
    if (p.kind == PolyhedronKind::Tetrahedron) return a != b;
    // octahedron: opposite vertices are 0/(1+i), 1/i, inf/(1+i)/2
    static const std::array<std::size_t, 6> opposite{3, 4, 5, 0, 1, 2};
    return a != b && opposite[a] != b;
}

}  // namespace

TEST(Hyperbolic, ShapeParameters) {
    auto tet = standard_polyhedron(PolyhedronKind::Tetrahedron);
    auto oct = standard_polyhedron(PolyhedronKind::Octahedron);
    ASSERT_EQ(shape_parameters(tet).size(), 1u);
    EXPECT_EQ(shape_parameters(tet)[0], CycNum::omega());
    for (auto& s : shape_parameters(oct)) EXPECT_EQ(s, half_one_plus_i());
    EXPECT_TRUE(shapes_generate_cyclotomic_field(CycNum::omega(), half_one_plus_i()));
    EXPECT_FALSE(shapes_generate_cyclotomic_field(CycNum::omega(), CycNum::omega()));
    IdealPolyhedron moved{PolyhedronKind::Tetrahedron, {IdealPoint::finite(CycNum()), IdealPoint::infinity()}};
    EXPECT_THROW(shape_parameters(moved), std::invalid_argument);
}

TEST(Hyperbolic, TangentExactlyAlongEdges) {
    for (auto kind : {PolyhedronKind::Tetrahedron, PolyhedronKind::Octahedron}) {
        auto p = standard_polyhedron(kind);
        auto balls = packing_for(p);
        for (std::size_t a = 0; a < balls.size(); ++a)
            for (std::size_t b = a + 1; b < balls.size(); ++b) {
                int s = horoball_separation(balls[a], balls[b]);
                EXPECT_GE(s, 0) << a << " " << b;
                EXPECT_EQ(s == 0, spans_edge(p, a, b)) << a << " " << b;
                EXPECT_EQ(tangency_point(balls[a], balls[b]).has_value(), s == 0);
            }
    }
}

TEST(Hyperbolic, TangencyPointsLieOnBothHorospheres) {
    Horoball a{IdealPoint::finite(CycNum()), Rational(1)}, b{IdealPoint::finite(one), Rational(1)};
    auto t = tangency_point(a, b);
    ASSERT_TRUE(t);
    EXPECT_EQ(t->z, one * Rational(1, 2));
    EXPECT_EQ(t->height_sq, sq3(Rational(1, 4)));
    Horoball top{IdealPoint::infinity(), Rational(1)};
    auto u = tangency_point(top, a);
    ASSERT_TRUE(u);
    EXPECT_EQ(u->height_sq, sq3(1));
}

TEST(Hyperbolic, TetrahedralCell) {
    auto cell = voronoi_cell(standard_polyhedron(PolyhedronKind::Tetrahedron), IdealPoint::infinity());
    EXPECT_EQ(cell.apex.z, tet_apex());
    EXPECT_EQ(cell.apex.height_sq, sq3(Rational(2, 3)));
    EXPECT_EQ(cell.apex.z, (CycNum() + one + CycNum::omega()) * Rational(1, 3));  // centroid of the cusp triangle
    EXPECT_EQ(cell.faces.size(), 3u);
    for (auto& f : cell.faces) EXPECT_TRUE(f.on_boundary(cell.apex));
    ASSERT_EQ(cell.dihedral_cos.size(), 3u);
    for (auto& c : cell.dihedral_cos) EXPECT_EQ(c, sq3(Rational(-1, 2)));
    EXPECT_TRUE(cell.redundant_checked);
    EXPECT_TRUE(cell.avoids_far_faces);
}

TEST(Hyperbolic, OctahedralCell) {
    auto cell = voronoi_cell(standard_polyhedron(PolyhedronKind::Octahedron), IdealPoint::infinity());
    EXPECT_EQ(cell.apex.z, half_one_plus_i());
    EXPECT_EQ(cell.apex.height_sq, sq3(Rational(1, 2)));
    EXPECT_EQ(cell.apex.z, (CycNum() + one + one + i_unit + i_unit) * Rational(1, 4));  // centroid of the cusp square
    EXPECT_EQ(cell.faces.size(), 4u);
    for (auto& f : cell.faces) EXPECT_TRUE(f.on_boundary(cell.apex));
    ASSERT_EQ(cell.dihedral_cos.size(), 4u);
    for (auto& c : cell.dihedral_cos) EXPECT_EQ(c, sq3(Rational(-1, 2)));
    EXPECT_TRUE(cell.redundant_checked);
    EXPECT_TRUE(cell.avoids_far_faces);
}

TEST(Hyperbolic, HalfSpacesSeparateCentres) {
    auto balls = packing_for(standard_polyhedron(PolyhedronKind::Octahedron));
    for (std::size_t a = 0; a < balls.size(); ++a)
        for (std::size_t b = 0; b < balls.size(); ++b) {
            if (a == b || balls[a].centre.is_infinity() || balls[b].centre.is_infinity()) continue;
            auto h = halfspace_between(balls[a], balls[b]);
            // a point high above a's centre, inside the horoball of a
            H3Point near_a{balls[a].centre.value(), sq3(balls[a].size * balls[a].size / 4)};
            EXPECT_TRUE(h.contains(near_a)) << a << " " << b;
        }
    Horoball x{IdealPoint::finite(CycNum()), Rational(1)}, y{IdealPoint::finite(one * Rational(1, 2)), Rational(1)};
    EXPECT_THROW(halfspace_between(x, y), std::invalid_argument);
}

TEST(Dual, AreasSumToCovolume) {
    for (auto& n : {"Q", "R", "E", "snub", "square", "triangle", "six-two"}) {
        auto t = builtin_tiling(n);
        auto d = dual_tessellation(t);
        EXPECT_EQ(d.faces.size(), TilingIndex(t).vertices().size()) << n;
        EXPECT_EQ(d.total_area, t.covolume()) << n;
        SqrtThreeRat sum;
        for (auto& f : d.faces) sum = sum + f.area;
        EXPECT_EQ(sum, t.covolume()) << n;
        EXPECT_TRUE(d.duality_verified) << n;
    }
}

TEST(Dual, RoundTripNearestVertex) {
    for (auto& n : {"Q", "R", "E", "snub"}) EXPECT_TRUE(duality_roundtrip(builtin_tiling(n), 6, 3)) << n;
}

TEST(Dual, TotalEclipseFaces) {
    auto d = dual_tessellation(make_E());
    std::map<std::string, int> types;
    for (auto& f : d.faces) ++types[f.type];
    EXPECT_EQ(types, (std::map<std::string, int>{{"OTOTT", 12}, {"TTTTTT", 1}}));
    for (auto& f : d.faces) EXPECT_EQ(f.centres6.size(), f.type.size());
}

TEST(Dual, FaceTypeIsRotationInvariant) {
    auto d = dual_tessellation(make_R());
    std::set<std::string> types;
    for (auto& f : d.faces) types.insert(f.type);
    EXPECT_EQ(types, (std::set<std::string>{"OOTTT", "OTOTT", "TTTTTT"}));
}

TEST(Dual, ValenceSixSpacing) {
    EXPECT_EQ(min_valence6_distance_sq(make_E()), sq3(7, 4));
    EXPECT_THROW(min_valence6_distance_sq(make_square_tiling()), std::invalid_argument);
}
