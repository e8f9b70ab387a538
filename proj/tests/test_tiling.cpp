#include <mixplat/named.hpp>
#include <mixplat/symmetry.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace mixplat;

namespace {

SqrtThreeRat sq3(long a, long b = 0) { return {Rational(a), Rational(b)}; }

const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> n{"Q", "R", "E", "snub", "square", "triangle", "six-two"};
    return n;
}

SqrtThreeRat tile_area(const PeriodicTiling& t) {
    return SqrtThreeRat(Rational(static_cast<long>(t.count(TileKind::Square)))) +
           SqrtThreeRat(Rational(0), Rational(static_cast<long>(t.count(TileKind::Triangle))) / 4);
}

PeriodicTiling moved(const PeriodicTiling& t, const PlanarIsometry& g) {
    std::vector<Tile> ts;
    for (auto& tile : t.tiles()) ts.push_back(g.apply(tile));
    return {t.t1().mul_zeta_pow(g.rot), t.t2().mul_zeta_pow(g.rot), ts};
}

PeriodicTiling doubled(const PeriodicTiling& t) {
    CycInt s1 = t.t1() * std::int64_t(2);
    return {s1, t.t2(), fundamental_domain(t, s1, t.t2())};
}

}  // namespace

TEST(Tiling, BuiltinsValidate) {
    for (auto& n : builtin_names()) {
        auto r = validate(builtin_tiling(n));
        EXPECT_TRUE(r.ok) << n << ": " << r.code << " " << r.message;
    }
}

TEST(Tiling, AreaBalanceOnAllFixtures) {
    for (auto& n : builtin_names()) {
        auto t = builtin_tiling(n);
        EXPECT_EQ(tile_area(t), t.covolume()) << n;
        auto d = doubled(t);
        EXPECT_EQ(tile_area(d), d.covolume()) << n;
        EXPECT_EQ(d.covolume(), t.covolume() * sq3(2)) << n;
        EXPECT_EQ(d.tiles().size(), 2 * t.tiles().size()) << n;
    }
    for (const char* fx : {fixtures::nonexample_left, fixtures::nonexample_right}) {
        auto t = parse_tiling(fx);
        EXPECT_EQ(tile_area(t), t.covolume());
    }
}

TEST(Tiling, FivePlusOneTrianglesAtAVertexFails) {
    auto tri = make_triangle_tiling();
    CycInt s1 = tri.t1() * std::int64_t(3), s2 = tri.t2() * std::int64_t(3);
    auto tiles = fundamental_domain(tri, s1, s2);
    tiles.pop_back();
    auto r = validate(PeriodicTiling(s1, s2, tiles));
    EXPECT_FALSE(r.ok);
    EXPECT_EQ(r.code, "angle-sum");
    EXPECT_NE(r.message.find("300"), std::string::npos) << r.message;
    EXPECT_TRUE(r.where.has_value());
}

TEST(Tiling, StructuredFailures) {
    EXPECT_EQ(validate(PeriodicTiling(CycInt(1), CycInt(2), {})).code, "degenerate-basis");
    auto sq = make_square_tiling();
    std::vector<Tile> twice = sq.tiles();
    twice.push_back(sq.tiles()[0].translated(sq.t1()));
    EXPECT_EQ(validate(PeriodicTiling(sq.t1(), sq.t2(), twice)).code, "duplicate-tile");
    EXPECT_THROW(parse_tiling("basis (1) (z^3)\nS (0) (1)\n"), std::invalid_argument);
    EXPECT_THROW(parse_tiling("T (0) (1) (z^2)\n"), std::invalid_argument);
}

TEST(Tiling, TypeCensus) {
    auto census = [](const char* n) { return triangle_census(TilingIndex(builtin_tiling(n))); };
    using TT = TriangleType;
    std::map<TT, std::size_t> q{{TT::OTT, 6}, {TT::OOO, 2}};
    std::map<TT, std::size_t> r{{TT::TTT, 2}, {TT::OTT, 6}, {TT::OOT, 6}};
    std::map<TT, std::size_t> e{{TT::OTT, 6}, {TT::OOT, 6}, {TT::OOO, 2}};
    std::map<TT, std::size_t> snub{{TT::OOT, 4}};
    std::map<TT, std::size_t> tri{{TT::TTT, 2}};
    EXPECT_EQ(census("Q"), q);
    EXPECT_EQ(census("R"), r);
    EXPECT_EQ(census("E"), e);
    EXPECT_EQ(census("snub"), snub);
    EXPECT_EQ(census("triangle"), tri);
}

TEST(Tiling, TypeConstraints) {
    auto q = check_type_constraints(make_Q());
    EXPECT_FALSE(q.pass);
    EXPECT_EQ(q.witness, "OTT present, no OOT/TTT");
    auto s = check_type_constraints(make_snub_square());
    EXPECT_FALSE(s.pass);
    EXPECT_EQ(s.witness, "OOT present, no OOO/OTT");
    EXPECT_TRUE(check_type_constraints(make_R()).pass);
    EXPECT_TRUE(check_type_constraints(make_E()).pass);
}

TEST(Tiling, VertexConfigurations) {
    auto conf = [](const PeriodicTiling& t) { return TilingIndex(t).configurations(); };
    EXPECT_EQ(conf(make_Q()), (std::set<std::string>{"3^2.4.3.4", "3^6"}));
    EXPECT_EQ(conf(make_R()), (std::set<std::string>{"3^2.4.3.4", "3^3.4^2", "3^6"}));
    EXPECT_EQ(conf(make_E()), (std::set<std::string>{"3^2.4.3.4", "3^6"}));
    EXPECT_EQ(conf(make_snub_square()), (std::set<std::string>{"3^2.4.3.4"}));
    EXPECT_EQ(conf(make_square_tiling()), (std::set<std::string>{"4^4"}));
}

TEST(Tiling, TileCounts) {
    EXPECT_EQ(make_Q().count(TileKind::Triangle), 8u);
    EXPECT_EQ(make_Q().count(TileKind::Square), 3u);
    for (auto t : {make_R(), make_E()}) {
        EXPECT_EQ(t.count(TileKind::Triangle), 14u);
        EXPECT_EQ(t.count(TileKind::Square), 6u);
        EXPECT_EQ(t.covolume(), SqrtThreeRat(Rational(6), Rational(7, 2)));
    }
}

TEST(Tiling, MinimalTranslations) {
    EXPECT_EQ(min_translation_sq(make_E()), sq3(7, 4));
    EXPECT_EQ(min_translation_sq(make_R()), sq3(7, 4));
    EXPECT_EQ(min_translation_sq(make_Q()), sq3(4, 2));
    EXPECT_EQ(min_translation_sq(make_square_tiling()), sq3(1));
    // a sublattice does not change the answer
    EXPECT_EQ(min_translation_sq(doubled(make_E())), sq3(7, 4));
}

TEST(Tiling, CanonicalFormIsIsometryInvariant) {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> k12(0, 11), c(-5, 5);
    for (auto& n : {"R", "E", "Q", "snub"}) {
        auto t = builtin_tiling(n);
        auto base = canonical_form(t);
        for (int trial = 0; trial < 6; ++trial) {
            PlanarIsometry g{k12(rng), false, CycInt(c(rng), c(rng), c(rng), c(rng))};
            EXPECT_EQ(canonical_form(moved(t, g)), base) << n;
        }
        EXPECT_EQ(canonical_form(doubled(t)), base) << n;
    }
    EXPECT_NE(canonical_form(make_R()), canonical_form(make_E()));
}

TEST(Tiling, FormatParseRoundTrip) {
    for (auto& n : builtin_names()) {
        auto t = builtin_tiling(n);
        auto back = parse_tiling(format_tiling(t));
        EXPECT_EQ(format_tiling(back), format_tiling(t)) << n;
        EXPECT_EQ(canonical_form(back), canonical_form(t)) << n;
    }
}

TEST(Tiling, SymmetryTags) {
    EXPECT_EQ(symmetry_group(make_R()).tag, "p6");
    EXPECT_EQ(symmetry_group(make_E()).tag, "p6");
    EXPECT_EQ(symmetry_group(make_Q()).tag, "p6");
    EXPECT_EQ(symmetry_group(make_square_tiling()).tag, "p4");
    EXPECT_EQ(symmetry_group(make_snub_square()).tag, "p4");
    EXPECT_EQ(symmetry_group(make_triangle_tiling()).tag, "p6");
}

TEST(Tiling, SymmetryGroupIsAGroup) {
    for (auto& n : builtin_names()) {
        auto t = builtin_tiling(n);
        auto g = symmetry_group(t);
        auto reps = g.point_reps();
        for (auto& a : reps) {
            EXPECT_TRUE(preserves(t, a)) << n;
            EXPECT_TRUE(preserves(t, a.inverse())) << n;
            for (auto& b : reps) {
                auto ab = a.compose(b);
                EXPECT_TRUE(preserves(t, ab)) << n;
                EXPECT_TRUE(g.rotations[ab.rot].has_value()) << n;
            }
        }
        EXPECT_TRUE(preserves(t, PlanarIsometry::translation(g.t1)));
        EXPECT_TRUE(preserves(t, PlanarIsometry::translation(g.t2)));
        EXPECT_TRUE(is_symmetry_group_of(g, t));
    }
}

TEST(Tiling, TypesAreOrbitConstant) {
    for (auto& n : {"Q", "R", "E", "snub", "six-two"}) {
        auto t = builtin_tiling(n);
        auto g = symmetry_group(t);
        for (auto& r : elements_modulo(g, t.frame()))
            for (auto& tile : t.tiles())
                if (tile.kind == TileKind::Triangle) EXPECT_EQ(triangle_type(t, r.apply(tile)), triangle_type(t, tile)) << n;
    }
}

TEST(Tiling, Patterns) {
    auto R = make_R();
    EXPECT_TRUE(find_pattern(R, "OOT-OOT").empty());
    auto oot = find_pattern(R, "OOT");
    EXPECT_EQ(oot.size(), 6u);
    EXPECT_EQ(find_pattern(R, "OOT-TTT").size(), oot.size());
    EXPECT_TRUE(find_pattern(make_triangle_tiling(), "S").empty());
    EXPECT_THROW(find_pattern(R, "XYZ"), std::invalid_argument);
}

TEST(Tiling, SquareLatticeSublattice) {
    auto sq = make_square_tiling();
    EXPECT_EQ(sq.tiles().size(), 1u);
    EXPECT_EQ(fundamental_domain(sq, sq.t1(), sq.t2()).size(), 1u);
    EXPECT_THROW(fundamental_domain(sq, sq.t1(), sq.t1()), std::invalid_argument);
}

TEST(Tiling, OrderThreeCentreLattice) {
    for (auto t : {make_E(), make_R()}) {
        auto l = rotation_centre_lattice(symmetry_group(t));
        EXPECT_EQ(l.side_sq, SqrtThreeRat(Rational(7, 3), Rational(4, 3)));
        EXPECT_EQ(l.covering_radius_sq, SqrtThreeRat(Rational(7, 9), Rational(4, 9)));
    }
}

TEST(Tiling, QFromTwoCentreSeed) {
    EXPECT_EQ(canonical_form(make_Q_from_centres()), canonical_form(make_Q()));
}
