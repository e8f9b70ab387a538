#include <mixplat/cyclo.hpp>
#include <mixplat/interval.hpp>

#include <gtest/gtest.h>

#include <chrono>
#include <random>

using namespace mixplat;

namespace {

CycNum random_integral(std::mt19937& rng, int span = 4) {
    std::uniform_int_distribution<int> d(-span, span);
    return {Rational(d(rng)), Rational(d(rng)), Rational(d(rng)), Rational(d(rng))};
}

SqrtThreeRat sq3(long a, long b = 0) { return {Rational(a), Rational(b)}; }

}  // namespace

TEST(Cyclo, ModulusOfOmegaPlusI) {
    CycNum u = CycNum::omega() + CycNum::imag_unit();
    EXPECT_EQ(u.norm_sq(), sq3(2, 1));
    CycNum z = CycNum::zeta();
    EXPECT_EQ(CycNum::from_real(sq3(2, 1)), z * Rational(2) - pow(z, 3) + CycNum(Rational(2)));
    auto m = embed(CycNum::from_real(sq3(2, 1)), 128);
    EXPECT_NEAR(m.re.mid(), 3.7320508075688772, 1e-15);
    EXPECT_LT(m.re.width(), 1e-30);
    EXPECT_TRUE(m.im.contains_zero());
}

TEST(Cyclo, MeridianModulus) {
    // (-1 + i(sqrt3 + 2)) / 2
    CycNum i = CycNum::imag_unit();
    CycNum m = (CycNum(Rational(-1)) + i * (CycNum::sqrt3() + CycNum(Rational(2)))) * Rational(1, 2);
    EXPECT_EQ(m.norm_sq(), sq3(2, 1));
}

TEST(Cyclo, ParseAndPrintRoundTrip) {
    std::mt19937 rng(7);
    for (int k = 0; k < 200; ++k) {
        CycNum a = random_integral(rng) * Rational(1, 1 + k % 5);
        EXPECT_EQ(parse_cyc(a.str()), a);
    }
    EXPECT_EQ(parse_sqrt3("2 + 1*r3"), sq3(2, 1));
    EXPECT_EQ(parse_sqrt3("7/9 + 4/9*r3"), SqrtThreeRat(Rational(7, 9), Rational(4, 9)));
    EXPECT_THROW(parse_sqrt3("2 + q"), std::invalid_argument);
}

TEST(Cyclo, NormMultiplicative) {
    std::mt19937 rng(1);
    for (int k = 0; k < 2000; ++k) {
        CycNum a = random_integral(rng), b = random_integral(rng);
        EXPECT_EQ((a * b).norm_sq(), a.norm_sq() * b.norm_sq());
        EXPECT_EQ((a * b).field_norm(), a.field_norm() * b.field_norm());
    }
}

TEST(Cyclo, NormAgreesWithEmbedding) {
    std::mt19937 rng(2);
    for (mpfr_prec_t prec : {53, 64, 128, 256}) {
        for (int k = 0; k < 200; ++k) {
            CycNum a = random_integral(rng, 9) * Rational(1, 1 + k % 7);
            // a much tighter enclosure of the exact value has to sit inside
            RealInterval exact = enclose(a.norm_sq(), 4 * prec);
            RealInterval via = embed(a, prec).abs_sq();
            EXPECT_TRUE(exact.subset_of(via)) << a.str() << " at " << prec;
        }
    }
}

TEST(Cyclo, UnitsClosedUnderProductAndInverse) {
    std::vector<CycNum> units;
    CycNum eps = fundamental_unit();
    for (int n = -3; n <= 3; ++n)
        for (int k = 0; k < 12; ++k) units.push_back(pow(eps, n) * CycNum::zeta_pow(k));
    for (auto& u : units) {
        ASSERT_TRUE(is_unit(u));
        EXPECT_TRUE(inverse(u).is_integral());
        EXPECT_TRUE(is_unit(inverse(u)));
    }
    for (std::size_t a = 0; a < units.size(); a += 5)
        for (std::size_t b = 0; b < units.size(); b += 7) EXPECT_TRUE(is_unit(units[a] * units[b]));
    EXPECT_FALSE(is_unit(CycNum(Rational(2))));
    EXPECT_FALSE(is_unit(CycNum::sqrt3()));
    EXPECT_THROW(is_unit(CycNum(Rational(1, 2))), std::invalid_argument);
}

TEST(Cyclo, NonUnitProductIsNotUnit) {
    std::mt19937 rng(3);
    for (int k = 0; k < 500; ++k) {
        CycNum a = random_integral(rng), b = random_integral(rng);
        if (a.is_zero() || b.is_zero()) continue;
        EXPECT_EQ(is_unit(a * b), is_unit(a) && is_unit(b));
    }
}

TEST(Cyclo, OrderMatchesFloatingPoint) {
    std::mt19937 rng(4);
    std::uniform_int_distribution<int> d(-50, 50), den(1, 9);
    for (int k = 0; k < 10000; ++k) {
        SqrtThreeRat x{Rational(d(rng), den(rng)), Rational(d(rng), den(rng))};
        SqrtThreeRat y{Rational(d(rng), den(rng)), Rational(d(rng), den(rng))};
        double gap = x.approx() - y.approx();
        if (std::abs(gap) > 1e-9) EXPECT_EQ(x < y, gap < 0);
        EXPECT_EQ((x < y) + (y < x) + (x == y), 1);
    }
}

TEST(Cyclo, UnitClassesUpTo36) {
    auto t0 = std::chrono::steady_clock::now();
    auto cs = enumerate_unit_classes(sq3(1), sq3(36));
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    ASSERT_EQ(cs.size(), 2u);
    EXPECT_EQ(cs[0].modulus_sq, sq3(2, 1));
    EXPECT_EQ(cs[1].modulus_sq, sq3(7, 4));
    EXPECT_EQ(cs[0].exponent, 1);
    EXPECT_EQ(cs[1].exponent, 2);
    EXPECT_LT(secs, 1.0);
    for (auto& c : cs) {
        EXPECT_TRUE(is_unit(c.representative));
        EXPECT_EQ(c.representative.norm_sq(), c.modulus_sq);
    }
}

TEST(Cyclo, UnitClassesAreGeometric) {
    auto cs = enumerate_unit_classes(sq3(1), sq3(100000));
    SqrtThreeRat phi = sq3(2, 1), m = phi;
    for (auto& c : cs) {
        EXPECT_EQ(c.modulus_sq, m);
        m = m * phi;
    }
    EXPECT_EQ(cs.size(), 8u);
}

TEST(Cyclo, EmptyOrBadRange) {
    EXPECT_TRUE(enumerate_unit_classes(sq3(4), sq3(7)).empty());
    EXPECT_THROW(enumerate_unit_classes(sq3(5), sq3(2)), std::invalid_argument);
}
