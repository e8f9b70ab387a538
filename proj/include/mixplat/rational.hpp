#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mixplat {

using Rational = mpq_class;

// Coefficient traits let the same templates run over GMP rationals and
// machine integers (the latter for the hot paths in tiling search).
template <class T>
struct coeff_traits;

template <>
struct coeff_traits<mpq_class> {
    static int sign(const mpq_class& x) { return sgn(x); }
    static bool is_integer(const mpq_class& x) { return x.get_den() == 1; }
    static std::string str(const mpq_class& x) { return x.get_str(); }
    static mpq_class from_int(long v) { return mpq_class(v); }
    static mpq_class half(const mpq_class& x) { return x / 2; }
    static bool halvable(const mpq_class&) { return true; }
    static double approx(const mpq_class& x) { return x.get_d(); }
    // sign of a^2 - 3 b^2
    static int sign_disc(const mpq_class& a, const mpq_class& b) {
        mpq_class d = a * a - 3 * b * b;
        return sgn(d);
    }
};

template <>
struct coeff_traits<std::int64_t> {
    static int sign(std::int64_t x) { return (x > 0) - (x < 0); }
    static bool is_integer(std::int64_t) { return true; }
    static std::string str(std::int64_t x) { return std::to_string(x); }
    static std::int64_t from_int(long v) { return v; }
    static std::int64_t half(std::int64_t x) {
        if (x % 2 != 0) throw std::domain_error("odd integer has no integral half");
        return x / 2;
    }
    static bool halvable(std::int64_t x) { return x % 2 == 0; }
    static double approx(std::int64_t x) { return static_cast<double>(x); }
    static int sign_disc(std::int64_t a, std::int64_t b) {
        __int128 d = static_cast<__int128>(a) * a - 3 * static_cast<__int128>(b) * b;
        return (d > 0) - (d < 0);
    }
};

inline Rational parse_rational(std::string_view s) {
    std::string t;
    for (char c : s)
        if (c != ' ' && c != '+') t.push_back(c);
    if (t.empty() || t == "-") throw std::invalid_argument("empty rational");
    for (std::size_t i = 0; i < t.size(); ++i) {
        char c = t[i];
        bool ok = (c >= '0' && c <= '9') || c == '/' || (c == '-' && i == 0);
        if (!ok) throw std::invalid_argument("bad rational: " + std::string(s));
    }
    mpq_class q;
    if (q.set_str(t, 10) != 0) throw std::invalid_argument("bad rational: " + std::string(s));
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
    q.canonicalize();
    return q;
}

// Exact floor.
inline mpz_class floor_q(const Rational& q) {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

}  // namespace mixplat
