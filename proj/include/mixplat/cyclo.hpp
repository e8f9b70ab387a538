#pragma once

#include "rational.hpp"

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mixplat {

// a + b*sqrt(3)
template <class T>
class basic_sqrt3 {
public:
    using coeff = T;
    using traits = coeff_traits<T>;

    basic_sqrt3() : a_(0), b_(0) {}
    basic_sqrt3(T a, T b = T(0)) : a_(std::move(a)), b_(std::move(b)) {}

    const T& rational_part() const { return a_; }
    const T& sqrt3_part() const { return b_; }

    int sign() const {
        int sa = traits::sign(a_), sb = traits::sign(b_);
        if (sb == 0) return sa;
        if (sa == 0 || sa == sb) return sb;
        return traits::sign_disc(a_, b_) > 0 ? sa : sb;
    }
    bool is_zero() const { return traits::sign(a_) == 0 && traits::sign(b_) == 0; }

    basic_sqrt3 galois() const { return {a_, -b_}; }
    // a^2 - 3b^2
    T norm() const { return a_ * a_ - T(3) * b_ * b_; }

    basic_sqrt3 operator-() const { return {-a_, -b_}; }
    basic_sqrt3& operator+=(const basic_sqrt3& o) { a_ += o.a_; b_ += o.b_; return *this; }
    basic_sqrt3& operator-=(const basic_sqrt3& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
    basic_sqrt3& operator*=(const basic_sqrt3& o) {
        T na = a_ * o.a_ + T(3) * b_ * o.b_;
        T nb = a_ * o.b_ + b_ * o.a_;
        a_ = std::move(na);
        b_ = std::move(nb);
        return *this;
    }
    basic_sqrt3& operator/=(const basic_sqrt3& o) {
        T n = o.norm();
        if (traits::sign(n) == 0) throw std::domain_error("division by zero in Q(sqrt3)");
        *this *= o.galois();
        a_ /= n;
        b_ /= n;
        return *this;
    }
    friend basic_sqrt3 operator+(basic_sqrt3 x, const basic_sqrt3& y) { return x += y; }
    friend basic_sqrt3 operator-(basic_sqrt3 x, const basic_sqrt3& y) { return x -= y; }
    friend basic_sqrt3 operator*(basic_sqrt3 x, const basic_sqrt3& y) { return x *= y; }
    friend basic_sqrt3 operator/(basic_sqrt3 x, const basic_sqrt3& y) { return x /= y; }

    friend bool operator==(const basic_sqrt3& x, const basic_sqrt3& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend std::strong_ordering operator<=>(const basic_sqrt3& x, const basic_sqrt3& y) {
        int s = (x - y).sign();
        return s < 0 ? std::strong_ordering::less
             : s > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    double approx() const { return traits::approx(a_) + traits::approx(b_) * 1.7320508075688772; }

    std::string str() const { return traits::str(a_) + " + " + traits::str(b_) + "*r3"; }
    friend std::ostream& operator<<(std::ostream& os, const basic_sqrt3& x) { return os << x.str(); }

private:
    T a_, b_;
};

using SqrtThreeRat = basic_sqrt3<Rational>;
using SqrtThreeInt = basic_sqrt3<std::int64_t>;

inline SqrtThreeRat to_rat(const SqrtThreeInt& x) {
    return {Rational(static_cast<long>(x.rational_part())), Rational(static_cast<long>(x.sqrt3_part()))};
}

// c0 + c1 z + c2 z^2 + c3 z^3, z a primitive 12th root of unity, z^4 = z^2 - 1.
template <class T>
class basic_cyc {
public:
    using coeff = T;
    using traits = coeff_traits<T>;
    using real_type = basic_sqrt3<T>;

    basic_cyc() : c_{T(0), T(0), T(0), T(0)} {}
    basic_cyc(T c0) : c_{std::move(c0), T(0), T(0), T(0)} {}
    basic_cyc(T c0, T c1, T c2, T c3) : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}
    explicit basic_cyc(std::array<T, 4> c) : c_(std::move(c)) {}

    const T& operator[](int k) const { return c_[k]; }
    const std::array<T, 4>& coeffs() const { return c_; }

    static basic_cyc zeta() { return {T(0), T(1), T(0), T(0)}; }
    static basic_cyc omega() { return {T(0), T(0), T(1), T(0)}; }
    static basic_cyc imag_unit() { return {T(0), T(0), T(0), T(1)}; }
    static basic_cyc sqrt3() { return {T(0), T(2), T(0), T(-1)}; }
    // z^k for any integer k
    static basic_cyc zeta_pow(int k) {
        k = ((k % 12) + 12) % 12;
        basic_cyc r(T(1));
        for (int j = 0; j < k; ++j) r = r.mul_zeta();
        return r;
    }

    bool is_zero() const {
        for (auto& x : c_)
            if (traits::sign(x) != 0) return false;
        return true;
    }
    bool is_integral() const {
        for (auto& x : c_)
            if (!traits::is_integer(x)) return false;
        return true;
    }
    bool is_real() const { return traits::sign(c_[2]) == 0 && c_[1] + T(2) * c_[3] == T(0); }

    basic_cyc mul_zeta() const { return {-c_[3], c_[0], c_[1] + c_[3], c_[2]}; }
    basic_cyc mul_zeta_pow(int k) const {
        k = ((k % 12) + 12) % 12;
        basic_cyc r = *this;
        for (int j = 0; j < k; ++j) r = r.mul_zeta();
        return r;
    }
    basic_cyc conj() const { return {c_[0] + c_[2], c_[1], -c_[2], -c_[1] - c_[3]}; }

    // z -> z^k for k coprime to 12
    basic_cyc galois(int k) const {
        k = ((k % 12) + 12) % 12;
        if (k != 1 && k != 5 && k != 7 && k != 11) throw std::invalid_argument("galois exponent must be a unit mod 12");
        basic_cyc zk = zeta_pow(k), p(T(1)), r;
        for (int j = 0; j < 4; ++j) {
            r += p * basic_cyc(c_[j]);
            p = p * zk;
        }
        return r;
    }

    // Product of the four conjugates; rational.
    T field_norm() const {
        basic_cyc p = *this * galois(5) * galois(7) * galois(11);
        if (!(traits::sign(p[1]) == 0 && traits::sign(p[2]) == 0 && traits::sign(p[3]) == 0))
            throw std::logic_error("field norm not rational");
        return p[0];
    }

    // Real-valued elements as a + b sqrt3.  Only valid when is_real().
    real_type as_real() const {
        if (!is_real()) throw std::domain_error("element is not real");
        return {c_[0], traits::half(c_[1])};
    }
    static basic_cyc from_real(const real_type& x) {
        return {x.rational_part(), T(2) * x.sqrt3_part(), T(0), -x.sqrt3_part()};
    }

    // Twice the real and imaginary parts, always in Z[sqrt3] for integral input.
    real_type re2() const { return {T(2) * c_[0] + c_[2], c_[1]}; }
    real_type im2() const { return {c_[1] + T(2) * c_[3], c_[2]}; }

    real_type norm_sq() const { return (*this * conj()).as_real(); }

    basic_cyc operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }
    basic_cyc& operator+=(const basic_cyc& o) {
        for (int j = 0; j < 4; ++j) c_[j] += o.c_[j];
        return *this;
    }
    basic_cyc& operator-=(const basic_cyc& o) {
        for (int j = 0; j < 4; ++j) c_[j] -= o.c_[j];
        return *this;
    }
    basic_cyc& operator*=(const basic_cyc& o) { return *this = *this * o; }
    friend basic_cyc operator+(basic_cyc x, const basic_cyc& y) { return x += y; }
    friend basic_cyc operator-(basic_cyc x, const basic_cyc& y) { return x -= y; }
    friend basic_cyc operator*(const basic_cyc& x, const basic_cyc& y) {
        std::array<T, 7> d{T(0), T(0), T(0), T(0), T(0), T(0), T(0)};
        for (int i = 0; i < 4; ++i) {
            if (traits::sign(x.c_[i]) == 0) continue;
            for (int j = 0; j < 4; ++j) d[i + j] += x.c_[i] * y.c_[j];
        }
        // z^k = z^(k-2) - z^(k-4)
        for (int k = 6; k >= 4; --k) {
            d[k - 2] += d[k];
            d[k - 4] -= d[k];
        }
        return {std::move(d[0]), std::move(d[1]), std::move(d[2]), std::move(d[3])};
    }
    friend basic_cyc operator*(const basic_cyc& x, const T& s) {
        return {x.c_[0] * s, x.c_[1] * s, x.c_[2] * s, x.c_[3] * s};
    }

    friend bool operator==(const basic_cyc& x, const basic_cyc& y) { return x.c_ == y.c_; }
    // Coefficient-lexicographic order; used for canonical forms, not geometry.
    friend bool lex_less(const basic_cyc& x, const basic_cyc& y) {
        for (int j = 0; j < 4; ++j) {
            if (x.c_[j] < y.c_[j]) return true;
            if (y.c_[j] < x.c_[j]) return false;
        }
        return false;
    }

    double re_approx() const { return re2().approx() / 2; }
    double im_approx() const { return im2().approx() / 2; }

    std::string str() const {
        return traits::str(c_[0]) + " + " + traits::str(c_[1]) + "*z + " + traits::str(c_[2]) + "*z^2 + " +
               traits::str(c_[3]) + "*z^3";
    }
    friend std::ostream& operator<<(std::ostream& os, const basic_cyc& x) { return os << x.str(); }

private:
    std::array<T, 4> c_;
};

using CycNum = basic_cyc<Rational>;
using CycInt = basic_cyc<std::int64_t>;

inline CycNum to_rat(const CycInt& z) {
    return {Rational(static_cast<long>(z[0])), Rational(static_cast<long>(z[1])), Rational(static_cast<long>(z[2])),
            Rational(static_cast<long>(z[3]))};
}

inline CycInt to_int(const CycNum& z) {
    if (!z.is_integral()) throw std::invalid_argument("non-integral coordinate: " + z.str());
    std::array<std::int64_t, 4> c{};
    for (int j = 0; j < 4; ++j) {
        const mpz_class& n = z[j].get_num();
        if (!n.fits_slong_p()) throw std::overflow_error("coordinate too large");
        c[j] = n.get_si();
    }
    return CycInt(c);
}

inline SqrtThreeRat re(const CycNum& z) { return {z[0] + z[2] / 2, z[1] / 2}; }
inline SqrtThreeRat im(const CycNum& z) { return {z[1] / 2 + z[3], z[2] / 2}; }
inline CycNum from_re_im(const SqrtThreeRat& x, const SqrtThreeRat& y) {
    return {x.rational_part() - y.sqrt3_part(), 2 * x.sqrt3_part(), 2 * y.sqrt3_part(),
            y.rational_part() - x.sqrt3_part()};
}

inline CycNum inverse(const CycNum& a) {
    Rational n = a.field_norm();
    if (n == 0) throw std::domain_error("inverse of zero");
    CycNum p = a.galois(5) * a.galois(7) * a.galois(11);
    return p * Rational(1 / n);
}
inline CycNum operator/(const CycNum& a, const CycNum& b) { return a * inverse(b); }

inline CycNum pow(const CycNum& a, int n) {
    CycNum base = n < 0 ? inverse(a) : a, r(Rational(1));
    for (unsigned k = n < 0 ? -n : n; k; k >>= 1) {
        if (k & 1) r *= base;
        base *= base;
    }
    return r;
}

inline bool is_unit(const CycNum& a) {
    if (!a.is_integral()) throw std::invalid_argument("is_unit needs an integral element");
    Rational n = a.field_norm();
    return n == 1 || n == -1;
}

// k with b = z^k a, or -1
inline int torsion_offset(const CycNum& a, const CycNum& b) {
    for (int k = 0; k < 12; ++k)
        if (a.mul_zeta_pow(k) == b) return k;
    return -1;
}

// ---- text form ----

namespace detail {

// Sum of terms  [sign][rational][*]sym[^k]; returns power -> coefficient.
inline std::map<int, Rational> parse_terms(std::string_view src, std::string_view sym, int max_pow) {
    std::string s;
    for (char c : src)
        if (c != ' ' && c != '\t') s.push_back(c);
    std::map<int, Rational> out;
    std::size_t i = 0;
    auto fail = [&](const char* why) {
        throw std::invalid_argument(std::string(why) + " in '" + std::string(src) + "'");
    };
    if (s.empty()) fail("empty number");
    while (i < s.size()) {
        int sign = 1;
        bool any_sign = false;
        while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            if (s[i] == '-') sign = -sign;
            any_sign = true;
            ++i;
        }
        if (!any_sign && i != 0) fail("missing operator");
        std::size_t j = i;
        while (j < s.size() && ((s[j] >= '0' && s[j] <= '9') || s[j] == '/')) ++j;
        Rational coef(1);
        bool has_num = j > i;
        if (has_num) coef = parse_rational(s.substr(i, j - i));
        i = j;
        int power = 0;
        if (i < s.size() && s[i] == '*') {
            if (!has_num) fail("dangling '*'");
            ++i;
            if (s.compare(i, sym.size(), sym) != 0) fail("expected symbol after '*'");
        }
        if (s.compare(i, sym.size(), sym) == 0) {
            i += sym.size();
            power = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::size_t k = i;
                while (k < s.size() && s[k] >= '0' && s[k] <= '9') ++k;
                if (k == i) fail("bad exponent");
                power = std::stoi(s.substr(i, k - i));
                i = k;
            }
        } else if (!has_num) {
            fail("expected a term");
        }
        if (power > max_pow) fail("exponent too large");
        out[power] += sign * coef;
    }
    return out;
}

}  // namespace detail

inline CycNum parse_cyc(std::string_view s) {
    auto terms = detail::parse_terms(s, "z", 64);
    CycNum r;
    for (auto& [p, c] : terms) r += CycNum::zeta_pow(p) * c;
    return r;
}

inline SqrtThreeRat parse_sqrt3(std::string_view s) {
    auto terms = detail::parse_terms(s, "r3", 1);
    return {terms.count(0) ? terms[0] : Rational(0), terms.count(1) ? terms[1] : Rational(0)};
}

// ---- units ----

inline CycNum fundamental_unit() { return CycNum::omega() + CycNum::imag_unit(); }

struct UnitClass {
    CycNum representative;
    SqrtThreeRat modulus_sq;
    int exponent = 0;           // representative = (omega+i)^exponent
    bool conjugate_same_class = true;  // conj(rep) is a root-of-unity multiple of rep
};

// One representative per class {z^k u}, lo_sq < |u|^2 <= hi_sq, sorted by modulus.
inline std::vector<UnitClass> enumerate_unit_classes(const SqrtThreeRat& lo_sq, const SqrtThreeRat& hi_sq) {
    if (lo_sq.sign() < 0) throw std::invalid_argument("lower bound must be nonnegative");
    if (lo_sq > hi_sq) throw std::invalid_argument("empty or reversed range");
    if (lo_sq == hi_sq) return {};
    // units accumulate at 0, so an open lower end at 0 is infinite
    if (lo_sq.sign() == 0) throw std::invalid_argument("range (0, hi] contains infinitely many unit classes");

    const CycNum eps = fundamental_unit();
    const SqrtThreeRat phi = eps.norm_sq();
    std::vector<UnitClass> out;
    auto consider = [&](int n) {
        CycNum u = pow(eps, n);
        SqrtThreeRat m = u.norm_sq();
        if (!(lo_sq < m && m <= hi_sq)) return;
        // the candidate set is {z^k u, z^k conj(u)}; keep one per class
        std::vector<CycNum> cands{u, u.conj()};
        for (auto& c : cands) {
            bool seen = false;
            for (auto& e : out)
                if (e.modulus_sq == m && torsion_offset(e.representative, c) >= 0) seen = true;
            if (!seen) out.push_back({c, m, n, torsion_offset(c, c.conj()) >= 0});
        }
    };
    // exponents with |eps|^(2n) in range; phi > 1
    int n_lo = 0;
    SqrtThreeRat p(Rational(1));
    while (p > lo_sq) { p = p / phi; --n_lo; }
    for (int n = n_lo;; ++n) {
        SqrtThreeRat m = pow(eps, n).norm_sq();
        if (m > hi_sq) break;
        consider(n);
    }
    std::stable_sort(out.begin(), out.end(), [](auto& x, auto& y) { return x.modulus_sq < y.modulus_sq; });
    return out;
}

}  // namespace mixplat
