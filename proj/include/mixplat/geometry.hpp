#pragma once

#include "cyclo.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mixplat {

// Exact predicates on points of Z[z12] (and on points scaled by a small integer).
// Points are compared through doubled real/imaginary parts, which lie in Z[sqrt3].

inline const std::array<CycInt, 12>& unit_directions() {
    static const std::array<CycInt, 12> dirs = [] {
        std::array<CycInt, 12> d;
        for (int k = 0; k < 12; ++k) d[k] = CycInt::zeta_pow(k);
        return d;
    }();
    return dirs;
}

// k with d == z^k, or -1
inline int direction_of(const CycInt& d) {
    const auto& dirs = unit_directions();
    for (int k = 0; k < 12; ++k)
        if (dirs[k] == d) return k;
    return -1;
}

inline int mod12(int k) { return ((k % 12) + 12) % 12; }

// sign of 4 * cross(u, v)
inline int cross_sign(const CycInt& u, const CycInt& v) {
    return (u.re2() * v.im2() - u.im2() * v.re2()).sign();
}
inline SqrtThreeInt dot4(const CycInt& u, const CycInt& v) { return u.re2() * v.re2() + u.im2() * v.im2(); }
inline SqrtThreeInt norm4(const CycInt& u) { return dot4(u, u); }

// Projection (times 2) of p onto direction z^m: Re(p z^-m) doubled.
inline SqrtThreeInt project2(const CycInt& p, int m) { return p.mul_zeta_pow(-m).re2(); }

// Squared distance from a rational point c (given as num/den) to the closed segment [a, b].
inline SqrtThreeRat dist_sq_point_segment(const CycNum& c, const CycNum& a, const CycNum& b) {
    CycNum ab = b - a, ac = c - a;
    SqrtThreeRat len2 = ab.norm_sq();
    SqrtThreeRat t = re(ac * ab.conj()) / len2;
    if (t.sign() <= 0) return ac.norm_sq();
    if (t >= SqrtThreeRat(Rational(1))) return (c - b).norm_sq();
    SqrtThreeRat cr = im(ac.conj() * ab);  // cross(ac, ab)
    return cr * cr / len2;
}

}  // namespace mixplat
