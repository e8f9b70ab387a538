#pragma once

#include "interval.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace mixplat {

// Lobachevsky function at theta = frac * pi.
//
// Uses  L(x) = x - x log(2x) + sum_{n>=1} zeta(2n) r^(2n) x / (n(2n+1))  with r = x/pi in (0, 1/2],
// after folding by period pi and oddness.  Terms are positive and zeta(2n) < 2, so the tail past N
// is below 2 r^(2N+2) / ((N+1)(2N+3)(1-r^2)).
inline RealInterval lobachevsky(const Rational& frac, mpfr_prec_t prec = 128) {
    if (prec < 8) throw std::invalid_argument("precision must be at least 8 bits");
    Rational r = frac - Rational(floor_q(frac));
    if (r > Rational(1, 2)) r -= 1;
    int sign = sgn(r);
    if (sign == 0) return RealInterval(prec);
    if (sign < 0) r = -r;

    const mpfr_prec_t wp = prec + 16;
    RealInterval x = RealInterval(r, wp) * RealInterval::pi(wp);
    Rational r2 = r * r;
    Rational target(1);
    target /= Rational(mpz_class(1) << static_cast<unsigned long>(prec + 8));

    RealInterval sum(wp);
    Rational rpow = r2;  // r^(2n)
    for (long n = 1;; ++n) {
        Rational coef = rpow / Rational(n * (2 * n + 1));
        sum = sum + RealInterval::zeta(static_cast<unsigned long>(2 * n), wp) * RealInterval(coef, wp);
        rpow *= r2;
        Rational tail = 2 * rpow / (Rational((n + 1) * (2 * n + 3)) * (1 - r2));
        if (tail < target) {
            sum = sum.widen_up(RealInterval(tail, wp));
            break;
        }
    }
    RealInterval two_x = RealInterval(Rational(2), wp) * x;
    RealInterval v = x * (RealInterval(Rational(1), wp) - two_x.log() + sum);
    return sign > 0 ? v : -v;
}

// Direct sine series  (1/2) sum sin(2 n theta)/n^2  with tail 1/(2N).  Slow; kept as a cross-check.
inline RealInterval lobachevsky_sine_series(const Rational& frac, long terms, mpfr_prec_t prec = 64) {
    RealInterval pi = RealInterval::pi(prec);
    RealInterval acc(prec);
    mpfr_t s, t;
    mpfr_init2(s, prec);
    mpfr_init2(t, prec);
    for (long n = 1; n <= terms; ++n) {
        // angle = 2 n frac pi reduced mod 2 pi exactly
        Rational a = 2 * n * frac;
        a -= 2 * Rational(floor_q(a / 2));
        RealInterval ang = RealInterval(a, prec) * pi;
        // sin is 1-Lipschitz, so pad endpoint values by the argument width
        mpfr_sin(s, ang.lo_ptr(), MPFR_RNDD);
        mpfr_sin(t, ang.hi_ptr(), MPFR_RNDD);
        double lo = std::min(mpfr_get_d(s, MPFR_RNDD), mpfr_get_d(t, MPFR_RNDD));
        mpfr_sin(s, ang.lo_ptr(), MPFR_RNDU);
        mpfr_sin(t, ang.hi_ptr(), MPFR_RNDU);
        double hi = std::max(mpfr_get_d(s, MPFR_RNDU), mpfr_get_d(t, MPFR_RNDU));
        double w = ang.width();
        RealInterval sn(std::nextafter(lo - w, -2.0), std::nextafter(hi + w, 2.0), prec);
        acc = acc + sn / RealInterval(Rational(n * n), prec);
    }
    mpfr_clear(s);
    mpfr_clear(t);
    RealInterval half(Rational(1, 2), prec);
    RealInterval tail(Rational(1, 2 * terms), prec);
    RealInterval v = half * acc;
    return (v - tail).join(v + tail);
}

inline const RealInterval& v_tet() {
    static const RealInterval v = RealInterval(Rational(2), 160) * lobachevsky(Rational(1, 6), 160);
    return v;
}
inline const RealInterval& v_oct() {
    static const RealInterval v = RealInterval(Rational(8), 160) * lobachevsky(Rational(1, 4), 160);
    return v;
}

// Fraction of least denominator in [lo, hi], 0 < lo <= hi.
inline Rational simplest_rational_between(Rational lo, Rational hi) {
    if (lo > hi) std::swap(lo, hi);
    if (sgn(lo) <= 0) throw std::invalid_argument("bounds must be positive");
    Rational fl(floor_q(lo));
    if (fl == lo) return lo;
    if (fl + 1 <= hi) return fl + 1;
    Rational inner = simplest_rational_between(1 / (hi - fl), 1 / (lo - fl));
    return fl + 1 / inner;
}

struct DecompositionSolution {
    long n1 = 0, n2 = 0;
    RealInterval residual;  // V - (n1 v_tet + n2 v_oct)
};

struct VolumeRefusal : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DecomposeOptions {
    std::size_t max_solutions = 64;
};

// Smallest distance between distinct combinations n1 v_tet + n2 v_oct (n1, n2 >= 1) below `limit`.
inline double min_combination_gap(double limit) {
    std::vector<double> vals;
    double t = v_tet().mid(), o = v_oct().mid();
    for (long n2 = 1; n2 * o + t <= limit; ++n2)
        for (long n1 = 1; n1 * t + n2 * o <= limit; ++n1) vals.push_back(n1 * t + n2 * o);
    std::sort(vals.begin(), vals.end());
    double gap = 1e300;
    for (std::size_t i = 1; i < vals.size(); ++i) gap = std::min(gap, vals[i] - vals[i - 1]);
    return gap;
}

inline std::vector<DecompositionSolution> decompose_volume(const RealInterval& V, DecomposeOptions opt = {}) {
    if (!V.certainly_positive()) throw std::invalid_argument("volume interval must be positive");
    const RealInterval& t = v_tet();
    const RealInterval& o = v_oct();
    double gap = min_combination_gap(V.hi() + t.hi() + o.hi());
    if (V.width() >= gap)
        throw VolumeRefusal("interval width " + std::to_string(V.width()) +
                            " is not below the gap between neighbouring combinations (" + std::to_string(gap) + ")");
    std::vector<DecompositionSolution> out;
    for (long n2 = 1; n2 * o.lo() + t.lo() <= V.hi(); ++n2) {
        for (long n1 = 1; n1 * t.lo() + n2 * o.lo() <= V.hi(); ++n1) {
            RealInterval s = RealInterval(Rational(n1), t.prec()) * t + RealInterval(Rational(n2), o.prec()) * o;
            if (!s.intersects(V)) continue;
            out.push_back({n1, n2, V - s});
            if (out.size() > opt.max_solutions)
                throw VolumeRefusal("more than " + std::to_string(opt.max_solutions) + " solutions");
        }
    }
    return out;
}

// ---- CSV tables ----

struct VolumeRow {
    std::string name;
    RealInterval volume;
    std::vector<DecompositionSolution> solutions;
    std::optional<std::string> refusal;
    bool clean() const { return !refusal && solutions.empty(); }
};

struct VolumeTableReport {
    std::vector<VolumeRow> rows;
    std::vector<std::string> diagnostics;  // skipped lines
};

namespace detail {

inline std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> f;
    std::string cur;
    for (char c : line) {
        if (c == ',') { f.push_back(cur); cur.clear(); }
        else if (c != '\r') cur.push_back(c);
    }
    f.push_back(cur);
    for (auto& s : f) {
        auto b = s.find_first_not_of(" \t"), e = s.find_last_not_of(" \t");
        s = b == std::string::npos ? "" : s.substr(b, e - b + 1);
    }
    return f;
}

inline std::optional<double> number(const std::string& s) {
    if (s.empty()) return std::nullopt;
    try {
        std::size_t used = 0;
        double d = std::stod(s, &used);
        if (used != s.size()) return std::nullopt;
        return d;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

}  // namespace detail

// Columns are name,lo,hi or name,value,err.  A header row picks the form; without one, a third
// column smaller than the second is read as an error radius.
inline VolumeTableReport scan_volume_table(std::istream& in, mpfr_prec_t prec = 128, DecomposeOptions opt = {}) {
    VolumeTableReport rep;
    std::string line;
    int lineno = 0;
    enum class Form { Unknown, LoHi, ValueErr } form = Form::Unknown;
    bool first_data = true;
    while (std::getline(in, line)) {
        ++lineno;
        auto f = detail::split_csv(line);
        if (f.size() == 1 && f[0].empty()) continue;
        if (!f[0].empty() && f[0][0] == '#') continue;
        if (first_data && f.size() == 3 && !detail::number(f[1])) {
            std::string c1 = f[1], c2 = f[2];
            for (auto* s : {&c1, &c2}) std::transform(s->begin(), s->end(), s->begin(), ::tolower);
            if (c1 == "lo" && c2 == "hi") form = Form::LoHi;
            else if (c2.find("err") != std::string::npos) form = Form::ValueErr;
            else rep.diagnostics.push_back("line " + std::to_string(lineno) + ": unrecognised header");
            first_data = false;
            continue;
        }
        first_data = false;
        if (f.size() != 3) {
            rep.diagnostics.push_back("line " + std::to_string(lineno) + ": expected 3 fields");
            continue;
        }
        auto a = detail::number(f[1]), b = detail::number(f[2]);
        if (!a || !b || f[0].empty()) {
            rep.diagnostics.push_back("line " + std::to_string(lineno) + ": malformed row");
            continue;
        }
        Form rowform = form != Form::Unknown ? form : (*b < *a ? Form::ValueErr : Form::LoHi);
        try {
            RealInterval v(prec);
            if (rowform == Form::LoHi) {
                v = RealInterval::from_strings(f[1], f[2], prec);
            } else {
                if (*b < 0) throw std::invalid_argument("negative error radius");
                RealInterval c = RealInterval::from_strings(f[1], f[1], prec);
                RealInterval e = RealInterval::from_strings(f[2], f[2], prec);
                v = (c - e).join(c + e);
            }
            VolumeRow row{f[0], v, {}, std::nullopt};
            try {
                row.solutions = decompose_volume(v, opt);
            } catch (const VolumeRefusal& e) {
                row.refusal = e.what();
            } catch (const std::invalid_argument& e) {
                row.refusal = e.what();
            }
            rep.rows.push_back(std::move(row));
        } catch (const std::exception& e) {
            rep.diagnostics.push_back("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return rep;
}

}  // namespace mixplat
