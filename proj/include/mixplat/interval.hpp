#pragma once

#include "cyclo.hpp"

#include <mpfr.h>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace mixplat {

// Closed interval [lo, hi] with MPFR endpoints, outward rounded.
class RealInterval {
public:
    explicit RealInterval(mpfr_prec_t prec = 128) { init(prec); mpfr_set_zero(lo_, 1); mpfr_set_zero(hi_, 1); }
    RealInterval(double x, mpfr_prec_t prec) { init(prec); mpfr_set_d(lo_, x, MPFR_RNDD); mpfr_set_d(hi_, x, MPFR_RNDU); }
    RealInterval(double lo, double hi, mpfr_prec_t prec) {
        if (!(lo <= hi)) throw std::invalid_argument("interval with lo > hi");
        init(prec);
        mpfr_set_d(lo_, lo, MPFR_RNDD);
        mpfr_set_d(hi_, hi, MPFR_RNDU);
    }
    RealInterval(const Rational& q, mpfr_prec_t prec) {
        init(prec);
        mpfr_set_q(lo_, q.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(hi_, q.get_mpq_t(), MPFR_RNDU);
    }
    static RealInterval hull(const Rational& lo, const Rational& hi, mpfr_prec_t prec) {
        if (lo > hi) throw std::invalid_argument("interval with lo > hi");
        RealInterval r(prec);
        mpfr_set_q(r.lo_, lo.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(r.hi_, hi.get_mpq_t(), MPFR_RNDU);
        return r;
    }
    // Decimal strings, rounded outward.
    static RealInterval from_strings(const std::string& lo, const std::string& hi, mpfr_prec_t prec) {
        RealInterval r(prec);
        if (mpfr_set_str(r.lo_, lo.c_str(), 10, MPFR_RNDD) != 0 && !mpfr_number_p(r.lo_))
            throw std::invalid_argument("bad number: " + lo);
        if (mpfr_set_str(r.hi_, hi.c_str(), 10, MPFR_RNDU) != 0 && !mpfr_number_p(r.hi_))
            throw std::invalid_argument("bad number: " + hi);
        if (!mpfr_number_p(r.lo_) || !mpfr_number_p(r.hi_)) throw std::invalid_argument("bad interval bounds");
        if (mpfr_cmp(r.lo_, r.hi_) > 0) throw std::invalid_argument("interval with lo > hi");
        return r;
    }

    RealInterval(const RealInterval& o) { init(o.prec()); mpfr_set(lo_, o.lo_, MPFR_RNDD); mpfr_set(hi_, o.hi_, MPFR_RNDU); }
    RealInterval(RealInterval&& o) noexcept {
        mpfr_init2(lo_, MPFR_PREC_MIN);
        mpfr_init2(hi_, MPFR_PREC_MIN);
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
    }
    RealInterval& operator=(RealInterval o) noexcept {
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
        return *this;
    }
    ~RealInterval() { mpfr_clear(lo_); mpfr_clear(hi_); }

    mpfr_prec_t prec() const { return std::max(mpfr_get_prec(lo_), mpfr_get_prec(hi_)); }
    double lo() const { return mpfr_get_d(lo_, MPFR_RNDD); }
    double hi() const { return mpfr_get_d(hi_, MPFR_RNDU); }
    double mid() const { return (lo() + hi()) / 2; }
    const __mpfr_struct* lo_ptr() const { return lo_; }
    const __mpfr_struct* hi_ptr() const { return hi_; }

    // upper bound on hi - lo
    double width() const {
        mpfr_t w;
        mpfr_init2(w, prec());
        mpfr_sub(w, hi_, lo_, MPFR_RNDU);
        double d = mpfr_get_d(w, MPFR_RNDU);
        mpfr_clear(w);
        return d;
    }
    bool contains(const Rational& q) const {
        return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
    }
    bool contains(double x) const { return mpfr_cmp_d(lo_, x) <= 0 && mpfr_cmp_d(hi_, x) >= 0; }
    bool contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }
    bool subset_of(const RealInterval& o) const { return mpfr_cmp(o.lo_, lo_) <= 0 && mpfr_cmp(hi_, o.hi_) <= 0; }
    bool intersects(const RealInterval& o) const { return mpfr_cmp(lo_, o.hi_) <= 0 && mpfr_cmp(o.lo_, hi_) <= 0; }
    bool certainly_positive() const { return mpfr_sgn(lo_) > 0; }
    bool certainly_less(const RealInterval& o) const { return mpfr_cmp(hi_, o.lo_) < 0; }
    // rational bounds, exact
    Rational lo_q() const { return to_q(lo_); }
    Rational hi_q() const { return to_q(hi_); }

    std::string str(int digits = 17) const { return "[" + fmt(lo_, digits, MPFR_RNDD) + ", " + fmt(hi_, digits, MPFR_RNDU) + "]"; }

    friend RealInterval operator+(const RealInterval& x, const RealInterval& y) {
        RealInterval r(std::max(x.prec(), y.prec()));
        mpfr_add(r.lo_, x.lo_, y.lo_, MPFR_RNDD);
        mpfr_add(r.hi_, x.hi_, y.hi_, MPFR_RNDU);
        return r;
    }
    friend RealInterval operator-(const RealInterval& x, const RealInterval& y) {
        RealInterval r(std::max(x.prec(), y.prec()));
        mpfr_sub(r.lo_, x.lo_, y.hi_, MPFR_RNDD);
        mpfr_sub(r.hi_, x.hi_, y.lo_, MPFR_RNDU);
        return r;
    }
    RealInterval operator-() const {
        RealInterval r(prec());
        mpfr_neg(r.lo_, hi_, MPFR_RNDD);
        mpfr_neg(r.hi_, lo_, MPFR_RNDU);
        return r;
    }
    friend RealInterval operator*(const RealInterval& x, const RealInterval& y) {
        mpfr_prec_t p = std::max(x.prec(), y.prec());
        RealInterval r(p);
        mpfr_t t;
        mpfr_init2(t, p);
        bool first = true;
        for (auto a : {x.lo_, x.hi_})
            for (auto b : {y.lo_, y.hi_}) {
                mpfr_mul(t, a, b, MPFR_RNDD);
                if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
                mpfr_mul(t, a, b, MPFR_RNDU);
                if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
                first = false;
            }
        mpfr_clear(t);
        return r;
    }
    friend RealInterval operator/(const RealInterval& x, const RealInterval& y) {
        if (y.contains_zero()) throw std::domain_error("interval division by an interval containing 0");
        mpfr_prec_t p = std::max(x.prec(), y.prec());
        RealInterval inv(p);
        mpfr_ui_div(inv.lo_, 1, y.hi_, MPFR_RNDD);
        mpfr_ui_div(inv.hi_, 1, y.lo_, MPFR_RNDU);
        return x * inv;
    }
    RealInterval sqrt() const {
        if (mpfr_sgn(lo_) < 0) throw std::domain_error("sqrt of interval with negative part");
        RealInterval r(prec());
        mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
        mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
        return r;
    }
    RealInterval log() const {
        if (mpfr_sgn(lo_) <= 0) throw std::domain_error("log of interval touching 0");
        RealInterval r(prec());
        mpfr_log(r.lo_, lo_, MPFR_RNDD);
        mpfr_log(r.hi_, hi_, MPFR_RNDU);
        return r;
    }
    RealInterval square() const {
        if (contains_zero()) {
            RealInterval r = *this * *this;
            mpfr_set_zero(r.lo_, 1);
            return r;
        }
        return *this * *this;
    }
    // [lo, hi + e] with e >= 0 given as an upper bound
    RealInterval widen_up(const RealInterval& e) const {
        RealInterval r(*this);
        mpfr_add(r.hi_, r.hi_, e.hi_, MPFR_RNDU);
        return r;
    }
    RealInterval join(const RealInterval& o) const {
        RealInterval r(std::max(prec(), o.prec()));
        mpfr_min(r.lo_, lo_, o.lo_, MPFR_RNDD);
        mpfr_max(r.hi_, hi_, o.hi_, MPFR_RNDU);
        return r;
    }

    static RealInterval pi(mpfr_prec_t p) {
        RealInterval r(p);
        mpfr_const_pi(r.lo_, MPFR_RNDD);
        mpfr_const_pi(r.hi_, MPFR_RNDU);
        return r;
    }
    static RealInterval catalan(mpfr_prec_t p) {
        RealInterval r(p);
        mpfr_const_catalan(r.lo_, MPFR_RNDD);
        mpfr_const_catalan(r.hi_, MPFR_RNDU);
        return r;
    }
    static RealInterval zeta(unsigned long n, mpfr_prec_t p) {
        RealInterval r(p);
        mpfr_zeta_ui(r.lo_, n, MPFR_RNDD);
        mpfr_zeta_ui(r.hi_, n, MPFR_RNDU);
        return r;
    }

private:
    void init(mpfr_prec_t prec) {
        if (prec < MPFR_PREC_MIN) throw std::invalid_argument("precision too small");
        mpfr_init2(lo_, prec);
        mpfr_init2(hi_, prec);
    }
    static Rational to_q(const __mpfr_struct* x) {
        mpz_class m;
        mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), x);
        Rational q(m);
        if (e >= 0) q *= Rational(mpz_class(1) << static_cast<unsigned long>(e));
        else q /= Rational(mpz_class(1) << static_cast<unsigned long>(-e));
        return q;
    }
    static std::string fmt(const __mpfr_struct* x, int digits, mpfr_rnd_t rnd) {
        char* s = nullptr;
        std::string f = "%." + std::to_string(digits) + "R" + (rnd == MPFR_RNDD ? "D" : "U") + "g";
        mpfr_asprintf(&s, f.c_str(), x);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

    mpfr_t lo_, hi_;
};

inline RealInterval enclose(const SqrtThreeRat& x, mpfr_prec_t prec) {
    RealInterval r3 = RealInterval(Rational(3), prec).sqrt();
    return RealInterval(x.rational_part(), prec) + RealInterval(x.sqrt3_part(), prec) * r3;
}

struct ComplexInterval {
    RealInterval re, im;
    RealInterval abs_sq() const { return re.square() + im.square(); }
};

inline ComplexInterval embed(const CycNum& z, mpfr_prec_t prec) {
    return {enclose(mixplat::re(z), prec), enclose(mixplat::im(z), prec)};
}

}  // namespace mixplat
