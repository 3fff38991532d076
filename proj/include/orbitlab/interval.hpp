#pragma once

#include <mpfr.h>

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orbitlab/errors.hpp"
#include "orbitlab/rational.hpp"

namespace orbitlab {

// Default / cap of the adaptive precision ladder (bits). A failed certified
// comparison doubles precision until the cap, then raises PrecisionExhausted.
inline constexpr mpfr_prec_t kDefaultPrecision = 256;
inline constexpr mpfr_prec_t kPrecisionCap = 8192;

// Value-semantic wrapper over mpfr_t.
class Real {
 public:
  explicit Real(mpfr_prec_t prec = kDefaultPrecision) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, 2);
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  int sign() const { return mpfr_sgn(v_); }
  bool operator<(const Real& o) const { return mpfr_cmp(v_, o.v_) < 0; }
  bool operator<=(const Real& o) const { return mpfr_cmp(v_, o.v_) <= 0; }
  bool operator==(const Real& o) const { return mpfr_cmp(v_, o.v_) == 0; }

  static Real from_q(const Q& q, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_q(r.v_, q.backend().data(), MPFR_RNDN);
    return r;
  }
  static Real from_long(long x, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_si(r.v_, x, MPFR_RNDN);
    return r;
  }
  static Real from_z(const Z& z, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_z(r.v_, z.backend().data(), MPFR_RNDN);
    return r;
  }

  // Round-to-nearest arithmetic (the proxy metric for LLL; certified work
  // happens in Interval).
  friend Real operator+(const Real& a, const Real& b) {
    Real r(std::max(a.prec(), b.prec()));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator-(const Real& a, const Real& b) {
    Real r(std::max(a.prec(), b.prec()));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator*(const Real& a, const Real& b) {
    Real r(std::max(a.prec(), b.prec()));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator/(const Real& a, const Real& b) {
    Real r(std::max(a.prec(), b.prec()));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  Real operator-() const {
    Real r(prec());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }
  Real abs_val() const {
    Real r(prec());
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
  }
  Z round_z() const {
    Z z;
    mpfr_get_z(z.backend().data(), v_, MPFR_RNDN);
    return z;
  }
  Z floor_z() const {
    Z z;
    mpfr_get_z(z.backend().data(), v_, MPFR_RNDD);
    return z;
  }
  Z ceil_z() const {
    Z z;
    mpfr_get_z(z.backend().data(), v_, MPFR_RNDU);
    return z;
  }

 private:
  mpfr_t v_;
};

// Closed interval [lo, hi] with directed-rounding endpoints: every operation
// returns an interval guaranteed to contain the exact result.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec = kDefaultPrecision) : lo_(prec), hi_(prec) {}

  static Interval from_q(const Q& q, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_q(r.lo_.raw(), q.backend().data(), MPFR_RNDD);
    mpfr_set_q(r.hi_.raw(), q.backend().data(), MPFR_RNDU);
    return r;
  }
  static Interval from_qinterval(const QInterval& q, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_q(r.lo_.raw(), q.lo.backend().data(), MPFR_RNDD);
    mpfr_set_q(r.hi_.raw(), q.hi.backend().data(), MPFR_RNDU);
    return r;
  }
  static Interval from_long(long v, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_si(r.lo_.raw(), v, MPFR_RNDD);
    mpfr_set_si(r.hi_.raw(), v, MPFR_RNDU);
    return r;
  }
  static Interval from_endpoints(const Real& lo, const Real& hi) {
    Interval r(std::max(lo.prec(), hi.prec()));
    r.lo_ = lo;
    r.hi_ = hi;
    if (r.hi_ < r.lo_) throw Error("interval endpoints out of order");
    return r;
  }
  static Interval zero(mpfr_prec_t prec) { return from_long(0, prec); }
  static Interval one(mpfr_prec_t prec) { return from_long(1, prec); }

  mpfr_prec_t prec() const { return std::max(lo_.prec(), hi_.prec()); }
  const Real& lo() const { return lo_; }
  const Real& hi() const { return hi_; }

  double mid_double() const {
    Real m(prec());
    mpfr_add(m.raw(), lo_.raw(), hi_.raw(), MPFR_RNDN);
    mpfr_div_2ui(m.raw(), m.raw(), 1, MPFR_RNDN);
    return m.to_double();
  }
  Real mid() const {
    Real m(prec());
    mpfr_add(m.raw(), lo_.raw(), hi_.raw(), MPFR_RNDN);
    mpfr_div_2ui(m.raw(), m.raw(), 1, MPFR_RNDN);
    return m;
  }
  // Upper bound on hi - lo.
  Real width() const {
    Real w(prec());
    mpfr_sub(w.raw(), hi_.raw(), lo_.raw(), MPFR_RNDU);
    return w;
  }
  bool width_below(long exp2) const {
    Real w = width();
    if (mpfr_zero_p(w.raw())) return true;
    return mpfr_sgn(w.raw()) > 0 && mpfr_get_exp(w.raw()) <= exp2;
  }
  bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
  // Definite sign of the whole interval; 0 means undecided (straddles zero).
  int sign() const { return lo_.sign() > 0 ? 1 : (hi_.sign() < 0 ? -1 : 0); }
  bool is_definitely_positive() const { return lo_.sign() > 0; }
  bool is_definitely_negative() const { return hi_.sign() < 0; }

  Interval operator+(const Interval& o) const {
    Interval r(std::max(prec(), o.prec()));
    mpfr_add(r.lo_.raw(), lo_.raw(), o.lo_.raw(), MPFR_RNDD);
    mpfr_add(r.hi_.raw(), hi_.raw(), o.hi_.raw(), MPFR_RNDU);
    return r;
  }
  Interval operator-(const Interval& o) const {
    Interval r(std::max(prec(), o.prec()));
    mpfr_sub(r.lo_.raw(), lo_.raw(), o.hi_.raw(), MPFR_RNDD);
    mpfr_sub(r.hi_.raw(), hi_.raw(), o.lo_.raw(), MPFR_RNDU);
    return r;
  }
  Interval operator-() const {
    Interval r(prec());
    mpfr_neg(r.lo_.raw(), hi_.raw(), MPFR_RNDD);
    mpfr_neg(r.hi_.raw(), lo_.raw(), MPFR_RNDU);
    return r;
  }
  Interval operator*(const Interval& o) const {
    mpfr_prec_t p = std::max(prec(), o.prec());
    Interval r(p);
    Real t(p);
    bool first = true;
    for (const Real* a : {&lo_, &hi_}) {
      for (const Real* b : {&o.lo_, &o.hi_}) {
        mpfr_mul(t.raw(), a->raw(), b->raw(), MPFR_RNDD);
        if (first || t < r.lo_) r.lo_ = t;
        mpfr_mul(t.raw(), a->raw(), b->raw(), MPFR_RNDU);
        if (first || r.hi_ < t) r.hi_ = t;
        first = false;
      }
    }
    return r;
  }
  Interval operator/(const Interval& o) const {
    if (o.contains_zero()) throw PrecisionExhausted("interval division by an interval containing zero");
    mpfr_prec_t p = std::max(prec(), o.prec());
    Interval r(p);
    Real t(p);
    bool first = true;
    for (const Real* a : {&lo_, &hi_}) {
      for (const Real* b : {&o.lo_, &o.hi_}) {
        mpfr_div(t.raw(), a->raw(), b->raw(), MPFR_RNDD);
        if (first || t < r.lo_) r.lo_ = t;
        mpfr_div(t.raw(), a->raw(), b->raw(), MPFR_RNDU);
        if (first || r.hi_ < t) r.hi_ = t;
        first = false;
      }
    }
    return r;
  }

  Interval sqr() const {
    Interval r(prec());
    if (lo_.sign() >= 0) {
      mpfr_sqr(r.lo_.raw(), lo_.raw(), MPFR_RNDD);
      mpfr_sqr(r.hi_.raw(), hi_.raw(), MPFR_RNDU);
    } else if (hi_.sign() <= 0) {
      mpfr_sqr(r.lo_.raw(), hi_.raw(), MPFR_RNDD);
      mpfr_sqr(r.hi_.raw(), lo_.raw(), MPFR_RNDU);
    } else {
      mpfr_set_zero(r.lo_.raw(), 1);
      Real a(prec()), b(prec());
      mpfr_sqr(a.raw(), lo_.raw(), MPFR_RNDU);
      mpfr_sqr(b.raw(), hi_.raw(), MPFR_RNDU);
      r.hi_ = a < b ? b : a;
    }
    return r;
  }
  Interval abs() const {
    Interval r(prec());
    if (lo_.sign() >= 0) return *this;
    if (hi_.sign() <= 0) return -*this;
    mpfr_set_zero(r.lo_.raw(), 1);
    Real a(prec());
    mpfr_neg(a.raw(), lo_.raw(), MPFR_RNDU);
    r.hi_ = hi_ < a ? a : hi_;
    return r;
  }
  Interval sqrt() const {
    if (lo_.sign() < 0) throw PrecisionExhausted("interval sqrt of possibly-negative value");
    Interval r(prec());
    mpfr_sqrt(r.lo_.raw(), lo_.raw(), MPFR_RNDD);
    mpfr_sqrt(r.hi_.raw(), hi_.raw(), MPFR_RNDU);
    return r;
  }
  Interval rootn(unsigned long n) const {
    if (lo_.sign() < 0) throw PrecisionExhausted("interval rootn of possibly-negative value");
    Interval r(prec());
    mpfr_rootn_ui(r.lo_.raw(), lo_.raw(), n, MPFR_RNDD);
    mpfr_rootn_ui(r.hi_.raw(), hi_.raw(), n, MPFR_RNDU);
    return r;
  }
  Interval exp() const {
    Interval r(prec());
    mpfr_exp(r.lo_.raw(), lo_.raw(), MPFR_RNDD);
    mpfr_exp(r.hi_.raw(), hi_.raw(), MPFR_RNDU);
    return r;
  }
  Interval log() const {
    if (lo_.sign() <= 0) throw PrecisionExhausted("interval log of possibly-nonpositive value");
    Interval r(prec());
    mpfr_log(r.lo_.raw(), lo_.raw(), MPFR_RNDD);
    mpfr_log(r.hi_.raw(), hi_.raw(), MPFR_RNDU);
    return r;
  }
  Interval pow_int(long e) const {
    if (e == 0) return one(prec());
    bool inv = e < 0;
    unsigned long k = inv ? (unsigned long)(-e) : (unsigned long)e;
    Interval acc = one(prec()), base = *this;
    while (k) {
      if (k & 1) acc = acc * base;
      base = base.sqr();
      k >>= 1;
    }
    return inv ? one(prec()) / acc : acc;
  }
  Interval div2() const {
    Interval r(prec());
    mpfr_div_2ui(r.lo_.raw(), lo_.raw(), 1, MPFR_RNDD);
    mpfr_div_2ui(r.hi_.raw(), hi_.raw(), 1, MPFR_RNDU);
    return r;
  }

  static Interval hull(const Interval& a, const Interval& b) {
    Interval r(std::max(a.prec(), b.prec()));
    r.lo_ = a.lo_ < b.lo_ ? a.lo_ : b.lo_;
    r.hi_ = a.hi_ < b.hi_ ? b.hi_ : a.hi_;
    return r;
  }
  static Interval max(const Interval& a, const Interval& b) {
    Interval r(std::max(a.prec(), b.prec()));
    r.lo_ = a.lo_ < b.lo_ ? b.lo_ : a.lo_;
    r.hi_ = a.hi_ < b.hi_ ? b.hi_ : a.hi_;
    return r;
  }

  // Certified strict comparison; nullopt when the intervals overlap.
  std::optional<bool> less_than(const Interval& o) const {
    if (hi_ < o.lo_) return true;
    if (o.hi_ <= lo_) return false;  // min(this) >= max(o): strictly-less impossible
    return std::nullopt;
  }

  bool contains_q(const Q& q) const {
    Interval p = from_q(q, prec());
    return !(p.hi_ < lo_) && !(hi_ < p.lo_);
  }
  // True when this interval is contained in `outer` (endpoint equality ok).
  bool inside(const Interval& outer) const { return outer.lo_ <= lo_ && hi_ <= outer.hi_; }

  std::string str(int digits = 17) const {
    char* s = nullptr;
    mpfr_asprintf(&s, "[%.*Rg, %.*Rg]", digits, lo_.raw(), digits, hi_.raw());
    std::string out(s);
    mpfr_free_str(s);
    return out;
  }

 private:
  Real lo_, hi_;
};

using IVec = std::vector<Interval>;
using IMat = std::vector<std::vector<Interval>>;

inline Interval dot(const IVec& a, const IVec& b) {
  Interval acc = Interval::zero(a.empty() ? kDefaultPrecision : a[0].prec());
  for (size_t i = 0; i < a.size(); ++i) acc = acc + a[i] * b[i];
  return acc;
}

inline Interval norm_sq_euclid(const IVec& v) {
  Interval acc = Interval::zero(v.empty() ? kDefaultPrecision : v[0].prec());
  for (const auto& x : v) acc = acc + x.sqr();
  return acc;
}

inline Interval norm_sup(const IVec& v) {
  Interval acc = Interval::zero(v.empty() ? kDefaultPrecision : v[0].prec());
  for (const auto& x : v) acc = Interval::max(acc, x.abs());
  return acc;
}

}  // namespace orbitlab
