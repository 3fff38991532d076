#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <charconv>
#include <cstdint>
#include <string>
#include <vector>

#include "orbitlab/errors.hpp"

namespace orbitlab {

using Z = boost::multiprecision::mpz_int;
using Q = boost::multiprecision::mpq_rational;

inline Z znum(const Q& q) { return boost::multiprecision::numerator(q); }
inline Z zden(const Q& q) { return boost::multiprecision::denominator(q); }

inline Z zpow(const Z& b, unsigned long e) { return boost::multiprecision::pow(b, e); }

inline Q qpow(const Q& b, long e) {
  if (e >= 0) return Q(zpow(znum(b), (unsigned long)e), zpow(zden(b), (unsigned long)e));
  if (b == 0) throw Error("qpow: zero base with negative exponent");
  return Q(zpow(zden(b), (unsigned long)(-e)), zpow(znum(b), (unsigned long)(-e)));
}

inline Q qabs(const Q& q) { return q < 0 ? Q(-q) : q; }

inline int qsign(const Q& q) { return q < 0 ? -1 : (q > 0 ? 1 : 0); }

// Nearest integer to a rational, ties toward +inf (never hit on certified
// irrational inputs; callers that care assert the half-integer case away).
inline Z qfloor(const Q& q) {
  Z n = znum(q), d = zden(q);  // d > 0 canonical
  if (n >= 0) return Z(n / d);
  return Z(-Z((-n + d - 1) / d));
}

inline Z qround(const Q& q) {
  Z fl = qfloor(q);
  Q frac = q - Q(fl);
  if (frac * 2 >= 1) return Z(fl + 1);
  return fl;
}

inline Z qceil(const Q& q) { return -qfloor(-q); }

// Parses "num", "num/den" or plain decimal strings ("1.25", "-3e-4") exactly.
inline Q parse_rational(const std::string& s) {
  if (s.empty()) throw ConfigError("empty rational literal");
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Z n(s.substr(0, slash)), d(s.substr(slash + 1));
    if (d == 0) throw ConfigError("zero denominator in '" + s + "'");
    return Q(n, d);
  }
  auto epos = s.find_first_of("eE");
  std::string mant = epos == std::string::npos ? s : s.substr(0, epos);
  long expo = 0;
  if (epos != std::string::npos) expo = std::stol(s.substr(epos + 1));
  auto dot = mant.find('.');
  if (dot != std::string::npos) {
    expo -= long(mant.size() - dot - 1);
    mant.erase(dot, 1);
  }
  if (mant.empty() || mant == "-" || mant == "+") throw ConfigError("bad rational literal '" + s + "'");
  Q v{Z(mant)};
  return v * qpow(Q(10), expo);
}

inline std::string rational_str(const Q& q) {
  std::string s = znum(q).str();
  if (zden(q) != 1) s += "/" + zden(q).str();
  return s;
}

// Shortest decimal that round-trips to the same double; stable across runs.
inline std::string double_str(double x) {
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

inline Z zgcd(const Z& a, const Z& b) { return boost::multiprecision::gcd(a, b); }
inline Z zlcm(const Z& a, const Z& b) { return boost::multiprecision::lcm(a, b); }

inline Z zgcd_vec(const std::vector<Z>& v) {
  Z g = 0;
  for (const auto& x : v) g = zgcd(g, x);
  return g;
}

inline Z zsqrt_floor(const Z& n) { return boost::multiprecision::sqrt(n); }

inline bool is_perfect_square(const Z& n) {
  if (n < 0) return false;
  Z r = zsqrt_floor(n);
  return r * r == n;
}

// Exact interval with rational endpoints; all operations are outward-exact
// (no rounding happens at all).
struct QInterval {
  Q lo, hi;

  QInterval() : lo(0), hi(0) {}
  QInterval(Q l, Q h) : lo(std::move(l)), hi(std::move(h)) {}
  explicit QInterval(const Q& point) : lo(point), hi(point) {}

  Q width() const { return hi - lo; }
  Q mid() const { return (lo + hi) / 2; }
  bool contains_zero() const { return lo <= 0 && hi >= 0; }
  int sign() const { return lo > 0 ? 1 : (hi < 0 ? -1 : 0); }
  bool contains(const QInterval& o) const { return lo <= o.lo && o.hi <= hi; }

  QInterval operator+(const QInterval& o) const { return {lo + o.lo, hi + o.hi}; }
  QInterval operator-(const QInterval& o) const { return {lo - o.hi, hi - o.lo}; }
  QInterval operator*(const QInterval& o) const {
    Q a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
    Q mn = a, mx = a;
    for (const Q& t : {b, c, d}) {
      if (t < mn) mn = t;
      if (t > mx) mx = t;
    }
    return {mn, mx};
  }
  QInterval operator*(const Q& s) const { return s >= 0 ? QInterval{lo * s, hi * s} : QInterval{hi * s, lo * s}; }
  QInterval operator+(const Q& s) const { return {lo + s, hi + s}; }
};

// Exact Horner evaluation of a polynomial (ascending coefficients) on an
// interval argument.
template <class Coeff>
inline QInterval eval_poly_interval(const std::vector<Coeff>& coeffs, const QInterval& x) {
  QInterval acc{Q(0)};
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + Q(*it);
  return acc;
}

}  // namespace orbitlab
