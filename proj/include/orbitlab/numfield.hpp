#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "orbitlab/errors.hpp"
#include "orbitlab/interval.hpp"
#include "orbitlab/poly.hpp"
#include "orbitlab/rational.hpp"

namespace orbitlab {

class TotallyRealField;
using FieldPtr = std::shared_ptr<const TotallyRealField>;

// A degree-d totally real number field Q(beta), beta a root of an irreducible
// primitive integer polynomial with d distinct real roots. Roots are kept as
// exact rational enclosures, sorted ascending, refined on demand; one root is
// designated the identity embedding.
class TotallyRealField : public std::enable_shared_from_this<TotallyRealField> {
 public:
  static FieldPtr make(ZPoly min_poly, int identity_root_index = -1) {
    return FieldPtr(new TotallyRealField(std::move(min_poly), identity_root_index));
  }

  int degree() const { return deg_; }
  const ZPoly& min_poly() const { return poly_; }
  int identity_index() const { return identity_; }

  // Enclosure of root j with width <= 2^-bits. Refinement only ever shrinks
  // intervals, so enclosures nest across calls.
  QInterval root(int j, long bits = 64) const {
    std::lock_guard<std::mutex> lock(mu_);
    if (bits > kPrecisionCap) throw PrecisionExhausted("root refinement beyond precision cap");
    Q target = Q(1, zpow(Z(2), (unsigned long)bits));
    if (roots_[j].width() > target) poly::refine_root(poly_, roots_[j], target);
    return roots_[j];
  }

  std::vector<QInterval> roots(long bits = 64) const {
    std::vector<QInterval> r;
    for (int j = 0; j < deg_; ++j) r.push_back(root(j, bits));
    return r;
  }

  // Power sums p_k = sum_j sigma_j(beta)^k for k = 0..d-1 via Newton's
  // identities; exact, cached.
  const std::vector<Q>& power_sums() const {
    std::lock_guard<std::mutex> lock(mu_);
    if (!power_sums_.empty()) return power_sums_;
    int d = deg_;
    std::vector<Q> e(size_t(d) + 1, Q(0));
    for (int i = 1; i <= d; ++i) e[size_t(i)] = Q(poly_[size_t(d - i)], poly_[size_t(d)]) * ((i % 2) ? -1 : 1);
    std::vector<Q> p(size_t(d), Q(0));
    p[0] = d;
    for (int k = 1; k < d; ++k) {
      // p_k = sum_{i<k} (-1)^{i-1} e_i p_{k-i} + (-1)^{k-1} k e_k
      Q s = e[size_t(k)] * k * ((k % 2) ? 1 : -1);
      for (int i = 1; i < k; ++i) s += e[size_t(i)] * p[size_t(k - i)] * ((i % 2) ? 1 : -1);
      p[size_t(k)] = s;
    }
    power_sums_ = std::move(p);
    return power_sums_;
  }

 private:
  TotallyRealField(ZPoly min_poly, int identity_root_index) {
    poly_ = poly::primitive_part(std::move(min_poly));
    deg_ = poly::degree(poly_);
    if (deg_ < 2) throw DegenerateInput("field degree must be >= 2");
    if (!poly::is_irreducible_over_q(poly_)) throw NotIrreducible("minimal polynomial is reducible over Q");
    roots_ = poly::isolate_real_roots(poly_);
    if (int(roots_.size()) != deg_) throw NotTotallyReal("minimal polynomial has non-real roots");
    for (auto& r : roots_) poly::refine_root(poly_, r, Q(1, Z(1) << 64));
    for (size_t i = 0; i + 1 < roots_.size(); ++i)
      if (!(roots_[i].hi < roots_[i + 1].lo)) throw Error("root enclosures not disjoint after refinement");
    identity_ = identity_root_index < 0 ? deg_ - 1 : identity_root_index;
    if (identity_ < 0 || identity_ >= deg_) throw ConfigError("identity root index out of range");
  }

  ZPoly poly_;
  int deg_ = 0;
  int identity_ = 0;
  mutable std::mutex mu_;
  mutable std::vector<QInterval> roots_;
  mutable std::vector<Q> power_sums_;
};

// An element of a field, stored as an exact rational polynomial of degree < d
// in the field generator. All arithmetic is exact.
class AlgebraicNumber {
 public:
  AlgebraicNumber() = default;
  AlgebraicNumber(FieldPtr field, QPoly coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    poly::normalize(coeffs_);
    reduce();
  }
  static AlgebraicNumber from_rational(FieldPtr field, const Q& r) {
    return AlgebraicNumber(std::move(field), r == 0 ? QPoly{} : QPoly{r});
  }
  static AlgebraicNumber generator(FieldPtr field) { return AlgebraicNumber(std::move(field), QPoly{Q(0), Q(1)}); }

  const FieldPtr& field() const { return field_; }
  const QPoly& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_rational() const { return coeffs_.size() <= 1; }
  Q rational_value() const {
    if (!is_rational()) throw Error("not a rational element");
    return coeffs_.empty() ? Q(0) : coeffs_[0];
  }

  AlgebraicNumber operator+(const AlgebraicNumber& o) const {
    check_same_field(o);
    return AlgebraicNumber(field_, poly::add(coeffs_, o.coeffs_));
  }
  AlgebraicNumber operator-(const AlgebraicNumber& o) const {
    check_same_field(o);
    return AlgebraicNumber(field_, poly::sub(coeffs_, o.coeffs_));
  }
  AlgebraicNumber operator*(const AlgebraicNumber& o) const {
    check_same_field(o);
    return AlgebraicNumber(field_, poly::mul(coeffs_, o.coeffs_));
  }
  AlgebraicNumber operator*(const Q& s) const {
    QPoly c = coeffs_;
    for (auto& x : c) x *= s;
    return AlgebraicNumber(field_, std::move(c));
  }
  AlgebraicNumber operator-() const { return *this * Q(-1); }
  bool operator==(const AlgebraicNumber& o) const { return coeffs_ == o.coeffs_; }

  AlgebraicNumber inverse() const {
    if (is_zero()) throw Error("inverse of zero field element");
    auto [g, s, t] = poly::ext_gcd(poly::to_q(field_->min_poly()), coeffs_);
    if (poly::degree(g) != 0) throw Error("inverse: gcd with minimal polynomial not constant");
    // t * this == g (mod min_poly), g constant
    QPoly inv = t;
    for (auto& c : inv) c /= g[0];
    return AlgebraicNumber(field_, std::move(inv));
  }

  // Exact field norm: product of all real embeddings.
  Q norm() const {
    if (is_zero()) return Q(0);
    QPoly f = poly::to_q(field_->min_poly());
    int dg = poly::degree(coeffs_);
    Q res = poly::resultant(f, coeffs_);
    Q lead = qpow(Q(field_->min_poly().back()), dg);
    return res / lead;
  }

  // Exact trace: sum of all real embeddings, via Newton power sums.
  Q trace() const {
    if (is_zero()) return Q(0);
    const auto& ps = field_->power_sums();
    Q t(0);
    for (size_t k = 0; k < coeffs_.size(); ++k) t += coeffs_[k] * ps[k];
    return t;
  }

  // Exact sign under embedding j (the identity embedding by default).
  int sign_at(int j = -1) const {
    if (is_zero()) return 0;
    if (is_rational()) return qsign(coeffs_[0]);
    if (j < 0) j = field_->identity_index();
    long bits = 32;
    while (true) {
      QInterval val = eval_poly_interval(coeffs_, field_->root(j, bits));
      if (int s = val.sign(); s != 0) return s;
      if (bits >= kPrecisionCap) throw PrecisionExhausted("sign_at: element enclosure keeps straddling zero");
      bits *= 2;
    }
  }

  // Exact rational enclosure under embedding j, width <= 2^-bits.
  QInterval enclosure_at(int j, long bits) const {
    if (coeffs_.empty()) return QInterval(Q(0));
    if (is_rational()) return QInterval(coeffs_[0]);
    Q target(1, zpow(Z(2), (unsigned long)bits));
    long root_bits = bits + 8;
    while (true) {
      QInterval val = eval_poly_interval(coeffs_, field_->root(j, root_bits));
      if (val.width() <= target) return val;
      if (root_bits >= kPrecisionCap) throw PrecisionExhausted("enclosure_at: refinement cap reached");
      root_bits *= 2;
    }
  }

 private:
  void check_same_field(const AlgebraicNumber& o) const {
    if (field_.get() != o.field_.get()) throw ConfigError("mixing elements of different fields");
  }
  void reduce() {
    if (!field_) return;
    int d = field_->degree();
    if (poly::degree(coeffs_) < d) return;
    QPoly r = poly::qmod(coeffs_, poly::to_q(field_->min_poly()));
    coeffs_ = std::move(r);
  }

  FieldPtr field_;
  QPoly coeffs_;
};

// -- spec operations ---------------------------------------------------------

inline FieldPtr make_field(const std::vector<Z>& coeffs, int identity_root_index = -1) {
  ZPoly p(coeffs.begin(), coeffs.end());
  poly::normalize(p);
  if (poly::degree(p) < 2) throw DegenerateInput("make_field: degree must be >= 2");
  return TotallyRealField::make(std::move(p), identity_root_index);
}

// All d real embeddings of x as certified intervals with radius <= 2^-bits.
inline IVec embed(const AlgebraicNumber& x, long bits = kDefaultPrecision) {
  IVec out;
  int d = x.field()->degree();
  out.reserve(size_t(d));
  for (int j = 0; j < d; ++j) out.push_back(Interval::from_qinterval(x.enclosure_at(j, bits + 1), bits + 16));
  return out;
}

inline Q field_norm(const AlgebraicNumber& x) { return x.norm(); }

// Row i is phi(alpha_i) = (sigma_1(alpha_i), ..., sigma_d(alpha_i)).
struct OrbitMatrix {
  FieldPtr field;
  std::vector<AlgebraicNumber> basis;
  IMat rows;                // enclosures at `bits`
  long bits = kDefaultPrecision;
  Q covol_sq;               // det(g)^2 = det(Tr(a_i a_j)), exact and nonzero

  IMat rows_at(long new_bits) const {
    IMat out;
    out.reserve(basis.size());
    for (const auto& a : basis) out.push_back(embed(a, new_bits));
    return out;
  }
};

inline OrbitMatrix orbit_matrix(const std::vector<AlgebraicNumber>& basis, long bits = kDefaultPrecision) {
  if (basis.empty()) throw NotABasis("empty basis");
  FieldPtr field = basis[0].field();
  int d = field->degree();
  if (int(basis.size()) != d) throw NotABasis("basis size must equal field degree");
  for (const auto& b : basis)
    if (b.field().get() != field.get()) throw ConfigError("basis elements from different fields");
  // Exact Gram determinant det(Tr(a_i a_j)) = det(g)^2; zero iff not a basis.
  std::vector<std::vector<Q>> gram(size_t(d), std::vector<Q>(size_t(d), Q(0)));
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      Q t = (basis[size_t(i)] * basis[size_t(j)]).trace();
      gram[size_t(i)][size_t(j)] = t;
      gram[size_t(j)][size_t(i)] = t;
    }
  // Exact rational Gaussian elimination for the determinant.
  Q det(1);
  auto m = gram;
  for (int col = 0; col < d; ++col) {
    int pivot = -1;
    for (int row = col; row < d; ++row)
      if (m[size_t(row)][size_t(col)] != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0) throw NotABasis("rationally dependent basis elements");
    if (pivot != col) {
      std::swap(m[size_t(pivot)], m[size_t(col)]);
      det = -det;
    }
    det *= m[size_t(col)][size_t(col)];
    for (int row = col + 1; row < d; ++row) {
      Q f = m[size_t(row)][size_t(col)] / m[size_t(col)][size_t(col)];
      for (int k = col; k < d; ++k) m[size_t(row)][size_t(k)] -= f * m[size_t(col)][size_t(k)];
    }
  }
  if (det == 0) throw NotABasis("rationally dependent basis elements");
  OrbitMatrix g;
  g.field = field;
  g.basis = basis;
  g.bits = bits;
  g.covol_sq = qabs(det);
  g.rows = g.rows_at(bits);
  return g;
}

// Element-wise m^{i_j} * alpha_j, exact.
inline std::vector<AlgebraicNumber> rescale_basis(const std::vector<AlgebraicNumber>& basis, const Z& m,
                                                  const std::vector<long>& exponents) {
  if (m == 0 || m == 1 || m == -1) throw BadScalar("rescale: m must not be 0 or +-1");
  if (exponents.size() != basis.size()) throw ConfigError("rescale: exponent count mismatch");
  std::vector<AlgebraicNumber> out;
  out.reserve(basis.size());
  for (size_t j = 0; j < basis.size(); ++j) out.push_back(basis[j] * qpow(Q(m), exponents[j]));
  return out;
}

// -- real quadratic continued fractions and units ----------------------------

// State of the continued fraction of (P + sqrt(D)) / Q with Q | D - P^2.
struct QuadraticSurd {
  Z P, D, Qden;  // D > 0 not a perfect square; Qden != 0

  static QuadraticSurd make(Z P, Z D, Z Qden) {
    if (Qden == 0) throw ConfigError("surd with zero denominator");
    if (D <= 0 || is_perfect_square(D)) throw ConfigError("surd needs a positive nonsquare radicand");
    if ((D - P * P) % Qden != 0) {
      // Rescale so the divisibility invariant holds.
      Z a = Qden < 0 ? Z(-Qden) : Qden;
      P *= a;
      D *= a * a;
      Qden *= a;
    }
    return {std::move(P), std::move(D), std::move(Qden)};
  }

  // floor((P + sqrt(D)) / Qden), exact.
  Z floor_value() const {
    Z s = zsqrt_floor(D);  // s <= sqrt(D) < s+1
    if (Qden > 0) {
      Z num = P + s;
      return num >= 0 ? Z(num / Qden) : Z(-Z((-num + Qden - 1) / Qden));
    }
    // (P + sqrt D)/Qden with Qden < 0: floor(x) = -ceil((P + sqrt D)/(-Qden));
    // sqrt(D) irrational so ceil((P + sqrt D)/A) = floor((P + s)/A) + 1.
    Z A = -Qden;
    Z num = P + s;
    Z fl = num >= 0 ? Z(num / A) : Z(-Z((-num + A - 1) / A));
    return -(fl + 1);
  }

  // One continued-fraction step; returns the digit.
  Z step() {
    Z a = floor_value();
    Z Pn = a * Qden - P;
    Z Qn = (D - Pn * Pn) / Qden;
    P = Pn;
    Qden = Qn;
    return a;
  }

  bool operator==(const QuadraticSurd& o) const { return P == o.P && D == o.D && Qden == o.Qden; }
};

struct CfExpansion {
  std::vector<Z> digits;   // a_0, a_1, ...
  size_t preperiod = 0;    // index where the periodic part starts
  size_t period = 0;       // period length
};

// Eventually-periodic continued fraction of a real quadratic surd.
inline CfExpansion quadratic_cf(QuadraticSurd s, size_t max_digits = 100000) {
  CfExpansion cf;
  std::map<std::tuple<Z, Z>, size_t> seen;  // (P, Qden) -> digit index
  for (size_t k = 0; k < max_digits; ++k) {
    auto key = std::make_tuple(s.P, s.Qden);
    auto it = seen.find(key);
    if (it != seen.end()) {
      cf.preperiod = it->second;
      cf.period = k - it->second;
      return cf;
    }
    seen.emplace(key, k);
    cf.digits.push_back(s.step());
  }
  throw EnumerationTooLarge("continued fraction period exceeds digit cap");
}

// Fundamental unit > 1 of the order Z[sqrt(D)], D squarefree > 1, as an
// element of the field x^2 - D. norm is +-1, verified exactly.
inline AlgebraicNumber fundamental_unit_quadratic(const Z& D, FieldPtr field = nullptr) {
  if (D <= 1) throw NotSquarefree("D must be > 1");
  for (Z f = 2; f * f <= D; ++f)
    if (D % (f * f) == 0) throw NotSquarefree("D has a square factor");
  if (!field) field = make_field({-D, Z(0), Z(1)});
  // CF of sqrt(D) = [a0; period]: the convergent h/k at index period-1
  // solves h^2 - D k^2 = (-1)^period minimally.
  auto s = QuadraticSurd::make(Z(0), D, Z(1));
  auto cf = quadratic_cf(s);
  if (cf.preperiod != 1) throw Error("sqrt(D) continued fraction must have preperiod 1");
  Z h0 = 1, h1 = cf.digits[0], k0 = 0, k1 = 1;
  size_t end = cf.period - 1;
  for (size_t i = 1; i <= end; ++i) {
    Z a = cf.digits[i];
    Z h2 = a * h1 + h0, k2 = a * k1 + k0;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
  }
  AlgebraicNumber unit(field, QPoly{Q(h1), Q(k1)});
  Q n = unit.norm();
  if (n != 1 && n != -1) throw Error("fundamental unit candidate has norm != +-1");
  return unit;
}

}  // namespace orbitlab
