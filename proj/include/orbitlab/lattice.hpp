#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "orbitlab/errors.hpp"
#include "orbitlab/interval.hpp"
#include "orbitlab/rational.hpp"

namespace orbitlab {

using ZMat = std::vector<std::vector<Z>>;
using QMat = std::vector<std::vector<Q>>;

enum class NormKind { euclidean, sup };

inline const char* norm_name(NormKind n) { return n == NormKind::euclidean ? "euclidean" : "sup"; }

// ---------------------------------------------------------------------------
// Exact integer/rational matrix helpers.
// ---------------------------------------------------------------------------

// Canonical row-style Hermite normal form of the row space of M (integer
// entries). Zero rows are dropped; pivots are positive; entries above a pivot
// are reduced into [0, pivot).
inline ZMat hnf(ZMat m) {
  if (m.empty()) return m;
  size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    // Euclid on all entries in column c at rows >= r.
    while (true) {
      size_t best = rows;
      for (size_t i = r; i < rows; ++i)
        if (m[i][c] != 0 && (best == rows || boost::multiprecision::abs(m[i][c]) < boost::multiprecision::abs(m[best][c])))
          best = i;
      if (best == rows) break;  // column is zero below r
      std::swap(m[r], m[best]);
      bool all_zero = true;
      for (size_t i = r + 1; i < rows; ++i) {
        if (m[i][c] == 0) continue;
        Z q = m[i][c] / m[r][c];  // truncated division is fine for descent
        if (q != 0)
          for (size_t j = 0; j < cols; ++j) m[i][j] -= q * m[r][j];
        if (m[i][c] != 0) all_zero = false;
      }
      if (all_zero) break;
    }
    if (m[r][c] == 0) continue;
    if (m[r][c] < 0)
      for (size_t j = 0; j < cols; ++j) m[r][j] = -m[r][j];
    for (size_t i = 0; i < r; ++i) {
      Z q = m[i][c] / m[r][c];
      if (m[i][c] % m[r][c] < 0) q -= 1;  // floor division for canonical range
      if (q != 0)
        for (size_t j = 0; j < cols; ++j) m[i][j] -= q * m[r][j];
    }
    ++r;
  }
  m.resize(r);
  return m;
}

inline Z zmat_lcm_den(const QMat& m) {
  Z den = 1;
  for (const auto& row : m)
    for (const auto& e : row) den = zlcm(den, zden(e));
  return den;
}

inline ZMat scale_to_z(const QMat& m, const Z& den) {
  ZMat out(m.size());
  for (size_t i = 0; i < m.size(); ++i)
    for (const auto& e : m[i]) out[i].push_back(znum(e) * (den / zden(e)));
  return out;
}

// Do two exact rational bases generate the same lattice?
inline bool hnf_equal(const QMat& a, const QMat& b) {
  if (a.empty() || b.empty()) return a.empty() && b.empty();
  if (a[0].size() != b[0].size()) return false;
  Z den = zlcm(zmat_lcm_den(a), zmat_lcm_den(b));
  return hnf(scale_to_z(a, den)) == hnf(scale_to_z(b, den));
}

inline Q qmat_det(QMat m) {
  size_t n = m.size();
  Q det(1);
  for (size_t c = 0; c < n; ++c) {
    size_t pivot = n;
    for (size_t r = c; r < n; ++r)
      if (m[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot == n) return Q(0);
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Q f = m[r][c] / m[c][c];
      for (size_t j = c; j < n; ++j) m[r][j] -= f * m[c][j];
    }
  }
  return det;
}

// ---------------------------------------------------------------------------
// LatticeBasis: certified interval rows, optionally an exact description
// M * base^(num/den) and an exact squared covolume.
// ---------------------------------------------------------------------------

// Exact rational matrix times a symbolic rational power of a positive
// rational. scale = base^(num/den).
struct ScaledQMatrix {
  QMat mat;
  Q base = 1;
  long num = 0;
  long den = 1;

  bool scale_is_rational() const { return base == 1 || num == 0 || num % den == 0; }
  Q rational_scale() const {
    if (base == 1 || num == 0) return Q(1);
    return qpow(base, num / den);
  }
  QMat folded() const {
    if (!scale_is_rational()) throw NotExact("irrational scale cannot be folded");
    Q s = rational_scale();
    QMat out = mat;
    for (auto& row : out)
      for (auto& e : row) e *= s;
    return out;
  }
  Interval scale_interval(mpfr_prec_t prec) const {
    if (base == 1 || num == 0) return Interval::one(prec);
    auto b = Interval::from_q(base, prec);
    long g = std::gcd(std::abs(num), den);
    long n = num / g, d = den / g;
    Interval root = d == 1 ? b : b.rootn((unsigned long)d);
    return root.pow_int(n);
  }
};

struct LatticeBasis {
  int dim = 0;                          // k
  IMat rows;                            // k x k certified enclosures
  std::optional<ScaledQMatrix> exact;   // exact description when available
  std::optional<Q> covol_sq;            // exact |det|^2 when known
  // Regenerates interval rows at a requested precision (ties the lattice back
  // to its algebraic/flow source); may be empty.
  std::function<IMat(mpfr_prec_t)> regen;

  mpfr_prec_t prec() const { return rows.empty() ? kDefaultPrecision : rows[0][0].prec(); }

  IMat rows_at(mpfr_prec_t bits) const {
    if (exact) {
      IMat out;
      auto s = exact->scale_interval(bits);
      for (const auto& row : exact->mat) {
        IVec r;
        for (const auto& e : row) r.push_back(Interval::from_q(e, bits) * s);
        out.push_back(std::move(r));
      }
      return out;
    }
    if (regen) return regen(bits);
    return rows;
  }

  static LatticeBasis from_qmatrix(QMat m, mpfr_prec_t prec = kDefaultPrecision) {
    LatticeBasis b;
    b.dim = int(m.size());
    Q det = qmat_det(m);
    if (det == 0) throw DegenerateInput("lattice basis is singular");
    b.covol_sq = det * det;
    b.exact = ScaledQMatrix{std::move(m), Q(1), 0, 1};
    b.rows = b.rows_at(prec);
    return b;
  }

  static LatticeBasis from_scaled(QMat m, Q base, long num, long den, mpfr_prec_t prec = kDefaultPrecision) {
    LatticeBasis b;
    b.dim = int(m.size());
    Q det = qmat_det(m);
    if (det == 0 || base <= 0) throw DegenerateInput("lattice basis is singular");
    // covol^2 = det(M)^2 * base^(2*num*k/den) when the exponent is integral.
    long e2 = 2 * num * long(m.size());
    if (e2 % den == 0) b.covol_sq = det * det * qpow(base, e2 / den);
    b.exact = ScaledQMatrix{std::move(m), std::move(base), num, den};
    b.rows = b.rows_at(prec);
    return b;
  }

  static LatticeBasis from_intervals(IMat rows, std::function<IMat(mpfr_prec_t)> regen = nullptr,
                                     std::optional<Q> covol_sq = std::nullopt) {
    LatticeBasis b;
    b.dim = int(rows.size());
    b.rows = std::move(rows);
    b.regen = std::move(regen);
    b.covol_sq = std::move(covol_sq);
    return b;
  }
};

// ---------------------------------------------------------------------------
// Interval determinant and covolume.
// ---------------------------------------------------------------------------

inline Interval interval_det(IMat m) {
  size_t n = m.size();
  mpfr_prec_t p = m.empty() ? kDefaultPrecision : m[0][0].prec();
  Interval det = Interval::one(p);
  for (size_t c = 0; c < n; ++c) {
    size_t pivot = n;
    for (size_t r = c; r < n; ++r)
      if (!m[r][c].contains_zero()) {
        pivot = r;
        break;
      }
    if (pivot == n) throw PrecisionExhausted("interval determinant: no certain pivot");
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      det = -det;
    }
    det = det * m[c][c];
    for (size_t r = c + 1; r < n; ++r) {
      Interval f = m[r][c] / m[c][c];
      for (size_t j = c; j < n; ++j) m[r][j] = m[r][j] - f * m[c][j];
    }
  }
  return det;
}

// |det(basis)| as a certified interval.
inline Interval covolume(const LatticeBasis& b, mpfr_prec_t prec = 0) {
  if (prec == 0) prec = b.prec();
  if (b.covol_sq) return Interval::from_q(*b.covol_sq, prec).sqrt();
  return interval_det(b.rows_at(prec)).abs();
}

// Exact integer e-th root when v is a perfect e-th power.
inline std::optional<Z> z_root_exact(const Z& v, unsigned long e) {
  if (v <= 0) return std::nullopt;
  Z lo = 1, hi = 2;
  while (zpow(hi, e) < v) hi *= 2;
  while (lo < hi) {
    Z mid = (lo + hi) / 2;
    if (zpow(mid, e) < v)
      lo = mid + 1;
    else
      hi = mid;
  }
  if (zpow(lo, e) == v) return lo;
  return std::nullopt;
}

// Homothety representative with covolume 1: rows scaled by covol^{-1/k}.
inline LatticeBasis normalize_covolume(const LatticeBasis& b, mpfr_prec_t prec = 0) {
  if (prec == 0) prec = b.prec();
  LatticeBasis out;
  out.dim = b.dim;
  int k = b.dim;
  if (b.covol_sq && *b.covol_sq == 1 && b.exact) return b;
  if (b.exact && b.exact->scale_is_rational() && b.covol_sq) {
    // Keep exactness when covol is a perfect rational k-th power.
    auto num_root = z_root_exact(znum(*b.covol_sq), 2ul * (unsigned long)k);
    auto den_root = z_root_exact(zden(*b.covol_sq), 2ul * (unsigned long)k);
    if (num_root && den_root) {
      Q inv_scale(*den_root, *num_root);
      QMat m = b.exact->folded();
      for (auto& row : m)
        for (auto& e : row) e *= inv_scale;
      return LatticeBasis::from_qmatrix(std::move(m), prec);
    }
  }
  auto cov = covolume(b, prec);
  Interval scale = Interval::one(prec) / cov.rootn((unsigned long)k);
  auto rows = b.rows_at(prec);
  for (auto& row : rows)
    for (auto& e : row) e = e * scale;
  std::function<IMat(mpfr_prec_t)> regen;
  if (b.regen || b.exact) {
    LatticeBasis base_copy = b;
    int kk = k;
    regen = [base_copy, kk](mpfr_prec_t bits) {
      auto rs = base_copy.rows_at(bits);
      Interval c = base_copy.covol_sq ? Interval::from_q(*base_copy.covol_sq, bits).sqrt()
                                      : interval_det(base_copy.rows_at(bits)).abs();
      Interval s = Interval::one(bits) / c.rootn((unsigned long)kk);
      for (auto& row : rs)
        for (auto& e : row) e = e * s;
      return rs;
    };
  }
  out.rows = std::move(rows);
  out.regen = std::move(regen);
  out.covol_sq = Q(1);  // mathematically exact: the represented lattice has covolume 1
  return out;
}

// ---------------------------------------------------------------------------
// LLL reduction on a proxy metric, recording the unimodular transform.
// ---------------------------------------------------------------------------

namespace lll_detail {

template <class S>
struct Traits;

template <>
struct Traits<Real> {
  static Real from_q(const Q& q, mpfr_prec_t prec) { return Real::from_q(q, prec); }
  static Z round(const Real& x) { return x.round_z(); }
};
template <>
struct Traits<Q> {
  static Q from_q(const Q& q, mpfr_prec_t) { return q; }
  static Z round(const Q& x) { return qround(x); }
};

template <class S>
struct Gso {
  std::vector<std::vector<S>> mu;
  std::vector<S> norm_sq;  // squared lengths of the GS vectors
};

template <class S>
Gso<S> gram_schmidt(const std::vector<std::vector<S>>& b) {
  size_t k = b.size();
  std::vector<std::vector<S>> bstar = b;
  Gso<S> g;
  g.mu.assign(k, std::vector<S>(k, b[0][0] - b[0][0]));
  g.norm_sq.assign(k, b[0][0] - b[0][0]);
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = 0; j < i; ++j) {
      S dot = b[i][0] - b[i][0];
      for (size_t t = 0; t < b[i].size(); ++t) dot = dot + b[i][t] * bstar[j][t];
      g.mu[i][j] = dot / g.norm_sq[j];
      for (size_t t = 0; t < b[i].size(); ++t) bstar[i][t] = bstar[i][t] - g.mu[i][j] * bstar[j][t];
    }
    S n = b[i][0] - b[i][0];
    for (size_t t = 0; t < b[i].size(); ++t) n = n + bstar[i][t] * bstar[i][t];
    g.norm_sq[i] = n;
  }
  return g;
}

}  // namespace lll_detail

// delta-LLL-reduces the proxy basis in place and returns the unimodular
// transform U with (reduced proxy) = U * (input proxy).
template <class S>
inline ZMat lll_transform(std::vector<std::vector<S>>& b, const Q& delta_q, mpfr_prec_t prec) {
  using T = lll_detail::Traits<S>;
  size_t k = b.size();
  ZMat u(k, std::vector<Z>(k, Z(0)));
  for (size_t i = 0; i < k; ++i) u[i][i] = 1;
  if (k <= 1) return u;
  auto gso = lll_detail::gram_schmidt(b);
  size_t i = 1;
  long steps = 0, max_steps = 100000;
  while (i < k) {
    if (++steps > max_steps) throw PrecisionExhausted("LLL failed to converge on the proxy");
    // size-reduce b_i against b_j, j < i
    for (size_t jj = i; jj-- > 0;) {
      Z q = T::round(gso.mu[i][jj]);
      if (q != 0) {
        S qs = T::from_q(Q(q), prec);
        for (size_t t = 0; t < b[i].size(); ++t) b[i][t] = b[i][t] - qs * b[jj][t];
        for (size_t t = 0; t < k; ++t) u[i][t] -= q * u[jj][t];
        gso = lll_detail::gram_schmidt(b);
      }
    }
    // Lovasz condition
    S lhs = gso.norm_sq[i];
    S rhs = (T::from_q(delta_q, prec) - gso.mu[i][i - 1] * gso.mu[i][i - 1]) * gso.norm_sq[i - 1];
    if (rhs < lhs || rhs == lhs) {
      ++i;
    } else {
      std::swap(b[i], b[i - 1]);
      std::swap(u[i], u[i - 1]);
      gso = lll_detail::gram_schmidt(b);
      i = i > 1 ? i - 1 : 1;
    }
  }
  return u;
}

struct LllResult {
  LatticeBasis basis;
  ZMat transform;  // unimodular: reduced = U * original
};

// LLL on the midpoint proxy; the returned basis is U * (original interval
// rows), so it generates exactly the same lattice.
inline LllResult lll_reduce(const LatticeBasis& b, const Q& delta = Q(99, 100), mpfr_prec_t prec = 0) {
  if (prec == 0) prec = b.prec();
  auto rows = b.rows_at(prec);
  size_t k = rows.size();
  std::vector<std::vector<Real>> proxy(k);
  for (size_t i = 0; i < k; ++i)
    for (const auto& e : rows[i]) proxy[i].push_back(e.mid());
  ZMat u = lll_transform(proxy, delta, prec);
  IMat reduced(k, IVec{});
  for (size_t i = 0; i < k; ++i) {
    for (size_t c = 0; c < k; ++c) {
      Interval acc = Interval::zero(prec);
      for (size_t j = 0; j < k; ++j)
        if (u[i][j] != 0) acc = acc + rows[j][c] * Interval::from_q(Q(u[i][j]), prec);
      reduced[i].push_back(acc);
    }
  }
  LatticeBasis out;
  out.dim = b.dim;
  out.rows = std::move(reduced);
  out.covol_sq = b.covol_sq;
  if (b.exact) {
    QMat m(k, std::vector<Q>(k, Q(0)));
    for (size_t i = 0; i < k; ++i)
      for (size_t c = 0; c < k; ++c)
        for (size_t j = 0; j < k; ++j) m[i][c] += Q(u[i][j]) * b.exact->mat[j][c];
    out.exact = ScaledQMatrix{std::move(m), b.exact->base, b.exact->num, b.exact->den};
    out.rows = out.rows_at(prec);
  } else if (b.regen) {
    auto base_regen = b.regen;
    ZMat uu = u;
    out.regen = [base_regen, uu](mpfr_prec_t bits) {
      IMat src = base_regen(bits);
      size_t n = src.size();
      IMat res(n, IVec{});
      for (size_t i = 0; i < n; ++i)
        for (size_t c = 0; c < n; ++c) {
          Interval acc = Interval::zero(bits);
          for (size_t j = 0; j < n; ++j)
            if (uu[i][j] != 0) acc = acc + src[j][c] * Interval::from_q(Q(uu[i][j]), bits);
          res[i].push_back(acc);
        }
      return res;
    };
  }
  return {std::move(out), std::move(u)};
}

// ---------------------------------------------------------------------------
// Certified enumeration (Fincke-Pohst with interval LDL^T bounds).
// ---------------------------------------------------------------------------

namespace enum_detail {

struct Ldl {
  std::vector<std::vector<Interval>> l;  // unit lower triangular
  std::vector<Interval> d;               // positive diagonal
};

// G = L D L^T for the interval Gram matrix; throws if a pivot cannot be
// certified positive.
inline Ldl ldl(const IMat& gram) {
  size_t k = gram.size();
  mpfr_prec_t p = gram[0][0].prec();
  Ldl out;
  out.l.assign(k, std::vector<Interval>(k, Interval::zero(p)));
  out.d.assign(k, Interval::zero(p));
  for (size_t i = 0; i < k; ++i) {
    out.l[i][i] = Interval::one(p);
    for (size_t j = 0; j < i; ++j) {
      Interval acc = gram[i][j];
      for (size_t m = 0; m < j; ++m) acc = acc - out.l[i][m] * out.l[j][m] * out.d[m];
      out.l[i][j] = acc / out.d[j];
    }
    Interval acc = gram[i][i];
    for (size_t m = 0; m < i; ++m) acc = acc - out.l[i][m].sqr() * out.d[m];
    if (!acc.is_definitely_positive()) throw PrecisionExhausted("LDL pivot not certified positive");
    out.d[i] = acc;
  }
  return out;
}

}  // namespace enum_detail

// All integer coefficient vectors z != 0 with z G z^T possibly <= r_sq
// (complete over-enumeration: every vector with true quadratic form value
// <= r_sq.lo is returned; some with larger values may appear and must be
// filtered by the caller). Vectors come in +- pairs.
inline std::vector<std::vector<Z>> enumerate_quadratic(const IMat& gram, const Interval& r_sq,
                                                       size_t max_results = 4000000) {
  size_t k = gram.size();
  auto ldl = enum_detail::ldl(gram);
  mpfr_prec_t p = gram[0][0].prec();
  std::vector<std::vector<Z>> out;
  std::vector<Z> z(k, Z(0));
  // Depth-first from coordinate k-1 down to 0; rem = r_sq - sum_{j>i} d_j w_j^2.
  std::function<void(size_t, Interval)> descend = [&](size_t level, Interval rem) {
    if (rem.hi().sign() < 0) return;
    size_t i = level - 1;
    // w_i = z_i + sum_{j>i} l[j][i] z_j; allowed |w_i| <= sqrt(rem / d_i)
    Interval shift = Interval::zero(p);
    for (size_t j = i + 1; j < k; ++j)
      if (z[j] != 0) shift = shift + ldl.l[j][i] * Interval::from_q(Q(z[j]), p);
    Interval radius = (Interval::max(rem, Interval::zero(p)) / ldl.d[i]).sqrt();
    Z zlo = ((-shift - radius).lo()).floor_z();
    Z zhi = ((-shift + radius).hi()).ceil_z();
    for (Z zi = zlo; zi <= zhi; ++zi) {
      z[i] = zi;
      Interval w = Interval::from_q(Q(zi), p) + shift;
      Interval used = ldl.d[i] * w.sqr();
      Interval rem2 = rem - used;
      if (rem2.hi().sign() < 0) continue;
      if (i == 0) {
        bool all_zero = true;
        for (const auto& c : z)
          if (c != 0) {
            all_zero = false;
            break;
          }
        if (!all_zero) {
          out.push_back(z);
          if (out.size() > max_results) throw EnumerationTooLarge("lattice enumeration exceeded result cap");
        }
      } else {
        descend(i, rem2);
      }
    }
    z[i] = 0;
  };
  descend(k, r_sq);
  return out;
}

inline IMat gram_of(const IMat& rows) {
  size_t k = rows.size();
  IMat g(k, IVec{});
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) g[i].push_back(dot(rows[i], rows[j]));
  return g;
}

inline IVec combine(const IMat& rows, const std::vector<Z>& z, mpfr_prec_t p) {
  size_t k = rows.size(), n = rows[0].size();
  IVec v;
  for (size_t c = 0; c < n; ++c) {
    Interval acc = Interval::zero(p);
    for (size_t i = 0; i < k; ++i)
      if (z[i] != 0) acc = acc + rows[i][c] * Interval::from_q(Q(z[i]), p);
    v.push_back(acc);
  }
  return v;
}

struct ShortestVector {
  std::vector<Z> coeffs;  // in the original basis
  IVec vector;
  Interval length;
};

// Certified shortest nonzero vector (k <= 6).
inline ShortestVector shortest_vector(const LatticeBasis& b, NormKind norm = NormKind::euclidean,
                                      mpfr_prec_t prec = 0) {
  if (b.dim > 6) throw DimensionTooLarge("certified enumeration limited to k <= 6");
  if (prec == 0) prec = b.prec();
  auto reduced = lll_reduce(b, Q(99, 100), prec);
  const IMat& rows = reduced.basis.rows;
  size_t k = rows.size();
  // Initial radius from the first reduced vector.
  Interval b1 = norm == NormKind::euclidean ? norm_sq_euclid(rows[0]) : norm_sup(rows[0]).sqr();
  Interval r_sq = b1;  // euclid: search |v|^2 <= r_sq
  if (norm == NormKind::sup) r_sq = r_sq * Interval::from_long(long(k), prec);  // sup ball inside euclid ball
  auto candidates = enumerate_quadratic(gram_of(rows), r_sq);
  if (candidates.empty()) throw Error("shortest_vector: enumeration returned nothing");
  // The true minimum over candidates lies in [min_z lo(z), min_z hi(z)];
  // best_z tracks a candidate attaining the smallest upper bound.
  Real min_lo(prec), min_hi(prec);
  std::vector<Z> best_z;
  bool first = true;
  for (const auto& z : candidates) {
    IVec v = combine(rows, z, prec);
    Interval len_sq = norm == NormKind::euclidean ? norm_sq_euclid(v) : norm_sup(v).sqr();
    if (first || len_sq.hi() < min_hi) {
      min_hi = len_sq.hi();
      best_z = z;
    }
    if (first || len_sq.lo() < min_lo) min_lo = len_sq.lo();
    first = false;
  }
  Interval lam_sq = Interval::from_endpoints(min_lo, min_hi);
  // Map coefficients back to the original basis: z_orig = z * U.
  std::vector<Z> coeffs(k, Z(0));
  for (size_t j = 0; j < k; ++j)
    for (size_t i = 0; i < k; ++i) coeffs[j] += best_z[i] * reduced.transform[i][j];
  ShortestVector sv;
  sv.coeffs = std::move(coeffs);
  sv.vector = combine(rows, best_z, prec);
  sv.length = lam_sq.sqrt();
  return sv;
}

// #{v in Lambda \ 0 : ||v|| <= r}, certified; boundary ties refined via
// regen, then BoundaryUndecidable.
inline long count_points_in_ball(const LatticeBasis& b, const Q& radius, NormKind norm = NormKind::euclidean,
                                 mpfr_prec_t prec = 0) {
  if (b.dim > 6) throw DimensionTooLarge("certified enumeration limited to k <= 6");
  if (prec == 0) prec = b.prec();
  mpfr_prec_t bits = prec;
  while (true) {
    auto reduced = lll_reduce(b, Q(99, 100), bits);
    const IMat& rows = reduced.basis.rows;
    size_t k = rows.size();
    Interval r = Interval::from_q(radius, bits);
    Interval r_sq = r.sqr();
    if (norm == NormKind::sup) r_sq = r_sq * Interval::from_long(long(k), bits);
    auto candidates = enumerate_quadratic(gram_of(rows), r_sq);
    long count = 0;
    bool undecided = false;
    for (const auto& z : candidates) {
      IVec v = combine(rows, z, bits);
      Interval len = norm == NormKind::euclidean ? norm_sq_euclid(v) : norm_sup(v);
      Interval bound = norm == NormKind::euclidean ? r.sqr() : r;
      if (bound.hi() < len.lo()) continue;  // definitely outside (> r)
      if (len.hi() <= bound.lo()) {         // definitely inside (<= r)
        ++count;
        continue;
      }
      // try exact decision when the basis is exact and radius rational
      if (b.exact && b.exact->scale_is_rational()) {
        QMat m = b.exact->folded();
        // v = z * U * M exactly
        std::vector<Q> exact_v(m[0].size(), Q(0));
        std::vector<Z> zu(k, Z(0));
        for (size_t j = 0; j < k; ++j)
          for (size_t i = 0; i < k; ++i) zu[j] += z[i] * reduced.transform[i][j];
        for (size_t c = 0; c < m[0].size(); ++c)
          for (size_t j = 0; j < k; ++j) exact_v[c] += Q(zu[j]) * m[j][c];
        bool inside;
        if (norm == NormKind::euclidean) {
          Q s(0);
          for (const auto& x : exact_v) s += x * x;
          inside = s <= radius * radius;
        } else {
          Q mx(0);
          for (const auto& x : exact_v) mx = std::max(mx, qabs(x));
          inside = mx <= radius;
        }
        if (inside) ++count;
        continue;
      }
      undecided = true;
      break;
    }
    if (!undecided) return count;
    if (!b.regen || bits >= kPrecisionCap) throw BoundaryUndecidable("point norm enclosure straddles the radius");
    bits *= 2;
  }
}

struct LatticeObservables {
  double lambda1 = 0;                 // certified then rounded
  std::vector<double> lambda_est;     // reduced-basis row norms, sorted (estimates)
  std::vector<long> counts;           // N_r per configured radius
  NormKind norm = NormKind::euclidean;
};

inline LatticeObservables observables(const LatticeBasis& b, const std::vector<Q>& radii,
                                      NormKind norm = NormKind::euclidean, mpfr_prec_t prec = 0) {
  if (prec == 0) prec = b.prec();
  LatticeObservables obs;
  obs.norm = norm;
  auto sv = shortest_vector(b, norm, prec);
  obs.lambda1 = sv.length.mid_double();
  auto reduced = lll_reduce(b, Q(99, 100), prec);
  for (const auto& row : reduced.basis.rows) {
    Interval len = norm == NormKind::euclidean ? norm_sq_euclid(row).sqrt() : norm_sup(row);
    obs.lambda_est.push_back(len.mid_double());
  }
  std::sort(obs.lambda_est.begin(), obs.lambda_est.end());
  for (const auto& r : radii) obs.counts.push_back(count_points_in_ball(b, r, norm, prec));
  return obs;
}

}  // namespace orbitlab
