#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "orbitlab/errors.hpp"
#include "orbitlab/rational.hpp"

namespace orbitlab {

// Polynomials are coefficient vectors in ascending degree order; the zero
// polynomial is the empty vector.
using ZPoly = std::vector<Z>;
using QPoly = std::vector<Q>;

namespace poly {

template <class P>
inline void normalize(P& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

template <class P>
inline int degree(const P& p) {
  return int(p.size()) - 1;  // -1 for the zero polynomial
}

template <class P>
inline P derivative(const P& p) {
  P d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * int(i));
  return d;
}

template <class P, class X>
inline X eval(const P& p, const X& x) {
  X acc(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + X(*it);
  return acc;
}

inline QPoly to_q(const ZPoly& p) {
  QPoly q;
  q.reserve(p.size());
  for (const auto& c : p) q.emplace_back(c);
  return q;
}

template <class P>
inline P mul(const P& a, const P& b) {
  if (a.empty() || b.empty()) return {};
  P r(a.size() + b.size() - 1, typename P::value_type(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

template <class P>
inline P add(const P& a, const P& b) {
  P r = a;
  if (b.size() > r.size()) r.resize(b.size(), typename P::value_type(0));
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  normalize(r);
  return r;
}

template <class P>
inline P sub(const P& a, const P& b) {
  P r = a;
  if (b.size() > r.size()) r.resize(b.size(), typename P::value_type(0));
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  normalize(r);
  return r;
}

// Euclidean division over Q; returns {quotient, remainder}.
inline std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.empty()) throw Error("polynomial division by zero");
  QPoly r = a, q;
  normalize(r);
  int db = degree(b);
  if (degree(r) >= db) q.assign(degree(r) - db + 1, Q(0));
  while (degree(r) >= db) {
    int k = degree(r) - db;
    Q c = r.back() / b.back();
    q[k] = c;
    for (int i = 0; i <= db; ++i) r[k + i] -= c * b[i];
    normalize(r);
  }
  return {q, r};
}

inline QPoly qmod(const QPoly& a, const QPoly& b) { return divmod(a, b).second; }

inline QPoly monic(QPoly p) {
  normalize(p);
  if (p.empty()) return p;
  Q lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

inline QPoly gcd(QPoly a, QPoly b) {
  normalize(a);
  normalize(b);
  while (!b.empty()) {
    QPoly r = qmod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

// Extended gcd over Q: returns (g, s, t) with s*a + t*b = g, g monic.
inline std::tuple<QPoly, QPoly, QPoly> ext_gcd(QPoly a, QPoly b) {
  QPoly s0{Q(1)}, s1{}, t0{}, t1{Q(1)};
  normalize(a);
  normalize(b);
  while (!b.empty()) {
    auto [q, r] = divmod(a, b);
    a = std::move(b);
    b = std::move(r);
    QPoly s2 = sub(s0, mul(q, s1)), t2 = sub(t0, mul(q, t1));
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (a.empty()) return {a, s0, t0};
  Q lead = a.back();
  for (auto& c : a) c /= lead;
  for (auto& c : s0) c /= lead;
  for (auto& c : t0) c /= lead;
  return {a, s0, t0};
}

// Resultant over Q via the PRS recurrence
//   Res(a,b) = lc(b)^(deg a - deg r) * (-1)^(deg a * deg b) * Res(b, r).
inline Q resultant(QPoly a, QPoly b) {
  normalize(a);
  normalize(b);
  if (a.empty() || b.empty()) return Q(0);
  Q acc(1);
  bool negate = false;
  while (degree(b) > 0) {
    QPoly r = qmod(a, b);
    normalize(r);
    if (r.empty()) return Q(0);
    if ((degree(a) & 1) && (degree(b) & 1)) negate = !negate;
    acc *= qpow(Q(b.back()), degree(a) - degree(r));
    a = std::move(b);
    b = std::move(r);
  }
  // b is a nonzero constant
  acc *= qpow(Q(b[0]), degree(a));
  return negate ? -acc : acc;
}

inline Z content(const ZPoly& p) {
  Z g = 0;
  for (const auto& c : p) g = zgcd(g, c);
  return g;
}

inline ZPoly primitive_part(ZPoly p) {
  normalize(p);
  if (p.empty()) return p;
  Z g = content(p);
  if (p.back() < 0) g = -g;
  for (auto& c : p) c /= g;
  return p;
}

// Clears denominators and takes the primitive part.
inline ZPoly primitive_from_q(const QPoly& p) {
  Z den = 1;
  for (const auto& c : p) den = zlcm(den, zden(c));
  ZPoly r;
  r.reserve(p.size());
  for (const auto& c : p) r.push_back(znum(c) * (den / zden(c)));
  return primitive_part(std::move(r));
}

inline bool is_squarefree_over_q(const ZPoly& f) {
  QPoly g = gcd(to_q(f), to_q(derivative(f)));
  return degree(g) <= 0;
}

// ---------------------------------------------------------------------------
// Sturm sequences and real root isolation.
// ---------------------------------------------------------------------------

inline std::vector<QPoly> sturm_chain(const ZPoly& f) {
  std::vector<QPoly> chain;
  QPoly p0 = to_q(f), p1 = to_q(derivative(f));
  normalize(p0);
  normalize(p1);
  chain.push_back(p0);
  if (p1.empty()) return chain;
  chain.push_back(p1);
  while (true) {
    QPoly r = qmod(chain[chain.size() - 2], chain.back());
    normalize(r);
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
    if (degree(chain.back()) == 0) break;
  }
  return chain;
}

inline int sign_variations_at(const std::vector<QPoly>& chain, const Q& x) {
  int var = 0, prev = 0;
  for (const auto& p : chain) {
    int s = qsign(eval(p, x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

// Number of distinct real roots in (a, b]; requires f(a) != 0, f(b) != 0
// to be interpreted as an exact count.
inline int count_roots(const std::vector<QPoly>& chain, const Q& a, const Q& b) {
  return sign_variations_at(chain, a) - sign_variations_at(chain, b);
}

// All real roots lie in (-bound, bound).
inline Q cauchy_bound(const ZPoly& f) {
  Q m(0);
  Z lead = f.back();
  for (size_t i = 0; i + 1 < f.size(); ++i) {
    Q c = qabs(Q(f[i], lead));
    if (c > m) m = c;
  }
  return m + 1;
}

// Isolating intervals (open, each containing exactly one simple root) for a
// squarefree integer polynomial, sorted ascending.
inline std::vector<QInterval> isolate_real_roots(const ZPoly& f) {
  if (degree(f) < 1) return {};
  auto chain = sturm_chain(f);
  Q bound = cauchy_bound(f);
  struct Seg {
    Q a, b;
    int count;
  };
  std::vector<QInterval> roots;
  std::vector<Seg> work;
  int total = count_roots(chain, -bound, bound);
  if (total > 0) work.push_back({-bound, bound, total});
  while (!work.empty()) {
    Seg s = work.back();
    work.pop_back();
    if (s.count == 1) {
      roots.emplace_back(s.a, s.b);
      continue;
    }
    Q mid = (s.a + s.b) / 2;
    // Nudge off a root: rational midpoints can hit roots of rational-root
    // polynomials (never for irreducible inputs of degree >= 2).
    while (qsign(eval(chain[0], mid)) == 0) mid = (s.a + mid) / 2;
    int left = count_roots(chain, s.a, mid);
    if (left > 0) work.push_back({s.a, mid, left});
    if (s.count - left > 0) work.push_back({mid, s.b, s.count - left});
  }
  std::sort(roots.begin(), roots.end(), [](const QInterval& x, const QInterval& y) { return x.lo < y.lo; });
  return roots;
}

// Bisection refinement of an isolating interval down to the target width.
// The interval must bracket a sign change (true for any isolated simple root
// whose endpoints are not roots).
inline void refine_root(const ZPoly& f, QInterval& iv, const Q& target_width) {
  int sa = qsign(eval(to_q(f), iv.lo));
  if (sa == 0) throw Error("refine_root: endpoint is a root");
  while (iv.width() > target_width) {
    Q mid = iv.mid();
    int sm = qsign(eval(to_q(f), mid));
    if (sm == 0) {
      // Land exactly on the root: shrink to a tiny bracket around it.
      Q h = iv.width() / 4;
      iv = QInterval(mid - h, mid + h);
      if (qsign(eval(to_q(f), iv.lo)) == sa) continue;
      throw Error("refine_root: rational root encountered");
    }
    if (sm == sa)
      iv.lo = mid;
    else
      iv.hi = mid;
  }
}

// ---------------------------------------------------------------------------
// Irreducibility over Q: Berlekamp factorization mod p, Hensel lifting, and
// subset recombination. Complete for the small degrees used here.
// ---------------------------------------------------------------------------

namespace detail {

using FpPoly = std::vector<std::int64_t>;  // ascending, coeffs in [0, p)

inline void fp_normalize(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline FpPoly fp_from_z(const ZPoly& f, std::int64_t p) {
  FpPoly r;
  r.reserve(f.size());
  for (const auto& c : f) {
    Z m = c % p;
    if (m < 0) m += p;
    r.push_back(std::int64_t(m));
  }
  fp_normalize(r);
  return r;
}

inline FpPoly fp_mul(const FpPoly& a, const FpPoly& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + (__int128)a[i] * b[j]) % p;
  fp_normalize(r);
  return r;
}

inline std::int64_t fp_inv(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  return t < 0 ? t + p : t;
}

inline std::pair<FpPoly, FpPoly> fp_divmod(const FpPoly& a, const FpPoly& b, std::int64_t p) {
  FpPoly r = a, q;
  fp_normalize(r);
  int db = int(b.size()) - 1;
  std::int64_t binv = fp_inv(b.back(), p);
  if (int(r.size()) - 1 >= db) q.assign(r.size() - db, 0);
  while (int(r.size()) - 1 >= db && !r.empty()) {
    int k = int(r.size()) - 1 - db;
    std::int64_t c = (__int128)r.back() * binv % p;
    q[k] = c;
    for (int i = 0; i <= db; ++i) {
      r[k + i] = (r[k + i] - (__int128)c * b[i]) % p;
      if (r[k + i] < 0) r[k + i] += p;
    }
    fp_normalize(r);
  }
  return {q, r};
}

inline FpPoly fp_mod(const FpPoly& a, const FpPoly& b, std::int64_t p) { return fp_divmod(a, b, p).second; }

inline FpPoly fp_monic(FpPoly a, std::int64_t p) {
  fp_normalize(a);
  if (a.empty()) return a;
  std::int64_t inv = fp_inv(a.back(), p);
  for (auto& c : a) c = (__int128)c * inv % p;
  return a;
}

inline FpPoly fp_gcd(FpPoly a, FpPoly b, std::int64_t p) {
  fp_normalize(a);
  fp_normalize(b);
  while (!b.empty()) {
    FpPoly r = fp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return fp_monic(a, p);
}

// Extended gcd mod p: s*a + t*b = g (g monic).
inline std::tuple<FpPoly, FpPoly, FpPoly> fp_ext_gcd(FpPoly a, FpPoly b, std::int64_t p) {
  FpPoly s0{1}, s1{}, t0{}, t1{1};
  fp_normalize(a);
  fp_normalize(b);
  auto submul = [p](const FpPoly& x, const FpPoly& q, const FpPoly& y) {
    FpPoly qy = fp_mul(q, y, p);
    FpPoly r = x;
    if (qy.size() > r.size()) r.resize(qy.size(), 0);
    for (size_t i = 0; i < qy.size(); ++i) r[i] = (r[i] - qy[i] % p + p) % p;
    fp_normalize(r);
    return r;
  };
  while (!b.empty()) {
    auto [q, r] = fp_divmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
    FpPoly s2 = submul(s0, q, s1), t2 = submul(t0, q, t1);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  std::int64_t inv = fp_inv(a.back(), p);
  auto scale = [&](FpPoly& v) {
    for (auto& c : v) c = (__int128)c * inv % p;
  };
  scale(a);
  scale(s0);
  scale(t0);
  return {a, s0, t0};
}

inline FpPoly fp_powmod_x(std::int64_t e, const FpPoly& f, std::int64_t p) {
  // x^e mod f
  FpPoly result{1}, base{0, 1};
  base = fp_mod(base, f, p);
  while (e) {
    if (e & 1) result = fp_mod(fp_mul(result, base, p), f, p);
    base = fp_mod(fp_mul(base, base, p), f, p);
    e >>= 1;
  }
  return result;
}

// Berlekamp: monic squarefree f mod p -> monic irreducible factors.
inline std::vector<FpPoly> berlekamp(const FpPoly& f, std::int64_t p) {
  int n = int(f.size()) - 1;
  // Matrix Q with column i = coeffs of x^{p*i} mod f; kernel of (Q - I).
  std::vector<std::vector<std::int64_t>> M(n, std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < n; ++i) {
    FpPoly xe = fp_powmod_x((std::int64_t)p * i, f, p);
    for (int j = 0; j < int(xe.size()); ++j) M[j][i] = xe[j];
    M[i][i] = (M[i][i] - 1 + p) % p;
  }
  // Gaussian elimination to find the null space of M.
  std::vector<int> pivot_col_of_row(n, -1);
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int sel = -1;
    for (int row = rank; row < n; ++row)
      if (M[row][col] != 0) {
        sel = row;
        break;
      }
    if (sel < 0) continue;
    std::swap(M[sel], M[rank]);
    std::int64_t inv = fp_inv(M[rank][col], p);
    for (int j = 0; j < n; ++j) M[rank][j] = (__int128)M[rank][j] * inv % p;
    for (int row = 0; row < n; ++row) {
      if (row == rank || M[row][col] == 0) continue;
      std::int64_t c = M[row][col];
      for (int j = 0; j < n; ++j) {
        M[row][j] = (M[row][j] - (__int128)c * M[rank][j]) % p;
        if (M[row][j] < 0) M[row][j] += p;
      }
    }
    pivot_col_of_row[rank] = col;
    ++rank;
  }
  std::vector<FpPoly> basis;  // kernel vectors as polynomials
  std::vector<bool> is_pivot(n, false);
  for (int r = 0; r < rank; ++r) is_pivot[pivot_col_of_row[r]] = true;
  for (int col = 0; col < n; ++col) {
    if (is_pivot[col]) continue;
    FpPoly v(n, 0);
    v[col] = 1;
    for (int r = 0; r < rank; ++r) {
      std::int64_t c = M[r][col];
      if (c != 0) v[pivot_col_of_row[r]] = (p - c) % p;
    }
    fp_normalize(v);
    basis.push_back(std::move(v));
  }
  size_t num_factors = basis.size();
  std::vector<FpPoly> factors{fp_monic(f, p)};
  if (num_factors <= 1) return factors;
  for (const auto& v : basis) {
    if (factors.size() >= num_factors) break;
    if (int(v.size()) - 1 < 1) continue;  // skip constants
    std::vector<FpPoly> next;
    for (auto& g : factors) {
      bool split = false;
      if (int(g.size()) - 1 > 1) {
        FpPoly vg = fp_mod(v, g, p);
        std::vector<FpPoly> pieces;
        FpPoly rest = g;
        for (std::int64_t s = 0; s < p && int(rest.size()) - 1 > 0; ++s) {
          FpPoly vs = vg;
          if (vs.empty()) vs = {0};
          vs[0] = (vs[0] - s % p + p) % p;
          fp_normalize(vs);
          FpPoly d = fp_gcd(rest, vs, p);
          if (int(d.size()) - 1 >= 1 && d.size() < rest.size()) {
            pieces.push_back(d);
            rest = fp_divmod(rest, d, p).first;
          }
        }
        if (!pieces.empty()) {
          split = true;
          for (auto& piece : pieces) next.push_back(fp_monic(piece, p));
          if (int(rest.size()) - 1 >= 1) next.push_back(fp_monic(rest, p));
        }
      }
      if (!split) next.push_back(g);
    }
    factors = std::move(next);
  }
  return factors;
}

struct ModulusZ {
  Z m;  // p^k
  Z reduce(const Z& x) const {
    Z r = x % m;
    if (r < 0) r += m;
    return r;
  }
  Z symmetric(const Z& x) const {
    Z r = reduce(x);
    if (r * 2 > m) r -= m;
    return r;
  }
};

inline ZPoly zp_reduce(const ZPoly& a, const ModulusZ& M) {
  ZPoly r;
  r.reserve(a.size());
  for (const auto& c : a) r.push_back(M.reduce(c));
  normalize(r);
  return r;
}

inline ZPoly zp_mul(const ZPoly& a, const ZPoly& b, const ModulusZ& M) { return zp_reduce(mul(a, b), M); }

inline ZPoly zp_from_fp(const FpPoly& a) {
  ZPoly r;
  r.reserve(a.size());
  for (auto c : a) r.push_back(Z(c));
  return r;
}

// One linear Hensel step: from f = g*h (mod p^j) to (mod p^{j+1}).
// f, g, h monic; s*g + t*h = 1 (mod p).
inline void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, const FpPoly& s, const FpPoly& t, std::int64_t p,
                        const Z& pj) {
  ZPoly gh = mul(g, h);
  ZPoly diff = sub(f, gh);
  // e = (f - g*h)/p^j mod p
  FpPoly e;
  for (const auto& c : diff) {
    Z q = c / pj;
    Z r = q % p;
    if (r < 0) r += p;
    e.push_back(std::int64_t(r));
  }
  fp_normalize(e);
  FpPoly gp = fp_from_z(g, p), hp = fp_from_z(h, p);
  auto [q, u] = fp_divmod(fp_mul(t, e, p), gp, p);
  FpPoly w = fp_mul(s, e, p);
  {
    FpPoly qh = fp_mul(q, hp, p);
    if (qh.size() > w.size()) w.resize(qh.size(), 0);
    for (size_t i = 0; i < qh.size(); ++i) w[i] = (w[i] + qh[i]) % p;
    fp_normalize(w);
  }
  // deg u < deg g and deg w < deg h hold for monic f = g*h; both factors
  // stay monic under the update.
  if (u.size() >= g.size() || w.size() >= h.size()) throw Error("hensel_step: degree bound violated");
  for (size_t i = 0; i < u.size(); ++i) g[i] += pj * u[i];
  for (size_t i = 0; i < w.size(); ++i) h[i] += pj * w[i];
}

// Lifts the factorization f = prod(factors) (mod p) to (mod p^k), f monic.
inline std::vector<ZPoly> hensel_lift(const ZPoly& f, const std::vector<FpPoly>& factors, std::int64_t p, int k) {
  if (factors.size() == 1) {
    ModulusZ M{zpow(Z(p), (unsigned long)k)};
    return {zp_reduce(f, M)};
  }
  size_t half = factors.size() / 2;
  FpPoly gp{1}, hp{1};
  for (size_t i = 0; i < half; ++i) gp = fp_mul(gp, factors[i], p);
  for (size_t i = half; i < factors.size(); ++i) hp = fp_mul(hp, factors[i], p);
  auto [one, s, t] = fp_ext_gcd(gp, hp, p);
  if (int(one.size()) - 1 != 0) throw Error("hensel_lift: factors not coprime mod p");
  ZPoly g = zp_from_fp(gp), h = zp_from_fp(hp);
  Z pj(p);
  for (int j = 1; j < k; ++j) {
    hensel_step(f, g, h, s, t, p, pj);
    pj *= p;
  }
  std::vector<FpPoly> left(factors.begin(), factors.begin() + half);
  std::vector<FpPoly> right(factors.begin() + half, factors.end());
  auto lg = hensel_lift(g, left, p, k);
  auto lh = hensel_lift(h, right, p, k);
  lg.insert(lg.end(), lh.begin(), lh.end());
  return lg;
}

// Does monic g divide monic f over Z?
inline bool divides_exactly(const ZPoly& f, const ZPoly& g) {
  ZPoly r = f;
  int dg = degree(g);
  if (dg < 0) return false;
  while (degree(r) >= dg) {
    Z c = r.back();  // g monic
    int k = degree(r) - dg;
    for (int i = 0; i <= dg; ++i) r[size_t(k + i)] -= c * g[size_t(i)];
    normalize(r);
  }
  return r.empty();
}

inline bool monic_irreducible(const ZPoly& f) {
  int d = degree(f);
  if (d <= 0) return false;
  if (d == 1) return true;
  static const std::int64_t primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59};
  std::vector<FpPoly> best_factors;
  std::int64_t best_p = 0;
  int tried = 0;
  for (std::int64_t p : primes) {
    FpPoly fp = fp_from_z(f, p);
    if (int(fp.size()) - 1 != d) continue;  // lc divisible by p (monic: impossible, but keep the guard)
    FpPoly g = fp_gcd(fp, fp_from_z(derivative(f), p), p);
    if (int(g.size()) - 1 != 0) continue;  // not squarefree mod p
    auto factors = berlekamp(fp_monic(fp, p), p);
    if (factors.size() == 1) return true;
    if (best_factors.empty() || factors.size() < best_factors.size()) {
      best_factors = std::move(factors);
      best_p = p;
    }
    if (++tried >= 4) break;
  }
  if (best_factors.empty()) throw Error("irreducibility: no usable prime found");
  // Landau-Mignotte style bound: any monic factor g of f has
  // |g|_inf <= 2^d * |f|_2.
  Z norm2_sq = 0;
  for (const auto& c : f) norm2_sq += c * c;
  Z bound = zpow(Z(2), (unsigned long)d) * (zsqrt_floor(norm2_sq) + 1);
  int k = 1;
  Z pk(best_p);
  while (pk <= 2 * bound) {
    pk *= best_p;
    ++k;
  }
  auto lifted = hensel_lift(f, best_factors, best_p, k);
  ModulusZ M{pk};
  size_t r = lifted.size();
  // Subset products of the lifted factors; a true factor has degree <= d/2
  // for some subset of size <= r/2.
  for (std::uint32_t mask = 1; mask + 1 < (1u << r); ++mask) {
    int bits = __builtin_popcount(mask);
    if (bits * 2 > int(r)) continue;
    ZPoly candidate{Z(1)};
    int deg_sum = 0;
    for (size_t i = 0; i < r; ++i)
      if (mask & (1u << i)) {
        candidate = zp_mul(candidate, lifted[i], M);
        deg_sum += degree(lifted[i]);
      }
    if (deg_sum == 0 || deg_sum >= d) continue;
    for (auto& c : candidate) c = M.symmetric(c);
    normalize(candidate);
    if (degree(candidate) != deg_sum) continue;
    if (divides_exactly(f, candidate)) return false;
  }
  return true;
}

}  // namespace detail

// Decides irreducibility over Q of a primitive integer polynomial of
// degree >= 1 (constant multiples are irrelevant).
inline bool is_irreducible_over_q(const ZPoly& input) {
  ZPoly f = primitive_part(input);
  int d = degree(f);
  if (d <= 0) return false;
  if (d == 1) return true;
  if (!is_squarefree_over_q(f)) return false;
  // Monicize: F(x) = lc^(d-1) f(x/lc) is monic and factors in lockstep with f.
  Z lc = f.back();
  ZPoly F(f.size());
  for (int i = 0; i <= d; ++i) F[size_t(i)] = f[size_t(i)] * zpow(lc, (unsigned long)(d - 1 - i >= 0 ? d - 1 - i : 0));
  F[size_t(d)] = 1;
  F = primitive_part(F);
  // primitive_part can flip sign only if lead were negative; F is monic.
  return detail::monic_irreducible(F);
}

}  // namespace poly
}  // namespace orbitlab
