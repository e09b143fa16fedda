#pragma once

// Independent reference computations used by the test suites. Everything
// here is written from the definitions, without calling the routines it is
// used to check.

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <tuple>
#include <vector>

#include "cherednik/cyclotomic.hpp"
#include "cherednik/group.hpp"
#include "cherednik/poly.hpp"

namespace oracle {

using cherednik::CycloNumber;
using cherednik::MonomialMatrix;
using cherednik::Rational;

// Q[x] arithmetic with coefficient vectors, low degree first.
using QVec = std::vector<Rational>;

inline QVec trim(QVec v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

inline QVec mul(const QVec& a, const QVec& b) {
  if (a.empty() || b.empty()) return {};
  QVec out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return trim(out);
}

inline QVec rem(QVec a, const QVec& b) {
  a = trim(a);
  while (a.size() >= b.size()) {
    const Rational c = a.back() / b.back();
    const std::size_t off = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= c * b[i];
    a = trim(a);
  }
  return a;
}

// Hand-entered cyclotomic polynomials.
inline QVec phi(int m) {
  switch (m) {
    case 1: return {-1, 1};
    case 2: return {1, 1};
    case 3: return {1, 1, 1};
    case 4: return {1, 0, 1};
    case 5: return {1, 1, 1, 1, 1};
    case 6: return {1, -1, 1};
    case 8: return {1, 0, 0, 0, 1};
    case 9: return {1, 0, 0, 1, 0, 0, 1};
    case 10: return {1, -1, 1, -1, 1};
    case 12: return {1, 0, -1, 0, 1};
    default: return {};
  }
}

inline QVec coeffs_of(const CycloNumber& c) { return trim(QVec(c.coeffs().begin(), c.coeffs().end())); }

// Product in Q(zeta_m) via Q[x] multiplication and reduction mod phi(m).
inline QVec field_mul(int m, const QVec& a, const QVec& b) { return rem(mul(a, b), phi(m)); }

// sigma_k: zeta -> zeta^k, applied coefficientwise in the power basis.
inline CycloNumber galois(const CycloNumber& c, long k) {
  CycloNumber out(c.order());
  for (std::size_t j = 0; j < c.coeffs().size(); ++j) {
    if (c.coeffs()[j] == 0) continue;
    out += cherednik::zeta_pow(c.order(), k * static_cast<long>(j)) * c.coeffs()[j];
  }
  return out;
}

// Group elements as plain (perm, exps) tuples, composed from the definition
// of the action y_i -> eps^{e_i} y_{pi(i)}.
struct Elt {
  std::vector<int> perm, exps;
  auto operator<=>(const Elt&) const = default;
};

inline Elt compose(const Elt& u, const Elt& v, int m) {
  // (u v)(y_i) = u(eps^{v.e_i} y_{v.pi(i)}) = eps^{v.e_i + u.e_{v.pi(i)}} y_{u.pi(v.pi(i))}
  Elt w{std::vector<int>(v.perm.size()), std::vector<int>(v.perm.size())};
  for (std::size_t i = 0; i < v.perm.size(); ++i) {
    const int j = v.perm[i];
    w.perm[i] = u.perm[static_cast<std::size_t>(j)];
    w.exps[i] = (v.exps[i] + u.exps[static_cast<std::size_t>(j)]) % m;
  }
  return w;
}

inline Elt from(const MonomialMatrix& w) { return Elt{w.perm(), w.exps()}; }

// Closure of {diag(eps^p, 1, ..), diag(eps, eps^-1, 1, ..), adjacent swaps}.
inline std::set<Elt> bfs_group(int m, int p, int n) {
  std::vector<Elt> gens;
  std::vector<int> id(static_cast<std::size_t>(n));
  std::iota(id.begin(), id.end(), 0);
  std::vector<int> zero(static_cast<std::size_t>(n), 0);
  Elt t{id, zero};
  t.exps[0] = p % m;
  gens.push_back(t);
  Elt u{id, zero};
  u.exps[0] = 1;
  u.exps[1] = m - 1;
  gens.push_back(u);
  for (int i = 0; i + 1 < n; ++i) {
    Elt s{id, zero};
    std::swap(s.perm[static_cast<std::size_t>(i)], s.perm[static_cast<std::size_t>(i + 1)]);
    gens.push_back(s);
  }
  std::set<Elt> seen{Elt{id, zero}};
  std::vector<Elt> frontier{Elt{id, zero}};
  while (!frontier.empty()) {
    std::vector<Elt> next;
    for (const auto& a : frontier)
      for (const auto& gen : gens) {
        Elt b = compose(gen, a, m);
        if (seen.insert(b).second) next.push_back(b);
      }
    frontier = std::move(next);
  }
  return seen;
}

// Explicit n x n matrix of w on h: column i is the image of y_i.
inline std::vector<std::vector<CycloNumber>> matrix_on_h(const MonomialMatrix& w) {
  const int n = w.rank(), m = w.order();
  std::vector<std::vector<CycloNumber>> a(static_cast<std::size_t>(n),
                                          std::vector<CycloNumber>(static_cast<std::size_t>(n), CycloNumber(m)));
  for (int i = 0; i < n; ++i)
    a[static_cast<std::size_t>(w.perm()[static_cast<std::size_t>(i)])][static_cast<std::size_t>(i)] =
        cherednik::zeta_pow(m, w.exps()[static_cast<std::size_t>(i)]);
  return a;
}

// Rank by plain Gaussian elimination.
inline int rank(std::vector<std::vector<CycloNumber>> a) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  int r = 0;
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(r) < rows; ++c) {
    std::size_t piv = static_cast<std::size_t>(r);
    while (piv < rows && a[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[static_cast<std::size_t>(r)]);
    const CycloNumber inv = a[static_cast<std::size_t>(r)][c].inverse();
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == static_cast<std::size_t>(r) || a[i][c].is_zero()) continue;
      const CycloNumber f = a[i][c] * inv;
      for (std::size_t k = 0; k < cols; ++k) a[i][k] -= f * a[static_cast<std::size_t>(r)][k];
    }
    ++r;
  }
  return r;
}

// Leibniz expansion.
inline CycloNumber leibniz_det(const std::vector<std::vector<CycloNumber>>& a, int m) {
  const int n = static_cast<int>(a.size());
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  CycloNumber total(m);
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inversions += perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)];
    CycloNumber term(m, 1L);
    for (int i = 0; i < n; ++i) term *= a[static_cast<std::size_t>(i)][static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
    if (inversions % 2) term = -term;
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Eigenvalues of w on h*: a c-cycle with total exponent E contributes the
// c-th roots of eps^{-E}, all living in Q(zeta_{m c}).
inline std::vector<CycloNumber> dual_eigenvalues(const MonomialMatrix& w, int big_order) {
  const int m = w.order();
  std::vector<int> seen(static_cast<std::size_t>(w.rank()), 0);
  std::vector<CycloNumber> out;
  for (int i = 0; i < w.rank(); ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    int c = 0, e = 0, j = i;
    while (!seen[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = 1;
      e += w.exps()[static_cast<std::size_t>(j)];
      j = w.perm()[static_cast<std::size_t>(j)];
      ++c;
    }
    // eigenvalue exp(2 pi i (-E/m + k) / c) = zeta_{m c}^{-E + k m}
    const int step = big_order / (m * c);
    for (int k = 0; k < c; ++k) out.push_back(cherednik::zeta_pow(big_order, static_cast<long>(step) * (-e + k * m)));
  }
  return out;
}

// i-th elementary symmetric function.
inline CycloNumber elementary(const std::vector<CycloNumber>& xs, int i, int order) {
  std::vector<CycloNumber> e(static_cast<std::size_t>(i + 1), CycloNumber(order));
  e[0] = CycloNumber(order, 1L);
  for (const auto& x : xs)
    for (int k = i; k >= 1; --k) e[static_cast<std::size_t>(k)] += e[static_cast<std::size_t>(k - 1)] * x;
  return e[static_cast<std::size_t>(i)];
}

// Number of monomials of degree k in a monomial ideal with the given generators.
inline long monomial_ideal_dim(int nvars, const std::vector<std::vector<int>>& gens, int k) {
  long count = 0;
  std::vector<int> e(static_cast<std::size_t>(nvars), 0);
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == nvars - 1) {
      e[static_cast<std::size_t>(var)] = left;
      for (const auto& g : gens) {
        bool div = true;
        for (int i = 0; i < nvars; ++i) div = div && e[static_cast<std::size_t>(i)] >= g[static_cast<std::size_t>(i)];
        if (div) {
          ++count;
          break;
        }
      }
      return;
    }
    for (int a = 0; a <= left; ++a) {
      e[static_cast<std::size_t>(var)] = a;
      self(self, var + 1, left - a);
    }
  };
  rec(rec, 0, k);
  return count;
}

// Coefficients of prod_i (1 - t^{d_i}) / (1 - t).
inline std::vector<long> degree_product(const std::vector<int>& degrees) {
  std::vector<long> out{1};
  for (int d : degrees) {
    std::vector<long> next(out.size() + static_cast<std::size_t>(d) - 1, 0);
    for (std::size_t i = 0; i < out.size(); ++i)
      for (int j = 0; j < d; ++j) next[i + static_cast<std::size_t>(j)] += out[i];
    out = next;
  }
  return out;
}

inline cherednik::Poly random_poly(std::mt19937_64& rng, int nvars, int m, int max_degree, int terms = 4) {
  std::uniform_int_distribution<int> deg(0, max_degree), coef(-4, 4), var(0, nvars - 1);
  cherednik::Poly f(nvars, m);
  const int phi_m = cherednik::euler_phi(m);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> e(static_cast<std::size_t>(nvars), 0);
    const int d = deg(rng);
    for (int k = 0; k < d; ++k) ++e[static_cast<std::size_t>(var(rng))];
    std::vector<Rational> c(static_cast<std::size_t>(phi_m));
    for (auto& x : c) x = cherednik::make_rational(coef(rng), 1 + (coef(rng) + 4) % 3);
    f.add_term(cherednik::Monomial::from_exponents(e), CycloNumber(m, std::move(c)));
  }
  return f;
}

}  // namespace oracle
