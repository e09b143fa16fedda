#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "cherednik/cyclotomic.hpp"
#include "cherednik/group.hpp"

namespace cherednik {

/// Exponent vector packed into 64 bits: total degree in the top byte, then
/// one byte per variable x_1 .. x_7. Integer order on the key is graded
/// lexicographic order with x_1 > x_2 > ... .
class Monomial {
 public:
  static constexpr int kMaxVars = 7;
  static constexpr int kMaxDegree = 255;

  Monomial() = default;
  static Monomial from_exponents(std::span<const int> e);
  static Monomial variable(int i);

  int exponent(int i) const { return static_cast<int>((key_ >> shift(i)) & 0xffU); }
  int degree() const { return static_cast<int>(key_ >> 56); }
  std::vector<int> exponents(int nvars) const;
  std::uint64_t key() const { return key_; }

  friend Monomial operator*(Monomial a, Monomial b);
  /// x^e / x_i; exponent i must be positive.
  Monomial divided_by_variable(int i) const;
  Monomial times_variable(int i) const { return *this * variable(i); }
  bool divisible_by(Monomial other) const;
  std::string to_string(int nvars) const;

  friend auto operator<=>(Monomial a, Monomial b) = default;

 private:
  static int shift(int i) { return 48 - 8 * i; }
  std::uint64_t key_ = 0;
};

/// Polynomial in x_1..x_n over Q(zeta_m). Terms are kept in descending
/// graded-lex order; zero coefficients are never stored.
class Poly {
 public:
  using Terms = std::map<Monomial, CycloNumber, std::greater<Monomial>>;

  Poly() = default;
  Poly(int nvars, int order) : nvars_(nvars), order_(order) {}
  static Poly constant(int nvars, int order, const CycloNumber& c);
  static Poly monomial(int nvars, int order, Monomial mono, const CycloNumber& c);
  static Poly variable(int nvars, int order, int i);
  static Poly from_terms(int nvars, int order, Terms terms);

  int nvars() const { return nvars_; }
  int order() const { return order_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Largest total degree; -1 for zero.
  int degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }
  bool is_homogeneous() const;
  CycloNumber coeff(Monomial mono) const;
  Monomial leading_monomial() const { return terms_.begin()->first; }

  void add_term(Monomial mono, const CycloNumber& c);
  /// *this += c * other.
  void add_scaled(const Poly& other, const CycloNumber& c);
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly operator-() const;
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const CycloNumber& c) const;
  Poly times_monomial(Monomial mono) const;

  /// Exact quotient by x_i - c x_j; throws VerificationError on a remainder.
  Poly divide_exact_linear(int i, int j, const CycloNumber& c) const;
  /// Exact quotient by x_i; throws VerificationError if some term lacks x_i.
  Poly divide_exact_variable(int i) const;
  /// d/dx_i.
  Poly derivative(int i) const;

  std::string to_string() const;

  friend bool operator==(const Poly& a, const Poly& b);

 private:
  int nvars_ = 0;
  int order_ = 1;
  Terms terms_;
};

/// Monomials of total degree k in n variables, descending graded-lex.
std::vector<Monomial> monomials_of_degree(int nvars, int k);
/// C(k + n - 1, n - 1).
std::size_t monomial_count(int nvars, int k);

/// w . x^e as a single scaled monomial.
struct ScaledMonomial {
  CycloNumber coeff;
  Monomial mono;
};
ScaledMonomial act(const MonomialMatrix& w, Monomial mono);

/// Contragredient action, x_i -> eps^{-exps_i} x_{perm_i}.
Poly act(const MonomialMatrix& w, const Poly& f);

/// e_i(x_1^m, ..., x_n^m) for i < n, then (x_1 ... x_n)^d.
std::vector<Poly> fundamental_invariants(const GroupParams& g);

/// Coefficients of prod_i (1 - t^{d_i}) / (1 - t)^n over the invariant degrees.
std::vector<long> coinvariant_hilbert(const GroupParams& g);

/// Reduced row echelon form over Q(zeta_m) for sparse vectors keyed by an
/// ordered type. Rows are monic and fully reduced, pivots are leading keys, so
/// the stored basis depends only on the span.
template <class Key>
class Echelon {
 public:
  using Vec = std::map<Key, CycloNumber, std::greater<Key>>;

  /// Normal form of v modulo the span: v minus the basis combination that
  /// clears every pivot.
  Vec reduce(const Vec& v) const {
    Vec out = v;
    for (const auto& [key, c] : v) {
      auto it = pivot_index_.find(key);
      if (it == pivot_index_.end()) continue;
      subtract_scaled(out, rows_[it->second], c);
    }
    return out;
  }

  bool contains(const Vec& v) const { return reduce(v).empty(); }

  /// Adds v to the span; returns whether the rank grew.
  bool insert(const Vec& v) {
    Vec w = reduce(v);
    if (w.empty()) return false;
    const Key lead = w.begin()->first;
    const CycloNumber inv = w.begin()->second.inverse();
    for (auto& [key, c] : w) c *= inv;
    for (auto& row : rows_) {
      auto it = row.find(lead);
      if (it == row.end()) continue;
      const CycloNumber c = it->second;
      subtract_scaled(row, w, c);
    }
    pivot_index_.emplace(lead, rows_.size());
    rows_.push_back(std::move(w));
    return true;
  }

  std::size_t rank() const { return rows_.size(); }
  bool empty() const { return rows_.empty(); }
  /// Rows in insertion order.
  const std::vector<Vec>& rows() const { return rows_; }
  /// Rows sorted by pivot, largest first; canonical for the span.
  std::vector<Vec> canonical_rows() const {
    std::vector<Vec> out;
    out.reserve(rows_.size());
    for (auto it = pivot_index_.rbegin(); it != pivot_index_.rend(); ++it) out.push_back(rows_[it->second]);
    return out;
  }
  const std::map<Key, std::size_t>& pivots() const { return pivot_index_; }

  static void subtract_scaled(Vec& target, const Vec& row, const CycloNumber& c) {
    for (const auto& [key, val] : row) {
      auto [it, inserted] = target.try_emplace(key, -(c * val));
      if (!inserted) {
        it->second -= c * val;
        if (it->second.is_zero()) target.erase(it);
      }
    }
  }

 private:
  std::vector<Vec> rows_;
  std::map<Key, std::size_t> pivot_index_;
};

using PolyEchelon = Echelon<Monomial>;

/// Echelonized homogeneous subspace of C[h]_degree.
class GradedSubspace {
 public:
  GradedSubspace() = default;
  GradedSubspace(int nvars, int order, int degree) : nvars_(nvars), order_(order), degree_(degree) {}

  /// Throws UsageError if f is not homogeneous of this degree.
  bool insert(const Poly& f);
  Poly reduce(const Poly& f) const;
  bool contains(const Poly& f) const { return reduce(f).is_zero(); }

  int degree() const { return degree_; }
  std::size_t dim() const { return echelon_.rank(); }
  /// Canonical basis: monic, fully reduced, pivots descending.
  std::vector<Poly> basis() const;
  const PolyEchelon& echelon() const { return echelon_; }

  /// tr(w | subspace) for a w that preserves it.
  CycloNumber trace(const MonomialMatrix& w) const;

 private:
  int nvars_ = 0;
  int order_ = 1;
  int degree_ = 0;
  PolyEchelon echelon_;
};

/// Exact rank of a family of homogeneous polynomials.
std::size_t span_rank(const std::vector<Poly>& vectors);

/// dim of the degree-k part of the ideal generated by homogeneous `gens`:
/// rank of all monomial multiples landing in degree k.
std::size_t ideal_dim_in_degree(const std::vector<Poly>& gens, int k);

}  // namespace cherednik
