#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "cherednik/cyclotomic.hpp"

namespace cherednik {

/// (m, p, n) for the monomial group G(m, p, n), d = m / p.
///
/// Accepted triples satisfy p | m, m > p and n >= 2. For n = 2 with p even
/// the group has one more class of reflections than usual; `two_sigma_classes`
/// records that regime.
struct GroupParams {
  int m = 0;
  int p = 0;
  int n = 0;
  int d = 0;
  bool two_sigma_classes = false;

  /// Validates and fills d. Throws UsageError naming the violated condition.
  static GroupParams make(int m, int p, int n);

  /// m^n * n! / p.
  std::size_t group_order() const;
  /// r = m(n-1) + d + 1, the degree of the singular vectors.
  int singular_degree() const { return m * (n - 1) + d + 1; }
  /// n + m * C(n, 2), the global grading shift.
  int grading_shift() const { return n + m * n * (n - 1) / 2; }
  /// Number of reflection classes: d normally, d + 1 when n = 2, p even.
  int expected_reflection_classes() const { return two_sigma_classes ? d + 1 : d; }
  std::string label() const;

  friend bool operator==(const GroupParams&, const GroupParams&) = default;
};

/// An element of G(m, p, n) acting on h by y_i -> eps^{exps[i]} y_{perm[i]}.
/// Indices are zero-based. On the dual space the action is the
/// inverse-transpose: x_i -> eps^{-exps[i]} x_{perm[i]}.
class MonomialMatrix {
 public:
  MonomialMatrix() = default;
  MonomialMatrix(int m, std::vector<int> perm, std::vector<int> exps);

  static MonomialMatrix identity(int m, int n);
  /// y_i -> eps^k y_i.
  static MonomialMatrix diagonal(int m, int n, int i, int k);
  /// sigma_ij^(l): y_i -> eps^{-l} y_j, y_j -> eps^l y_i.
  static MonomialMatrix sigma(int m, int n, int i, int j, int l);

  int order() const { return m_; }
  int rank() const { return static_cast<int>(perm_.size()); }
  const std::vector<int>& perm() const { return perm_; }
  const std::vector<int>& exps() const { return exps_; }

  /// (u * v)(y) = u(v(y)).
  friend MonomialMatrix operator*(const MonomialMatrix& u, const MonomialMatrix& v);
  MonomialMatrix inverse() const;
  bool is_identity() const;

  /// Sum of exponents mod m.
  int exponent_sum() const;
  bool in_group(const GroupParams& g) const;

  struct Cycle {
    std::vector<int> indices;
    int exponent = 0;  // total exponent around the cycle, mod m
  };
  std::vector<Cycle> cycles() const;

  std::string to_string() const;

  friend auto operator<=>(const MonomialMatrix& a, const MonomialMatrix& b) {
    if (auto c = a.perm_ <=> b.perm_; c != 0) return c;
    return a.exps_ <=> b.exps_;
  }
  friend bool operator==(const MonomialMatrix&, const MonomialMatrix&) = default;

 private:
  int m_ = 1;
  std::vector<int> perm_;
  std::vector<int> exps_;
};

/// Cap on brute-force group enumeration. Defaults to 20000; the environment
/// variable CHEREDNIK_LAB_MAX_DIM overrides it.
std::size_t default_group_cap();

/// All elements, sorted. Throws SizeCapError above `cap`.
std::vector<MonomialMatrix> enumerate_group(const GroupParams& g, std::size_t cap = default_group_cap());

/// Elements w with rank(1 - w) = 1, sorted.
std::vector<MonomialMatrix> reflections(const GroupParams& g, std::size_t cap = default_group_cap());

struct ConjugacyClass {
  MonomialMatrix representative;  // least element of the class
  std::vector<MonomialMatrix> elements;
};

/// Brute-force conjugation orbits, ordered by representative.
std::vector<ConjugacyClass> conjugacy_classes(const GroupParams& g, std::size_t cap = default_group_cap());

/// Conjugacy classes of reflections, ordered by representative.
std::vector<std::vector<MonomialMatrix>> reflection_classes(const GroupParams& g,
                                                            std::size_t cap = default_group_cap());

/// dim ker(1 - w): the number of cycles with total exponent 0 mod m.
int fixed_space_dim(const MonomialMatrix& w);

/// det of w on h: sign(perm) * eps^{sum exps}.
CycloNumber det_char(const MonomialMatrix& w);

/// Matrix of w on h* in the basis x_1..x_n (column j is the image of x_j).
std::vector<std::vector<CycloNumber>> dual_matrix(const MonomialMatrix& w);

/// Trace of w on the i-th exterior power of h*, as the sum of the principal
/// i x i minors of `dual_matrix(w)`.
CycloNumber ext_power_char(const MonomialMatrix& w, int i);

/// Exact determinant of a square matrix over Q(zeta_m).
CycloNumber determinant(std::vector<std::vector<CycloNumber>> a);

/// Sum over orbits of the component permutation on m-multipartitions of n
/// of p / (orbit length). Equals the number of irreducible representations.
long irrep_count(const GroupParams& g);

}  // namespace cherednik
