#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "cherednik/cyclotomic.hpp"
#include "cherednik/group.hpp"
#include "cherednik/poly.hpp"
#include "cherednik/relation.hpp"

namespace cherednik {

/// Parameters (k00, k_1 .. k_{d-1}) of the rational Cherednik algebra of
/// G(m, p, n); k_0 = k_d = 0. For n = 2 with p even the two sigma classes get
/// their own k00 values, which must coincide.
struct CherednikParams {
  Rational kappa00;
  std::vector<Rational> kappa;  // k_1 .. k_{d-1}
  Relation relation = Relation::none;
  std::optional<Rational> kappa00_odd;
  std::optional<Rational> kappa00_even;

  /// k_j with j taken mod d and k_0 = 0.
  Rational kappa_at(int j, int d) const;
  /// d k_1 + m(n-1) k00.
  Rational relation_value(const GroupParams& g) const;
  /// Throws UsageError if the shape is wrong, the imposed relation fails or
  /// the sigma-class parameters differ.
  void validate(const GroupParams& g) const;

  static CherednikParams zero(const GroupParams& g);
  std::string to_string() const;
};

/// Required value of d k_1 + m(n-1) k00 for a relation.
Rational relation_target(const GroupParams& g, Relation relation);

/// Seeded sampler for generic parameters. Every free parameter is a random
/// rational with a nonzero signed 30-bit numerator and a denominator in
/// [1, 2^30], drawn from std::mt19937_64. Under a relation k_1 is solved for.
class ParamSampler {
 public:
  explicit ParamSampler(std::uint64_t seed) : rng_(seed) {}
  CherednikParams next(const GroupParams& g, Relation relation);

 private:
  Rational random_rational();
  std::mt19937_64 rng_;
};

/// Finitely supported element of the group algebra over Q(zeta_m).
class GroupAlgebraElement {
 public:
  explicit GroupAlgebraElement(int order) : order_(order) {}

  void add(const MonomialMatrix& w, const CycloNumber& c);
  const std::map<MonomialMatrix, CycloNumber>& terms() const { return terms_; }
  int order() const { return order_; }

  Poly apply(const Poly& f) const;
  /// Trace on the i-th exterior power of h*.
  CycloNumber trace_ext_power(int i) const;
  /// Value on the trivial representation (every w acts by 1).
  CycloNumber trivial_value() const;

 private:
  int order_;
  std::map<MonomialMatrix, CycloNumber> terms_;
};

/// Dunkl operators T_{y_a} on C[h]. Images of monomials are cached, so keep
/// one engine per parameter set. Not thread safe.
class DunklEngine {
 public:
  DunklEngine(const GroupParams& g, const CherednikParams& c);

  /// T_{y_a} f, a zero-based.
  Poly apply(int a, const Poly& f);
  const Poly& apply(int a, Monomial mono);

  const GroupParams& group() const { return g_; }
  const CherednikParams& params() const { return c_; }

 private:
  Poly compute(int a, Monomial mono) const;

  GroupParams g_;
  CherednikParams c_;
  std::vector<CycloNumber> kappa_;  // k_0 .. k_{d-1}
  CycloNumber kappa00_;
  std::vector<std::unordered_map<std::uint64_t, Poly>> memo_;
};

/// Right side of the [y_a, x_b] relation as a group-algebra element.
GroupAlgebraElement commutator_element(int a, int b, const GroupParams& g, const CherednikParams& c);

/// T_a(x_b f) - x_b T_a(f), compared with the group-algebra right side.
bool commutator_check(int a, int b, const Poly& f, DunklEngine& engine);

/// Parameters of G(m, 1, n) whose Dunkl operators restrict to those of
/// G(m, p, n): mu00 = k00, mu_0 = 0, mu_{sd+t} = k_t / p.
struct EmbeddedParams {
  GroupParams ambient;
  Rational mu00;
  std::vector<Rational> mu;  // mu_0 .. mu_{m-1}

  CherednikParams as_params() const;
};
EmbeddedParams parameter_embed(const GroupParams& g, const CherednikParams& c);

/// z = sum_i sum_t k_t sum_j eps^{ptj} s_i^{pj} + k00 sum_{i<j} sum_r (1 - sigma_ij^(r)).
GroupAlgebraElement z_element(const GroupParams& g, const CherednikParams& c);

/// Scalar of z on the i-th exterior power of h*: i (d k_1 + m(n-1) k00).
Rational z_scalar_closed(int i, const GroupParams& g, const CherednikParams& c);
/// Trace of z on the i-th exterior power divided by its dimension.
CycloNumber z_scalar_direct(int i, const GroupParams& g, const CherednikParams& c);
/// Both routes; throws VerificationError if they disagree.
Rational z_scalar(int i, const GroupParams& g, const CherednikParams& c);

/// Eigenvalue of the Euler element on C[h]_k tensor the i-th exterior power.
Rational euler_eigenvalue(int k, int i, const GroupParams& g, const CherednikParams& c);
/// Same, shifted by n + m C(n,2).
Rational shifted_euler_eigenvalue(int k, int i, const GroupParams& g, const CherednikParams& c);

struct OneDimReport {
  /// value[a][b]: the [y_a, x_b] right side on the trivial representation.
  std::vector<std::vector<CycloNumber>> value;
  /// Constant T_{y_a}(x_b), which must equal value[a][b].
  std::vector<std::vector<CycloNumber>> dunkl_value;
  bool routes_agree = true;
  bool passed = true;
};
OneDimReport onedim_module_check(const GroupParams& g, const CherednikParams& c);

}  // namespace cherednik
