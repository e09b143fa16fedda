#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cherednik/cherednik.hpp"
#include "cherednik/group.hpp"
#include "cherednik/poly.hpp"
#include "cherednik/series.hpp"

namespace cherednik {

/// Common kernel of T_{y_1}, ..., T_{y_n} on C[h]_degree, echelonized.
GradedSubspace singular_kernel(DunklEngine& engine, int degree);

/// Singular vectors of degree r = m(n-1) + d + 1 for main-relation parameters.
struct SingularSpace {
  GroupParams group;
  CherednikParams params;
  int degree = 0;
  GradedSubspace space;
  int attempts = 1;  // parameter samples used
};

/// Kernel in degree r for the given parameters; throws GenericityError unless
/// its dimension is n.
SingularSpace find_singular_space(const GroupParams& g, const CherednikParams& c);

/// Samples main-relation parameters from `seed`, retrying up to
/// `max_attempts` times while the kernel has the wrong dimension.
SingularSpace find_singular_space(const GroupParams& g, std::uint64_t seed, int max_attempts = 3);

struct ClassTrace {
  MonomialMatrix representative;
  std::size_t class_size = 0;
  CycloNumber value;
  CycloNumber expected;
  bool ok = false;
};
/// Trace of each class representative on the singular space next to its
/// trace on h*.
std::vector<ClassTrace> singular_character(const SingularSpace& s);

/// C[h] / I with I generated by a singular space, stored degree by degree up
/// to n(r-1) + 1.
class QuotientModule {
 public:
  const GroupParams& group() const { return g_; }
  const CherednikParams& params() const { return c_; }
  int singular_degree() const { return r_; }
  int top_degree() const { return static_cast<int>(ideal_.size()) - 1; }

  const GradedSubspace& ideal(int k) const { return ideal_.at(static_cast<std::size_t>(k)); }
  std::size_t ideal_dim(int k) const;
  std::size_t dim(int k) const;
  std::size_t total_dim() const;

  /// tr(w | (C[h]/I)_k).
  CycloNumber trace(const MonomialMatrix& w, int k) const;
  /// Normal form of a homogeneous f modulo I (zero past the top degree).
  Poly reduce(const Poly& f) const;

  bool dunkl_stable() const { return dunkl_stable_; }
  bool vanishes_at_top() const { return dim(top_degree()) == 0; }

 private:
  friend QuotientModule build_quotient(const SingularSpace& s);

  GroupParams g_;
  CherednikParams c_;
  int r_ = 0;
  std::vector<GradedSubspace> ideal_;
  bool dunkl_stable_ = true;
};

/// Builds I_k = sum_i x_i I_{k-1} (plus the generators in degree r) and
/// checks T_{y_a}(I_k) lies in I_{k-1} for every basis element.
QuotientModule build_quotient(const SingularSpace& s);

/// tr(w | C[h]_k): sum over monomials fixed up to scalar by w.
CycloNumber polynomial_trace(const MonomialMatrix& w, int nvars, int k);

struct HilbertSeries {
  int shift = 0;  // the series is t^{-shift} * sum coeffs[k] t^k
  std::vector<long> coeffs;
};
HilbertSeries quotient_hilbert(const QuotientModule& q);
/// Coefficients of ((1 - t^r) / (1 - t))^n.
HilbertSeries expected_hilbert(const GroupParams& g);

/// sum_k tr(w | quotient_k) t^k.
CycloSeries quotient_equiv_char(const QuotientModule& q, const MonomialMatrix& w);
/// det(1 - t^r w) / det(1 - t w) on h*, expanded through t^max_degree.
CycloSeries det_ratio_series(const MonomialMatrix& w, int r, int max_degree);
/// Same with the numerator taken on the twist of h* by eps -> eps^r: every
/// exponent of w is multiplied by r before forming det(1 - t^r w).
CycloSeries twisted_det_ratio_series(const MonomialMatrix& w, int r, int max_degree);

/// r^{dim ker(1 - w)}.
long character_limit(const MonomialMatrix& w, const GroupParams& g);

/// det(1 - t^r w) against sum_i (-1)^i chi_{wedge^i h*}(w) t^{ir}.
bool bgg_identity_check(const MonomialMatrix& w, int r);

/// Graded trace of w in G(m,1,n) on (C[u]/(u^r))^{tensor n}, u -> eps^{-1} u
/// under s_1 and S_n permuting factors.
CycloSeries ce_tensor_char(const MonomialMatrix& w, int r);

struct CoinvariantReport {
  int vbar_degree = 0;
  /// Multiplicity of the wedge^n h* character in each quotient degree.
  std::vector<long> top_wedge_multiplicity;
  Poly vbar;
  /// dim of (C[h] . vbar) in degree vbar_degree + j.
  std::vector<long> orbit_dims;
  std::vector<long> expected_dims;
  long socle_degree = 0;
  long socle_dim = 0;
  bool clause_a = false;  // unique wedge^n h* copy, in degree n + m C(n,2)
  bool clause_b = false;  // invariants of positive degree kill vbar
  bool clause_c = false;  // C[h] . vbar has the coinvariant Hilbert series
  bool clause_d = false;  // socle degree survives with dimension 1
  std::vector<std::string> failures;
  bool passed() const { return clause_a && clause_b && clause_c && clause_d; }
};
CoinvariantReport coinvariant_image_check(const QuotientModule& q);

}  // namespace cherednik
