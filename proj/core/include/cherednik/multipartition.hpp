#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "cherednik/cyclotomic.hpp"
#include "cherednik/group.hpp"
#include "cherednik/relation.hpp"

namespace cherednik {

/// Weakly decreasing positive parts; empty is the empty partition.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);

  int size() const;
  int rows() const { return static_cast<int>(parts.size()); }
  bool empty() const { return parts.empty(); }

  friend auto operator<=>(const Partition&, const Partition&) = default;
};

/// All partitions of n, in reverse lexicographic order ((n) first).
std::vector<Partition> partitions_of(int n);

/// An m-tuple of partitions.
struct Multipartition {
  std::vector<Partition> components;

  Multipartition() = default;
  explicit Multipartition(std::vector<Partition> c) : components(std::move(c)) {}
  static Multipartition empty(int m);

  int size() const;
  int arity() const { return static_cast<int>(components.size()); }
  std::string to_string() const;

  friend auto operator<=>(const Multipartition&, const Multipartition&) = default;
};

/// All multipartitions of n with m components, sorted. Throws SizeCapError
/// when the count exceeds `cap`.
std::vector<Multipartition> enumerate_multipartitions(int m, int n, std::size_t cap = 1'000'000);

/// rho_i: the one-row partition (n) in component i (1-based), empty elsewhere.
Multipartition rho(int m, int n, int i);

/// A box of a multipartition. All indices are 1-based: component k, row i,
/// column j.
struct Node {
  int component = 1;
  int row = 1;
  int col = 1;

  /// "x is below y" when x sits in a later component, or in the same
  /// component and a lower row. Sorting ascending lists nodes top to bottom.
  friend auto operator<=>(const Node&, const Node&) = default;
};

/// Symbolic residue eta_p^etaexp * q^qexp * y_block under generic parameters.
/// Two residues coincide iff their canonical triples coincide.
struct ResidueSym {
  int block = 1;
  int qexp = 0;
  int etaexp = 0;

  friend auto operator<=>(const ResidueSym&, const ResidueSym&) = default;
};

/// Either a symbolic triple or, for sampled parameters, the residue's
/// exponent exp(2 pi i t) reduced to t in [0, 1).
using ResidueKey = std::variant<ResidueSym, Rational>;

std::string to_string(const ResidueKey& r);

/// Residue of `node` for G(m, p, n) in canonical symbolic form. When the
/// parameters satisfy the unit or main relation, y_2 = q^{n-1}, so block 2
/// folds onto block 1 with the q exponent shifted by n - 1.
ResidueSym residue(const Node& node, const GroupParams& g, Relation relation);

/// Assigns a residue to every node. Either symbolic (generic parameters) or
/// sampled (concrete rational parameters, exact arithmetic mod 1).
class ResidueModel {
 public:
  static ResidueModel symbolic(const GroupParams& g, Relation relation);
  /// `kappa` holds k_1 .. k_{d-1}. The p-th root y_2 of the second Hecke
  /// parameter is chosen equal to q^{n-1} whenever some root is.
  static ResidueModel sampled(const GroupParams& g, const Rational& kappa00, const std::vector<Rational>& kappa);

  ResidueKey residue(const Node& node) const;
  const GroupParams& group() const { return group_; }

 private:
  ResidueModel() = default;

  GroupParams group_;
  bool sampled_ = false;
  Relation relation_ = Relation::none;
  Rational kappa00_;
  std::vector<Rational> log_q_;  // per component, exponent of Q_k mod 1
};

/// varpi = (1..p)(p+1..2p)...: varpi(lambda)^(i) = lambda^(varpi^-1(i)).
Multipartition varpi_apply(const Multipartition& lambda, const GroupParams& g);

/// Least k >= 1 with varpi^k(lambda) = lambda.
int orbit_size(const Multipartition& lambda, const GroupParams& g);

/// Lexicographically least element of the varpi-orbit.
Multipartition orbit_representative(const Multipartition& lambda, const GroupParams& g);

std::vector<Node> addable_nodes(const Multipartition& lambda);
std::vector<Node> removable_nodes(const Multipartition& lambda);

/// Addable / removable nodes with residue `r`, ordered top to bottom.
std::vector<Node> addable_nodes(const Multipartition& lambda, const ResidueKey& r, const ResidueModel& model);
std::vector<Node> removable_nodes(const Multipartition& lambda, const ResidueKey& r, const ResidueModel& model);

Multipartition remove_node(const Multipartition& lambda, const Node& x);

/// A removable node x of residue a is normal when for every addable a-node y
/// below x, strictly more removable than addable a-nodes lie strictly
/// between x and y.
bool is_normal_node(const Multipartition& lambda, const Node& x, const ResidueModel& model);

/// Good = the highest normal node of its residue.
bool is_good_node(const Multipartition& lambda, const Node& x, const ResidueModel& model);
std::vector<Node> good_nodes(const Multipartition& lambda, const ResidueModel& model);

/// Decides the Kleshchev property by peeling good nodes, memoizing every
/// multipartition it visits. Not thread safe; use one per thread.
class KleshchevClassifier {
 public:
  explicit KleshchevClassifier(ResidueModel model) : model_(std::move(model)) {}

  bool is_kleshchev(const Multipartition& lambda);
  const ResidueModel& model() const { return model_; }

 private:
  ResidueModel model_;
  std::map<Multipartition, bool> memo_;
};

bool is_kleshchev(const Multipartition& lambda, const ResidueModel& model);

/// All non-Kleshchev multipartitions of n with m components, sorted.
std::vector<Multipartition> non_kleshchev_list(const ResidueModel& model, std::size_t cap = 1'000'000);

/// Sum over Kleshchev orbit representatives lambda of p / o_lambda: the number
/// of simple modules of the Hecke algebra for these parameters.
long hecke_simple_count(const ResidueModel& model, std::size_t cap = 1'000'000);

}  // namespace cherednik
