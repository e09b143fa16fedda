#include "cherednik/multipartition.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <sstream>

#include "cherednik/error.hpp"

namespace cherednik {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw UsageError("partition parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1]) throw UsageError("partition parts must be weakly decreasing");
  }
}

int Partition::size() const {
  int s = 0;
  for (int v : parts) s += v;
  return s;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      Partition p;
      p.parts = cur;
      out.push_back(std::move(p));
      return;
    }
    for (int v = std::min(remaining, max_part); v >= 1; --v) {
      cur.push_back(v);
      rec(remaining - v, v);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

Multipartition Multipartition::empty(int m) { return Multipartition(std::vector<Partition>(static_cast<std::size_t>(m))); }

int Multipartition::size() const {
  int s = 0;
  for (const auto& c : components) s += c.size();
  return s;
}

std::string Multipartition::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < components.size(); ++k) {
    if (k) os << ",";
    os << "(";
    for (std::size_t i = 0; i < components[k].parts.size(); ++i) {
      if (i) os << ",";
      os << components[k].parts[i];
    }
    os << ")";
  }
  os << ")";
  return os.str();
}

namespace {

std::size_t multipartition_count(int m, int n) {
  constexpr auto kMax = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> part_count(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) part_count[static_cast<std::size_t>(k)] = partitions_of(k).size();
  // coefficients of P(x)^m truncated at x^n
  std::vector<std::size_t> acc(static_cast<std::size_t>(n) + 1, 0);
  acc[0] = 1;
  for (int c = 0; c < m; ++c) {
    std::vector<std::size_t> next(acc.size(), 0);
    for (int a = 0; a <= n; ++a) {
      for (int b = 0; a + b <= n; ++b) {
        const std::size_t x = acc[static_cast<std::size_t>(a)];
        const std::size_t y = part_count[static_cast<std::size_t>(b)];
        if (x != 0 && y > (kMax - next[static_cast<std::size_t>(a + b)]) / x) return kMax;
        next[static_cast<std::size_t>(a + b)] += x * y;
      }
    }
    acc = std::move(next);
  }
  return acc[static_cast<std::size_t>(n)];
}

Rational frac(const Rational& t) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
  return t - Rational(fl);
}

bool is_integer(const Rational& t) { return t.get_den() == 1; }

}  // namespace

std::vector<Multipartition> enumerate_multipartitions(int m, int n, std::size_t cap) {
  const std::size_t count = multipartition_count(m, n);
  if (count > cap) throw SizeCapError("too many multipartitions", count, cap);

  std::vector<std::vector<Partition>> parts_by_size;
  for (int k = 0; k <= n; ++k) parts_by_size.push_back(partitions_of(k));

  std::vector<Multipartition> out;
  out.reserve(count);
  std::vector<Partition> cur(static_cast<std::size_t>(m));
  std::function<void(int, int)> rec = [&](int k, int remaining) {
    if (k == m - 1) {
      for (const auto& p : parts_by_size[static_cast<std::size_t>(remaining)]) {
        cur[static_cast<std::size_t>(k)] = p;
        out.emplace_back(cur);
      }
      return;
    }
    for (int s = 0; s <= remaining; ++s) {
      for (const auto& p : parts_by_size[static_cast<std::size_t>(s)]) {
        cur[static_cast<std::size_t>(k)] = p;
        rec(k + 1, remaining - s);
      }
    }
  };
  if (m >= 1) rec(0, n);
  std::sort(out.begin(), out.end());
  return out;
}

Multipartition rho(int m, int n, int i) {
  if (i < 1 || i > m) throw UsageError("rho index out of range");
  auto lambda = Multipartition::empty(m);
  lambda.components[static_cast<std::size_t>(i - 1)] = Partition({n});
  return lambda;
}

std::string to_string(const ResidueKey& r) {
  if (const auto* s = std::get_if<ResidueSym>(&r)) {
    std::ostringstream os;
    os << "y" << s->block << "*q^" << s->qexp << "*eta^" << s->etaexp;
    return os.str();
  }
  return "e(" + std::get<Rational>(r).get_str() + ")";
}

ResidueSym residue(const Node& node, const GroupParams& g, Relation relation) {
  const int s = (node.component - 1) / g.p;
  const int t = (node.component - 1) % g.p + 1;
  ResidueSym r{s + 1, node.col - node.row, (t - 1) % g.p};
  if (relation != Relation::none && r.block == 2) {
    r.block = 1;
    r.qexp += g.n - 1;
  }
  return r;
}

ResidueModel ResidueModel::symbolic(const GroupParams& g, Relation relation) {
  ResidueModel model;
  model.group_ = g;
  model.relation_ = relation;
  return model;
}

ResidueModel ResidueModel::sampled(const GroupParams& g, const Rational& kappa00, const std::vector<Rational>& kappa) {
  if (static_cast<int>(kappa.size()) != g.d - 1) throw UsageError("sampled residues need d - 1 kappa values");
  ResidueModel model;
  model.group_ = g;
  model.sampled_ = true;
  model.kappa00_ = kappa00;

  // log of y_{s+1}: a p-th root of x_{s+1} = eps^{-ps} exp(-2 pi i k_s).
  std::vector<Rational> log_y(static_cast<std::size_t>(g.d));
  log_y[0] = 0;
  for (int s = 1; s < g.d; ++s) {
    const Rational base = (make_rational(-s, g.d) - kappa[static_cast<std::size_t>(s - 1)]) / g.p;
    Rational chosen = base;
    if (s == 1) {
      const Rational target = kappa00 * (g.n - 1);
      for (int j = 0; j < g.p; ++j) {
        const Rational candidate = base + make_rational(j, g.p);
        if (is_integer(candidate - target)) {
          chosen = candidate;
          break;
        }
      }
    }
    log_y[static_cast<std::size_t>(s)] = chosen;
  }
  for (int k = 1; k <= g.m; ++k) {
    const int s = (k - 1) / g.p;
    const int t = (k - 1) % g.p + 1;
    model.log_q_.push_back(frac(make_rational(t - 1, g.p) + log_y[static_cast<std::size_t>(s)]));
  }
  return model;
}

ResidueKey ResidueModel::residue(const Node& node) const {
  if (!sampled_) return cherednik::residue(node, group_, relation_);
  return frac(log_q_[static_cast<std::size_t>(node.component - 1)] + kappa00_ * (node.col - node.row));
}

Multipartition varpi_apply(const Multipartition& lambda, const GroupParams& g) {
  if (lambda.arity() != g.m) throw UsageError("multipartition must have m components");
  Multipartition out = lambda;
  for (int s = 0; s < g.d; ++s) {
    for (int t = 1; t <= g.p; ++t) {
      const int target = s * g.p + t;                          // 1-based position i
      const int source = s * g.p + (t == 1 ? g.p : t - 1);     // varpi^-1(i)
      out.components[static_cast<std::size_t>(target - 1)] = lambda.components[static_cast<std::size_t>(source - 1)];
    }
  }
  return out;
}

int orbit_size(const Multipartition& lambda, const GroupParams& g) {
  Multipartition cur = varpi_apply(lambda, g);
  int k = 1;
  while (cur != lambda) {
    cur = varpi_apply(cur, g);
    ++k;
  }
  return k;
}

Multipartition orbit_representative(const Multipartition& lambda, const GroupParams& g) {
  Multipartition best = lambda;
  Multipartition cur = varpi_apply(lambda, g);
  while (cur != lambda) {
    if (cur < best) best = cur;
    cur = varpi_apply(cur, g);
  }
  return best;
}

std::vector<Node> addable_nodes(const Multipartition& lambda) {
  std::vector<Node> out;
  for (int k = 1; k <= lambda.arity(); ++k) {
    const auto& parts = lambda.components[static_cast<std::size_t>(k - 1)].parts;
    const int rows = static_cast<int>(parts.size());
    for (int i = 1; i <= rows + 1; ++i) {
      const int len = i <= rows ? parts[static_cast<std::size_t>(i - 1)] : 0;
      if (i == 1 || parts[static_cast<std::size_t>(i - 2)] > len) out.push_back({k, i, len + 1});
    }
  }
  return out;
}

std::vector<Node> removable_nodes(const Multipartition& lambda) {
  std::vector<Node> out;
  for (int k = 1; k <= lambda.arity(); ++k) {
    const auto& parts = lambda.components[static_cast<std::size_t>(k - 1)].parts;
    const int rows = static_cast<int>(parts.size());
    for (int i = 1; i <= rows; ++i) {
      const int len = parts[static_cast<std::size_t>(i - 1)];
      if (i == rows || parts[static_cast<std::size_t>(i)] < len) out.push_back({k, i, len});
    }
  }
  return out;
}

namespace {

std::vector<Node> filter_by_residue(std::vector<Node> nodes, const ResidueKey& r, const ResidueModel& model) {
  std::erase_if(nodes, [&](const Node& x) { return model.residue(x) != r; });
  std::sort(nodes.begin(), nodes.end());
  return nodes;
}

}  // namespace

std::vector<Node> addable_nodes(const Multipartition& lambda, const ResidueKey& r, const ResidueModel& model) {
  return filter_by_residue(addable_nodes(lambda), r, model);
}

std::vector<Node> removable_nodes(const Multipartition& lambda, const ResidueKey& r, const ResidueModel& model) {
  return filter_by_residue(removable_nodes(lambda), r, model);
}

Multipartition remove_node(const Multipartition& lambda, const Node& x) {
  Multipartition out = lambda;
  auto& parts = out.components.at(static_cast<std::size_t>(x.component - 1)).parts;
  if (x.row < 1 || x.row > static_cast<int>(parts.size()) || parts[static_cast<std::size_t>(x.row - 1)] != x.col)
    throw UsageError("node is not at the end of its row");
  if (--parts[static_cast<std::size_t>(x.row - 1)] == 0) {
    if (x.row != static_cast<int>(parts.size())) throw UsageError("node is not removable");
    parts.pop_back();
  } else if (x.row < static_cast<int>(parts.size()) && parts[static_cast<std::size_t>(x.row)] > parts[static_cast<std::size_t>(x.row - 1)]) {
    throw UsageError("node is not removable");
  }
  return out;
}

bool is_normal_node(const Multipartition& lambda, const Node& x, const ResidueModel& model) {
  const ResidueKey a = model.residue(x);
  const auto removable = removable_nodes(lambda, a, model);
  if (std::find(removable.begin(), removable.end(), x) == removable.end()) return false;
  const auto addable = addable_nodes(lambda, a, model);
  for (const auto& y : addable) {
    if (!(x < y)) continue;
    const auto between = [&](const Node& z) { return x < z && z < y; };
    const auto rem = std::count_if(removable.begin(), removable.end(), between);
    const auto add = std::count_if(addable.begin(), addable.end(), between);
    if (rem <= add) return false;
  }
  return true;
}

bool is_good_node(const Multipartition& lambda, const Node& x, const ResidueModel& model) {
  if (!is_normal_node(lambda, x, model)) return false;
  for (const auto& z : removable_nodes(lambda, model.residue(x), model)) {
    if (!(z < x)) break;
    if (is_normal_node(lambda, z, model)) return false;
  }
  return true;
}

std::vector<Node> good_nodes(const Multipartition& lambda, const ResidueModel& model) {
  std::vector<Node> out;
  for (const auto& x : removable_nodes(lambda))
    if (is_good_node(lambda, x, model)) out.push_back(x);
  return out;
}

bool KleshchevClassifier::is_kleshchev(const Multipartition& lambda) {
  if (lambda.size() == 0) return true;
  if (auto it = memo_.find(lambda); it != memo_.end()) return it->second;
  bool result = false;
  for (const auto& y : good_nodes(lambda, model_)) {
    if (is_kleshchev(remove_node(lambda, y))) {
      result = true;
      break;
    }
  }
  memo_.emplace(lambda, result);
  return result;
}

bool is_kleshchev(const Multipartition& lambda, const ResidueModel& model) {
  KleshchevClassifier classifier(model);
  return classifier.is_kleshchev(lambda);
}

std::vector<Multipartition> non_kleshchev_list(const ResidueModel& model, std::size_t cap) {
  const auto& g = model.group();
  KleshchevClassifier classifier(model);
  std::vector<Multipartition> out;
  for (const auto& lambda : enumerate_multipartitions(g.m, g.n, cap))
    if (!classifier.is_kleshchev(lambda)) out.push_back(lambda);
  return out;
}

long hecke_simple_count(const ResidueModel& model, std::size_t cap) {
  const auto& g = model.group();
  KleshchevClassifier classifier(model);
  long total = 0;
  for (const auto& lambda : enumerate_multipartitions(g.m, g.n, cap)) {
    if (orbit_representative(lambda, g) != lambda) continue;
    if (classifier.is_kleshchev(lambda)) total += g.p / orbit_size(lambda, g);
  }
  return total;
}

long irrep_count(const GroupParams& g) {
  long total = 0;
  for (const auto& lambda : enumerate_multipartitions(g.m, g.n)) {
    if (orbit_representative(lambda, g) != lambda) continue;
    total += g.p / orbit_size(lambda, g);
  }
  return total;
}

}  // namespace cherednik
