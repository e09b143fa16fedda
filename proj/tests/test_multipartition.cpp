#include <doctest.h>

#include <map>
#include <set>

#include "cherednik/cherednik.hpp"
#include "cherednik/group.hpp"
#include "cherednik/multipartition.hpp"

using namespace cherednik;

namespace {

Multipartition mp(std::vector<std::vector<int>> comps) {
  std::vector<Partition> out;
  for (auto& c : comps) out.emplace_back(std::move(c));
  return Multipartition(std::move(out));
}

long multipartition_count(int m, int n) {
  std::vector<long> p(static_cast<std::size_t>(n + 1), 0);
  p[0] = 1;
  for (int k = 1; k <= n; ++k)
    for (int j = k; j <= n; ++j) p[static_cast<std::size_t>(j)] += p[static_cast<std::size_t>(j - k)];
  std::vector<long> acc(static_cast<std::size_t>(n + 1), 0);
  acc[0] = 1;
  for (int c = 0; c < m; ++c) {
    std::vector<long> next(static_cast<std::size_t>(n + 1), 0);
    for (int i = 0; i <= n; ++i)
      for (int j = 0; i + j <= n; ++j) next[static_cast<std::size_t>(i + j)] += acc[static_cast<std::size_t>(i)] * p[static_cast<std::size_t>(j)];
    acc = next;
  }
  return acc[static_cast<std::size_t>(n)];
}

// Running-balance form of normality: walking down from x, the addable nodes
// seen never outnumber the removable ones.
struct SignatureOracle {
  GroupParams g;
  Relation rel;

  std::vector<std::pair<Node, bool>> signature(const Multipartition& l, const ResidueSym& r) const {
    std::vector<std::pair<Node, bool>> out;  // (node, removable)
    for (const auto& x : addable_nodes(l))
      if (residue(x, g, rel) == r) out.push_back({x, false});
    for (const auto& x : removable_nodes(l))
      if (residue(x, g, rel) == r) out.push_back({x, true});
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
      return std::pair(a.first.component, a.first.row) < std::pair(b.first.component, b.first.row);
    });
    return out;
  }

  std::vector<Node> good(const Multipartition& l) const {
    std::set<ResidueSym> seen;
    std::vector<Node> out;
    for (const auto& x : removable_nodes(l)) {
      const auto r = residue(x, g, rel);
      if (!seen.insert(r).second) continue;
      const auto sig = signature(l, r);
      for (std::size_t i = 0; i < sig.size(); ++i) {
        if (!sig[i].second) continue;
        int balance = 0;
        bool normal = true;
        for (std::size_t j = i + 1; j < sig.size() && normal; ++j) {
          balance += sig[j].second ? 1 : -1;
          normal = balance >= 0;
        }
        if (normal) {
          out.push_back(sig[i].first);
          break;
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool kleshchev(const Multipartition& l, std::map<Multipartition, bool>& memo) const {
    if (l.size() == 0) return true;
    if (auto it = memo.find(l); it != memo.end()) return it->second;
    bool ok = false;
    for (const auto& x : good(l)) ok = ok || kleshchev(remove_node(l, x), memo);
    return memo[l] = ok;
  }
};

const int kTriples[][3] = {{3, 1, 2}, {9, 3, 2}, {4, 2, 3}, {4, 2, 2}, {6, 2, 2}, {6, 3, 2}, {3, 1, 3}, {2, 1, 3}};

}  // namespace

TEST_CASE("partition counts") {
  const long expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
  for (int n = 0; n <= 12; ++n) {
    const auto ps = partitions_of(n);
    CHECK(static_cast<long>(ps.size()) == expected[n]);
    for (const auto& p : ps) CHECK(p.size() == n);
    CHECK(std::set<Partition>(ps.begin(), ps.end()).size() == ps.size());
  }
  CHECK(partitions_of(4).front().parts == std::vector<int>{4});
}

TEST_CASE("multipartition enumeration") {
  for (int m : {1, 2, 3, 4, 9}) {
    for (int n = 0; n <= 4; ++n) {
      const auto all = enumerate_multipartitions(m, n);
      CHECK(static_cast<long>(all.size()) == multipartition_count(m, n));
      CHECK(std::is_sorted(all.begin(), all.end()));
      for (const auto& l : all) {
        CHECK(l.size() == n);
        CHECK(l.arity() == m);
      }
    }
  }
  CHECK_THROWS(enumerate_multipartitions(9, 6, 10));
}

TEST_CASE("addable and removable nodes of a partition") {
  const auto l = mp({{3, 1}});
  std::vector<Node> add = addable_nodes(l), rem = removable_nodes(l);
  std::sort(add.begin(), add.end());
  std::sort(rem.begin(), rem.end());
  CHECK(add == std::vector<Node>{{1, 1, 4}, {1, 2, 2}, {1, 3, 1}});
  CHECK(rem == std::vector<Node>{{1, 1, 3}, {1, 2, 1}});
  CHECK(remove_node(l, {1, 2, 1}) == mp({{3}}));
  CHECK(addable_nodes(Multipartition::empty(3)).size() == 3);
  CHECK(removable_nodes(Multipartition::empty(3)).empty());
}

TEST_CASE("symbolic residues") {
  const auto g = GroupParams::make(3, 1, 2);
  CHECK(residue({1, 1, 2}, g, Relation::none) == ResidueSym{1, 1, 0});
  CHECK(residue({2, 1, 1}, g, Relation::none) == ResidueSym{2, 0, 0});
  // y_2 = q^{n-1} once a relation holds
  CHECK(residue({2, 1, 1}, g, Relation::main) == ResidueSym{1, 1, 0});
  CHECK(residue({3, 2, 1}, g, Relation::main) == ResidueSym{3, -1, 0});
  const auto h = GroupParams::make(4, 2, 3);
  CHECK(residue({2, 1, 1}, h, Relation::none) == ResidueSym{1, 0, 1});
  CHECK(residue({3, 1, 1}, h, Relation::main) == ResidueSym{1, 2, 0});
  CHECK(residue({4, 1, 2}, h, Relation::main) == ResidueSym{1, 3, 1});
  CHECK(to_string(ResidueKey{ResidueSym{2, -1, 1}}) == "y2*q^-1*eta^1");
}

TEST_CASE("varpi permutes components in blocks of p") {
  for (const auto& t : kTriples) {
    const auto g = GroupParams::make(t[0], t[1], t[2]);
    for (const auto& l : enumerate_multipartitions(g.m, g.n)) {
      Multipartition cur = l;
      for (int k = 0; k < g.p; ++k) cur = varpi_apply(cur, g);
      CHECK(cur == l);
      const int o = orbit_size(l, g);
      CHECK(g.p % o == 0);
      const auto rep = orbit_representative(l, g);
      CHECK(rep <= l);
      CHECK(orbit_representative(varpi_apply(l, g), g) == rep);
    }
  }
  const auto g = GroupParams::make(4, 2, 2);
  CHECK(varpi_apply(mp({{2}, {}, {1}, {}}), g) == mp({{}, {2}, {}, {1}}));
  CHECK(varpi_apply(mp({{}, {2}, {}, {}}), g) == mp({{2}, {}, {}, {}}));
}

TEST_CASE("without a relation every multipartition is Kleshchev") {
  for (const auto& t : kTriples) {
    const auto g = GroupParams::make(t[0], t[1], t[2]);
    const auto model = ResidueModel::symbolic(g, Relation::none);
    CHECK(non_kleshchev_list(model).empty());
    CHECK(hecke_simple_count(model) == irrep_count(g));
  }
}

TEST_CASE("good nodes and the Kleshchev property agree with the signature rule") {
  for (const auto& t : kTriples) {
    const auto g = GroupParams::make(t[0], t[1], t[2]);
    CAPTURE(g.label());
    for (Relation rel : {Relation::none, Relation::unit, Relation::main}) {
      const auto model = ResidueModel::symbolic(g, rel);
      const SignatureOracle sig{g, rel};
      std::map<Multipartition, bool> memo;
      KleshchevClassifier cls(model);
      for (const auto& l : enumerate_multipartitions(g.m, g.n)) {
        auto mine = good_nodes(l, model);
        std::sort(mine.begin(), mine.end());
        CHECK(mine == sig.good(l));
        CHECK(cls.is_kleshchev(l) == sig.kleshchev(l, memo));
        for (const auto& x : mine) CHECK(is_normal_node(l, x, model));
      }
    }
  }
}

TEST_CASE("under the main relation the non-Kleshchev set is {rho_1, ..., rho_p}") {
  for (const auto& t : kTriples) {
    const auto g = GroupParams::make(t[0], t[1], t[2]);
    CAPTURE(g.label());
    std::vector<Multipartition> expected;
    for (int i = 1; i <= g.p; ++i) expected.push_back(rho(g.m, g.n, i));
    std::sort(expected.begin(), expected.end());
    CHECK(non_kleshchev_list(ResidueModel::symbolic(g, Relation::main)) == expected);
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      const auto c = ParamSampler(seed).next(g, Relation::main);
      CHECK(non_kleshchev_list(ResidueModel::sampled(g, c.kappa00, c.kappa)) == expected);
    }
  }
  CHECK(rho(3, 2, 1) == mp({{2}, {}, {}}));
  CHECK(rho(4, 3, 2) == mp({{}, {3}, {}, {}}));
}

TEST_CASE("Kleshchev set is stable under varpi") {
  for (const auto& t : kTriples) {
    const auto g = GroupParams::make(t[0], t[1], t[2]);
    const auto model = ResidueModel::symbolic(g, Relation::main);
    KleshchevClassifier cls(model);
    for (const auto& l : enumerate_multipartitions(g.m, g.n)) CHECK(cls.is_kleshchev(l) == cls.is_kleshchev(varpi_apply(l, g)));
  }
}

TEST_CASE("Hecke simple count is one less than the irrep count under the main relation") {
  for (const auto& t : kTriples) {
    const auto g = GroupParams::make(t[0], t[1], t[2]);
    CAPTURE(g.label());
    const long classes = static_cast<long>(conjugacy_classes(g).size());
    CHECK(hecke_simple_count(ResidueModel::symbolic(g, Relation::main)) == classes - 1);
  }
  CHECK(hecke_simple_count(ResidueModel::symbolic(GroupParams::make(3, 1, 2), Relation::main)) == 8);
  CHECK(hecke_simple_count(ResidueModel::symbolic(GroupParams::make(4, 2, 3), Relation::main)) == 19);
}

TEST_CASE("sampled residues agree with symbolic residues on coincidences") {
  for (const auto& t : kTriples) {
    const auto g = GroupParams::make(t[0], t[1], t[2]);
    const auto c = ParamSampler(9).next(g, Relation::main);
    const auto sampled = ResidueModel::sampled(g, c.kappa00, c.kappa);
    const auto symbolic = ResidueModel::symbolic(g, Relation::main);
    std::vector<Node> nodes;
    for (int k = 1; k <= g.m; ++k)
      for (int i = 1; i <= g.n; ++i)
        for (int j = 1; i + j - 1 <= g.n; ++j) nodes.push_back({k, i, j});
    for (const auto& a : nodes)
      for (const auto& b : nodes) CHECK((sampled.residue(a) == sampled.residue(b)) == (symbolic.residue(a) == symbolic.residue(b)));
  }
}
