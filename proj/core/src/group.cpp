#include "cherednik/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <sstream>

#include "cherednik/error.hpp"

namespace cherednik {

GroupParams GroupParams::make(int m, int p, int n) {
  if (m < 1 || p < 1) throw UsageError("m and p must be positive");
  if (m % p != 0) throw UsageError("p must divide m (got m=" + std::to_string(m) + ", p=" + std::to_string(p) + ")");
  if (m <= p) throw UsageError("m > p required (assumption d = m/p > 1; G(m,m,n) is not supported)");
  if (n < 2) throw UsageError("n >= 2 required");
  GroupParams g;
  g.m = m;
  g.p = p;
  g.n = n;
  g.d = m / p;
  g.two_sigma_classes = (n == 2 && p % 2 == 0);
  return g;
}

std::size_t GroupParams::group_order() const {
  constexpr auto kMax = std::numeric_limits<std::size_t>::max();
  std::size_t order = 1;
  for (int i = 0; i < n; ++i) {
    if (order > kMax / static_cast<std::size_t>(m)) return kMax;
    order *= static_cast<std::size_t>(m);
  }
  for (int i = 2; i <= n; ++i) {
    if (order > kMax / static_cast<std::size_t>(i)) return kMax;
    order *= static_cast<std::size_t>(i);
  }
  return order / static_cast<std::size_t>(p);
}

std::string GroupParams::label() const {
  return "G(" + std::to_string(m) + "," + std::to_string(p) + "," + std::to_string(n) + ")";
}

MonomialMatrix::MonomialMatrix(int m, std::vector<int> perm, std::vector<int> exps)
    : m_(m), perm_(std::move(perm)), exps_(std::move(exps)) {
  if (m_ < 1) throw UsageError("monomial matrix order must be positive");
  if (perm_.size() != exps_.size()) throw UsageError("perm and exps must have the same length");
  std::vector<bool> seen(perm_.size(), false);
  for (int v : perm_) {
    if (v < 0 || v >= static_cast<int>(perm_.size()) || seen[static_cast<std::size_t>(v)])
      throw UsageError("perm is not a permutation");
    seen[static_cast<std::size_t>(v)] = true;
  }
  for (int& e : exps_) e = static_cast<int>(mod_floor(e, m_));
}

MonomialMatrix MonomialMatrix::identity(int m, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  return MonomialMatrix(m, std::move(perm), std::vector<int>(static_cast<std::size_t>(n), 0));
}

MonomialMatrix MonomialMatrix::diagonal(int m, int n, int i, int k) {
  auto w = identity(m, n);
  w.exps_[static_cast<std::size_t>(i)] = static_cast<int>(mod_floor(k, m));
  return w;
}

MonomialMatrix MonomialMatrix::sigma(int m, int n, int i, int j, int l) {
  auto w = identity(m, n);
  std::swap(w.perm_[static_cast<std::size_t>(i)], w.perm_[static_cast<std::size_t>(j)]);
  w.exps_[static_cast<std::size_t>(i)] = static_cast<int>(mod_floor(-l, m));
  w.exps_[static_cast<std::size_t>(j)] = static_cast<int>(mod_floor(l, m));
  return w;
}

MonomialMatrix operator*(const MonomialMatrix& u, const MonomialMatrix& v) {
  const std::size_t n = v.perm_.size();
  std::vector<int> perm(n);
  std::vector<int> exps(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto vi = static_cast<std::size_t>(v.perm_[i]);
    perm[i] = u.perm_[vi];
    exps[i] = (v.exps_[i] + u.exps_[vi]) % v.m_;
  }
  MonomialMatrix r;
  r.m_ = v.m_;
  r.perm_ = std::move(perm);
  r.exps_ = std::move(exps);
  return r;
}

MonomialMatrix MonomialMatrix::inverse() const {
  const std::size_t n = perm_.size();
  MonomialMatrix r;
  r.m_ = m_;
  r.perm_.assign(n, 0);
  r.exps_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto pi = static_cast<std::size_t>(perm_[i]);
    r.perm_[pi] = static_cast<int>(i);
    r.exps_[pi] = static_cast<int>(mod_floor(-exps_[i], m_));
  }
  return r;
}

bool MonomialMatrix::is_identity() const {
  for (std::size_t i = 0; i < perm_.size(); ++i)
    if (perm_[i] != static_cast<int>(i) || exps_[i] != 0) return false;
  return true;
}

int MonomialMatrix::exponent_sum() const {
  long s = 0;
  for (int e : exps_) s += e;
  return static_cast<int>(mod_floor(s, m_));
}

bool MonomialMatrix::in_group(const GroupParams& g) const {
  return m_ == g.m && rank() == g.n && exponent_sum() % g.p == 0;
}

std::vector<MonomialMatrix::Cycle> MonomialMatrix::cycles() const {
  std::vector<Cycle> out;
  std::vector<bool> seen(perm_.size(), false);
  for (std::size_t start = 0; start < perm_.size(); ++start) {
    if (seen[start]) continue;
    Cycle c;
    long total = 0;
    std::size_t i = start;
    while (!seen[i]) {
      seen[i] = true;
      c.indices.push_back(static_cast<int>(i));
      total += exps_[i];
      i = static_cast<std::size_t>(perm_[i]);
    }
    c.exponent = static_cast<int>(mod_floor(total, m_));
    out.push_back(std::move(c));
  }
  return out;
}

std::string MonomialMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    if (i) os << " ";
    os << (perm_[i] + 1) << ":" << exps_[i];
  }
  os << "]";
  return os.str();
}

std::size_t default_group_cap() {
  if (const char* env = std::getenv("CHEREDNIK_LAB_MAX_DIM")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 20000;
}

std::vector<MonomialMatrix> enumerate_group(const GroupParams& g, std::size_t cap) {
  const std::size_t order = g.group_order();
  if (order > cap) throw SizeCapError("group " + g.label() + " is too large to enumerate", order, cap);

  std::vector<MonomialMatrix> out;
  out.reserve(order);
  std::vector<int> perm(static_cast<std::size_t>(g.n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> exps(static_cast<std::size_t>(g.n), 0);
    while (true) {
      long s = 0;
      for (int e : exps) s += e;
      if (s % g.p == 0) out.emplace_back(g.m, perm, exps);
      // odometer increment, last index fastest
      int k = g.n - 1;
      while (k >= 0 && ++exps[static_cast<std::size_t>(k)] == g.m) exps[static_cast<std::size_t>(k--)] = 0;
      if (k < 0) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<MonomialMatrix> reflections(const GroupParams& g, std::size_t cap) {
  std::vector<MonomialMatrix> out;
  for (auto& w : enumerate_group(g, cap))
    if (fixed_space_dim(w) == g.n - 1) out.push_back(std::move(w));
  return out;
}

std::vector<ConjugacyClass> conjugacy_classes(const GroupParams& g, std::size_t cap) {
  const auto elements = enumerate_group(g, cap);
  std::vector<MonomialMatrix> inverses;
  inverses.reserve(elements.size());
  for (const auto& x : elements) inverses.push_back(x.inverse());

  std::vector<int> class_of(elements.size(), -1);
  std::vector<ConjugacyClass> classes;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (class_of[i] >= 0) continue;
    const int id = static_cast<int>(classes.size());
    ConjugacyClass cls;
    cls.representative = elements[i];
    for (std::size_t k = 0; k < elements.size(); ++k) {
      const auto y = elements[k] * elements[i] * inverses[k];
      const auto it = std::lower_bound(elements.begin(), elements.end(), y);
      const auto pos = static_cast<std::size_t>(it - elements.begin());
      if (class_of[pos] < 0) {
        class_of[pos] = id;
        cls.elements.push_back(y);
      }
    }
    std::sort(cls.elements.begin(), cls.elements.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<std::vector<MonomialMatrix>> reflection_classes(const GroupParams& g, std::size_t cap) {
  std::vector<std::vector<MonomialMatrix>> out;
  for (auto& cls : conjugacy_classes(g, cap))
    if (fixed_space_dim(cls.representative) == g.n - 1) out.push_back(std::move(cls.elements));
  return out;
}

int fixed_space_dim(const MonomialMatrix& w) {
  int count = 0;
  for (const auto& c : w.cycles())
    if (c.exponent == 0) ++count;
  return count;
}

CycloNumber det_char(const MonomialMatrix& w) {
  int transpositions = 0;
  for (const auto& c : w.cycles()) transpositions += static_cast<int>(c.indices.size()) - 1;
  auto det = zeta_pow(w.order(), w.exponent_sum());
  return transpositions % 2 == 0 ? det : -det;
}

std::vector<std::vector<CycloNumber>> dual_matrix(const MonomialMatrix& w) {
  const int n = w.rank();
  std::vector<std::vector<CycloNumber>> a(static_cast<std::size_t>(n),
                                          std::vector<CycloNumber>(static_cast<std::size_t>(n), CycloNumber(w.order())));
  for (int j = 0; j < n; ++j)
    a[static_cast<std::size_t>(w.perm()[static_cast<std::size_t>(j)])][static_cast<std::size_t>(j)] =
        zeta_pow(w.order(), -w.exps()[static_cast<std::size_t>(j)]);
  return a;
}

CycloNumber determinant(std::vector<std::vector<CycloNumber>> a) {
  const std::size_t n = a.size();
  CycloNumber det(n == 0 ? 1 : a[0][0].order(), 1L);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) return CycloNumber(det.order());
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    const CycloNumber inv = a[col][col].inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col].is_zero()) continue;
      const CycloNumber f = a[r][col] * inv;
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

CycloNumber ext_power_char(const MonomialMatrix& w, int i) {
  const int n = w.rank();
  if (i < 0 || i > n) throw UsageError("exterior power index out of range");
  if (i == 0) return CycloNumber(w.order(), 1L);
  const auto a = dual_matrix(w);
  CycloNumber total(w.order());
  // iterate over i-subsets via a selection mask
  std::vector<bool> mask(static_cast<std::size_t>(n), false);
  std::fill(mask.begin(), mask.begin() + i, true);
  do {
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < mask.size(); ++k)
      if (mask[k]) idx.push_back(k);
    std::vector<std::vector<CycloNumber>> minor(idx.size());
    for (std::size_t r = 0; r < idx.size(); ++r)
      for (std::size_t c = 0; c < idx.size(); ++c) minor[r].push_back(a[idx[r]][idx[c]]);
    total += determinant(std::move(minor));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return total;
}

}  // namespace cherednik
