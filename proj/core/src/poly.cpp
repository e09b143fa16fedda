#include "cherednik/poly.hpp"

#include <algorithm>
#include <sstream>

#include "cherednik/error.hpp"

namespace cherednik {

Monomial Monomial::from_exponents(std::span<const int> e) {
  if (static_cast<int>(e.size()) > kMaxVars) throw UsageError("at most 7 variables are supported");
  Monomial out;
  int total = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0) throw UsageError("negative exponent");
    total += e[i];
    if (total > kMaxDegree) throw UsageError("monomial degree exceeds 255");
    out.key_ |= static_cast<std::uint64_t>(e[i]) << shift(static_cast<int>(i));
  }
  out.key_ |= static_cast<std::uint64_t>(total) << 56;
  return out;
}

Monomial Monomial::variable(int i) {
  if (i < 0 || i >= kMaxVars) throw UsageError("variable index out of range");
  Monomial out;
  out.key_ = (std::uint64_t{1} << 56) | (std::uint64_t{1} << shift(i));
  return out;
}

std::vector<int> Monomial::exponents(int nvars) const {
  std::vector<int> e(static_cast<std::size_t>(nvars));
  for (int i = 0; i < nvars; ++i) e[static_cast<std::size_t>(i)] = exponent(i);
  return e;
}

Monomial operator*(Monomial a, Monomial b) {
  if (a.degree() + b.degree() > Monomial::kMaxDegree) throw UsageError("monomial degree exceeds 255");
  // no per-variable carry is possible since each exponent is bounded by the degree
  Monomial out;
  out.key_ = a.key_ + b.key_;
  return out;
}

Monomial Monomial::divided_by_variable(int i) const {
  if (exponent(i) == 0) throw VerificationError("monomial is not divisible by the variable");
  Monomial out;
  out.key_ = key_ - variable(i).key_;
  return out;
}

bool Monomial::divisible_by(Monomial other) const {
  for (int i = 0; i < kMaxVars; ++i)
    if (exponent(i) < other.exponent(i)) return false;
  return true;
}

std::string Monomial::to_string(int nvars) const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < nvars; ++i) {
    const int e = exponent(i);
    if (e == 0) continue;
    if (!first) os << "*";
    first = false;
    os << "x" << (i + 1);
    if (e > 1) os << "^" << e;
  }
  if (first) os << "1";
  return os.str();
}

Poly Poly::constant(int nvars, int order, const CycloNumber& c) { return monomial(nvars, order, Monomial(), c); }

Poly Poly::monomial(int nvars, int order, Monomial mono, const CycloNumber& c) {
  Poly f(nvars, order);
  f.add_term(mono, c);
  return f;
}

Poly Poly::variable(int nvars, int order, int i) {
  if (i < 0 || i >= nvars) throw UsageError("variable index out of range");
  return monomial(nvars, order, Monomial::variable(i), CycloNumber(order, 1L));
}

Poly Poly::from_terms(int nvars, int order, Terms terms) {
  Poly f(nvars, order);
  f.terms_ = std::move(terms);
  std::erase_if(f.terms_, [](const auto& kv) { return kv.second.is_zero(); });
  return f;
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = terms_.begin()->first.degree();
  return terms_.rbegin()->first.degree() == d;
}

CycloNumber Poly::coeff(Monomial mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? CycloNumber(order_) : it->second;
}

void Poly::add_term(Monomial mono, const CycloNumber& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Poly::add_scaled(const Poly& other, const CycloNumber& c) {
  if (c.is_zero()) return;
  for (const auto& [mono, v] : other.terms_) add_term(mono, c * v);
}

Poly& Poly::operator+=(const Poly& other) {
  for (const auto& [mono, v] : other.terms_) add_term(mono, v);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  for (const auto& [mono, v] : other.terms_) add_term(mono, -v);
  return *this;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [mono, v] : out.terms_) v = -v;
  return out;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out(a.nvars_, std::max(a.order_, b.order_));
  for (const auto& [ma, va] : a.terms_)
    for (const auto& [mb, vb] : b.terms_) out.add_term(ma * mb, va * vb);
  return out;
}

Poly Poly::scaled(const CycloNumber& c) const {
  if (c.is_zero()) return Poly(nvars_, order_);
  Poly out = *this;
  for (auto& [mono, v] : out.terms_) v *= c;
  return out;
}

Poly Poly::times_monomial(Monomial mono) const {
  Poly out(nvars_, order_);
  for (const auto& [m, v] : terms_) out.terms_.emplace_hint(out.terms_.end(), m * mono, v);
  return out;
}

Poly Poly::divide_exact_linear(int i, int j, const CycloNumber& c) const {
  // Group terms by the exponents of the other variables; each group is a
  // binary form in (x_i, x_j) divided by synthetic division.
  struct Group {
    std::vector<int> rest;
    std::map<int, CycloNumber> by_power;  // exponent of x_i -> coefficient
  };
  std::map<std::pair<std::uint64_t, int>, Group> groups;
  for (const auto& [mono, v] : terms_) {
    auto e = mono.exponents(nvars_);
    const int s = e[static_cast<std::size_t>(i)] + e[static_cast<std::size_t>(j)];
    const int ei = e[static_cast<std::size_t>(i)];
    e[static_cast<std::size_t>(i)] = 0;
    e[static_cast<std::size_t>(j)] = 0;
    const auto rest_key = Monomial::from_exponents(e).key();
    auto& grp = groups[{rest_key, s}];
    grp.rest = std::move(e);
    grp.by_power.emplace(ei, v);
  }
  Poly out(nvars_, order_);
  for (auto& [key, grp] : groups) {
    const int s = key.second;
    const auto g = [&](int k) {
      auto it = grp.by_power.find(k);
      return it == grp.by_power.end() ? CycloNumber(order_) : it->second;
    };
    if (s == 0) throw VerificationError("linear division left a remainder");
    // h_{s-1} = g_s, h_{k-1} = g_k + c h_k, and g_0 = -c h_0 must hold
    std::vector<CycloNumber> h(static_cast<std::size_t>(s), CycloNumber(order_));
    h[static_cast<std::size_t>(s - 1)] = g(s);
    for (int k = s - 1; k >= 1; --k) {
      h[static_cast<std::size_t>(k - 1)] = g(k);
      h[static_cast<std::size_t>(k - 1)].add_product(c, h[static_cast<std::size_t>(k)]);
    }
    CycloNumber check = g(0);
    check.add_product(c, h[0]);
    if (!check.is_zero()) throw VerificationError("linear division left a remainder");
    auto e = grp.rest;
    for (int k = 0; k < s; ++k) {
      e[static_cast<std::size_t>(i)] = k;
      e[static_cast<std::size_t>(j)] = s - 1 - k;
      out.add_term(Monomial::from_exponents(e), h[static_cast<std::size_t>(k)]);
    }
  }
  return out;
}

Poly Poly::divide_exact_variable(int i) const {
  Poly out(nvars_, order_);
  for (const auto& [mono, v] : terms_) {
    if (mono.exponent(i) == 0) throw VerificationError("division by a variable left a remainder");
    out.terms_.emplace(mono.divided_by_variable(i), v);
  }
  return out;
}

Poly Poly::derivative(int i) const {
  Poly out(nvars_, order_);
  for (const auto& [mono, v] : terms_) {
    const int e = mono.exponent(i);
    if (e == 0) continue;
    out.terms_.emplace(mono.divided_by_variable(i), v * Rational(e));
  }
  return out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, v] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << v.to_string() << ")*" << mono.to_string(nvars_);
  }
  return os.str();
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end(); ++ia, ++ib)
    if (ia->first != ib->first || !(ia->second == ib->second)) return false;
  return true;
}

std::vector<Monomial> monomials_of_degree(int nvars, int k) {
  std::vector<Monomial> out;
  std::vector<int> e(static_cast<std::size_t>(nvars), 0);
  // descending grlex: largest x_1 exponent first
  auto rec = [&](auto&& self, int i, int remaining) -> void {
    if (i == nvars - 1) {
      e[static_cast<std::size_t>(i)] = remaining;
      out.push_back(Monomial::from_exponents(e));
      return;
    }
    for (int v = remaining; v >= 0; --v) {
      e[static_cast<std::size_t>(i)] = v;
      self(self, i + 1, remaining - v);
    }
  };
  if (nvars > 0 && k >= 0) rec(rec, 0, k);
  return out;
}

std::size_t monomial_count(int nvars, int k) {
  if (k < 0) return 0;
  // C(k + n - 1, n - 1), computed incrementally to stay exact
  std::size_t c = 1;
  for (int i = 1; i < nvars; ++i) c = c * static_cast<std::size_t>(k + i) / static_cast<std::size_t>(i);
  return c;
}

ScaledMonomial act(const MonomialMatrix& w, Monomial mono) {
  const int n = w.rank();
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  long scale = 0;
  for (int i = 0; i < n; ++i) {
    const int ei = mono.exponent(i);
    if (ei == 0) continue;
    e[static_cast<std::size_t>(w.perm()[static_cast<std::size_t>(i)])] = ei;
    scale -= static_cast<long>(ei) * w.exps()[static_cast<std::size_t>(i)];
  }
  return {zeta_pow(w.order(), scale), Monomial::from_exponents(e)};
}

Poly act(const MonomialMatrix& w, const Poly& f) {
  Poly out(f.nvars(), std::max(f.order(), w.order()));
  for (const auto& [mono, v] : f.terms()) {
    auto sm = act(w, mono);
    out.add_term(sm.mono, v * sm.coeff);
  }
  return out;
}

std::vector<Poly> fundamental_invariants(const GroupParams& g) {
  std::vector<Poly> out;
  const int n = g.n;
  // e_k(x_1^m, ..., x_n^m): one monomial per k-subset
  for (int k = 1; k < n; ++k) {
    Poly f(n, g.m);
    std::vector<bool> mask(static_cast<std::size_t>(n), false);
    std::fill(mask.begin(), mask.begin() + k, true);
    do {
      std::vector<int> e(static_cast<std::size_t>(n), 0);
      for (int i = 0; i < n; ++i)
        if (mask[static_cast<std::size_t>(i)]) e[static_cast<std::size_t>(i)] = g.m;
      f.add_term(Monomial::from_exponents(e), CycloNumber(g.m, 1L));
    } while (std::prev_permutation(mask.begin(), mask.end()));
    out.push_back(std::move(f));
  }
  std::vector<int> e(static_cast<std::size_t>(n), g.d);
  out.push_back(Poly::monomial(n, g.m, Monomial::from_exponents(e), CycloNumber(g.m, 1L)));
  return out;
}

std::vector<long> coinvariant_hilbert(const GroupParams& g) {
  // prod_i (1 + t + ... + t^{d_i - 1})
  std::vector<long> out{1};
  std::vector<int> degrees;
  for (int k = 1; k < g.n; ++k) degrees.push_back(k * g.m);
  degrees.push_back(g.n * g.d);
  for (int di : degrees) {
    std::vector<long> next(out.size() + static_cast<std::size_t>(di) - 1, 0);
    for (std::size_t a = 0; a < out.size(); ++a)
      for (int b = 0; b < di; ++b) next[a + static_cast<std::size_t>(b)] += out[a];
    out = std::move(next);
  }
  return out;
}

bool GradedSubspace::insert(const Poly& f) {
  if (f.is_zero()) return false;
  if (!f.is_homogeneous() || f.degree() != degree_) throw UsageError("polynomial is not homogeneous of the subspace degree");
  return echelon_.insert(f.terms());
}

Poly GradedSubspace::reduce(const Poly& f) const { return Poly::from_terms(nvars_, order_, echelon_.reduce(f.terms())); }

std::vector<Poly> GradedSubspace::basis() const {
  std::vector<Poly> out;
  for (auto& row : echelon_.canonical_rows()) out.push_back(Poly::from_terms(nvars_, order_, std::move(row)));
  return out;
}

CycloNumber GradedSubspace::trace(const MonomialMatrix& w) const {
  // Rows are fully reduced, so the coordinate of w.b_j along b_j is the
  // coefficient of w.b_j at pivot_j.
  CycloNumber total(order_);
  for (const auto& [pivot, idx] : echelon_.pivots()) {
    const auto& row = echelon_.rows()[idx];
    for (const auto& [mono, v] : row) {
      auto sm = act(w, mono);
      if (sm.mono == pivot) total.add_product(v, sm.coeff);
    }
  }
  return total;
}

std::size_t span_rank(const std::vector<Poly>& vectors) {
  PolyEchelon ech;
  for (const auto& f : vectors) {
    if (!f.is_homogeneous()) throw UsageError("span_rank expects homogeneous polynomials");
    ech.insert(f.terms());
  }
  return ech.rank();
}

std::size_t ideal_dim_in_degree(const std::vector<Poly>& gens, int k) {
  PolyEchelon ech;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) throw UsageError("ideal generators must be homogeneous");
    const int shift = k - g.degree();
    if (shift < 0) continue;
    for (const auto& mono : monomials_of_degree(g.nvars(), shift)) ech.insert(g.times_monomial(mono).terms());
  }
  return ech.rank();
}

}  // namespace cherednik
