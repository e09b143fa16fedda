#include "cherednik/lowest_weight.hpp"

#include <utility>

#include "cherednik/error.hpp"

namespace cherednik {

namespace {

// Key of the stacked map C[h]_k -> C[h]_{k-1}^n: tag a + 1 for the image under
// T_{y_a}, tag 0 for the source monomial. Image keys sort above source keys,
// so rows that lose their image part during elimination are kernel vectors.
using StackKey = std::pair<int, Monomial>;

}  // namespace

GradedSubspace singular_kernel(DunklEngine& engine, int degree) {
  const auto& g = engine.group();
  Echelon<StackKey> ech;
  for (const auto& mono : monomials_of_degree(g.n, degree)) {
    Echelon<StackKey>::Vec row;
    for (int a = 0; a < g.n; ++a)
      for (const auto& [m, v] : engine.apply(a, mono).terms()) row.emplace(StackKey{a + 1, m}, v);
    row.emplace(StackKey{0, mono}, CycloNumber(g.m, 1L));
    ech.insert(row);
  }
  GradedSubspace kernel(g.n, g.m, degree);
  for (const auto& row : ech.rows()) {
    if (row.begin()->first.first != 0) continue;
    Poly f(g.n, g.m);
    for (const auto& [key, v] : row) f.add_term(key.second, v);
    kernel.insert(f);
  }
  return kernel;
}

SingularSpace find_singular_space(const GroupParams& g, const CherednikParams& c) {
  if (c.relation != Relation::main) throw UsageError("singular vectors are computed for main-relation parameters");
  DunklEngine engine(g, c);
  SingularSpace s;
  s.group = g;
  s.params = c;
  s.degree = g.singular_degree();
  s.space = singular_kernel(engine, s.degree);
  if (static_cast<int>(s.space.dim()) != g.n)
    throw GenericityError("singular space in degree " + std::to_string(s.degree) + " has dimension " +
                          std::to_string(s.space.dim()) + ", expected " + std::to_string(g.n) + " (" + c.to_string() + ")");
  return s;
}

SingularSpace find_singular_space(const GroupParams& g, std::uint64_t seed, int max_attempts) {
  ParamSampler sampler(seed);
  std::string log;
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    const auto c = sampler.next(g, Relation::main);
    try {
      auto s = find_singular_space(g, c);
      s.attempts = attempt;
      return s;
    } catch (const GenericityError& e) {
      log += std::string(log.empty() ? "" : "; ") + e.what();
    }
  }
  throw GenericityError("no generic parameters after " + std::to_string(max_attempts) + " attempts: " + log);
}

std::vector<ClassTrace> singular_character(const SingularSpace& s) {
  std::vector<ClassTrace> out;
  for (const auto& cls : conjugacy_classes(s.group)) {
    ClassTrace ct;
    ct.representative = cls.representative;
    ct.class_size = cls.elements.size();
    ct.value = s.space.trace(cls.representative);
    ct.expected = ext_power_char(cls.representative, 1);
    ct.ok = ct.value == ct.expected;
    out.push_back(std::move(ct));
  }
  return out;
}

std::size_t QuotientModule::ideal_dim(int k) const {
  if (k < 0) return 0;
  if (k > top_degree()) return monomial_count(g_.n, k);
  return ideal_.at(static_cast<std::size_t>(k)).dim();
}

std::size_t QuotientModule::dim(int k) const {
  if (k < 0 || k > top_degree()) return 0;
  return monomial_count(g_.n, k) - ideal_dim(k);
}

std::size_t QuotientModule::total_dim() const {
  std::size_t total = 0;
  for (int k = 0; k <= top_degree(); ++k) total += dim(k);
  return total;
}

CycloNumber QuotientModule::trace(const MonomialMatrix& w, int k) const {
  if (k < 0 || k > top_degree()) return CycloNumber(g_.m);
  return polynomial_trace(w, g_.n, k) - ideal_.at(static_cast<std::size_t>(k)).trace(w);
}

Poly QuotientModule::reduce(const Poly& f) const {
  if (f.is_zero()) return f;
  if (!f.is_homogeneous()) throw UsageError("reduce expects a homogeneous polynomial");
  const int k = f.degree();
  if (k > top_degree()) return Poly(g_.n, g_.m);
  return ideal_.at(static_cast<std::size_t>(k)).reduce(f);
}

QuotientModule build_quotient(const SingularSpace& s) {
  QuotientModule q;
  q.g_ = s.group;
  q.c_ = s.params;
  q.r_ = s.degree;
  const int n = s.group.n;
  const int m = s.group.m;
  const int top = n * (q.r_ - 1) + 1;
  DunklEngine engine(s.group, s.params);
  for (int k = 0; k <= top; ++k) {
    GradedSubspace ik(n, m, k);
    if (k == q.r_) {
      for (const auto& f : s.space.basis()) ik.insert(f);
    } else if (k > q.r_) {
      for (const auto& b : q.ideal_.back().basis())
        for (int i = 0; i < n; ++i) ik.insert(b.times_monomial(Monomial::variable(i)));
    }
    if (k > 0 && q.dunkl_stable_) {
      const auto& below = q.ideal_.back();
      for (const auto& b : ik.basis()) {
        for (int a = 0; a < n && q.dunkl_stable_; ++a)
          if (!below.contains(engine.apply(a, b))) q.dunkl_stable_ = false;
        if (!q.dunkl_stable_) break;
      }
    }
    q.ideal_.push_back(std::move(ik));
  }
  return q;
}

CycloNumber polynomial_trace(const MonomialMatrix& w, int nvars, int k) {
  CycloNumber total(w.order());
  for (const auto& mono : monomials_of_degree(nvars, k)) {
    const auto sm = act(w, mono);
    if (sm.mono == mono) total += sm.coeff;
  }
  return total;
}

HilbertSeries quotient_hilbert(const QuotientModule& q) {
  HilbertSeries h;
  h.shift = q.group().grading_shift();
  int last = q.top_degree();
  while (last >= 0 && q.dim(last) == 0) --last;
  for (int k = 0; k <= last; ++k) h.coeffs.push_back(static_cast<long>(q.dim(k)));
  return h;
}

HilbertSeries expected_hilbert(const GroupParams& g) {
  HilbertSeries h;
  h.shift = g.grading_shift();
  const int r = g.singular_degree();
  h.coeffs = {1};
  for (int i = 0; i < g.n; ++i) {
    std::vector<long> next(h.coeffs.size() + static_cast<std::size_t>(r) - 1, 0);
    for (std::size_t a = 0; a < h.coeffs.size(); ++a)
      for (int b = 0; b < r; ++b) next[a + static_cast<std::size_t>(b)] += h.coeffs[a];
    h.coeffs = std::move(next);
  }
  return h;
}

CycloSeries quotient_equiv_char(const QuotientModule& q, const MonomialMatrix& w) {
  CycloSeries s(q.group().m);
  for (int k = 0; k <= q.top_degree(); ++k) s.set_coeff(k, q.trace(w, k));
  return s;
}

CycloSeries det_ratio_series(const MonomialMatrix& w, int r, int max_degree) {
  return CycloSeries::divide(det_one_minus_t(w, r), det_one_minus_t(w, 1), max_degree);
}

CycloSeries twisted_det_ratio_series(const MonomialMatrix& w, int r, int max_degree) {
  std::vector<int> e = w.exps();
  for (auto& x : e) x = static_cast<int>(mod_floor(static_cast<long>(x) * r, w.order()));
  const MonomialMatrix twisted(w.order(), w.perm(), std::move(e));
  return CycloSeries::divide(det_one_minus_t(twisted, r), det_one_minus_t(w, 1), max_degree);
}

long character_limit(const MonomialMatrix& w, const GroupParams& g) {
  long v = 1;
  for (int i = 0; i < fixed_space_dim(w); ++i) v *= g.singular_degree();
  return v;
}

bool bgg_identity_check(const MonomialMatrix& w, int r) {
  const int m = w.order();
  CycloSeries alt(m);
  for (int i = 0; i <= w.rank(); ++i) {
    CycloNumber c = ext_power_char(w, i);
    if (i % 2 == 1) c = -c;
    alt.set_coeff(i * r, c);
  }
  return det_one_minus_t(w, r) == alt;
}

CycloSeries ce_tensor_char(const MonomialMatrix& w, int r) {
  const int m = w.order();
  CycloSeries out(m, {CycloNumber(m, 1L)});
  for (const auto& c : w.cycles()) {
    const int len = static_cast<int>(c.indices.size());
    // a cycle only fixes tensors with equal exponents along it
    CycloSeries factor(m);
    for (int k = 0; k < r; ++k) factor.set_coeff(len * k, zeta_pow(m, -static_cast<long>(c.exponent) * k));
    out = out * factor;
  }
  return out;
}

CoinvariantReport coinvariant_image_check(const QuotientModule& q) {
  const auto& g = q.group();
  const int n = g.n;
  const int m = g.m;
  CoinvariantReport rep;
  rep.vbar_degree = g.grading_shift();

  const auto elements = enumerate_group(g);
  const auto classes = conjugacy_classes(g);
  const Rational inv_order(1, static_cast<long>(elements.size()));

  // (a) multiplicity of the character det_{h*} = conj(det_h) per degree
  long total_mult = 0;
  for (int k = 0; k <= q.top_degree(); ++k) {
    CycloNumber acc(m);
    for (const auto& cls : classes) {
      CycloNumber t = q.trace(cls.representative, k) * det_char(cls.representative);
      t *= Rational(static_cast<long>(cls.elements.size()));
      acc += t;
    }
    acc *= inv_order;
    if (!acc.is_rational() || acc.rational_value().get_den() != 1)
      throw VerificationError("non-integral character multiplicity in degree " + std::to_string(k));
    const long mult = acc.rational_value().get_num().get_si();
    rep.top_wedge_multiplicity.push_back(mult);
    total_mult += mult;
  }
  const bool located = rep.vbar_degree <= q.top_degree() &&
                       rep.top_wedge_multiplicity[static_cast<std::size_t>(rep.vbar_degree)] == 1;
  rep.clause_a = located && total_mult == 1;
  if (!rep.clause_a) rep.failures.push_back("(a) wedge^n h* does not occur exactly once, in degree n + m C(n,2)");

  // projector sum_w det_h(w) w onto the det_{h*}-isotypic part
  rep.vbar = Poly(n, m);
  if (located) {
    for (const auto& mono : monomials_of_degree(n, rep.vbar_degree)) {
      Poly f(n, m);
      for (const auto& w : elements) {
        const auto sm = act(w, mono);
        f.add_term(sm.mono, sm.coeff * det_char(w));
      }
      f = q.reduce(f);
      if (!f.is_zero()) {
        const CycloNumber lead_inv = f.terms().begin()->second.inverse();
        rep.vbar = f.scaled(lead_inv);
        break;
      }
    }
  }
  if (rep.vbar.is_zero()) {
    rep.failures.push_back("(a) projection onto wedge^n h* vanished in degree n + m C(n,2)");
    rep.clause_a = false;
    return rep;
  }

  // (b) fundamental invariants annihilate vbar modulo I
  rep.clause_b = true;
  for (const auto& f : fundamental_invariants(g))
    if (!q.reduce(f * rep.vbar).is_zero()) rep.clause_b = false;
  if (!rep.clause_b) rep.failures.push_back("(b) some fundamental invariant does not annihilate vbar");

  // (c) graded dimensions of C[h] . vbar
  rep.expected_dims = coinvariant_hilbert(g);
  for (int j = 0; rep.vbar_degree + j <= q.top_degree(); ++j) {
    GradedSubspace span(n, m, rep.vbar_degree + j);
    for (const auto& mono : monomials_of_degree(n, j)) {
      const Poly f = q.reduce(rep.vbar.times_monomial(mono));
      if (!f.is_zero()) span.insert(f);
    }
    rep.orbit_dims.push_back(static_cast<long>(span.dim()));
  }
  while (!rep.orbit_dims.empty() && rep.orbit_dims.back() == 0) rep.orbit_dims.pop_back();
  rep.clause_c = rep.orbit_dims == rep.expected_dims;
  if (!rep.clause_c) rep.failures.push_back("(c) C[h] . vbar does not have the coinvariant Hilbert series");

  // (d) socle in shifted degree m C(n,2) + nd - n
  rep.socle_degree = static_cast<long>(m) * n * (n - 1) / 2 + static_cast<long>(n) * g.d - n;
  rep.socle_dim = rep.socle_degree < static_cast<long>(rep.orbit_dims.size())
                      ? rep.orbit_dims[static_cast<std::size_t>(rep.socle_degree)]
                      : 0;
  rep.clause_d = rep.socle_dim == 1 && static_cast<long>(rep.orbit_dims.size()) == rep.socle_degree + 1;
  if (!rep.clause_d) rep.failures.push_back("(d) socle does not survive with dimension 1");
  return rep;
}

}  // namespace cherednik
