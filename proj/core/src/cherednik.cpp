#include "cherednik/cherednik.hpp"

#include <sstream>

#include "cherednik/error.hpp"

namespace cherednik {

Rational CherednikParams::kappa_at(int j, int d) const {
  const long r = mod_floor(j, d);
  if (r == 0) return 0;
  return kappa.at(static_cast<std::size_t>(r - 1));
}

Rational CherednikParams::relation_value(const GroupParams& g) const {
  return kappa_at(1, g.d) * g.d + kappa00 * (g.m * (g.n - 1));
}

Rational relation_target(const GroupParams& g, Relation relation) {
  switch (relation) {
    case Relation::unit: return -1;
    case Relation::main: return Rational(-1 - g.m * (g.n - 1) - g.d);
    case Relation::none: break;
  }
  throw UsageError("no target for relation none");
}

void CherednikParams::validate(const GroupParams& g) const {
  if (static_cast<int>(kappa.size()) != g.d - 1)
    throw UsageError("expected " + std::to_string(g.d - 1) + " values k_1..k_{d-1}, got " + std::to_string(kappa.size()));
  if (kappa00_odd.has_value() != kappa00_even.has_value())
    throw UsageError("k00_odd and k00_even must be given together");
  if (kappa00_odd) {
    if (!g.two_sigma_classes) throw UsageError("separate sigma-class parameters only exist for n = 2, p even");
    if (*kappa00_odd != *kappa00_even) throw UsageError("k00_odd must equal k00_even");
    if (*kappa00_odd != kappa00) throw UsageError("k00_odd must equal k00");
  }
  if (relation != Relation::none && relation_value(g) != relation_target(g, relation))
    throw UsageError("parameters do not satisfy the " + cherednik::to_string(relation) + " relation");
}

CherednikParams CherednikParams::zero(const GroupParams& g) {
  CherednikParams c;
  c.kappa00 = 0;
  c.kappa.assign(static_cast<std::size_t>(g.d - 1), Rational(0));
  return c;
}

std::string CherednikParams::to_string() const {
  std::ostringstream os;
  os << "k00=" << kappa00.get_str();
  for (std::size_t i = 0; i < kappa.size(); ++i) os << " k" << (i + 1) << "=" << kappa[i].get_str();
  os << " relation=" << cherednik::to_string(relation);
  return os.str();
}

Rational ParamSampler::random_rational() {
  constexpr std::uint64_t kMask = (std::uint64_t{1} << 30) - 1;
  long num = 0;
  while (num == 0) {
    const std::uint64_t bits = rng_();
    num = static_cast<long>(bits & kMask);
    if ((bits >> 30) & 1U) num = -num;
  }
  const long den = static_cast<long>(rng_() & kMask) + 1;
  Rational q(num, den);
  q.canonicalize();
  return q;
}

CherednikParams ParamSampler::next(const GroupParams& g, Relation relation) {
  CherednikParams c;
  c.relation = relation;
  c.kappa00 = random_rational();
  c.kappa.resize(static_cast<std::size_t>(g.d - 1));
  for (std::size_t i = 0; i < c.kappa.size(); ++i) c.kappa[i] = random_rational();
  if (relation != Relation::none)
    c.kappa[0] = (relation_target(g, relation) - c.kappa00 * (g.m * (g.n - 1))) / g.d;
  if (g.two_sigma_classes) {
    c.kappa00_odd = c.kappa00;
    c.kappa00_even = c.kappa00;
  }
  c.validate(g);
  return c;
}

void GroupAlgebraElement::add(const MonomialMatrix& w, const CycloNumber& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly GroupAlgebraElement::apply(const Poly& f) const {
  Poly out(f.nvars(), std::max(f.order(), order_));
  for (const auto& [w, c] : terms_) out.add_scaled(act(w, f), c);
  return out;
}

CycloNumber GroupAlgebraElement::trace_ext_power(int i) const {
  CycloNumber total(order_);
  for (const auto& [w, c] : terms_) total.add_product(c, ext_power_char(w, i));
  return total;
}

CycloNumber GroupAlgebraElement::trivial_value() const {
  CycloNumber total(order_);
  for (const auto& [w, c] : terms_) total += c;
  return total;
}

DunklEngine::DunklEngine(const GroupParams& g, const CherednikParams& c)
    : g_(g), c_(c), kappa00_(g.m, c.kappa00), memo_(static_cast<std::size_t>(g.n)) {
  c_.validate(g_);
  if (g_.n > Monomial::kMaxVars) throw UsageError("at most 7 variables are supported");
  for (int j = 0; j < g_.d; ++j) kappa_.emplace_back(g_.m, c_.kappa_at(j, g_.d));
}

const Poly& DunklEngine::apply(int a, Monomial mono) {
  auto& memo = memo_.at(static_cast<std::size_t>(a));
  auto it = memo.find(mono.key());
  if (it == memo.end()) it = memo.emplace(mono.key(), compute(a, mono)).first;
  return it->second;
}

Poly DunklEngine::apply(int a, const Poly& f) {
  Poly out(g_.n, g_.m);
  for (const auto& [mono, v] : f.terms()) out.add_scaled(apply(a, mono), v);
  return out;
}

Poly DunklEngine::compute(int a, Monomial mono) const {
  const int m = g_.m;
  const int n = g_.n;
  const Poly f = Poly::monomial(n, m, mono, CycloNumber(m, 1L));
  Poly out = f.derivative(a);

  // cyclic hyperplane x_a: (1/x_a) sum_q k_q sum_r eps^{prq} s_a^{pr} f
  Poly cyclic(n, m);
  for (int q = 1; q < g_.d; ++q) {
    if (kappa_[static_cast<std::size_t>(q)].is_zero()) continue;
    for (int r = 0; r < g_.d; ++r) {
      const auto s = MonomialMatrix::diagonal(m, n, a, g_.p * r);
      cyclic.add_scaled(act(s, f), kappa_[static_cast<std::size_t>(q)] * zeta_pow(m, static_cast<long>(g_.p) * r * q));
    }
  }
  out += cyclic.divide_exact_variable(a);

  // hyperplanes x_i - eps^l x_j through a
  if (!kappa00_.is_zero()) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (a != i && a != j) continue;
        for (int l = 0; l < m; ++l) {
          const auto sigma = MonomialMatrix::sigma(m, n, i, j, l);
          const CycloNumber el = zeta_pow(m, l);
          const Poly diff = f - act(sigma, f);
          if (diff.is_zero()) continue;
          const CycloNumber pairing = (a == i) ? CycloNumber(m, 1L) : -el;
          out.add_scaled(diff.divide_exact_linear(i, j, el), pairing * kappa00_);
        }
      }
    }
  }
  return out;
}

GroupAlgebraElement commutator_element(int a, int b, const GroupParams& g, const CherednikParams& c) {
  const int m = g.m;
  const int n = g.n;
  GroupAlgebraElement out(m);
  if (a == b) {
    out.add(MonomialMatrix::identity(m, n), CycloNumber(m, 1L));
    for (int j = 0; j < g.d; ++j) {
      // kappa_at(d) = kappa_at(0) = 0
      const Rational diff = c.kappa_at(j + 1, g.d) - c.kappa_at(j, g.d);
      if (diff == 0) continue;
      for (int r = 0; r < g.d; ++r)
        out.add(MonomialMatrix::diagonal(m, n, a, g.p * r), zeta_pow(m, static_cast<long>(g.p) * r * j) * diff);
    }
  }
  const CycloNumber k00(m, c.kappa00);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int l = 0; l < m; ++l) {
        const CycloNumber left = CycloNumber(m, static_cast<long>(i == a)) - zeta_pow(m, l) * Rational(j == a ? 1 : 0);
        const CycloNumber right = CycloNumber(m, static_cast<long>(i == b)) - zeta_pow(m, -l) * Rational(j == b ? 1 : 0);
        out.add(MonomialMatrix::sigma(m, n, i, j, l), left * right * k00);
      }
    }
  }
  return out;
}

bool commutator_check(int a, int b, const Poly& f, DunklEngine& engine) {
  const auto& g = engine.group();
  const Poly xb = Poly::variable(g.n, g.m, b);
  const Poly lhs = engine.apply(a, xb * f) - xb * engine.apply(a, f);
  const Poly rhs = commutator_element(a, b, g, engine.params()).apply(f);
  return lhs == rhs;
}

CherednikParams EmbeddedParams::as_params() const {
  CherednikParams c;
  c.kappa00 = mu00;
  c.kappa.assign(mu.begin() + 1, mu.end());
  c.relation = Relation::none;
  return c;
}

EmbeddedParams parameter_embed(const GroupParams& g, const CherednikParams& c) {
  EmbeddedParams e;
  e.ambient = GroupParams::make(g.m, 1, g.n);
  e.mu00 = c.kappa00;
  e.mu.assign(static_cast<std::size_t>(g.m), Rational(0));
  for (int s = 0; s < g.p; ++s)
    for (int t = 1; t < g.d; ++t) e.mu[static_cast<std::size_t>(s * g.d + t)] = c.kappa_at(t, g.d) / g.p;
  return e;
}

GroupAlgebraElement z_element(const GroupParams& g, const CherednikParams& c) {
  const int m = g.m;
  const int n = g.n;
  GroupAlgebraElement z(m);
  for (int i = 0; i < n; ++i)
    for (int t = 1; t < g.d; ++t)
      for (int j = 0; j < g.d; ++j)
        z.add(MonomialMatrix::diagonal(m, n, i, g.p * j),
              zeta_pow(m, static_cast<long>(g.p) * t * j) * c.kappa_at(t, g.d));
  const CycloNumber k00(m, c.kappa00);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int r = 0; r < m; ++r) {
        z.add(MonomialMatrix::identity(m, n), k00);
        z.add(MonomialMatrix::sigma(m, n, i, j, r), -k00);
      }
    }
  }
  return z;
}

namespace {

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

}  // namespace

Rational z_scalar_closed(int i, const GroupParams& g, const CherednikParams& c) {
  if (i < 0 || i > g.n) throw UsageError("exterior power index out of range");
  return Rational(i) * (c.kappa_at(1, g.d) * g.d + c.kappa00 * (g.m * (g.n - 1)));
}

CycloNumber z_scalar_direct(int i, const GroupParams& g, const CherednikParams& c) {
  if (i < 0 || i > g.n) throw UsageError("exterior power index out of range");
  CycloNumber tr = z_element(g, c).trace_ext_power(i);
  tr *= make_rational(1, binomial(g.n, i));
  return tr;
}

Rational z_scalar(int i, const GroupParams& g, const CherednikParams& c) {
  const Rational closed = z_scalar_closed(i, g, c);
  const CycloNumber direct = z_scalar_direct(i, g, c);
  if (!(direct == CycloNumber(g.m, closed)))
    throw VerificationError("z scalar mismatch on exterior power " + std::to_string(i) + ": closed " + closed.get_str() +
                            ", trace " + direct.to_string());
  return closed;
}

Rational euler_eigenvalue(int k, int i, const GroupParams& g, const CherednikParams& c) {
  return Rational(k) - z_scalar(i, g, c);
}

Rational shifted_euler_eigenvalue(int k, int i, const GroupParams& g, const CherednikParams& c) {
  return euler_eigenvalue(k, i, g, c) - g.grading_shift();
}

OneDimReport onedim_module_check(const GroupParams& g, const CherednikParams& c) {
  OneDimReport report;
  DunklEngine engine(g, c);
  const std::size_t n = static_cast<std::size_t>(g.n);
  report.value.assign(n, std::vector<CycloNumber>(n, CycloNumber(g.m)));
  report.dunkl_value.assign(n, std::vector<CycloNumber>(n, CycloNumber(g.m)));
  for (int a = 0; a < g.n; ++a) {
    for (int b = 0; b < g.n; ++b) {
      const auto sa = static_cast<std::size_t>(a);
      const auto sb = static_cast<std::size_t>(b);
      report.value[sa][sb] = commutator_element(a, b, g, c).trivial_value();
      const Poly t = engine.apply(a, Poly::variable(g.n, g.m, b));
      report.dunkl_value[sa][sb] = t.coeff(Monomial());
      // T_a(1) = 0, so T_a(x_b) is exactly the commutator applied to 1
      if (!(report.value[sa][sb] == report.dunkl_value[sa][sb])) report.routes_agree = false;
      if (!report.value[sa][sb].is_zero()) report.passed = false;
    }
  }
  if (!report.routes_agree) report.passed = false;
  return report;
}

}  // namespace cherednik
