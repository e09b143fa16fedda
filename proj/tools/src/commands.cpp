#include "cherednik_cli/commands.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <set>

#include "cherednik/cherednik.hpp"
#include "cherednik/error.hpp"
#include "cherednik/lowest_weight.hpp"
#include "cherednik/multipartition.hpp"

namespace cherednik::cli {

GroupParams RunConfig::group() const { return GroupParams::make(m, p, n); }

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

long ipow(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Lazily shared state so verify-all builds the quotient once.
class Session {
 public:
  Session(const RunConfig& cfg) : cfg_(cfg), g_(cfg.group()) {}

  const RunConfig& cfg() const { return cfg_; }
  const GroupParams& group() const { return g_; }
  Relation relation_or(Relation fallback) const { return cfg_.relation.value_or(fallback); }
  int max_degree_or(int fallback) const { return cfg_.max_degree.value_or(fallback); }

  const std::vector<ConjugacyClass>& classes() {
    if (!classes_) classes_ = conjugacy_classes(g_);
    return *classes_;
  }

  const SingularSpace& singular() {
    if (cfg_.relation && *cfg_.relation != Relation::main)
      throw UsageError("singular vectors in degree r exist only under the main relation");
    if (!singular_) singular_ = find_singular_space(g_, cfg_.seed);
    return *singular_;
  }

  const QuotientModule& quotient() {
    if (!quotient_) quotient_ = build_quotient(singular());
    return *quotient_;
  }

 private:
  RunConfig cfg_;
  GroupParams g_;
  std::optional<std::vector<ConjugacyClass>> classes_;
  std::optional<SingularSpace> singular_;
  std::optional<QuotientModule> quotient_;
};

Json params_json(const CherednikParams& c) {
  Json kappa = Json::array();
  for (const auto& k : c.kappa) kappa.push_back(to_json(k));
  return Json{{"relation", to_string(c.relation)}, {"kappa00", to_json(c.kappa00)}, {"kappa", kappa}};
}

Json class_json(const ConjugacyClass& cls) {
  return Json{{"representative", cls.representative.to_string()}, {"size", cls.elements.size()}};
}

CommandResult group_info(Session& s) {
  const auto& g = s.group();
  const long order = static_cast<long>(enumerate_group(g).size());
  const long refl = static_cast<long>(reflections(g).size());
  const long refl_classes = static_cast<long>(reflection_classes(g).size());
  const long expected_refl = g.n * (g.d - 1) + g.m * g.n * (g.n - 1) / 2;
  CommandResult r;
  r.ok = order == static_cast<long>(g.group_order()) && refl == expected_refl &&
         refl_classes == g.expected_reflection_classes();
  r.json = Json{{"group", g.label()},
                {"m", g.m},
                {"p", g.p},
                {"n", g.n},
                {"d", g.d},
                {"order", order},
                {"expected_order", g.group_order()},
                {"reflections", refl},
                {"expected_reflections", expected_refl},
                {"reflection_classes", refl_classes},
                {"expected_reflection_classes", g.expected_reflection_classes()},
                {"conjugacy_classes", s.classes().size()},
                {"two_sigma_classes", g.two_sigma_classes},
                {"singular_degree", g.singular_degree()},
                {"grading_shift", g.grading_shift()},
                {"ok", r.ok}};
  return r;
}

CommandResult reflections_cmd(Session& s) {
  const auto& g = s.group();
  const auto classes = reflection_classes(g);
  CommandResult r;
  r.table = Table{{"class", "element"}, {}};
  Json jc = Json::array();
  std::size_t count = 0;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    Json members = Json::array();
    for (const auto& w : classes[i]) {
      members.push_back(w.to_string());
      r.table->rows.push_back({std::to_string(i + 1), w.to_string()});
    }
    count += classes[i].size();
    jc.push_back(members);
  }
  const long expected = g.n * (g.d - 1) + g.m * g.n * (g.n - 1) / 2;
  r.ok = static_cast<long>(count) == expected && static_cast<int>(classes.size()) == g.expected_reflection_classes();
  r.json = Json{{"group", g.label()}, {"count", count}, {"expected", expected}, {"classes", jc}, {"ok", r.ok}};
  return r;
}

CommandResult classes_cmd(Session& s) {
  CommandResult r;
  r.table = Table{{"class", "representative", "size", "fixed_dim", "det"}, {}};
  Json jc = Json::array();
  int idx = 0;
  for (const auto& cls : s.classes()) {
    const auto& w = cls.representative;
    Json e = class_json(cls);
    e["fixed_dim"] = fixed_space_dim(w);
    e["det"] = to_json(det_char(w));
    jc.push_back(e);
    r.table->rows.push_back({std::to_string(++idx), w.to_string(), std::to_string(cls.elements.size()),
                             std::to_string(fixed_space_dim(w)), det_char(w).to_string()});
  }
  r.json = Json{{"group", s.group().label()}, {"count", s.classes().size()}, {"classes", jc}};
  return r;
}

CommandResult irrep_count_cmd(Session& s) {
  CommandResult r;
  const long irreps = irrep_count(s.group());
  const long classes = static_cast<long>(s.classes().size());
  r.ok = irreps == classes;
  r.json = Json{{"group", s.group().label()}, {"irrep_count", irreps}, {"conjugacy_classes", classes}, {"ok", r.ok}};
  return r;
}

std::vector<Multipartition> expected_non_kleshchev(const GroupParams& g) {
  std::vector<Multipartition> out;
  for (int i = 1; i <= g.p; ++i) out.push_back(rho(g.m, g.n, i));
  std::sort(out.begin(), out.end());
  return out;
}

Json mp_list(const std::vector<Multipartition>& v) {
  Json out = Json::array();
  for (const auto& l : v) out.push_back(l.to_string());
  return out;
}

CommandResult kleshchev_cmd(Session& s) {
  const auto& g = s.group();
  const Relation rel = s.relation_or(Relation::main);
  CommandResult r;
  r.table = Table{{"model", "multipartition"}, {}};
  const auto symbolic = non_kleshchev_list(ResidueModel::symbolic(g, rel));
  for (const auto& l : symbolic) r.table->rows.push_back({"symbolic", l.to_string()});
  r.json = Json{{"group", g.label()}, {"relation", to_string(rel)}, {"non_kleshchev", mp_list(symbolic)}};
  if (rel != Relation::none) {
    const auto c = ParamSampler(s.cfg().seed).next(g, rel);
    const auto sampled = non_kleshchev_list(ResidueModel::sampled(g, c.kappa00, c.kappa));
    for (const auto& l : sampled) r.table->rows.push_back({"sampled", l.to_string()});
    r.json["sampled"] = Json{{"seed", s.cfg().seed}, {"params", params_json(c)}, {"non_kleshchev", mp_list(sampled)}};
    if (rel == Relation::main) {
      const auto expected = expected_non_kleshchev(g);
      r.ok = symbolic == expected && sampled == expected;
      r.json["expected"] = mp_list(expected);
    }
  }
  r.json["ok"] = r.ok;
  return r;
}

CommandResult hecke_count_cmd(Session& s) {
  const auto& g = s.group();
  const Relation rel = s.relation_or(Relation::main);
  CommandResult r;
  const long hecke = hecke_simple_count(ResidueModel::symbolic(g, rel));
  const long irreps = irrep_count(g);
  const long classes = static_cast<long>(s.classes().size());
  r.json = Json{{"group", g.label()},
                {"relation", to_string(rel)},
                {"hecke_simple_count", hecke},
                {"irrep_count", irreps},
                {"conjugacy_classes", classes}};
  if (rel == Relation::main) {
    r.ok = hecke == irreps - 1 && irreps == classes;
    r.json["expected"] = irreps - 1;
  }
  r.json["ok"] = r.ok;
  return r;
}

Poly random_poly(std::mt19937_64& rng, const GroupParams& g, int max_degree) {
  const int phi = euler_phi(g.m);
  std::uniform_int_distribution<int> deg_dist(0, max_degree), coef_dist(-3, 3), var_dist(0, g.n - 1);
  std::uniform_int_distribution<int> nterms(1, 5);
  Poly f(g.n, g.m);
  const int terms = nterms(rng);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> e(static_cast<std::size_t>(g.n), 0);
    const int deg = deg_dist(rng);
    for (int k = 0; k < deg; ++k) ++e[static_cast<std::size_t>(var_dist(rng))];
    std::vector<Rational> c(static_cast<std::size_t>(phi));
    for (auto& v : c) v = coef_dist(rng);
    f.add_term(Monomial::from_exponents(e), CycloNumber(g.m, std::move(c)));
  }
  return f;
}

CommandResult dunkl_check(Session& s) {
  const auto& g = s.group();
  const int max_deg = s.max_degree_or(6);
  const int count = 20;
  const auto c = ParamSampler(s.cfg().seed).next(g, s.relation_or(Relation::none));
  DunklEngine engine(g, c);
  std::mt19937_64 rng(s.cfg().seed ^ 0x9e3779b97f4a7c15ULL);
  long comm_fail = 0, rel_fail = 0, checks = 0;
  for (int k = 0; k < count; ++k) {
    const Poly f = random_poly(rng, g, max_deg);
    for (int a = 0; a < g.n; ++a) {
      for (int b = 0; b < g.n; ++b) {
        ++checks;
        if (!commutator_check(a, b, f, engine)) ++rel_fail;
        if (a < b && engine.apply(a, engine.apply(b, f)) != engine.apply(b, engine.apply(a, f))) ++comm_fail;
      }
    }
  }
  CommandResult r;
  r.ok = comm_fail == 0 && rel_fail == 0;
  r.json = Json{{"group", g.label()},
                {"params", params_json(c)},
                {"polynomials", count},
                {"max_degree", max_deg},
                {"pairs_checked", checks},
                {"commutativity_failures", comm_fail},
                {"commutator_failures", rel_fail},
                {"ok", r.ok}};
  return r;
}

CommandResult embed_check(Session& s) {
  const auto& g = s.group();
  const int max_deg = s.max_degree_or(8);
  const auto c = ParamSampler(s.cfg().seed).next(g, s.relation_or(Relation::none));
  const auto emb = parameter_embed(g, c);
  DunklEngine inner(g, c);
  DunklEngine outer(emb.ambient, emb.as_params());
  long checked = 0, mismatches = 0;
  for (int k = 0; k <= max_deg; ++k) {
    for (const auto mono : monomials_of_degree(g.n, k)) {
      for (int a = 0; a < g.n; ++a) {
        ++checked;
        if (inner.apply(a, mono) != outer.apply(a, mono)) ++mismatches;
      }
    }
  }
  Json mu = Json::array();
  for (const auto& v : emb.mu) mu.push_back(to_json(v));
  CommandResult r;
  r.ok = mismatches == 0;
  r.json = Json{{"group", g.label()},
                {"ambient", emb.ambient.label()},
                {"params", params_json(c)},
                {"mu00", to_json(emb.mu00)},
                {"mu", mu},
                {"max_degree", max_deg},
                {"images_checked", checked},
                {"mismatches", mismatches},
                {"ok", r.ok}};
  return r;
}

CommandResult zscalar_cmd(Session& s) {
  const auto& g = s.group();
  const auto c = ParamSampler(s.cfg().seed).next(g, s.relation_or(Relation::none));
  CommandResult r;
  r.table = Table{{"i", "closed", "direct", "agree"}, {}};
  Json rows = Json::array();
  for (int i = 0; i <= g.n; ++i) {
    const Rational closed = z_scalar_closed(i, g, c);
    const CycloNumber direct = z_scalar_direct(i, g, c);
    const bool agree = direct == CycloNumber(1, closed);
    r.ok = r.ok && agree;
    rows.push_back(Json{{"i", i}, {"closed", to_json(closed)}, {"direct", to_json(direct)}, {"agree", agree}});
    r.table->rows.push_back({std::to_string(i), closed.get_str(), direct.to_string(), yes_no(agree)});
  }
  r.json = Json{{"group", g.label()}, {"params", params_json(c)}, {"scalars", rows}, {"ok", r.ok}};
  return r;
}

CommandResult onedim_check(Session& s) {
  const auto& g = s.group();
  const auto c = ParamSampler(s.cfg().seed).next(g, s.relation_or(Relation::unit));
  const auto rep = onedim_module_check(g, c);
  Json value = Json::array();
  for (const auto& row : rep.value) {
    Json jr = Json::array();
    for (const auto& v : row) jr.push_back(to_json(v));
    value.push_back(jr);
  }
  CommandResult r;
  r.ok = rep.passed;
  r.json = Json{{"group", g.label()},
                {"params", params_json(c)},
                {"value", value},
                {"routes_agree", rep.routes_agree},
                {"passed", rep.passed}};
  return r;
}

CommandResult singular_cmd(Session& s) {
  const auto& g = s.group();
  const auto& sing = s.singular();
  CommandResult r;
  r.table = Table{{"representative", "size", "trace", "h_star_trace", "match"}, {}};
  Json basis = Json::array();
  for (const auto& f : sing.space.basis()) basis.push_back(to_json(f));
  Json chars = Json::array();
  bool char_ok = true;
  for (const auto& ct : singular_character(sing)) {
    char_ok = char_ok && ct.ok;
    chars.push_back(Json{{"representative", ct.representative.to_string()},
                         {"size", ct.class_size},
                         {"trace", to_json(ct.value)},
                         {"h_star_trace", to_json(ct.expected)},
                         {"match", ct.ok}});
    r.table->rows.push_back({ct.representative.to_string(), std::to_string(ct.class_size), ct.value.to_string(),
                             ct.expected.to_string(), yes_no(ct.ok)});
  }
  const bool dim_ok = static_cast<int>(sing.space.dim()) == g.n;
  r.ok = dim_ok && char_ok;
  r.json = Json{{"group", g.label()},
                {"seed", s.cfg().seed},
                {"attempts", sing.attempts},
                {"params", params_json(sing.params)},
                {"degree", sing.degree},
                {"dimension", sing.space.dim()},
                {"character_is_h_star", char_ok},
                {"character", chars},
                {"basis", basis},
                {"ok", r.ok}};
  return r;
}

CommandResult hilbert_cmd(Session& s) {
  const auto& g = s.group();
  const auto& q = s.quotient();
  const auto h = quotient_hilbert(q);
  const auto e = expected_hilbert(g);
  long total = 0;
  for (long v : h.coeffs) total += v;
  const long expected_total = ipow(g.singular_degree(), g.n);
  CommandResult r;
  r.ok = h.coeffs == e.coeffs && total == expected_total && q.dunkl_stable() && q.vanishes_at_top();
  r.table = Table{{"degree", "dim", "expected"}, {}};
  for (std::size_t k = 0; k < std::max(h.coeffs.size(), e.coeffs.size()); ++k) {
    const long a = k < h.coeffs.size() ? h.coeffs[k] : 0;
    const long b = k < e.coeffs.size() ? e.coeffs[k] : 0;
    r.table->rows.push_back({std::to_string(k), std::to_string(a), std::to_string(b)});
  }
  r.json = Json{{"group", g.label()},
                {"seed", s.cfg().seed},
                {"singular_degree", g.singular_degree()},
                {"series", series_json(h)},
                {"expected", series_json(e)},
                {"total_dim", total},
                {"expected_total_dim", expected_total},
                {"dunkl_stable", q.dunkl_stable()},
                {"ok", r.ok}};
  return r;
}

CommandResult character_cmd(Session& s) {
  const auto& g = s.group();
  const auto& q = s.quotient();
  const int r_deg = g.singular_degree();
  const int shift = -g.grading_shift();
  CommandResult r;
  r.table = Table{{"representative", "size", "fixed_dim", "limit", "trace_at_one", "limit_match", "det_ratio_match",
                   "twisted_ratio_match"},
            {}};
  Json rows = Json::array();
  for (const auto& cls : s.classes()) {
    const auto& w = cls.representative;
    const CycloSeries gr = quotient_equiv_char(q, w);
    const CycloSeries ratio = det_ratio_series(w, r_deg, q.top_degree());
    const long limit = character_limit(w, g);
    const CycloNumber at_one = gr.at_one();
    const bool limit_ok = at_one == CycloNumber(1, limit);
    const bool ratio_ok = gr == ratio;
    const bool twisted_ok = gr == twisted_det_ratio_series(w, r_deg, q.top_degree());
    r.ok = r.ok && limit_ok && ratio_ok;
    Json e = class_json(cls);
    e["fixed_dim"] = fixed_space_dim(w);
    e["limit"] = limit;
    e["trace_at_one"] = to_json(at_one);
    e["limit_match"] = limit_ok;
    e["det_ratio_match"] = ratio_ok;
    e["twisted_ratio_match"] = twisted_ok;
    e["gr_L"] = series_json(shift, gr);
    e["S_W"] = series_json(shift, gr.scaled(det_char(w)));
    rows.push_back(e);
    r.table->rows.push_back({w.to_string(), std::to_string(cls.elements.size()), std::to_string(fixed_space_dim(w)),
                             std::to_string(limit), at_one.to_string(), yes_no(limit_ok), yes_no(ratio_ok),
                             yes_no(twisted_ok)});
  }
  r.json = Json{{"group", g.label()}, {"seed", s.cfg().seed}, {"singular_degree", r_deg}, {"classes", rows}, {"ok", r.ok}};
  return r;
}

CommandResult bgg_check(Session& s) {
  const auto& g = s.group();
  CommandResult r;
  r.table = Table{{"representative", "identity_holds"}, {}};
  Json rows = Json::array();
  for (const auto& cls : s.classes()) {
    const bool ok = bgg_identity_check(cls.representative, g.singular_degree());
    r.ok = r.ok && ok;
    Json e = class_json(cls);
    e["identity_holds"] = ok;
    rows.push_back(e);
    r.table->rows.push_back({cls.representative.to_string(), yes_no(ok)});
  }
  r.json = Json{{"group", g.label()}, {"classes", rows}, {"ok", r.ok}};
  return r;
}

CommandResult tensor_check(Session& s) {
  const auto& g = s.group();
  const auto& q = s.quotient();
  CommandResult r;
  r.table = Table{{"representative", "match"}, {}};
  Json rows = Json::array();
  for (const auto& cls : s.classes()) {
    const auto& w = cls.representative;
    const bool ok = ce_tensor_char(w, g.singular_degree()) == quotient_equiv_char(q, w);
    r.ok = r.ok && ok;
    Json e = class_json(cls);
    e["match"] = ok;
    rows.push_back(e);
    r.table->rows.push_back({w.to_string(), yes_no(ok)});
  }
  r.json = Json{{"group", g.label()}, {"seed", s.cfg().seed}, {"classes", rows}, {"ok", r.ok}};
  return r;
}

CommandResult coinvariant_check(Session& s) {
  const auto& g = s.group();
  const auto rep = coinvariant_image_check(s.quotient());
  long total = 0;
  for (long v : rep.orbit_dims) total += v;
  CommandResult r;
  r.ok = rep.passed() && total == static_cast<long>(g.group_order());
  r.table = Table{{"degree", "dim", "expected"}, {}};
  for (std::size_t j = 0; j < std::max(rep.orbit_dims.size(), rep.expected_dims.size()); ++j) {
    r.table->rows.push_back({std::to_string(rep.vbar_degree + static_cast<int>(j)),
                             std::to_string(j < rep.orbit_dims.size() ? rep.orbit_dims[j] : 0),
                             std::to_string(j < rep.expected_dims.size() ? rep.expected_dims[j] : 0)});
  }
  r.json = Json{{"group", g.label()},
                {"seed", s.cfg().seed},
                {"vbar_degree", rep.vbar_degree},
                {"top_wedge_multiplicity", rep.top_wedge_multiplicity},
                {"orbit_dims", rep.orbit_dims},
                {"expected_dims", rep.expected_dims},
                {"orbit_total", total},
                {"group_order", g.group_order()},
                {"socle_degree", rep.socle_degree},
                {"socle_dim", rep.socle_dim},
                {"clause_a", rep.clause_a},
                {"clause_b", rep.clause_b},
                {"clause_c", rep.clause_c},
                {"clause_d", rep.clause_d},
                {"failures", rep.failures},
                {"vbar", to_json(rep.vbar)},
                {"ok", r.ok}};
  return r;
}

RunConfig with(const RunConfig& base, Relation rel, std::uint64_t seed) {
  RunConfig c = base;
  c.relation = rel;
  c.seed = seed;
  c.max_degree.reset();
  return c;
}

CommandResult verify_all(Session& s) {
  const RunConfig& base = s.cfg();
  const auto& g = s.group();
  CommandResult r;
  r.table = Table{{"criterion", "name", "status"}, {}};
  Json rows = Json::array();
  auto record = [&](int id, const std::string& name, bool ok, Json detail) {
    r.ok = r.ok && ok;
    rows.push_back(Json{{"criterion", id}, {"name", name}, {"ok", ok}, {"detail", std::move(detail)}});
    r.table->rows.push_back({std::to_string(id), name, ok ? "PASS" : "FAIL"});
  };
  auto multi_seed = [&](Relation rel, const std::function<CommandResult(Session&)>& fn, bool want) {
    bool ok = true;
    Json detail = Json::array();
    for (std::uint64_t k = 0; k < 3; ++k) {
      Session sub(with(base, rel, base.seed + k));
      const auto res = fn(sub);
      ok = ok && res.ok == want;
      detail.push_back(res.json);
    }
    return std::pair{ok, detail};
  };

  {
    auto res = group_info(s);
    record(1, "group facts", res.ok, res.json);
  }
  {
    auto [ok, detail] = multi_seed(Relation::main, kleshchev_cmd, true);
    record(2, "non-Kleshchev set", ok, detail);
  }
  {
    Session sub(with(base, Relation::main, base.seed));
    auto res = hecke_count_cmd(sub);
    record(3, "Hecke simple count", res.ok, res.json);
  }
  {
    Session sub(with(base, Relation::none, base.seed));
    auto res = dunkl_check(sub);
    record(4, "Dunkl operators", res.ok, res.json);
  }
  {
    Session sub(with(base, Relation::none, base.seed));
    auto res = embed_check(sub);
    record(5, "parameter embedding", res.ok, res.json);
  }
  {
    auto [ok_unit, d_unit] = multi_seed(Relation::unit, onedim_check, true);
    auto [ok_main, d_main] = multi_seed(Relation::main, onedim_check, false);
    record(6, "one-dimensional module", ok_unit && ok_main, Json{{"unit", d_unit}, {"main", d_main}});
  }
  {
    Session sub(with(base, Relation::none, base.seed));
    auto res = zscalar_cmd(sub);
    record(7, "z scalars", res.ok, res.json);
  }
  {
    auto [ok, detail] = multi_seed(Relation::main, singular_cmd, true);
    for (auto& d : detail) d.erase("basis");
    record(8, "singular space", ok, detail);
  }
  Session main_session(with(base, Relation::main, base.seed));
  main_session.classes();
  {
    auto res = hilbert_cmd(main_session);
    record(9, "quotient dimension and Hilbert series", res.ok, res.json);
  }
  {
    auto res = character_cmd(main_session);
    for (auto& d : res.json["classes"]) {
      d.erase("gr_L");
      d.erase("S_W");
    }
    record(10, "graded character", res.ok, res.json);
  }
  {
    auto res = bgg_check(main_session);
    record(11, "BGG character identity", res.ok, res.json);
  }
  {
    auto res = tensor_check(main_session);
    record(12, "tensor model character", res.ok, res.json);
  }
  {
    auto res = coinvariant_check(main_session);
    res.json.erase("vbar");
    record(13, "coinvariant image", res.ok, res.json);
  }
  r.json = Json{{"group", g.label()}, {"seed", base.seed}, {"criteria", rows}, {"ok", r.ok}};
  return r;
}

using Handler = CommandResult (*)(Session&);

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      {"group-info", group_info},       {"reflections", reflections_cmd},
      {"classes", classes_cmd},         {"irrep-count", irrep_count_cmd},
      {"kleshchev", kleshchev_cmd},     {"hecke-count", hecke_count_cmd},
      {"dunkl-check", dunkl_check},     {"embed-check", embed_check},
      {"zscalar", zscalar_cmd},         {"onedim-check", onedim_check},
      {"singular", singular_cmd},       {"hilbert", hilbert_cmd},
      {"character", character_cmd},     {"bgg-check", bgg_check},
      {"tensor-check", tensor_check},   {"coinvariant-check", coinvariant_check},
      {"verify-all", verify_all},
  };
  return table;
}

std::string tsv_escape(std::string s) {
  std::replace(s.begin(), s.end(), '\t', ' ');
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, h] : handlers()) v.push_back(name);
    return v;
  }();
  return names;
}

CommandResult run_command(const RunConfig& cfg) {
  const auto it = handlers().find(cfg.command);
  if (it == handlers().end()) throw UsageError("unknown command '" + cfg.command + "'");
  if (cfg.max_degree && *cfg.max_degree < 0) throw UsageError("max-degree must be nonnegative");
  static const std::set<std::string> without_table = {"group-info", "irrep-count", "hecke-count", "dunkl-check",
                                                      "embed-check", "onedim-check"};
  if (cfg.format == Format::tsv && without_table.count(cfg.command))
    throw UsageError("tsv output is only available for series and tables");
  Session s(cfg);
  return it->second(s);
}

void write_result(std::ostream& os, const CommandResult& r, Format format) {
  if (format == Format::json) {
    os << r.json.dump(2) << '\n';
    return;
  }
  if (!r.table) throw UsageError("tsv output is only available for series and tables");
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "\t" : "") << tsv_escape(cells[i]);
    os << '\n';
  };
  line(r.table->header);
  for (const auto& row : r.table->rows) line(row);
}

}  // namespace cherednik::cli
