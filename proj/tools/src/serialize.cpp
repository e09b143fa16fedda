#include "cherednik_cli/serialize.hpp"

namespace cherednik::cli {

Json to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return Json(static_cast<std::int64_t>(z.get_si()));
  return Json(z.get_str());
}

Json to_json(const Rational& q) { return Json::array({to_json(q.get_num()), to_json(q.get_den())}); }

Json to_json(const CycloNumber& c) {
  Json coeffs = Json::array();
  for (const auto& q : c.coeffs()) coeffs.push_back(to_json(q));
  return Json{{"order", c.order()}, {"coeffs", coeffs}};
}

Json to_json(const Poly& f) {
  Json out = Json::array();
  for (const auto& [mono, c] : f.terms()) {
    out.push_back(Json{{"exponents", mono.exponents(f.nvars())}, {"coeff", to_json(c)}});
  }
  return out;
}

Json series_json(int shift, const CycloSeries& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(to_json(c));
  return Json{{"shift", shift}, {"coeffs", coeffs}};
}

Json series_json(const HilbertSeries& h) { return Json{{"shift", -h.shift}, {"coeffs", h.coeffs}}; }

}  // namespace cherednik::cli
