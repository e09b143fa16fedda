#pragma once

#include <json.hpp>

#include "cherednik/cyclotomic.hpp"
#include "cherednik/lowest_weight.hpp"
#include "cherednik/poly.hpp"
#include "cherednik/series.hpp"

namespace cherednik::cli {

using Json = nlohmann::ordered_json;

/// Integers that fit in int64 become JSON numbers, larger ones decimal strings.
Json to_json(const mpz_class& z);
/// [num, den].
Json to_json(const Rational& q);
/// {order, coeffs: [[num, den], ...]} in the power basis of Q(zeta_order).
Json to_json(const CycloNumber& c);
/// [{exponents, coeff}, ...] in descending graded-lex order.
Json to_json(const Poly& f);
/// {shift, coeffs}, with shift the exponent of the global factor t^shift.
Json series_json(int shift, const CycloSeries& s);
Json series_json(const HilbertSeries& h);

}  // namespace cherednik::cli
