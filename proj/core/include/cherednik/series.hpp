#pragma once

#include <string>
#include <vector>

#include "cherednik/cyclotomic.hpp"
#include "cherednik/group.hpp"

namespace cherednik {

/// Truncated power series / polynomial in t over Q(zeta_m). Coefficient of t^k
/// at index k; trailing zeros are trimmed.
class CycloSeries {
 public:
  CycloSeries() = default;
  explicit CycloSeries(int order) : order_(order) {}
  CycloSeries(int order, std::vector<CycloNumber> coeffs);

  /// 1 + t + ... + t^(len-1).
  static CycloSeries geometric(int order, int len);

  int order() const { return order_; }
  const std::vector<CycloNumber>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of t^k, zero past the end.
  CycloNumber coeff(int k) const;
  void set_coeff(int k, const CycloNumber& c);

  CycloSeries& operator+=(const CycloSeries& other);
  CycloSeries& operator-=(const CycloSeries& other);
  friend CycloSeries operator+(CycloSeries a, const CycloSeries& b) { return a += b; }
  friend CycloSeries operator-(CycloSeries a, const CycloSeries& b) { return a -= b; }
  friend CycloSeries operator*(const CycloSeries& a, const CycloSeries& b);
  CycloSeries scaled(const CycloNumber& c) const;

  /// Power-series quotient a / b through t^max_degree; b(0) must be nonzero.
  static CycloSeries divide(const CycloSeries& a, const CycloSeries& b, int max_degree);
  CycloSeries truncated(int max_degree) const;

  /// Value at t = 1 (sum of coefficients).
  CycloNumber at_one() const;

  friend bool operator==(const CycloSeries& a, const CycloSeries& b);

 private:
  void trim();

  int order_ = 1;
  std::vector<CycloNumber> coeffs_;
};

/// det|_{h*}(1 - t^power w) as a polynomial in t: the product over cycles of
/// w of (1 - eps^{-E} t^{power * len}), E the cycle exponent.
CycloSeries det_one_minus_t(const MonomialMatrix& w, int power = 1);

}  // namespace cherednik
