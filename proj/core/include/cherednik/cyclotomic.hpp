#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace cherednik {

/// Arbitrary precision rational, always in lowest terms with positive
/// denominator (GMP canonicalizes after every operation).
using Rational = mpq_class;

/// num / den in lowest terms. Prefer this to the two-argument mpq_class
/// constructor, which does not canonicalize.
inline Rational make_rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Dense univariate polynomial over Q, coefficient of x^i at index i.
/// Trailing zeros are trimmed, so the zero polynomial is empty.
struct QPoly {
  std::vector<Rational> coeffs;

  QPoly() = default;
  explicit QPoly(std::vector<Rational> c);

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  const Rational& leading() const { return coeffs.back(); }
  void trim();

  friend bool operator==(const QPoly&, const QPoly&) = default;
};

QPoly operator+(const QPoly& a, const QPoly& b);
QPoly operator-(const QPoly& a, const QPoly& b);
QPoly operator*(const QPoly& a, const QPoly& b);

/// Euclidean division; throws DivisionByZero when `divisor` is zero.
struct QPolyDivision {
  QPoly quotient;
  QPoly remainder;
};
QPolyDivision divide(const QPoly& dividend, const QPoly& divisor);

/// The m-th cyclotomic polynomial, computed by dividing x^m - 1 by the
/// cyclotomic polynomials of the proper divisors of m.
QPoly cyclotomic_polynomial(int m);

/// Euler's totient.
int euler_phi(int m);

/// An element of Q(zeta_m) = Q[x]/(Phi_m), stored in the power basis
/// 1, zeta, ..., zeta^(phi(m)-1). The stored vector is always fully reduced,
/// so two elements are equal iff their coefficient vectors agree.
///
/// Elements of order 1 are plain rationals and combine with any order.
class CycloNumber {
 public:
  CycloNumber();
  explicit CycloNumber(int order);
  CycloNumber(int order, const Rational& value);
  CycloNumber(int order, long value) : CycloNumber(order, Rational(value)) {}
  CycloNumber(int order, std::vector<Rational> coeffs);

  static CycloNumber zeta(int order, long k);

  int order() const { return order_; }
  std::span<const Rational> coeffs() const { return coeffs_; }
  bool is_zero() const;
  bool is_rational() const;
  bool is_one() const;
  /// Rational value; throws if the element is not rational.
  const Rational& rational_value() const;

  CycloNumber& operator+=(const CycloNumber& other);
  CycloNumber& operator-=(const CycloNumber& other);
  CycloNumber& operator*=(const CycloNumber& other);
  CycloNumber& operator*=(const Rational& scalar);
  CycloNumber& operator/=(const CycloNumber& other);

  CycloNumber operator-() const;
  CycloNumber inverse() const;
  /// Complex conjugation zeta -> zeta^-1.
  CycloNumber conj() const;
  CycloNumber pow(long e) const;
  /// The same element viewed inside Q(zeta_target); target must be a
  /// multiple of order().
  CycloNumber embed(int target) const;

  /// Adds a * b to *this without allocating a temporary.
  void add_product(const CycloNumber& a, const CycloNumber& b);

  std::string to_string() const;

  friend bool operator==(const CycloNumber& a, const CycloNumber& b);
  friend CycloNumber operator+(CycloNumber a, const CycloNumber& b) { return a += b; }
  friend CycloNumber operator-(CycloNumber a, const CycloNumber& b) { return a -= b; }
  friend CycloNumber operator*(const CycloNumber& a, const CycloNumber& b);
  friend CycloNumber operator*(CycloNumber a, const Rational& s) { return a *= s; }
  friend CycloNumber operator*(const Rational& s, CycloNumber a) { return a *= s; }
  friend CycloNumber operator/(CycloNumber a, const CycloNumber& b) { return a /= b; }

 private:
  void promote_to(int order);
  int common_order(const CycloNumber& other) const;

  int order_ = 1;
  std::vector<Rational> coeffs_;
};

/// epsilon^k with epsilon = exp(2 pi i / m); k is reduced mod m.
CycloNumber zeta_pow(int m, long k);

/// Non-negative remainder.
inline long mod_floor(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace cherednik
