#include "cherednik/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "cherednik/error.hpp"

namespace cherednik {

QPoly::QPoly(std::vector<Rational> c) : coeffs(std::move(c)) { trim(); }

void QPoly::trim() {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  std::vector<Rational> c(std::max(a.coeffs.size(), b.coeffs.size()));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) c[i] += a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) c[i] += b.coeffs[i];
  return QPoly(std::move(c));
}

QPoly operator-(const QPoly& a, const QPoly& b) {
  std::vector<Rational> c(std::max(a.coeffs.size(), b.coeffs.size()));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) c[i] += a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) c[i] -= b.coeffs[i];
  return QPoly(std::move(c));
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs.size() + b.coeffs.size() - 1);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] += a.coeffs[i] * b.coeffs[j];
  }
  return QPoly(std::move(c));
}

QPolyDivision divide(const QPoly& dividend, const QPoly& divisor) {
  if (divisor.is_zero()) throw DivisionByZero();
  QPolyDivision out;
  std::vector<Rational> rem = dividend.coeffs;
  const int dd = divisor.degree();
  const int qd = dividend.degree() - dd;
  if (qd < 0) {
    out.remainder = dividend;
    return out;
  }
  std::vector<Rational> quot(static_cast<std::size_t>(qd) + 1);
  for (int k = qd; k >= 0; --k) {
    const Rational c = rem[static_cast<std::size_t>(k + dd)] / divisor.leading();
    quot[static_cast<std::size_t>(k)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= c * divisor.coeffs[static_cast<std::size_t>(j)];
  }
  out.quotient = QPoly(std::move(quot));
  out.remainder = QPoly(std::move(rem));
  return out;
}

int euler_phi(int m) {
  if (m < 1) throw UsageError("euler_phi requires m >= 1");
  int result = m;
  int x = m;
  for (int q = 2; q * q <= x; ++q) {
    if (x % q != 0) continue;
    while (x % q == 0) x /= q;
    result -= result / q;
  }
  if (x > 1) result -= result / x;
  return result;
}

QPoly cyclotomic_polynomial(int m) {
  if (m < 1) throw UsageError("cyclotomic_polynomial requires m >= 1");
  static std::mutex mutex;
  static std::map<int, QPoly> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  std::vector<Rational> xm(static_cast<std::size_t>(m) + 1);
  xm.front() = -1;
  xm.back() = 1;
  QPoly result(std::move(xm));
  for (int e = 1; e < m; ++e) {
    if (m % e != 0) continue;
    auto div = divide(result, cyclotomic_polynomial(e));
    if (!div.remainder.is_zero()) throw VerificationError("cyclotomic division left a remainder");
    result = std::move(div.quotient);
  }
  std::lock_guard lock(mutex);
  cache.emplace(m, result);
  return result;
}

namespace {

// Per-order reduction data. Phi_m has integer coefficients, and so does the
// reduced form of every zeta power.
struct FieldData {
  int m = 1;
  int phi = 1;
  std::vector<long> modulus;                // monic Phi_m, size phi + 1
  std::vector<std::vector<long>> zeta_pows;  // zeta^k reduced, k in [0, m)
};

const FieldData& field_data(int m) {
  thread_local const FieldData* last = nullptr;
  if (last != nullptr && last->m == m) return *last;
  static std::mutex mutex;
  static std::map<int, FieldData> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(m); it != cache.end()) {
    last = &it->second;
    return it->second;
  }

  if (m < 1) throw UsageError("cyclotomic order must be >= 1");
  FieldData fd;
  fd.m = m;
  const QPoly phi_poly = cyclotomic_polynomial(m);
  fd.phi = phi_poly.degree();
  for (const auto& c : phi_poly.coeffs) {
    if (c.get_den() != 1 || !c.get_num().fits_slong_p()) throw VerificationError("cyclotomic polynomial is not integral");
    fd.modulus.push_back(c.get_num().get_si());
  }
  // x^k mod Phi_m by repeated multiplication by x.
  std::vector<long> cur(static_cast<std::size_t>(fd.phi), 0);
  cur[0] = 1;
  for (int k = 0; k < m; ++k) {
    fd.zeta_pows.push_back(cur);
    std::vector<long> next(static_cast<std::size_t>(fd.phi), 0);
    const long top = cur.back();
    for (int j = fd.phi - 1; j >= 1; --j) next[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)];
    next[0] = 0;
    for (int j = 0; j < fd.phi; ++j) next[static_cast<std::size_t>(j)] -= top * fd.modulus[static_cast<std::size_t>(j)];
    cur = std::move(next);
  }
  last = &cache.emplace(m, std::move(fd)).first->second;
  return *last;
}

// Reduces a coefficient vector of arbitrary length modulo Phi_m in place and
// truncates it to phi entries.
void reduce_in_place(std::vector<Rational>& c, const FieldData& fd) {
  const int phi = fd.phi;
  for (int k = static_cast<int>(c.size()) - 1; k >= phi; --k) {
    const Rational top = c[static_cast<std::size_t>(k)];
    if (top == 0) continue;
    for (int j = 0; j < phi; ++j) {
      const long mj = fd.modulus[static_cast<std::size_t>(j)];
      if (mj != 0) c[static_cast<std::size_t>(k - phi + j)] -= top * mj;
    }
  }
  c.resize(static_cast<std::size_t>(phi));
}

}  // namespace

CycloNumber::CycloNumber() : order_(1), coeffs_(1) {}

CycloNumber::CycloNumber(int order) : order_(order), coeffs_(static_cast<std::size_t>(field_data(order).phi)) {}

CycloNumber::CycloNumber(int order, const Rational& value) : CycloNumber(order) { coeffs_[0] = value; }

CycloNumber::CycloNumber(int order, std::vector<Rational> coeffs) : order_(order), coeffs_(std::move(coeffs)) {
  const auto& fd = field_data(order);
  if (coeffs_.size() < static_cast<std::size_t>(fd.phi)) coeffs_.resize(static_cast<std::size_t>(fd.phi));
  reduce_in_place(coeffs_, fd);
}

CycloNumber CycloNumber::zeta(int order, long k) {
  const auto& fd = field_data(order);
  CycloNumber z(order);
  const auto& row = fd.zeta_pows[static_cast<std::size_t>(mod_floor(k, order))];
  for (int j = 0; j < fd.phi; ++j) z.coeffs_[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j)];
  return z;
}

CycloNumber zeta_pow(int m, long k) { return CycloNumber::zeta(m, k); }

bool CycloNumber::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CycloNumber::is_rational() const {
  for (std::size_t j = 1; j < coeffs_.size(); ++j)
    if (coeffs_[j] != 0) return false;
  return true;
}

bool CycloNumber::is_one() const { return is_rational() && coeffs_[0] == 1; }

const Rational& CycloNumber::rational_value() const {
  if (!is_rational()) throw std::domain_error("cyclotomic number is not rational: " + to_string());
  return coeffs_[0];
}

int CycloNumber::common_order(const CycloNumber& other) const {
  if (order_ == other.order_) return order_;
  if (other.order_ == 1 || other.is_rational()) return order_;
  if (order_ == 1 || is_rational()) return other.order_;
  throw std::invalid_argument("mixing cyclotomic numbers of orders " + std::to_string(order_) + " and " +
                              std::to_string(other.order_));
}

void CycloNumber::promote_to(int order) {
  if (order == order_) return;
  if (!is_rational()) throw std::invalid_argument("cannot promote a non-rational cyclotomic number");
  Rational v = coeffs_[0];
  *this = CycloNumber(order, v);
}

CycloNumber& CycloNumber::operator+=(const CycloNumber& other) {
  const int o = common_order(other);
  promote_to(o);
  if (other.order_ == o) {
    for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += other.coeffs_[j];
  } else {
    coeffs_[0] += other.coeffs_[0];
  }
  return *this;
}

CycloNumber& CycloNumber::operator-=(const CycloNumber& other) {
  const int o = common_order(other);
  promote_to(o);
  if (other.order_ == o) {
    for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= other.coeffs_[j];
  } else {
    coeffs_[0] -= other.coeffs_[0];
  }
  return *this;
}

CycloNumber& CycloNumber::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

CycloNumber operator*(const CycloNumber& a, const CycloNumber& b) {
  const int o = a.common_order(b);
  if (b.is_rational()) {
    CycloNumber r = a;
    r.promote_to(o);
    return r *= b.coeffs_[0];
  }
  if (a.is_rational()) {
    CycloNumber r = b;
    r.promote_to(o);
    return r *= a.coeffs_[0];
  }
  const auto& fd = field_data(o);
  const std::size_t phi = static_cast<std::size_t>(fd.phi);
  std::vector<Rational> prod(2 * phi - 1);
  for (std::size_t i = 0; i < phi; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < phi; ++j) {
      if (b.coeffs_[j] == 0) continue;
      prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  reduce_in_place(prod, fd);
  CycloNumber r;
  r.order_ = o;
  r.coeffs_ = std::move(prod);
  return r;
}

CycloNumber& CycloNumber::operator*=(const CycloNumber& other) {
  *this = *this * other;
  return *this;
}

void CycloNumber::add_product(const CycloNumber& a, const CycloNumber& b) {
  if (a.is_rational() && b.is_rational()) {
    coeffs_[0] += a.coeffs_[0] * b.coeffs_[0];
    return;
  }
  *this += a * b;
}

CycloNumber& CycloNumber::operator/=(const CycloNumber& other) { return *this *= other.inverse(); }

CycloNumber CycloNumber::operator-() const {
  CycloNumber r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycloNumber CycloNumber::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (is_rational()) {
    CycloNumber r(order_);
    r.coeffs_[0] = 1 / coeffs_[0];
    return r;
  }
  // Extended Euclid: find s with s * a + t * Phi = 1.
  const QPoly modulus = cyclotomic_polynomial(order_);
  QPoly r0 = modulus;
  QPoly r1{std::vector<Rational>(coeffs_.begin(), coeffs_.end())};
  QPoly s0;
  QPoly s1{std::vector<Rational>{Rational(1)}};
  while (!r1.is_zero()) {
    auto div = divide(r0, r1);
    QPoly s2 = s0 - div.quotient * s1;
    r0 = std::move(r1);
    r1 = std::move(div.remainder);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant since Phi_m is irreducible.
  if (r0.degree() != 0) throw VerificationError("cyclotomic polynomial is not irreducible");
  const Rational scale = 1 / r0.coeffs[0];
  for (auto& c : s0.coeffs) c *= scale;
  return CycloNumber(order_, std::move(s0.coeffs));
}

CycloNumber CycloNumber::conj() const {
  if (is_rational()) return *this;
  const auto& fd = field_data(order_);
  std::vector<Rational> out(static_cast<std::size_t>(fd.phi));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    const auto& row = fd.zeta_pows[static_cast<std::size_t>(mod_floor(-static_cast<long>(j), order_))];
    for (std::size_t i = 0; i < out.size(); ++i)
      if (row[i] != 0) out[i] += coeffs_[j] * row[i];
  }
  CycloNumber r;
  r.order_ = order_;
  r.coeffs_ = std::move(out);
  return r;
}

CycloNumber CycloNumber::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycloNumber result(order_, 1L);
  CycloNumber base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

CycloNumber CycloNumber::embed(int target) const {
  if (target % order_ != 0) throw std::invalid_argument("embed target must be a multiple of the order");
  const long step = target / order_;
  CycloNumber r(target);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    r += CycloNumber::zeta(target, static_cast<long>(j) * step) * coeffs_[j];
  }
  return r;
}

bool operator==(const CycloNumber& a, const CycloNumber& b) {
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  if (a.is_rational() && b.is_rational()) return a.coeffs_[0] == b.coeffs_[0];
  return false;
}

std::string CycloNumber::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << coeffs_[j].get_str();
    if (j == 1) os << "*z";
    if (j > 1) os << "*z^" << j;
  }
  if (first) os << "0";
  if (order_ > 2 && !is_rational()) os << " (z=e(1/" << order_ << "))";
  return os.str();
}

}  // namespace cherednik
