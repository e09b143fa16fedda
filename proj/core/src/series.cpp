#include "cherednik/series.hpp"

#include <algorithm>

#include "cherednik/error.hpp"

namespace cherednik {

CycloSeries::CycloSeries(int order, std::vector<CycloNumber> coeffs) : order_(order), coeffs_(std::move(coeffs)) {
  trim();
}

CycloSeries CycloSeries::geometric(int order, int len) {
  return CycloSeries(order, std::vector<CycloNumber>(static_cast<std::size_t>(std::max(len, 0)), CycloNumber(order, 1L)));
}

CycloNumber CycloSeries::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return CycloNumber(order_);
  return coeffs_[static_cast<std::size_t>(k)];
}

void CycloSeries::set_coeff(int k, const CycloNumber& c) {
  if (k < 0) throw UsageError("negative series index");
  if (k >= static_cast<int>(coeffs_.size())) coeffs_.resize(static_cast<std::size_t>(k) + 1, CycloNumber(order_));
  coeffs_[static_cast<std::size_t>(k)] = c;
  trim();
}

void CycloSeries::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

CycloSeries& CycloSeries::operator+=(const CycloSeries& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), CycloNumber(order_));
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

CycloSeries& CycloSeries::operator-=(const CycloSeries& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), CycloNumber(order_));
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  trim();
  return *this;
}

CycloSeries operator*(const CycloSeries& a, const CycloSeries& b) {
  const int order = std::max(a.order_, b.order_);
  if (a.coeffs_.empty() || b.coeffs_.empty()) return CycloSeries(order);
  std::vector<CycloNumber> c(a.coeffs_.size() + b.coeffs_.size() - 1, CycloNumber(order));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j].add_product(a.coeffs_[i], b.coeffs_[j]);
  }
  return CycloSeries(order, std::move(c));
}

CycloSeries CycloSeries::scaled(const CycloNumber& c) const {
  auto out = *this;
  for (auto& x : out.coeffs_) x *= c;
  out.trim();
  return out;
}

CycloSeries CycloSeries::divide(const CycloSeries& a, const CycloSeries& b, int max_degree) {
  const int order = std::max(a.order_, b.order_);
  const CycloNumber b0 = b.coeff(0);
  if (b0.is_zero()) throw DivisionByZero();
  const CycloNumber inv = b0.inverse();
  std::vector<CycloNumber> q(static_cast<std::size_t>(max_degree) + 1, CycloNumber(order));
  for (int k = 0; k <= max_degree; ++k) {
    CycloNumber acc = a.coeff(k);
    for (int j = 1; j <= std::min(k, b.degree()); ++j) acc -= b.coeffs_[static_cast<std::size_t>(j)] * q[static_cast<std::size_t>(k - j)];
    q[static_cast<std::size_t>(k)] = acc * inv;
  }
  return CycloSeries(order, std::move(q));
}

CycloSeries CycloSeries::truncated(int max_degree) const {
  auto out = *this;
  if (static_cast<int>(out.coeffs_.size()) > max_degree + 1) out.coeffs_.resize(static_cast<std::size_t>(max_degree + 1));
  out.trim();
  return out;
}

CycloNumber CycloSeries::at_one() const {
  CycloNumber s(order_);
  for (const auto& c : coeffs_) s += c;
  return s;
}

bool operator==(const CycloSeries& a, const CycloSeries& b) {
  if (a.coeffs_.size() != b.coeffs_.size()) return false;
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k)
    if (!(a.coeffs_[k] == b.coeffs_[k])) return false;
  return true;
}

CycloSeries det_one_minus_t(const MonomialMatrix& w, int power) {
  const int m = w.order();
  CycloSeries out(m, {CycloNumber(m, 1L)});
  for (const auto& c : w.cycles()) {
    const int len = static_cast<int>(c.indices.size());
    CycloSeries factor(m);
    factor.set_coeff(0, CycloNumber(m, 1L));
    factor.set_coeff(power * len, -zeta_pow(m, -c.exponent));
    out = out * factor;
  }
  return out;
}

}  // namespace cherednik
