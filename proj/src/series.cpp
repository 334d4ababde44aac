#include "leray/series.hpp"

#include <stdexcept>

#include "format_util.hpp"

namespace leray {

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order())
    throw std::invalid_argument("truncation order mismatch: " + std::to_string(a.order()) + " vs " +
                                std::to_string(b.order()));
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::size_t order, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (order == 0) throw std::invalid_argument("truncation order must be positive");
  coeffs_.resize(order);
}

TruncatedSeries TruncatedSeries::truncate_to(std::size_t m) const {
  if (m > order())
    throw std::invalid_argument("cannot truncate order " + std::to_string(order()) + " series to order " +
                                std::to_string(m));
  return {m, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(m))};
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
  require_same_order(*this, rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
  require_same_order(*this, rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b);
  const std::size_t m = a.order();
  std::vector<Rational> out(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < m; ++j)
      if (!b.coeffs_[j].is_zero()) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return {m, std::move(out)};
}

TruncatedSeries inverse(const TruncatedSeries& a) {
  if (!a.is_unit()) throw std::domain_error("non-unit");
  const std::size_t m = a.order();
  std::vector<Rational> inv(m);
  const Rational c0_inv = Rational(1) / a[0];
  inv[0] = c0_inv;
  // a * inv = 1 coefficientwise: a0*inv_k = -sum_{j=1..k} a_j inv_{k-j}
  for (std::size_t k = 1; k < m; ++k) {
    Rational acc;
    for (std::size_t j = 1; j <= k; ++j)
      if (!a[j].is_zero()) acc += a[j] * inv[k - j];
    inv[k] = -acc * c0_inv;
  }
  return {m, std::move(inv)};
}

TruncatedSeries pow(const TruncatedSeries& a, long k) {
  TruncatedSeries base = k < 0 ? inverse(a) : a;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-(k + 1)) + 1 : static_cast<unsigned long>(k);
  TruncatedSeries result = TruncatedSeries::one(a.order());
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

std::string TruncatedSeries::to_string(char variable) const {
  detail::TermWriter writer;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    std::vector<std::string> factors;
    if (i > 0) factors.push_back(detail::power(variable, static_cast<long>(i)));
    writer.add(coeffs_[i], factors);
  }
  return writer.str();
}

}  // namespace leray
