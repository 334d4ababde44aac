#include "leray/bigraded.hpp"

#include <stdexcept>

#include "format_util.hpp"

namespace leray {

BigradedPolynomial::BigradedPolynomial(const Rational& constant) { add_term({0, 0}, constant); }

BigradedPolynomial BigradedPolynomial::monomial(long t, long u, const Rational& coeff) {
  BigradedPolynomial p;
  p.add_term({t, u}, coeff);
  return p;
}

BigradedPolynomial BigradedPolynomial::one_plus(long t, long u) {
  BigradedPolynomial p(Rational(1));
  p.add_term({t, u}, Rational(1));
  return p;
}

Rational BigradedPolynomial::coefficient(long t, long u) const {
  auto it = terms_.find({t, u});
  return it == terms_.end() ? Rational(0) : it->second;
}

void BigradedPolynomial::add_term(Monomial m, const Rational& coeff) {
  if (m.t < 0 || m.u < 0)
    throw std::invalid_argument("negative exponent in bigraded term (" + std::to_string(m.t) + "," +
                                std::to_string(m.u) + ")");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

const BigradedPolynomial::TermMap::value_type& BigradedPolynomial::least_term() const {
  if (terms_.empty()) throw std::domain_error("least term of zero polynomial");
  return *terms_.begin();
}

const BigradedPolynomial::TermMap::value_type& BigradedPolynomial::greatest_term() const {
  if (terms_.empty()) throw std::domain_error("greatest term of zero polynomial");
  return *terms_.rbegin();
}

long BigradedPolynomial::max_t() const {
  long m = 0;
  for (const auto& [mono, c] : terms_) m = std::max(m, mono.t);
  return m;
}

long BigradedPolynomial::max_u() const {
  long m = 0;
  for (const auto& [mono, c] : terms_) m = std::max(m, mono.u);
  return m;
}

BigradedPolynomial BigradedPolynomial::forget_weights() const {
  BigradedPolynomial out;
  for (const auto& [mono, c] : terms_) out.add_term({mono.t, 0}, c);
  return out;
}

bool BigradedPolynomial::is_poincare_serre() const {
  for (const auto& [mono, c] : terms_)
    if (!c.is_integer() || c.sign() < 0) return false;
  return true;
}

std::vector<std::int64_t> BigradedPolynomial::betti_numbers() const {
  if (!is_poincare_serre()) throw std::domain_error("not a Poincaré–Serre polynomial: " + to_string());
  if (is_zero()) return {};
  std::vector<std::int64_t> betti(static_cast<std::size_t>(max_t()) + 1, 0);
  for (const auto& [mono, c] : terms_) {
    const BigInt v = c.to_integer();
    if (!v.fits_slong_p()) throw std::overflow_error("Betti number exceeds 64 bits");
    betti[static_cast<std::size_t>(mono.t)] += v.get_si();
  }
  return betti;
}

BigradedPolynomial& BigradedPolynomial::operator+=(const BigradedPolynomial& rhs) {
  for (const auto& [mono, c] : rhs.terms_) add_term(mono, c);
  return *this;
}

BigradedPolynomial& BigradedPolynomial::operator-=(const BigradedPolynomial& rhs) {
  for (const auto& [mono, c] : rhs.terms_) add_term(mono, -c);
  return *this;
}

BigradedPolynomial operator*(const BigradedPolynomial& a, const BigradedPolynomial& b) {
  BigradedPolynomial out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term({ma.t + mb.t, ma.u + mb.u}, ca * cb);
  return out;
}

std::string BigradedPolynomial::to_string() const {
  detail::TermWriter writer;
  for (const auto& [mono, c] : terms_) {
    std::vector<std::string> factors;
    if (mono.t != 0) factors.push_back(detail::power('t', mono.t));
    if (mono.u != 0) factors.push_back(detail::power('u', mono.u));
    writer.add(c, factors);
  }
  return writer.str();
}

DivisionResult exact_divide(const BigradedPolynomial& total, const BigradedPolynomial& divisor) {
  if (divisor.is_zero()) throw std::invalid_argument("exact division by the zero polynomial");
  if (total.is_zero()) return BigradedPolynomial{};

  const auto& [div_low, div_low_coeff] = divisor.least_term();
  const auto& [div_high, div_high_coeff] = divisor.greatest_term();
  const auto& [total_high, total_high_coeff] = total.greatest_term();

  const Monomial quotient_top{total_high.t - div_high.t, total_high.u - div_high.u};
  if (quotient_top.t < 0 || quotient_top.u < 0)
    return DivisionObstruction{total_high, total_high_coeff, "greatest term not divisible by divisor's greatest term"};
  const Rational quotient_top_coeff = total_high_coeff / div_high_coeff;
  const long t_bound = total.max_t() - divisor.max_t();
  const long u_bound = total.max_u() - divisor.max_u();

  BigradedPolynomial quotient;
  BigradedPolynomial remainder = total;
  while (!remainder.is_zero()) {
    const auto [rem_low, rem_coeff] = remainder.least_term();
    const Monomial step{rem_low.t - div_low.t, rem_low.u - div_low.u};
    const Rational step_coeff = rem_coeff / div_low_coeff;
    if (step.t < 0 || step.u < 0)
      return DivisionObstruction{rem_low, rem_coeff, "not divisible by divisor's least term"};
    if (step.t > t_bound || step.u > u_bound)
      return DivisionObstruction{rem_low, rem_coeff, "quotient term outside the degree/weight bounds"};
    if (quotient_top < step)
      return DivisionObstruction{rem_low, rem_coeff, "quotient term beyond the forced leading term"};
    if (step == quotient_top && step_coeff != quotient_top_coeff)
      return DivisionObstruction{rem_low, rem_coeff, "leading quotient coefficient mismatch"};

    quotient.add_term(step, step_coeff);
    for (const auto& [mono, c] : divisor.terms())
      remainder.add_term({mono.t + step.t, mono.u + step.u}, -(c * step_coeff));
  }
  return quotient;
}

}  // namespace leray
