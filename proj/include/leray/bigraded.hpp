#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "leray/rational.hpp"

namespace leray {

/// Monomial t^t u^u. Ordered lexicographically with t before u.
struct Monomial {
  long t = 0;  // cohomological degree
  long u = 0;  // weight

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Polynomial in a degree variable t and a weight variable u with rational
/// coefficients. Zero coefficients are never stored; the zero polynomial is
/// the empty term map. Poincaré–Serre data additionally has nonnegative
/// integer coefficients, checked by is_poincare_serre() rather than enforced.
class BigradedPolynomial {
 public:
  using TermMap = std::map<Monomial, Rational>;

  BigradedPolynomial() = default;
  BigradedPolynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)

  static BigradedPolynomial monomial(long t, long u, const Rational& coeff = Rational(1));
  /// 1 + t^deg u^weight, the Poincaré–Serre polynomial of one odd generator
  /// or of an odd sphere.
  static BigradedPolynomial one_plus(long t, long u);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(long t, long u) const;

  /// Adds coeff·t^t u^u, erasing the entry if it cancels.
  void add_term(Monomial m, const Rational& coeff);

  /// Lex-least and lex-greatest terms. Precondition: nonzero.
  const TermMap::value_type& least_term() const;
  const TermMap::value_type& greatest_term() const;
  long max_t() const;
  long max_u() const;

  /// Specializes u = 1, merging terms that share a t exponent.
  BigradedPolynomial forget_weights() const;

  /// True iff every coefficient is a nonnegative integer.
  bool is_poincare_serre() const;

  /// Coefficients of t^0..t^max_t after forgetting weights. Throws
  /// std::domain_error unless is_poincare_serre().
  std::vector<std::int64_t> betti_numbers() const;

  BigradedPolynomial& operator+=(const BigradedPolynomial& rhs);
  BigradedPolynomial& operator-=(const BigradedPolynomial& rhs);
  friend BigradedPolynomial operator+(BigradedPolynomial a, const BigradedPolynomial& b) { return a += b; }
  friend BigradedPolynomial operator-(BigradedPolynomial a, const BigradedPolynomial& b) { return a -= b; }
  friend BigradedPolynomial operator*(const BigradedPolynomial& a, const BigradedPolynomial& b);
  friend bool operator==(const BigradedPolynomial&, const BigradedPolynomial&) = default;

  /// Ascending (t,u)-lex order, "·" between factors:
  /// "1 + t·u^2 + t^3·u^4 + t^4·u^6".
  std::string to_string() const;

 private:
  TermMap terms_;
};

/// The term of the running remainder at which exact division broke down.
struct DivisionObstruction {
  Monomial at;
  Rational coefficient;
  std::string reason;
};

class DivisionResult {
 public:
  DivisionResult(BigradedPolynomial quotient) : value_(std::move(quotient)) {}  // NOLINT
  DivisionResult(DivisionObstruction failure) : value_(std::move(failure)) {}   // NOLINT

  bool exact() const { return std::holds_alternative<BigradedPolynomial>(value_); }
  explicit operator bool() const { return exact(); }
  const BigradedPolynomial& quotient() const { return std::get<BigradedPolynomial>(value_); }
  const DivisionObstruction& obstruction() const { return std::get<DivisionObstruction>(value_); }

 private:
  std::variant<BigradedPolynomial, DivisionObstruction> value_;
};

/// Finds q with q * divisor == total, or reports the first obstructing term.
///
/// Works upward from the lex-least term: each step divides the least term of
/// the running remainder by the least term of the divisor. Since lex order is
/// a monomial order, the greatest term of q must be
/// greatest(total)/greatest(divisor), and every quotient term lies in the box
/// [0, max_t(total)-max_t(divisor)] x [0, max_u(total)-max_u(divisor)]; a step
/// that leaves either constraint fails at the current remainder term.
///
/// Throws std::invalid_argument if divisor is zero.
DivisionResult exact_divide(const BigradedPolynomial& total, const BigradedPolynomial& divisor);

}  // namespace leray
