#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "leray/rational.hpp"

namespace leray {

/// Element of the truncated polynomial ring Q[h]/(h^m). All Chern-class
/// arithmetic lives here. The coefficient vector always has exactly m
/// entries; index i holds the coefficient of h^i.
///
/// Series of different truncation orders never mix: every binary operation
/// throws std::invalid_argument on an order mismatch. Use truncate_to() to
/// move to a coarser ring explicitly.
class TruncatedSeries {
 public:
  /// Reduces `coeffs` modulo h^order: shorter lists are zero-padded, longer
  /// lists drop their high terms.
  TruncatedSeries(std::size_t order, std::vector<Rational> coeffs);
  TruncatedSeries(std::size_t order, std::initializer_list<Rational> coeffs)
      : TruncatedSeries(order, std::vector<Rational>(coeffs)) {}

  static TruncatedSeries zero(std::size_t order) { return {order, std::vector<Rational>{}}; }
  static TruncatedSeries one(std::size_t order) { return {order, {Rational(1)}}; }
  /// c0 + c1*h
  static TruncatedSeries linear(std::size_t order, const Rational& c0, const Rational& c1) {
    return {order, {c0, c1}};
  }

  std::size_t order() const { return coeffs_.size(); }
  const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_unit() const { return !coeffs_.front().is_zero(); }

  /// Image in Q[h]/(h^m) for m <= order().
  TruncatedSeries truncate_to(std::size_t m) const;

  TruncatedSeries& operator+=(const TruncatedSeries& rhs);
  TruncatedSeries& operator-=(const TruncatedSeries& rhs);
  TruncatedSeries& operator*=(const Rational& scalar);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& s) { return a *= s; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  /// "1 - h + 3·h^2"; zero series prints as "0".
  std::string to_string(char variable = 'h') const;

 private:
  std::vector<Rational> coeffs_;
};

/// Multiplicative inverse; throws std::domain_error("non-unit") when the
/// constant term vanishes.
TruncatedSeries inverse(const TruncatedSeries& a);

/// a^k for any integer k; k < 0 goes through inverse(). pow(a, 0) == 1.
TruncatedSeries pow(const TruncatedSeries& a, long k);

}  // namespace leray
