#pragma once

#include <string>
#include <vector>

#include "leray/rational.hpp"

namespace leray::detail {

inline std::string power(char variable, long exponent) {
  std::string s(1, variable);
  if (exponent != 1) s += "^" + std::to_string(exponent);
  return s;
}

// Joins signed terms as "1 - t + 3/2·t^2·u". Unit coefficients are elided
// unless the term is a constant.
class TermWriter {
 public:
  void add(const Rational& coeff, const std::vector<std::string>& factors) {
    const bool negative = coeff.sign() < 0;
    const Rational magnitude = negative ? -coeff : coeff;
    if (out_.empty())
      out_ = negative ? "-" : "";
    else
      out_ += negative ? " - " : " + ";
    std::string body;
    if (factors.empty() || magnitude != Rational(1)) body = magnitude.to_string();
    for (const auto& f : factors) {
      if (!body.empty()) body += "·";
      body += f;
    }
    out_ += body;
  }

  std::string str() const { return out_.empty() ? "0" : out_; }

 private:
  std::string out_;
};

}  // namespace leray::detail
