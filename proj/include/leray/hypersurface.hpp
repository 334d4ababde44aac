#pragma once

#include <span>
#include <stdexcept>
#include <string>

#include "leray/rational.hpp"
#include "leray/series.hpp"

namespace leray {

/// Smooth degree-d hypersurfaces in P^n, acted on by GL_{n+1}.
struct ModuliInstance {
  int n = 1;
  int d = 3;

  /// Throws std::invalid_argument unless n >= 1 and d >= 2.
  static ModuliInstance make(int n, int d);

  /// d >= 3, the range where the nonvanishing certificate is claimed.
  bool satisfies_hypothesis() const { return d >= 3; }
  /// GL_{n+1} acts transitively on smooth equations: d <= 2 or (d, n) = (3, 1).
  bool transitive_action() const { return d <= 2 || (d == 3 && n == 1); }

  friend bool operator==(const ModuliInstance&, const ModuliInstance&) = default;
};

/// Raised when two independent routes to the same quantity disagree.
class CrossCheckFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct VerifierReport {
  ModuliInstance instance;
  BigInt discriminant_degree;
  BigInt iota_multiplier;
  BigInt t1_multiplicity;
  BigInt t2_coefficient;
  BigInt pullback_coefficient;
  Rational chern_top_coefficient;
  BigInt chern_degree;
  bool nonvanishing = false;

  bool satisfies_hypothesis() const { return instance.satisfies_hypothesis(); }
  friend bool operator==(const VerifierReport&, const VerifierReport&) = default;
};

/// (n+1)(d-1)^n
BigInt discriminant_degree(const ModuliInstance& inst);

/// Milnor number of x_1^{a_1} + ... + x_k^{a_k}: prod (a_i - 1). Throws
/// std::invalid_argument for an exponent below 2.
BigInt milnor_brieskorn(std::span<const int> exponents);

/// Intersection multiplicity of the discriminant with the slice
/// h -> x_0^d + h: adding x_0^d scales Milnor numbers by d - 1.
BigInt iota_multiplier(const ModuliInstance& inst);

/// c(gamma^* E / F) = (1+(d-1)h)^{-1} (1-h)^{-1} in Q[h]/(h^n), the ring of
/// the (n-1)-dimensional hypersurface X.
TruncatedSeries gauss_chern_total(const ModuliInstance& inst);

/// The same class reached through the exact sequences instead:
/// c(gamma^* E) / c(F) with
///   0 -> E -> O^{(n+1)^2} -> O(1)^{n+1} -> 0              on P^n,
///   0 -> O_X(-1) -> O_X^{n+1} -> Q_X -> 0                  on X,
///   0 -> F -> O_X^{(n+1)^2} -> Q_X + O_X(d-1)^n -> 0       on X,
/// and gamma^* O(1) = O_X(d-1).
TruncatedSeries gauss_chern_total_whitney(const ModuliInstance& inst);

/// (1 - (1-d)^n) / d, evaluated directly.
Rational chern_top_closed_form(const ModuliInstance& inst);

/// Coefficient of h^{n-1} in gauss_chern_total. Throws CrossCheckFailure if
/// it differs from chern_top_closed_form or is not an integer.
Rational chern_top_coefficient(const ModuliInstance& inst);

/// deg c_{n-1} on X = d * chern_top_coefficient = 1 - (1-d)^n.
BigInt chern_degree(const ModuliInstance& inst);

/// d (d-1)^n
BigInt t1_multiplicity(const ModuliInstance& inst);

/// [T_2] = (-1)^n (1 - (1-d)^n) [T_1]; closed form checked against the
/// transposition sign times chern_degree.
BigInt t2_coefficient(const ModuliInstance& inst);

/// t1_multiplicity + t2_coefficient, checked against (d-1)^{n+1} + (-1)^n.
BigInt pullback_coefficient(const ModuliInstance& inst);

/// Codimension of Sigma^{(l)} in the space of equations, 1 <= l <= n+1.
/// Also checks that it matches the codimension of D_{n+1,l}, so that the
/// class lands in supported degree 2l, one above deg eta_l = 2l-1.
int codim_sigma_ell(const ModuliInstance& inst, int l);

/// Runs every computation above, with all two-route checks. Throws
/// CrossCheckFailure on any disagreement and when a d >= 3 instance fails
/// to be nonvanishing.
VerifierReport verify_instance(const ModuliInstance& inst);

/// Right-aligned "key: value" table ending in "nonvanishing: <bool>".
std::string render_table(const VerifierReport& report);

}  // namespace leray
