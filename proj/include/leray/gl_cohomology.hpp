#pragma once

#include <vector>

#include "leray/bigraded.hpp"
#include "leray/exterior.hpp"
#include "leray/series.hpp"

namespace leray {

/// Rational cohomology of GL_n(C): the exterior algebra on generators
/// eta_1..eta_n with eta_l in degree 2l-1 and of pure Hodge type (l,l),
/// i.e. weight 2l.
struct GLCohomology {
  int n = 0;
  ExteriorAlgebra algebra{{}};
  std::vector<int> weights;

  static GLCohomology make(int n);

  ExteriorElement eta(std::size_t l) const { return ExteriorElement::generator(algebra, l); }
  ExteriorElement unit() const { return ExteriorElement::scalar(algebra, Rational(1)); }
};

/// Degrees (1, 3, ..., 2n-1).
ExteriorAlgebra gl_algebra(int n);
bool is_gl_algebra(const ExteriorAlgebra& algebra);

/// prod_{l=1..n} (1 + t^{2l-1}). n == 0 gives 1 (the trivial group).
BigradedPolynomial gl_poincare(int n);

/// prod_{l=1..n} (1 + t^{2l-1} u^{2l}). n == 0 gives 1.
BigradedPolynomial gl_poincare_serre(int n);

/// H*(P^n) = Q[h]/(h^{n+1}).
struct ProjectiveSpaceCohomology {
  int n = 0;

  std::size_t order() const { return static_cast<std::size_t>(n) + 1; }
  TruncatedSeries hyperplane() const { return TruncatedSeries::linear(order(), Rational(0), Rational(1)); }
  TruncatedSeries one() const { return TruncatedSeries::one(order()); }
};

/// The variety Q_n of pairs (x, y) with y(x) = 1, homotopy equivalent to
/// S^{2n-1}. Its top class has weight 2n.
struct SphereModel {
  int n = 0;
  BigradedPolynomial poincare_serre;

  static SphereModel make(int n);
};

/// Checks PS(Q_n) * PS(GL_{n-1}) == PS(GL_n). Requires n >= 2.
bool sphere_fibration_check(int n);
/// Same identity with an arbitrary stand-in for PS(Q_n).
bool sphere_fibration_check(int n, const BigradedPolynomial& sphere);

/// Transposition g -> g^T: eta_l -> (-1)^{l-1} eta_l, extended
/// multiplicatively. Throws std::invalid_argument outside a GL algebra.
ExteriorElement transposition_involution(const ExteriorElement& x);

/// Inversion g -> g^{-1}: multiplication by (-1)^k on degree k.
ExteriorElement inversion_involution(const ExteriorElement& x);

/// Restriction along GL_{n-1} -> GL_n: eta_l -> eta_l for l < n, eta_n -> 0.
ExteriorElement restrict_to_subgroup(const ExteriorElement& x);

}  // namespace leray
