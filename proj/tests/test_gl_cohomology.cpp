#include <doctest.h>

#include "leray/gl_cohomology.hpp"

using namespace leray;

namespace {

using P = BigradedPolynomial;

P t_poly(std::initializer_list<long> exponents) {
  P p;
  for (long e : exponents) p.add_term({e, 0}, Rational(1));
  return p;
}

}  // namespace

TEST_CASE("gl_poincare examples") {
  CHECK(gl_poincare(0) == P(Rational(1)));
  CHECK(gl_poincare(1) == t_poly({0, 1}));
  CHECK(gl_poincare(2) == t_poly({0, 1, 3, 4}));
  const P gl3 = gl_poincare(3);
  CHECK(gl3.size() == 8);
  CHECK(gl3.max_t() == 9);
  for (const auto& [m, c] : gl3.terms()) CHECK(c == Rational(1));
}

TEST_CASE("gl_poincare_serre examples") {
  CHECK(gl_poincare_serre(1) == P::one_plus(1, 2));
  CHECK(gl_poincare_serre(2).to_string() == "1 + t·u^2 + t^3·u^4 + t^4·u^6");
  for (int n = 1; n <= 6; ++n) CHECK(gl_poincare_serre(n).forget_weights() == gl_poincare(n));
}

TEST_CASE("Betti sum 2^n and top degree n^2") {
  for (int n = 1; n <= 10; ++n) {
    const auto betti = gl_poincare(n).betti_numbers();
    std::int64_t sum = 0;
    for (auto b : betti) sum += b;
    CHECK(sum == (std::int64_t{1} << n));
    CHECK(static_cast<int>(betti.size()) - 1 == n * n);
  }
}

TEST_CASE("GLCohomology descriptor") {
  const auto gl = GLCohomology::make(4);
  CHECK(gl.algebra.degrees() == std::vector<int>{1, 3, 5, 7});
  CHECK(gl.weights == std::vector<int>{2, 4, 6, 8});
  CHECK(exterior_basis(gl.algebra).size() == 16);
  CHECK(exterior_basis(gl.algebra).back().degree == 16);
  CHECK_THROWS_AS(GLCohomology::make(0), std::invalid_argument);
}

TEST_CASE("projective space ring") {
  const ProjectiveSpaceCohomology p3{3};
  CHECK(p3.order() == 4);
  CHECK(pow(p3.hyperplane(), 3) == TruncatedSeries(4, {Rational(0), Rational(0), Rational(0), Rational(1)}));
  CHECK(pow(p3.hyperplane(), 4) == TruncatedSeries::zero(4));
}

TEST_CASE("sphere fibration") {
  CHECK(SphereModel::make(3).poincare_serre == P::one_plus(5, 6));
  CHECK(sphere_fibration_check(2));
  CHECK(sphere_fibration_check(5));
  CHECK_FALSE(sphere_fibration_check(2, P::one_plus(2, 2)));
  for (int n = 2; n <= 10; ++n) CHECK(sphere_fibration_check(n));
  CHECK_THROWS_AS(sphere_fibration_check(1), std::invalid_argument);
}

TEST_CASE("restriction drops the top generator factor") {
  for (int n = 2; n <= 8; ++n) {
    const auto r = exact_divide(gl_poincare_serre(n), P::one_plus(2 * n - 1, 2 * n));
    REQUIRE(r.exact());
    CHECK(r.quotient() == gl_poincare_serre(n - 1));
  }
  const auto gl3 = GLCohomology::make(3);
  const auto gl2 = GLCohomology::make(2);
  CHECK(restrict_to_subgroup(gl3.eta(1)) == gl2.eta(1));
  CHECK(restrict_to_subgroup(gl3.eta(2)) == gl2.eta(2));
  CHECK(restrict_to_subgroup(gl3.eta(3)).is_zero());
  CHECK(restrict_to_subgroup(wedge(gl3.eta(1), gl3.eta(3))).is_zero());
}

TEST_CASE("involution examples") {
  const auto gl = GLCohomology::make(3);
  const auto e123 = wedge(wedge(gl.eta(1), gl.eta(2)), gl.eta(3));
  CHECK(transposition_involution(gl.eta(1)) == gl.eta(1));
  CHECK(transposition_involution(gl.eta(2)) == gl.eta(2) * Rational(-1));
  CHECK(transposition_involution(e123) == e123 * Rational(-1));

  CHECK(inversion_involution(gl.eta(1)) == gl.eta(1) * Rational(-1));
  const auto e12 = wedge(gl.eta(1), gl.eta(2));
  CHECK(inversion_involution(e12) == e12);
  CHECK(inversion_involution(gl.unit()) == gl.unit());

  const ExteriorElement foreign = ExteriorElement::generator(ExteriorAlgebra({1, 5}), 1);
  CHECK_THROWS_AS(transposition_involution(foreign), std::invalid_argument);
  CHECK_THROWS_AS(inversion_involution(foreign), std::invalid_argument);
}

TEST_CASE("involutions are ring involutions and compose to (-1)^l on generators") {
  for (int n = 1; n <= 8; ++n) {
    const auto gl = GLCohomology::make(n);
    for (int l = 1; l <= n; ++l) {
      const auto eta = gl.eta(static_cast<std::size_t>(l));
      const Rational expected_sign(l % 2 == 0 ? 1 : -1);
      CHECK(inversion_involution(transposition_involution(eta)) == eta * expected_sign);
      CHECK(transposition_involution(eta) == eta * Rational((l - 1) % 2 == 0 ? 1 : -1));
    }
    for (const auto& m : exterior_basis(gl.algebra)) {
      const auto x = ExteriorElement::basis(gl.algebra, m.subset, Rational(3));
      CHECK(transposition_involution(transposition_involution(x)) == x);
      CHECK(inversion_involution(inversion_involution(x)) == x);
    }
    if (n <= 5) {
      for (const auto& a : exterior_basis(gl.algebra)) {
        for (const auto& b : exterior_basis(gl.algebra)) {
          const auto x = ExteriorElement::basis(gl.algebra, a.subset);
          const auto y = ExteriorElement::basis(gl.algebra, b.subset);
          CHECK(transposition_involution(wedge(x, y)) ==
                wedge(transposition_involution(x), transposition_involution(y)));
          CHECK(inversion_involution(wedge(x, y)) == wedge(inversion_involution(x), inversion_involution(y)));
        }
      }
    }
  }
}
