#include <doctest.h>

#include <vector>

#include "leray/hypersurface.hpp"
#include "oracles.hpp"

using namespace leray;

namespace {

ModuliInstance inst(int n, int d) { return ModuliInstance::make(n, d); }

}  // namespace

TEST_CASE("instance validation and flags") {
  CHECK_THROWS_AS(ModuliInstance::make(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(ModuliInstance::make(2, 1), std::invalid_argument);
  CHECK(inst(2, 3).satisfies_hypothesis());
  CHECK_FALSE(inst(2, 2).satisfies_hypothesis());
  CHECK(inst(1, 3).transitive_action());
  CHECK(inst(4, 2).transitive_action());
  CHECK_FALSE(inst(2, 3).transitive_action());
}

TEST_CASE("discriminant degree") {
  CHECK(discriminant_degree(inst(1, 2)) == 2);
  CHECK(discriminant_degree(inst(2, 4)) == 27);
  CHECK(discriminant_degree(inst(3, 3)) == 32);
}

TEST_CASE("Milnor numbers and the slice multiplier") {
  const std::vector<int> single{5};
  const std::vector<int> node{2, 2, 2, 2};
  const std::vector<int> a33{3, 3};
  const std::vector<int> bad{3, 1};
  CHECK(milnor_brieskorn(single) == 4);
  CHECK(milnor_brieskorn(node) == 1);
  CHECK(milnor_brieskorn(a33) == 4);
  CHECK_THROWS_AS(milnor_brieskorn(bad), std::invalid_argument);
  CHECK(iota_multiplier(inst(2, 3)) == 2);
  CHECK(iota_multiplier(inst(2, 2)) == 1);
  CHECK(iota_multiplier(inst(2, 5)) == 4);
}

TEST_CASE("Gauss map Chern series") {
  CHECK(gauss_chern_total(inst(2, 3)) == TruncatedSeries(2, {Rational(1), Rational(-1)}));
  CHECK(gauss_chern_total(inst(3, 3)) == TruncatedSeries(3, {Rational(1), Rational(-1), Rational(3)}));
  for (int n = 1; n <= 12; ++n) {
    const auto s = gauss_chern_total(inst(n, 2));
    CHECK(s[static_cast<std::size_t>(n - 1)] == Rational(n % 2 == 1 ? 1 : 0));
  }
}

TEST_CASE("Chern top coefficient and degree") {
  CHECK(chern_top_coefficient(inst(2, 3)) == Rational(-1));
  CHECK(chern_top_coefficient(inst(3, 3)) == Rational(3));
  CHECK(chern_top_coefficient(inst(2, 2)) == Rational(0));
  CHECK(chern_degree(inst(2, 3)) == -3);
  CHECK(chern_degree(inst(3, 3)) == 9);
  for (int n = 1; n <= 9; ++n) CHECK(chern_degree(inst(n, 2)) == (n % 2 == 0 ? 0 : 2));
}

TEST_CASE("[T_1], [T_2] and the pullback coefficient") {
  CHECK(t2_coefficient(inst(2, 3)) == -3);
  CHECK(t2_coefficient(inst(3, 3)) == -9);
  for (int d = 2; d <= 9; ++d) CHECK(t2_coefficient(inst(1, d)) == -d);

  CHECK(t1_multiplicity(inst(2, 3)) == 12);
  CHECK(t1_multiplicity(inst(1, 2)) == 2);
  CHECK(t1_multiplicity(inst(3, 4)) == 108);

  CHECK(pullback_coefficient(inst(2, 3)) == 9);
  CHECK(pullback_coefficient(inst(2, 4)) == 28);
  CHECK(pullback_coefficient(inst(1, 2)) == 0);
}

TEST_CASE("codimension bookkeeping") {
  CHECK(codim_sigma_ell(inst(2, 4), 1) == 1);
  CHECK(codim_sigma_ell(inst(2, 4), 3) == 3);
  CHECK_THROWS_AS(codim_sigma_ell(inst(2, 4), 4), std::invalid_argument);
  CHECK_THROWS_AS(codim_sigma_ell(inst(2, 4), 0), std::invalid_argument);
}

TEST_CASE("verify_instance") {
  const auto r23 = verify_instance(inst(2, 3));
  CHECK(r23.nonvanishing);
  CHECK(r23.discriminant_degree == 12);
  CHECK(r23.pullback_coefficient == r23.t1_multiplicity + r23.t2_coefficient);
  CHECK(r23.chern_degree == r23.chern_top_coefficient.to_integer() * 3);
  CHECK(verify_instance(inst(3, 3)).nonvanishing);
  const auto r32 = verify_instance(inst(3, 2));
  CHECK_FALSE(r32.nonvanishing);
  CHECK_FALSE(r32.satisfies_hypothesis());
  CHECK(render_table(r23).ends_with("nonvanishing: true\n"));
  CHECK(render_table(r32).ends_with("nonvanishing: false\n"));
}

TEST_CASE("Whitney route reproduces the direct series") {
  for (int n = 1; n <= 15; ++n)
    for (int d = 2; d <= 15; ++d) CHECK(gauss_chern_total_whitney(inst(n, d)) == gauss_chern_total(inst(n, d)));
}

TEST_CASE("three routes to c_{n-1} agree and are integral") {
  for (int n = 1; n <= 12; ++n) {
    for (int d = 2; d <= 12; ++d) {
      const auto i = inst(n, d);
      const Rational series_value = gauss_chern_total(i)[static_cast<std::size_t>(n - 1)];
      CHECK(series_value == Rational(oracle::geometric_sum(n, d)));
      CHECK(series_value == chern_top_closed_form(i));
      CHECK(series_value.is_integer());
      for (int k = 0; k < n; ++k)
        CHECK(gauss_chern_total(i)[static_cast<std::size_t>(k)] == Rational(oracle::gauss_coefficient(k, d)));
    }
  }
}

TEST_CASE("nonvanishing pattern on a small grid") {
  for (int n = 1; n <= 12; ++n) {
    for (int d = 2; d <= 12; ++d) {
      const auto r = verify_instance(inst(n, d));
      CHECK(r.nonvanishing == (d >= 3 || n % 2 == 0));
    }
  }
}
