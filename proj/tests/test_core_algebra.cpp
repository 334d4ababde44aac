#include <doctest.h>

#include <random>

#include "leray/bigraded.hpp"
#include "leray/exterior.hpp"
#include "leray/series.hpp"
#include "oracles.hpp"

using namespace leray;

namespace {

Rational q(long n, long d = 1) { return Rational(BigInt(n), BigInt(d)); }

TruncatedSeries series(std::size_t m, std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return {m, v};
}

}  // namespace

TEST_SUITE("rational") {
  TEST_CASE("parse accepts canonical and non-canonical forms") {
    CHECK(Rational::parse("3") == q(3));
    CHECK(Rational::parse("-1/2") == q(-1, 2));
    CHECK(Rational::parse("4/6").to_string() == "2/3");
    CHECK(Rational::parse("0/5").is_zero());
    CHECK(Rational::parse("123456789012345678901234567890").to_string() == "123456789012345678901234567890");
  }

  TEST_CASE("parse rejects decimals, blanks and zero denominators") {
    for (const char* bad : {"", "1.5", "1/0", " 1", "1/-2", "--1", "1/", "/2", "0x10", "1e3", "+1"})
      CHECK_THROWS_AS(Rational::parse(bad), std::invalid_argument);
  }

  TEST_CASE("lowest terms with positive denominator") {
    const Rational r(BigInt(6), BigInt(-4));
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK_THROWS_AS(q(1) / q(0), std::domain_error);
    CHECK_THROWS_AS(q(1, 2).to_integer(), std::domain_error);
  }
}

TEST_SUITE("series") {
  TEST_CASE("multiplication examples") {
    CHECK(series(3, {1, 1}) * series(3, {1, -1}) == series(3, {1, 0, -1}));
    CHECK(pow(series(3, {1, 1}), 3) == series(3, {1, 3, 3}));
    CHECK(series(2, {1, 2, 1}) * series(2, {1, 1}) == series(2, {1, 3}));
  }

  TEST_CASE("mismatched orders never mix") {
    CHECK_THROWS_AS(series(3, {1}) * series(2, {1}), std::invalid_argument);
    CHECK_THROWS_AS(series(3, {1}) + series(4, {1}), std::invalid_argument);
    CHECK_THROWS_AS(TruncatedSeries(0, {q(1)}), std::invalid_argument);
    CHECK(series(4, {1, 2, 3, 4}).truncate_to(2) == series(2, {1, 2}));
    CHECK_THROWS_AS(series(2, {1}).truncate_to(3), std::invalid_argument);
  }

  TEST_CASE("inverse examples") {
    CHECK(inverse(series(4, {1, -1})) == series(4, {1, 1, 1, 1}));
    CHECK(pow(inverse(series(3, {1, 1})), 3) == series(3, {1, -3, 6}));
    CHECK(inverse(series(2, {2})) == TruncatedSeries(2, {q(1, 2)}));
    CHECK_THROWS_WITH_AS(inverse(series(3, {0, 1})), "non-unit", std::domain_error);
  }

  TEST_CASE("pow examples") {
    CHECK(pow(series(3, {1, 1}), -2) == series(3, {1, -2, 3}));
    CHECK(pow(series(5, {7, 3, 1}), 0) == TruncatedSeries::one(5));
    const auto lhs = inverse(series(2, {1, 2})) * inverse(series(2, {1, -1}));
    CHECK(lhs == series(2, {1, -1}));
    CHECK_THROWS_AS(pow(series(3, {0, 1}), -1), std::domain_error);
  }

  TEST_CASE("printing") {
    CHECK(series(3, {1, -1, 3}).to_string() == "1 - h + 3·h^2");
    CHECK(TruncatedSeries::zero(2).to_string() == "0");
    CHECK(TruncatedSeries(2, {q(0), q(-1, 2)}).to_string() == "-1/2·h");
  }

  TEST_CASE("powers of a linear series match the generalized binomial oracle") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> exponent(-9, 9);
    for (int trial = 0; trial < 200; ++trial) {
      const Rational a = oracle::random_rational(rng);
      const long k = exponent(rng);
      const std::size_t m = 1 + static_cast<std::size_t>(trial % 9);
      CHECK(pow(TruncatedSeries::linear(m, q(1), a), k) == TruncatedSeries(m, oracle::binomial_series(a, k, m)));
    }
  }

  TEST_CASE("property: a * inverse(a) == 1 and inverse is an involution") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
      const std::size_t m = 1 + static_cast<std::size_t>(trial % 12);
      std::vector<Rational> c{oracle::random_nonzero_rational(rng)};
      for (std::size_t i = 1; i < m; ++i) c.push_back(oracle::random_rational(rng));
      const TruncatedSeries a(m, c);
      CHECK(a * inverse(a) == TruncatedSeries::one(m));
      CHECK(inverse(inverse(a)) == a);
    }
  }

  TEST_CASE("property: multiplication is commutative and associative") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t m = 6;
      auto rand_series = [&] {
        std::vector<Rational> c;
        for (std::size_t i = 0; i < m; ++i) c.push_back(oracle::random_rational(rng));
        return TruncatedSeries(m, c);
      };
      const auto a = rand_series(), b = rand_series(), c = rand_series();
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * TruncatedSeries::one(m) == a);
    }
  }
}

TEST_SUITE("bigraded") {
  using P = BigradedPolynomial;

  TEST_CASE("multiplication examples") {
    CHECK(P::one_plus(1, 2) * P(q(1)) == P::one_plus(1, 2));
    const P gl2 = P::one_plus(1, 2) * P::one_plus(3, 4);
    P expected(q(1));
    expected.add_term({1, 2}, q(1));
    expected.add_term({3, 4}, q(1));
    expected.add_term({4, 6}, q(1));
    CHECK(gl2 == expected);
    CHECK((P::one_plus(1, 0) * P::one_plus(1, 0)).to_string() == "1 + 2·t + t^2");
  }

  TEST_CASE("zero handling") {
    P p;
    CHECK(p.is_zero());
    p.add_term({2, 0}, q(3));
    p.add_term({2, 0}, q(-3));
    CHECK(p.is_zero());
    CHECK(p.to_string() == "0");
    CHECK_THROWS_AS(p.add_term({-1, 0}, q(1)), std::invalid_argument);
  }

  TEST_CASE("exact division examples") {
    const P gl3 = P::one_plus(1, 2) * P::one_plus(3, 4) * P::one_plus(5, 6);
    const auto self = exact_divide(gl3, gl3);
    REQUIRE(self.exact());
    CHECK(self.quotient() == P(q(1)));

    const auto m24 = exact_divide(gl3 * P::one_plus(6, 12), gl3);
    REQUIRE(m24.exact());
    CHECK(m24.quotient() == P::one_plus(6, 12));

    const auto bad = exact_divide(P::one_plus(2, 0), P::one_plus(1, 0));
    REQUIRE_FALSE(bad.exact());
    CHECK(bad.obstruction().at == Monomial{1, 0});
    CHECK(bad.obstruction().coefficient == q(-1));
  }

  TEST_CASE("division edge cases") {
    CHECK_THROWS_AS(exact_divide(P(q(1)), P{}), std::invalid_argument);
    const auto zero = exact_divide(P{}, P::one_plus(1, 2));
    REQUIRE(zero.exact());
    CHECK(zero.quotient().is_zero());
    // 1 / (1 + t): the geometric series does not terminate
    CHECK_FALSE(exact_divide(P(q(1)), P::one_plus(1, 0)).exact());
    // u^3 is not divisible by t
    CHECK_FALSE(exact_divide(P::monomial(0, 3), P::monomial(1, 0)).exact());
    // scalar division
    const auto half = exact_divide(P::one_plus(1, 1), P(q(2)));
    REQUIRE(half.exact());
    CHECK(half.quotient() * P(q(2)) == P::one_plus(1, 1));
  }

  TEST_CASE("sparse product agrees with dense 2D convolution") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
      const auto a = oracle::random_polynomial(rng, 6, 5);
      const auto b = oracle::random_polynomial(rng, 6, 5);
      CHECK(a * b == oracle::dense_product(a, b));
    }
  }

  TEST_CASE("property: divide(q*d, d) == q") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
      const auto quotient = oracle::random_polynomial(rng, 8, 6);
      const auto divisor = oracle::random_polynomial(rng, 8, 6);
      const auto result = exact_divide(quotient * divisor, divisor);
      REQUIRE(result.exact());
      CHECK(result.quotient() == quotient);
    }
  }

  TEST_CASE("Poincaré–Serre validation and Betti numbers") {
    const P gl2 = P::one_plus(1, 2) * P::one_plus(3, 4);
    CHECK(gl2.is_poincare_serre());
    CHECK(gl2.betti_numbers() == std::vector<std::int64_t>{1, 1, 0, 1, 1});
    P neg = gl2;
    neg.add_term({2, 0}, q(-1));
    CHECK_FALSE(neg.is_poincare_serre());
    CHECK_THROWS_AS(neg.betti_numbers(), std::domain_error);
    CHECK_FALSE(P::monomial(0, 0, q(1, 2)).is_poincare_serre());
  }
}

TEST_SUITE("exterior") {
  const ExteriorAlgebra alg3({1, 3, 5});

  TEST_CASE("wedge examples") {
    const auto z1 = ExteriorElement::generator(alg3, 1);
    const auto z2 = ExteriorElement::generator(alg3, 2);
    const auto z3 = ExteriorElement::generator(alg3, 3);
    CHECK(wedge(z1, z1).is_zero());
    CHECK(wedge(z2, z1) == ExteriorElement::basis(alg3, {1, 2}, q(-1)));
    CHECK(wedge(z1 + z2, z3) == ExteriorElement::basis(alg3, {1, 3}) + ExteriorElement::basis(alg3, {2, 3}));
    CHECK(wedge(z2, z1).to_string() == "-z1∧z2");
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(ExteriorAlgebra({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(ExteriorAlgebra({-1}), std::invalid_argument);
    const ExteriorAlgebra other({1, 3});
    CHECK_THROWS_AS(wedge(ExteriorElement::generator(alg3, 1), ExteriorElement::generator(other, 1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(ExteriorElement::generator(alg3, 4), std::invalid_argument);
    CHECK_THROWS_AS(ExteriorElement::basis(alg3, {2, 1}), std::invalid_argument);
  }

  TEST_CASE("basis examples") {
    const auto b1 = exterior_basis(ExteriorAlgebra({1}));
    REQUIRE(b1.size() == 2);
    CHECK(b1[0] == BasisMonomial{{}, 0});
    CHECK(b1[1] == BasisMonomial{{1}, 1});

    std::vector<int> degs;
    for (const auto& m : exterior_basis(ExteriorAlgebra({1, 3}))) degs.push_back(m.degree);
    CHECK(degs == std::vector<int>{0, 1, 3, 4});

    const auto b3 = exterior_basis(alg3);
    CHECK(b3.size() == 8);
    CHECK(b3.back().degree == 9);
    CHECK(b3[3].subset == std::vector<std::size_t>{1, 2});
    CHECK(b3[4].subset == std::vector<std::size_t>{3});

    // z1∧z4 and z2∧z3 both sit in degree 8; ties go by subset
    const auto b4 = exterior_basis(ExteriorAlgebra({1, 3, 5, 7}));
    std::vector<std::vector<std::size_t>> deg8;
    for (const auto& m : b4)
      if (m.degree == 8) deg8.push_back(m.subset);
    CHECK(deg8 == std::vector<std::vector<std::size_t>>{{1, 4}, {2, 3}});
  }

  TEST_CASE("monomial sign matches bubble-sort permutation parity") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 2000; ++trial) {
      const SubsetMask a = rng() & 0x3ff;
      const SubsetMask b = rng() & 0x3ff & ~a;
      std::vector<std::size_t> seq = subset_indices(a);
      for (std::size_t i : subset_indices(b)) seq.push_back(i);
      CHECK(wedge_sign(a, b) == oracle::permutation_sign(seq));
    }
    CHECK(wedge_sign(0b11, 0b10) == 0);
  }

  TEST_CASE("property: associativity and graded commutativity") {
    const ExteriorAlgebra alg({1, 3, 5, 7, 9, 11});
    std::mt19937_64 rng(29);
    auto random_element = [&] {
      ExteriorElement e(alg);
      for (int k = 0; k < 4; ++k) e.add_term(rng() & 0x3f, oracle::random_rational(rng));
      return e;
    };
    auto random_homogeneous = [&] {
      const SubsetMask s = rng() & 0x3f;
      ExteriorElement e(alg);
      e.add_term(s, oracle::random_nonzero_rational(rng));
      return e;
    };
    for (int trial = 0; trial < 300; ++trial) {
      const auto a = random_element(), b = random_element(), c = random_element();
      CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
      const auto x = random_homogeneous(), y = random_homogeneous();
      const int sign = (x.degree() * y.degree()) % 2 == 0 ? 1 : -1;
      CHECK(wedge(x, y) == wedge(y, x) * Rational(sign));
    }
  }
}
