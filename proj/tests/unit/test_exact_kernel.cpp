#include <doctest.h>

#include <functional>
#include <random>

#include "iterasym/combinatorics.hpp"
#include "iterasym/errors.hpp"
#include "iterasym/ratpoly.hpp"
#include "support.hpp"

using namespace iterasym;
using testing::Q;

TEST_SUITE("exact-kernel") {

TEST_CASE("rationals stay in lowest terms with a positive denominator") {
  const Rational r(6, -4);
  CHECK(r.toString() == "-3/2");
  CHECK(r.denominator() > 0);
  CHECK(Q("10/4") == Rational(5, 2));
  CHECK(Q("-0/7").isZero());
  CHECK(Q("0").toString() == "0");
  CHECK_THROWS_AS(Q("1/0"), ValidationError);
  CHECK_THROWS_AS(Q("abc"), ValidationError);
  CHECK_THROWS_AS(Q("1 /2"), ValidationError);
}

TEST_CASE("reduced parsing rejects unreduced and signed denominators") {
  CHECK(Rational::parseReduced("-3/2") == Rational(-3, 2));
  CHECK_THROWS_AS(Rational::parseReduced("2/4"), ValidationError);
  CHECK_THROWS_AS(Rational::parseReduced("3/-2"), ValidationError);
  CHECK_THROWS_AS(Rational::parseReduced("1/0"), ValidationError);
}

TEST_CASE("rational arithmetic is exact beyond machine range") {
  Rational x = factorial(30) / factorial(28);
  CHECK(x == Rational(870));
  Rational big = Q("1/3");
  for (int i = 0; i < 200; ++i) big *= Rational(3, 2);
  for (int i = 0; i < 200; ++i) big /= Rational(3, 2);
  CHECK(big == Q("1/3"));
  CHECK(binomial(50, 25).toString() == "126410606437752");
  CHECK(binomial(4, 5).isZero());
}

TEST_CASE("property: (a + b) - b == a for random rationals") {
  std::mt19937 rng(7);
  for (int k = 0; k < 500; ++k) {
    const Rational a = testing::randomRational(rng) / testing::randomRational(rng, true);
    const Rational b = testing::randomRational(rng) * Rational(1000003);
    CHECK((a + b) - b == a);
    if (!b.isZero()) CHECK((a * b) / b == a);
    CHECK(Rational::parseReduced(a.toString()) == a);
  }
}

TEST_CASE("falling factorial examples") {
  CHECK(fallingFactorial(Rational(-1), 2) == Rational(2));
  CHECK(fallingFactorial(Rational(-2), 3) == Rational(-24));
  CHECK(fallingFactorial(Q("-1/2"), 2) == Q("3/4"));
  CHECK(fallingFactorial(Q("5/3"), 1) == Q("5/3"));
  CHECK_THROWS_AS(fallingFactorial(Rational(1), 0), ValidationError);
}

TEST_CASE("property: falling factorial recurrence") {
  std::mt19937 rng(11);
  for (int t = 0; t < 50; ++t) {
    const Rational x = testing::randomRational(rng) / Rational(3);
    for (int k = 2; k <= 9; ++k) {
      CHECK(fallingFactorial(x, k) == fallingFactorial(x, k - 1) * (x - Rational(k - 1)));
    }
  }
}

TEST_CASE("multinomial examples") {
  const std::vector<int> a{2, 0, 0}, b{1, 1}, c{2, 1};
  CHECK(multinomial(2, a) == Rational(1));
  CHECK(multinomial(2, b) == Rational(2));
  CHECK(multinomial(3, c) == Rational(3));
  const std::vector<int> bad{1, 1};
  CHECK_THROWS_AS(multinomial(3, bad), ValidationError);
}

TEST_CASE("partition examples") {
  auto sols = partitions(7, 1, 0);
  REQUIRE(sols.size() == 1);
  CHECK(sols[0].n == std::vector<int>{1, 0, 0, 0, 0, 0, 0});

  sols = partitions(7, 2, 1);
  REQUIRE(sols.size() == 1);
  CHECK(sols[0].n == std::vector<int>{0, 1, 0, 0, 0, 0, 0});

  sols = partitions(4, 4, 2);
  REQUIRE(sols.size() == 2);
  CHECK(sols[0].n == std::vector<int>{0, 2, 0, 0});
  CHECK(sols[1].n == std::vector<int>{1, 0, 1, 0});

  CHECK(partitions(3, 2, 3).empty());
  CHECK(partitions(1, 3, 1).empty());
}

TEST_CASE("property: partitions agree with brute force over the box") {
  for (int k = 1; k <= 7; ++k) {
    for (int m = 0; m <= 8; ++m) {
      for (int s = 0; s <= m; ++s) {
        std::vector<std::vector<int>> brute;
        std::vector<int> n(static_cast<std::size_t>(k), 0);
        std::function<void(int)> rec = [&](int i) {
          if (i == k) {
            int w = 0, c = 0;
            for (int j = 0; j < k; ++j) {
              w += (j + 1) * n[static_cast<std::size_t>(j)];
              c += n[static_cast<std::size_t>(j)];
            }
            if (w == m && c == m - s) brute.push_back(n);
            return;
          }
          for (int v = 0; v <= m; ++v) {
            n[static_cast<std::size_t>(i)] = v;
            rec(i + 1);
          }
          n[static_cast<std::size_t>(i)] = 0;
        };
        rec(0);
        const auto sols = partitions(k, m, s);
        REQUIRE(sols.size() == brute.size());
        for (std::size_t q = 0; q < sols.size(); ++q) CHECK(sols[q].n == brute[q]);  // both lexicographic
      }
    }
  }
}

TEST_CASE("polynomial algebra") {
  const RatPoly p{Q("-1/2"), Rational(1)};  // X - 1/2
  CHECK(p.toString() == "X - 1/2");
  CHECK((p * p) == RatPoly{Q("1/4"), Rational(-1), Rational(1)});
  CHECK(p.derivative() == RatPoly{Rational(1)});
  CHECK(p.scaleArgument(Rational(-2)) == RatPoly{Q("-1/2"), Rational(-2)});
  CHECK(p.shift(Rational(1)) == RatPoly{Q("1/2"), Rational(1)});
  CHECK(p.compose(p) == RatPoly{Rational(-1), Rational(1)});
  CHECK(RatPoly::fromDescending(testing::Qs({"1", "-1/2"})) == p);
  CHECK((p - p).isZero());
  CHECK((p - p).degree() == -1);
  CHECK(p(Q("1/2")).isZero());
}

}  // TEST_SUITE
