#include <vector>

#include "doctest.h"
#include "hamcode/constructions.hpp"
#include "hamcode/errors.hpp"
#include "hamcode/spectra.hpp"
#include "oracles.hpp"

using namespace hamcode;

TEST_CASE("binomial coefficients") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(11, 6) == 462);
  CHECK(binomial(24, 12) == 2704156);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(5, 6) == 0);
  for (long long n = 1; n <= 20; ++n) {
    for (long long k = 1; k <= n; ++k) {
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    }
  }
}

TEST_CASE("prime power recognition") {
  for (long long q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 121}) {
    CHECK(is_prime_power(q));
  }
  for (long long q : {0, 1, 6, 10, 12, 14, 15, 18, 20, 100}) {
    CHECK_FALSE(is_prime_power(q));
  }
}

TEST_CASE("sphere sizes") {
  CHECK(sphere_size(11, 2, 0) == 1);
  CHECK(sphere_size(11, 2, 1) == 11);
  CHECK(sphere_size(11, 2, 2) == 55);
  CHECK(sphere_size(5, 3, 2) == 40);
  CHECK(sphere_size(6, 6, 2) == 375);
  CHECK(sphere_size(7, 10, 2) == 1701);
  CHECK(sphere_size(8, 15, 2) == 5488);
  CHECK(sphere_size(9, 15, 2) == 7056);
  CHECK(sphere_size(24, 23, 2) == 133584);
  CHECK(sphere_size(7, 6, 2) == 525);
  CHECK_THROWS_AS(sphere_size(5, 2, 6), std::domain_error);
}

TEST_CASE("krawtchouk values match the generating function") {
  for (int q : {2, 3, 4}) {
    for (int m = 1; m <= 8; ++m) {
      for (int k = 0; k <= m; ++k) {
        for (int x = 0; x <= m; ++x) {
          CHECK(krawtchouk(m, q, k, x) == oracles::kraw_by_series(m, q, k, x));
        }
      }
    }
  }
  CHECK_THROWS_AS(krawtchouk(5, 2, 6, 0), std::domain_error);
  CHECK_THROWS_AS(krawtchouk(5, 2, 0, -1), std::domain_error);
}

TEST_CASE("krawtchouk boundary identities and orthogonality") {
  for (int q : {2, 3, 5}) {
    for (int m = 1; m <= 9; ++m) {
      BigInt qm = 1;
      for (int i = 0; i < m; ++i) qm *= q;
      for (int x = 0; x <= m; ++x) CHECK(krawtchouk(m, q, 0, x) == 1);
      for (int k = 0; k <= m; ++k) {
        CHECK(krawtchouk(m, q, k, 0) == binomial(m, k) * pow(BigInt(q - 1), k));
        // Weighted column sums vanish except at k = 0.
        BigInt sum = 0;
        for (int x = 0; x <= m; ++x) {
          sum += binomial(m, x) * pow(BigInt(q - 1), x) * krawtchouk(m, q, k, x);
        }
        CHECK(sum == (k == 0 ? qm : BigInt(0)));
      }
    }
  }
}

TEST_CASE("distance distribution of the punctured code") {
  const DistanceDistribution d = distance_distribution(punctured_hadamard_12());
  REQUIRE(d.a.size() == 12);
  const std::vector<int> expected = {1, 0, 0, 0, 0, 11, 11, 0, 0, 0, 0, 1};
  for (std::size_t i = 0; i < 12; ++i) CHECK(d.a[i] == expected[i]);
  BigRat total = 0;
  for (const BigRat& a : d.a) total += a;
  CHECK(total == 24);  // sums to |C|
}

TEST_CASE("macwilliams transform of the punctured code is nonnegative") {
  const TransformResult t = macwilliams_transform(distance_distribution(punctured_hadamard_12()));
  CHECK(t.nonnegative);
  CHECK_FALSE(t.first_negative_index.has_value());
  CHECK(t.aprime[0] == 24);
  CHECK(t.aprime[2] == 0);
}

TEST_CASE("macwilliams transform flags the truncated distribution") {
  DistanceDistribution d{11, 2, std::vector<BigRat>(12, BigRat(0))};
  d.a[0] = 1;
  d.a[5] = 11;
  d.a[6] = 11;
  const TransformResult t = macwilliams_transform(d);
  CHECK_FALSE(t.nonnegative);
  CHECK(t.first_negative_index == 2);
  CHECK(t.aprime[2] == -55);
}

TEST_CASE("macwilliams transform of the full space annihilates k >= 1") {
  const int m = 6, q = 3;
  DistanceDistribution d{m, q, {}};
  for (int i = 0; i <= m; ++i) d.a.push_back(BigRat(binomial(m, i) * pow(BigInt(q - 1), i)));
  const TransformResult t = macwilliams_transform(d);
  CHECK(t.nonnegative);
  CHECK(t.aprime[0] == 729);
  for (int k = 1; k <= m; ++k) CHECK(t.aprime[static_cast<std::size_t>(k)] == 0);
}

TEST_CASE("transform requires a prime power alphabet") {
  DistanceDistribution d{2, 6, {BigRat(1), BigRat(0), BigRat(0)}};
  CHECK_THROWS_AS(macwilliams_transform(d), std::domain_error);
  DistanceDistribution wrong{3, 2, {BigRat(1), BigRat(0)}};
  CHECK_THROWS_AS(macwilliams_transform(wrong), DimensionError);
}

TEST_CASE("singleton bound") {
  CHECK(singleton_bound(11, 2, 6) == 64);
  CHECK(singleton_bound(11, 2, 5) == 128);
  CHECK(singleton_bound(5, 3, 5) == 3);
  CHECK_THROWS_AS(singleton_bound(5, 3, 6), std::domain_error);
}

TEST_CASE("sphere divisibility criterion") {
  CHECK(sphere2_divides_order(5, 3, BigInt(120)));
  CHECK_FALSE(sphere2_divides_order(6, 6, BigInt(360)));
  CHECK_FALSE(sphere2_divides_order(6, 6, BigInt(720)));
  CHECK(sphere2_divides_order(7, 2, BigInt(21)));
  CHECK(sphere2_divides_order(11, 2, BigInt(7920)));
  CHECK_THROWS_AS(sphere2_divides_order(5, 3, BigInt(0)), PreconditionError);
}

TEST_CASE("rational rendering") {
  CHECK(rational_to_string(BigRat(7)) == "7");
  CHECK(rational_to_string(BigRat(4, 3)) == "4/3");
  CHECK(rational_to_string(BigRat(-4, 3)) == "-4/3");
  CHECK(rational_to_string(BigRat(6, 3)) == "2");
}
