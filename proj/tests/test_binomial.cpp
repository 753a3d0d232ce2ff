#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "urns/binomial.hpp"

using urns::bigint;
using urns::binomial;
using urns::binomial_cached;
using urns::natural;

TEST_CASE("binomial small values and conventions") {
  REQUIRE(binomial(4, 2) == natural(6));
  REQUIRE(binomial(7, 0) == natural(1));
  REQUIRE(binomial(3, 5) == natural(0));
  REQUIRE(binomial(-1, 2) == natural(0));
  REQUIRE(binomial(0, 0) == natural(1));
  REQUIRE(binomial(5, -1) == natural(0));
}

TEST_CASE("binomial exceeds 64-bit range without loss") {
  const natural v = binomial(69, 34);
  REQUIRE(v.str() == "56093138908331422716");          // > 2^64 - 1
  REQUIRE(v > natural(std::uint64_t{18446744073709551615ULL}));
  REQUIRE(binomial(100, 50).str() == "100891344545564193334812497256");
}

TEST_CASE("binomial symmetry up to 200") {
  for (long long a = 0; a <= 200; ++a) {
    for (long long b = 0; b <= a; ++b) {
      REQUIRE(binomial(a, b) == binomial(a, a - b));
    }
  }
}

TEST_CASE("binomial Pascal identity up to 200") {
  for (long long a = 1; a <= 200; ++a) {
    for (long long b = 1; b <= a; ++b) {
      REQUIRE(binomial(a, b) == binomial(a - 1, b - 1) + binomial(a - 1, b));
    }
  }
}

TEST_CASE("binomial row sums equal powers of two up to 64") {
  for (long long a = 0; a <= 64; ++a) {
    natural sum;
    for (long long b = 0; b <= a; ++b) sum += binomial(a, b);
    REQUIRE(sum == natural(bigint(1) << a));
  }
}

TEST_CASE("binomial_cached matches binomial everywhere") {
  REQUIRE(binomial_cached(4, 2) == natural(6));
  REQUIRE(binomial_cached(3, 5) == natural(0));
  REQUIRE(binomial_cached(100, 50) == binomial_cached(100, 50));  // repeat call, same value

  std::mt19937 rng(20240817);
  std::uniform_int_distribution<long long> arg(-10, 150);
  for (int i = 0; i < 12000; ++i) {
    const long long a = arg(rng);
    const long long b = arg(rng);
    REQUIRE(binomial_cached(a, b) == binomial(a, b));
  }
}
