#include <doctest.h>

#include <stdexcept>

#include <numeric>
#include <random>

#include "gnum/arith.hpp"

using namespace gnum;

namespace {

std::vector<std::pair<u64, unsigned>> parts(u64 n) { return factorize(n).parts; }

}  // namespace

TEST_CASE("is_prime basics") {
  CHECK(is_prime(2));
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(609));  // 3 * 7 * 29
  CHECK(is_prime(2147483647));
  CHECK(is_prime(18446744073709551557ull));  // largest 64-bit prime
  CHECK_FALSE(is_prime(3825123056546413051ull));  // strong pseudoprime to many bases
}

TEST_CASE("is_prime agrees with trial division up to 1e6") {
  std::vector<bool> comp(1000001, false);
  for (u64 i = 2; i * i <= 1000000; ++i)
    if (!comp[i])
      for (u64 j = i * i; j <= 1000000; j += i) comp[j] = true;
  for (u64 n = 2; n <= 1000000; ++n) REQUIRE(is_prime(n) == !comp[n]);
}

TEST_CASE("factorize examples") {
  CHECK(parts(75) == std::vector<std::pair<u64, unsigned>>{{3, 1}, {5, 2}});
  CHECK(parts(1).empty());
  CHECK(parts(609) == std::vector<std::pair<u64, unsigned>>{{3, 1}, {7, 1}, {29, 1}});
  CHECK_THROWS_AS(factorize(0), std::invalid_argument);
}

TEST_CASE("factorize handles hard 64-bit composites") {
  // semiprime of two ~32-bit primes
  u64 p = 4294967291ull, q = 4294967279ull;
  auto f = factorize(p * q);
  CHECK(f.parts == std::vector<std::pair<u64, unsigned>>{{q, 1}, {p, 1}});
  auto sq = factorize(p * p);
  CHECK(sq.parts == std::vector<std::pair<u64, unsigned>>{{p, 2}});
}

TEST_CASE("factorize round-trips on random 64-bit values") {
  std::mt19937_64 rng(12345);
  for (int i = 0; i < 200; ++i) {
    u64 n = rng() >> (i % 24);
    if (n == 0) continue;
    auto f = factorize(n);
    u64 prod = 1;
    u64 prev = 0;
    for (auto [p, a] : f.parts) {
      REQUIRE(p > prev);
      REQUIRE(is_prime(p));
      prev = p;
      for (unsigned e = 0; e < a; ++e) prod = checked_mul(prod, p);
    }
    REQUIRE(prod == n);
  }
}

TEST_CASE("divisors") {
  CHECK(divisors(factorize(6)) == std::vector<u64>{1, 2, 3, 6});
  CHECK(divisors(factorize(1)) == std::vector<u64>{1});
  CHECK(divisors(factorize(609)) == std::vector<u64>{1, 3, 7, 21, 29, 87, 203, 609});
  CHECK(divisors(factorize(720)).size() == 30);
}

TEST_CASE("euler_phi") {
  CHECK(euler_phi(factorize(75)) == 40);
  CHECK(euler_phi(factorize(1)) == 1);
  for (u64 p : {2ull, 3ull, 97ull, 65537ull}) CHECK(euler_phi(factorize(p)) == p - 1);
}

TEST_CASE("phi is multiplicative on coprime pairs") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<u64> dist(1, 1000000);
  int done = 0;
  while (done < 300) {
    u64 a = dist(rng), b = dist(rng);
    if (std::gcd(a, b) != 1) continue;
    ++done;
    CHECK(euler_phi(factorize(a * b)) ==
          euler_phi(factorize(a)) * euler_phi(factorize(b)));
  }
}

TEST_CASE("sum of phi over divisors equals n, n <= 1e4") {
  for (u64 n = 1; n <= 10000; ++n) {
    u64 sum = 0;
    for (u64 d : divisors(factorize(n))) sum += euler_phi(factorize(d));
    REQUIRE(sum == n);
  }
}

TEST_CASE("big_phi") {
  CHECK(big_phi(factorize(8)) == 7);
  CHECK(big_phi(factorize(75)) == 48);   // (3-1)(25-1)
  CHECK(big_phi(factorize(12)) == 6);    // (4-1)(3-1)
  CHECK(big_phi(factorize(1)) == 1);
}
