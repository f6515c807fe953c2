#include <doctest.h>

#include <stdexcept>

#include "gnum/sieve.hpp"

using namespace gnum;

namespace {

std::vector<RangeRow> collect(u64 lo, u64 hi, const SpfTable* t, unsigned jobs = 1) {
  std::vector<RangeRow> rows;
  classify_range(lo, hi, t, [&](const RangeRow& r) { rows.push_back(r); }, jobs);
  return rows;
}

}  // namespace

TEST_CASE("spf table basics") {
  SpfTable t(100);
  CHECK(t.spf(2) == 2);
  CHECK(t.spf(75) == 3);
  for (u64 p : {2ull, 3ull, 53ull, 97ull}) CHECK(t.spf(p) == p);
  CHECK_THROWS_AS(SpfTable(1), std::invalid_argument);
  CHECK_THROWS_AS(SpfTable(1000, 100), std::invalid_argument);  // memory cap
}

TEST_CASE("spf factorization agrees with direct factorization up to 1e6") {
  SpfTable t(1000000);
  for (u64 n = 2; n <= 1000000; ++n)
    REQUIRE(t.factorize(n).parts == factorize(n).parts);
}

TEST_CASE("classify_range 1..10") {
  SpfTable t(100);
  auto rows = collect(1, 10, &t);
  REQUIRE(rows.size() == 10);
  u64 expected[] = {1, 1, 1, 2, 1, 2, 1, 5, 2, 2};
  for (size_t i = 0; i < 10; ++i) {
    REQUIRE(rows[i].n == i + 1);
    REQUIRE(rows[i].gnu.has_value());
    REQUIRE(*rows[i].gnu == expected[i]);
  }
}

TEST_CASE("classify_range single values") {
  auto r75 = collect(75, 75, nullptr);
  REQUIRE(r75.size() == 1);
  CHECK(*r75[0].gnu == 3);

  auto r16 = collect(16, 16, nullptr);
  REQUIRE(r16.size() == 1);
  CHECK_FALSE(r16[0].gnu.has_value());
  CHECK(r16[0].clause.empty());
  CHECK(r16[0].shape == ShapeTag::HigherPrimePower);
}

TEST_CASE("range rows match single queries past the table limit") {
  SpfTable t(100);  // force the fallback path above 100
  auto rows = collect(90, 160, &t);
  for (const auto& r : rows) {
    auto one = classify_one(factorize(r.n));
    REQUIRE(r.n == one.n);
    REQUIRE(r.gnu == one.gnu);
    REQUIRE(r.clause == one.clause);
    REQUIRE(r.shape == one.shape);
  }
}

TEST_CASE("identical rows for any job count") {
  SpfTable t(200000);
  auto one = collect(1, 100000, &t, 1);
  for (unsigned jobs : {2u, 4u, 7u}) {
    auto many = collect(1, 100000, &t, jobs);
    REQUIRE(many.size() == one.size());
    for (size_t i = 0; i < one.size(); ++i) {
      REQUIRE(many[i].n == one[i].n);
      REQUIRE(many[i].gnu == one[i].gnu);
      REQUIRE(many[i].clause == one[i].clause);
    }
  }
}

TEST_CASE("classify_range rejects bad bounds") {
  CHECK_THROWS_AS(collect(10, 1, nullptr), std::invalid_argument);
  CHECK_THROWS_AS(collect(0, 5, nullptr), std::invalid_argument);
}

TEST_CASE("stats") {
  SpfTable t(100);
  auto s = stats(collect(1, 10, &t));
  CHECK(s.total == 10);
  CHECK(s.gnu1 == 5);
  CHECK(s.gnu2 == 4);
  CHECK(s.gnu3 == 0);
  CHECK(s.other_exact == 1);  // n = 8
  CHECK(s.unsupported == 0);

  CHECK(stats({}).total == 0);

  auto s23 = stats(collect(2, 3, &t));
  CHECK(s23.cyclic == 2);

  // flag ordering invariant
  auto big = stats(collect(1, 5000, &t));
  CHECK(big.cyclic <= big.abelian);
  CHECK(big.abelian <= big.nilpotent);
  CHECK(big.gnu1 + big.gnu2 + big.gnu3 + big.other_exact + big.unsupported ==
        big.total);
}

TEST_CASE("row flag consistency") {
  SpfTable t(5000);
  for (const auto& r : collect(1, 5000, &t)) {
    if (r.cyclic) REQUIRE(*r.gnu == 1);
    if (r.abelian) REQUIRE(r.nilpotent);
    REQUIRE(r.gnu.has_value() == !r.clause.empty());
  }
}
