#include "gnum/selfcheck.hpp"

#include <numeric>

#include "gnum/classify.hpp"
#include "gnum/fixture2000.hpp"
#include "gnum/holder.hpp"
#include "gnum/sieve.hpp"

namespace gnum {

namespace {

std::string counterexample(u64 n, const std::string& what) {
  return "first counterexample n = " + std::to_string(n) + " (" + what + ")";
}

}  // namespace

std::vector<SuiteResult> run_selfcheck(u64 limit) {
  std::vector<SuiteResult> out;
  SpfTable table(std::max<u64>(limit, 2));

  SuiteResult holder{"holder-equivalence", true, ""};
  SuiteResult cyclic{"cyclic-criterion", true, ""};
  SuiteResult thm4{"thm4-vs-holder", true, ""};
  for (u64 n = 2; n <= limit; ++n) {
    Factorization f = table.factorize(n);
    if (!f.is_squarefree()) continue;
    u64 a = count_squarefree_subset(f);
    u64 b = count_squarefree_divisor(f);
    if (holder.passed && a != b) {
      holder.passed = false;
      holder.detail = counterexample(
          n, "subset=" + std::to_string(a) + " divisor=" + std::to_string(b));
    }
    if (cyclic.passed && (b == 1) != is_cyclic_number(f)) {
      cyclic.passed = false;
      cyclic.detail = counterexample(n, "count=" + std::to_string(b));
    }
    if (thm4.passed &&
        ((b == 2) != is_gnu2(f) || (b == 3) != is_gnu3(f))) {
      thm4.passed = false;
      thm4.detail = counterexample(n, "count=" + std::to_string(b));
    }
  }
  out.push_back(holder);
  out.push_back(cyclic);
  out.push_back(thm4);

  SuiteResult table1{"table1-partition", true, ""};
  for (u64 p = 2; p * p * 2 <= limit && table1.passed; ++p) {
    if (!is_prime(p)) continue;
    for (u64 q = 2; p * p * q <= limit; ++q) {
      if (q == p || !is_prime(q)) continue;
      P2qRow row = count_p2q_row(p, q);
      if (row.rows_matched != 1) {
        table1.passed = false;
        table1.detail = counterexample(
            p * p * q, "rows matched = " + std::to_string(row.rows_matched));
        break;
      }
    }
  }
  out.push_back(table1);

  // Supported shapes must match the frozen counts; everything else must
  // come back unsupported (the fixture lists every supported n <= 2000).
  SuiteResult fixture{"fixture", true, ""};
  const auto* it = std::begin(kGnuFixture2000);
  const auto* end = std::end(kGnuFixture2000);
  for (u64 n = 1; n <= 2000 && fixture.passed; ++n) {
    GnuResult g = gnu(n <= table.limit() ? table.factorize(n) : factorize(n));
    if (it != end && it->first == n) {
      u64 expected = it->second;
      ++it;
      if (!g.exact() || *g.count != expected) {
        fixture.passed = false;
        fixture.detail = counterexample(
            n, "expected " + std::to_string(expected) + ", got " +
                   (g.exact() ? std::to_string(*g.count) : "unsupported"));
      }
    } else if (g.exact()) {
      fixture.passed = false;
      fixture.detail = counterexample(n, "expected unsupported, got " +
                                             std::to_string(*g.count));
    }
  }
  out.push_back(fixture);
  return out;
}

}  // namespace gnum
