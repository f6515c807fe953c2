#pragma once

#include <string>
#include <vector>

#include "gnum/arith.hpp"

namespace gnum {

struct SuiteResult {
  std::string name;
  bool passed;
  std::string detail;  // first counterexample, or empty
};

// Consistency suites over all n <= limit:
//   holder-equivalence   subset vs divisor Hoelder counts on square-free n
//   cyclic-criterion     Hoelder count = 1 <=> gcd(n, phi(n)) = 1
//   thm4-vs-holder       is_gnu2/is_gnu3 <=> Hoelder count 2/3 (square-free)
//   table1-partition     exactly one case row fires for every p^2 q <= limit
//   fixture              gnu(n) matches the frozen counts for n <= 2000
std::vector<SuiteResult> run_selfcheck(u64 limit);

}  // namespace gnum
