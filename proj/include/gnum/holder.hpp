#pragma once

#include <vector>

#include "gnum/arith.hpp"

namespace gnum {

// Directed edges p -> q between the distinct primes of n, present iff
// p | q - 1.  Since p, q are distinct primes this forces p < q.
struct DivisibilityGraph {
  std::vector<u64> primes;                  // ascending
  std::vector<std::pair<u64, u64>> edges;   // (p, q), p | q - 1
};

DivisibilityGraph divisibility_graph(const Factorization& f);

// f(n, m) = product over distinct primes q | m of gcd(n, q - 1).
u64 f_factor(u64 n, u64 m);

// G(n) for square-free n by enumerating all subsets of the prime set.
// Exponential in the number of primes; capped at 20 (oracle path only).
// Throws std::invalid_argument on non-square-free input or r > 20.
u64 count_squarefree_subset(const Factorization& f);

// G(n) for square-free n as the divisor sum over f-values.  This is the
// production counter.  Throws std::invalid_argument if not square-free.
u64 count_squarefree_divisor(const Factorization& f);

}  // namespace gnum
