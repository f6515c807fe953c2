#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace gnum {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Canonical prime-power decomposition.  parts is strictly increasing in the
// prime; n == 1 has an empty parts list.
struct Factorization {
  u64 n = 1;
  std::vector<std::pair<u64, unsigned>> parts;  // (prime, exponent)

  unsigned num_primes() const { return static_cast<unsigned>(parts.size()); }
  bool is_squarefree() const;
  bool is_cubefree() const;
  // The distinct primes, ascending.
  std::vector<u64> radical_primes() const;
};

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 b, u64 e, u64 m);

// Deterministic over the whole 64-bit range (fixed witness set).
bool is_prime(u64 n);

// Trial division by small primes, then Brent's rho with a deterministic
// parameter sweep.  Throws std::invalid_argument on n == 0.
Factorization factorize(u64 n);

std::vector<u64> divisors(const Factorization& f);

u64 euler_phi(const Factorization& f);

// Product of (p_i^a_i - 1) over the parts; 1 for n = 1.
u64 big_phi(const Factorization& f);

u64 checked_mul(u64 a, u64 b);
u64 checked_add(u64 a, u64 b);

}  // namespace gnum
