#include "gnum/holder.hpp"

#include <numeric>
#include <stdexcept>

namespace gnum {

DivisibilityGraph divisibility_graph(const Factorization& f) {
  DivisibilityGraph g;
  g.primes = f.radical_primes();
  for (u64 p : g.primes)
    for (u64 q : g.primes)
      if (p != q && (q - 1) % p == 0) g.edges.emplace_back(p, q);
  return g;
}

u64 f_factor(u64 n, u64 m) {
  if (n == 0 || m == 0) throw std::invalid_argument("f_factor: arguments must be positive");
  u64 r = 1;
  for (auto& [q, a] : factorize(m).parts) r = checked_mul(r, std::gcd(n, q - 1));
  return r;
}

namespace {

// p^c, overflow-checked.
u64 upow(u64 p, unsigned c) {
  u64 r = 1;
  while (c--) r = checked_mul(r, p);
  return r;
}

void require_squarefree(const Factorization& f, const char* who) {
  if (!f.is_squarefree())
    throw std::invalid_argument(std::string(who) + ": n must be square-free");
}

}  // namespace

u64 count_squarefree_subset(const Factorization& f) {
  require_squarefree(f, "count_squarefree_subset");
  const auto primes = f.radical_primes();
  const unsigned r = static_cast<unsigned>(primes.size());
  if (r > 20) throw std::invalid_argument("count_squarefree_subset: more than 20 primes");
  u64 total = 0;
  for (u64 mask = 0; mask < (1ull << r); ++mask) {
    u64 term = 1;
    for (unsigned i = 0; i < r && term; ++i) {
      if (!(mask >> i & 1)) continue;
      u64 p = primes[i];
      unsigned c = 0;
      for (unsigned j = 0; j < r; ++j)
        if (!(mask >> j & 1) && (primes[j] - 1) % p == 0) ++c;
      u64 num = upow(p, c) - 1;
      if (num % (p - 1) != 0) throw std::logic_error("subset term not exactly divisible");
      term = checked_mul(term, num / (p - 1));
    }
    total = checked_add(total, term);
  }
  return total;
}

u64 count_squarefree_divisor(const Factorization& f) {
  require_squarefree(f, "count_squarefree_divisor");
  u64 total = 0;
  for (u64 d : divisors(f)) {
    u64 term = 1;
    for (auto& [p, a] : f.parts) {
      if (d % p != 0) continue;
      // f(p, n/d); the primes of n/d are exactly the primes of n not in d.
      u64 fv = 1;
      for (auto& [q, b] : f.parts)
        if (d % q != 0) fv = checked_mul(fv, std::gcd(p, q - 1));
      if ((fv - 1) % (p - 1) != 0) throw std::logic_error("divisor term not exactly divisible");
      term = checked_mul(term, (fv - 1) / (p - 1));
      if (term == 0) break;
    }
    total = checked_add(total, term);
  }
  return total;
}

}  // namespace gnum
