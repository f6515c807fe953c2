#include "gnum/arith.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace gnum {

u64 checked_mul(u64 a, u64 b) {
  u64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("u64 mul overflow");
  return r;
}

u64 checked_add(u64 a, u64 b) {
  u64 r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("u64 add overflow");
  return r;
}

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(u128(a) * b % m);
}

u64 powmod(u64 b, u64 e, u64 m) {
  u64 r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

namespace {

bool miller_rabin(u64 n, u64 a) {
  if (a % n == 0) return true;
  u64 d = n - 1;
  int s = std::countr_zero(d);
  d >>= s;
  u64 x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  // This witness set is deterministic for all n < 2^64 (Sorenson & Webster).
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (!miller_rabin(n, a)) return false;
  }
  return true;
}

namespace {

// Brent's cycle-finding rho.  Returns a nontrivial factor of composite n.
u64 brent_rho(u64 n, u64 c) {
  u64 y = 2, g = 1, q = 1, x = 0, ys = 0;
  u64 r = 1;
  const u64 m = 128;
  while (g == 1) {
    x = y;
    for (u64 i = 0; i < r; ++i) y = (mulmod(y, y, n) + c) % n;
    for (u64 k = 0; k < r && g == 1; k += m) {
      ys = y;
      for (u64 i = 0; i < std::min(m, r - k); ++i) {
        y = (mulmod(y, y, n) + c) % n;
        q = mulmod(q, x > y ? x - y : y - x, n);
      }
      g = std::gcd(q, n);
    }
    r <<= 1;
  }
  if (g == n) {
    do {
      ys = (mulmod(ys, ys, n) + c) % n;
      g = std::gcd(x > ys ? x - ys : ys - x, n);
    } while (g == 1);
  }
  return g;
}

u64 find_factor(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    u64 g = brent_rho(n, c);
    if (g != n) return g;
  }
}

void factor_rec(u64 n, std::vector<u64>& out) {
  while (n > 1) {
    if (is_prime(n)) {
      out.push_back(n);
      return;
    }
    u64 d = find_factor(n);
    factor_rec(d, out);
    n /= d;
  }
}

}  // namespace

Factorization factorize(u64 n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  Factorization f;
  f.n = n;
  std::vector<u64> ps;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull,
                37ull, 41ull, 43ull, 47ull, 53ull, 59ull, 61ull, 67ull, 71ull, 73ull,
                79ull, 83ull, 89ull, 97ull}) {
    while (n % p == 0) {
      ps.push_back(p);
      n /= p;
    }
  }
  factor_rec(n, ps);
  std::sort(ps.begin(), ps.end());
  for (u64 p : ps) {
    if (!f.parts.empty() && f.parts.back().first == p)
      ++f.parts.back().second;
    else
      f.parts.emplace_back(p, 1u);
  }
  return f;
}

bool Factorization::is_squarefree() const {
  for (auto& [p, a] : parts)
    if (a != 1) return false;
  return true;
}

bool Factorization::is_cubefree() const {
  for (auto& [p, a] : parts)
    if (a > 2) return false;
  return true;
}

std::vector<u64> Factorization::radical_primes() const {
  std::vector<u64> ps;
  ps.reserve(parts.size());
  for (auto& [p, a] : parts) ps.push_back(p);
  return ps;
}

std::vector<u64> divisors(const Factorization& f) {
  std::vector<u64> ds{1};
  for (auto& [p, a] : f.parts) {
    size_t old = ds.size();
    u64 pk = 1;
    for (unsigned e = 1; e <= a; ++e) {
      pk = checked_mul(pk, p);
      for (size_t i = 0; i < old; ++i) ds.push_back(checked_mul(ds[i], pk));
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

u64 euler_phi(const Factorization& f) {
  u64 r = 1;
  for (auto& [p, a] : f.parts) {
    r *= p - 1;
    for (unsigned e = 1; e < a; ++e) r *= p;
  }
  return r;
}

u64 big_phi(const Factorization& f) {
  u64 r = 1;
  for (auto& [p, a] : f.parts) {
    u64 pk = 1;
    for (unsigned e = 0; e < a; ++e) pk *= p;
    r = checked_mul(r, pk - 1);  // product stays below n
  }
  return r;
}

}  // namespace gnum
