#include "gnum/sieve.hpp"

#include <future>
#include <stdexcept>

namespace gnum {

SpfTable::SpfTable(u64 limit, u64 max_limit) {
  if (limit < 2) throw std::invalid_argument("SpfTable: limit must be >= 2");
  if (limit > max_limit)
    throw std::invalid_argument("SpfTable: limit exceeds the memory cap");
  spf_.assign(limit + 1, 0);
  std::vector<std::uint32_t> primes;
  for (u64 i = 2; i <= limit; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = static_cast<std::uint32_t>(i);
      primes.push_back(static_cast<std::uint32_t>(i));
    }
    for (std::uint32_t p : primes) {
      if (p > spf_[i] || i * p > limit) break;
      spf_[i * p] = p;
    }
  }
}

Factorization SpfTable::factorize(u64 k) const {
  if (k == 0 || k > limit()) throw std::invalid_argument("SpfTable::factorize: out of range");
  Factorization f;
  f.n = k;
  while (k > 1) {
    u64 p = spf_[k];
    unsigned a = 0;
    while (k % p == 0) k /= p, ++a;
    f.parts.emplace_back(p, a);
  }
  return f;
}

RangeRow classify_one(const Factorization& f) {
  RangeRow row;
  row.n = f.n;
  row.shape = shape(f).tag;
  row.cyclic = is_cyclic_number(f);
  row.nilpotent = is_nilpotent_number(f);
  row.abelian = is_abelian_number(f);
  GnuResult g = gnu(f);
  if (g.exact()) {
    row.gnu = g.count;
    row.clause = g.clause;
  }
  return row;
}

namespace {

std::vector<RangeRow> classify_chunk(u64 lo, u64 hi, const SpfTable* table) {
  std::vector<RangeRow> rows;
  rows.reserve(hi - lo + 1);
  for (u64 n = lo; n <= hi; ++n) {
    Factorization f =
        (table && n <= table->limit()) ? table->factorize(n) : factorize(n);
    rows.push_back(classify_one(f));
  }
  return rows;
}

}  // namespace

void classify_range(u64 lo, u64 hi, const SpfTable* table,
                    const std::function<void(const RangeRow&)>& sink,
                    unsigned jobs) {
  if (lo < 1 || lo > hi) throw std::invalid_argument("classify_range: need 1 <= lo <= hi");
  constexpr u64 kChunk = 1 << 14;  // fixed regardless of job count
  if (jobs <= 1) {
    for (u64 a = lo;;) {
      u64 b = (hi - a >= kChunk) ? a + kChunk - 1 : hi;
      for (const RangeRow& r : classify_chunk(a, b, table)) sink(r);
      if (b == hi) break;
      a = b + 1;
    }
    return;
  }
  // Window of in-flight chunk futures, drained in submission order.
  std::vector<std::future<std::vector<RangeRow>>> window;
  u64 next = lo;
  size_t drain = 0;
  bool done = false;
  auto submit = [&] {
    if (done) return false;
    u64 a = next, b = (hi - a >= kChunk) ? a + kChunk - 1 : hi;
    if (b == hi) done = true; else next = b + 1;
    window.push_back(std::async(std::launch::async, classify_chunk, a, b, table));
    return true;
  };
  for (unsigned i = 0; i < 2 * jobs && submit(); ++i) {}
  while (drain < window.size()) {
    for (const RangeRow& r : window[drain].get()) sink(r);
    window[drain] = {};
    ++drain;
    submit();
  }
}

void accumulate(RangeStats& s, const RangeRow& row) {
  ++s.total;
  if (!row.gnu) ++s.unsupported;
  else if (*row.gnu == 1) ++s.gnu1;
  else if (*row.gnu == 2) ++s.gnu2;
  else if (*row.gnu == 3) ++s.gnu3;
  else ++s.other_exact;
  if (row.cyclic) ++s.cyclic;
  if (row.abelian) ++s.abelian;
  if (row.nilpotent) ++s.nilpotent;
}

RangeStats stats(const std::vector<RangeRow>& rows) {
  RangeStats s;
  for (const RangeRow& r : rows) accumulate(s, r);
  return s;
}

}  // namespace gnum
