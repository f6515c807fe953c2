#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "gnum/classify.hpp"

namespace gnum {

// Smallest-prime-factor table, one uint32 per integer.  Immutable after
// construction; shareable across threads.
class SpfTable {
 public:
  static constexpr u64 kDefaultMaxLimit = 1ull << 31;  // 8 GiB of entries

  // Throws std::invalid_argument if limit < 2 or limit > max_limit.
  explicit SpfTable(u64 limit, u64 max_limit = kDefaultMaxLimit);

  u64 limit() const { return spf_.size() - 1; }
  u64 spf(u64 k) const { return spf_[k]; }

  // Factorize k <= limit by repeated spf division.
  Factorization factorize(u64 k) const;

 private:
  std::vector<std::uint32_t> spf_;
};

struct RangeRow {
  u64 n;
  ShapeTag shape;
  bool cyclic;
  bool nilpotent;
  bool abelian;
  std::optional<u64> gnu;
  std::string clause;  // empty iff gnu absent
};

struct RangeStats {
  u64 total = 0;
  u64 gnu1 = 0, gnu2 = 0, gnu3 = 0;
  u64 other_exact = 0;
  u64 unsupported = 0;
  u64 cyclic = 0, abelian = 0, nilpotent = 0;
};

RangeRow classify_one(const Factorization& f);

// Classify every n in [lo, hi] in ascending order, calling sink once per n.
// Chunks are processed independently (optionally in parallel) and merged in
// order; output is identical for any job count.  A table covering hi is
// used when available, per-n factorization otherwise.
void classify_range(u64 lo, u64 hi, const SpfTable* table,
                    const std::function<void(const RangeRow&)>& sink,
                    unsigned jobs = 1);

RangeStats stats(const std::vector<RangeRow>& rows);

void accumulate(RangeStats& s, const RangeRow& row);

}  // namespace gnum
