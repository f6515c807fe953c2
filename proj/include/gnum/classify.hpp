#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "gnum/arith.hpp"
#include "gnum/holder.hpp"

namespace gnum {

enum class ShapeTag {
  Unit,               // n = 1
  Prime,              // p
  PrimeSquare,        // p^2
  PrimeCube,          // p^3
  HigherPrimePower,   // p^a, a >= 4
  SquareFree,         // r >= 2, all exponents 1
  PSquareQ,           // p^2 q
  OneSquareCubeFree,  // p1^2 p2 ... pr, r >= 3, exactly one exponent 2
  Other,              // two or more squared primes, or a cube with a cofactor
};

struct OrderShape {
  ShapeTag tag;
  u64 squared_prime = 0;  // set for PSquareQ and OneSquareCubeFree
};

std::string_view shape_name(ShapeTag t);

OrderShape shape(const Factorization& f);

// Either an exact count with the clause that produced it, or the reason the
// shape is out of scope.  Clause identifiers form a frozen vocabulary:
//   Cyclic                     n = 1 or n prime
//   Thm4.1a                    p^2 -> 2
//   p^3                        p^3 -> 5
//   Eq1                        square-free, Hoelder divisor formula
//   Table1.2  Table1.3  Table1.4  Table1.5  Table1.5q2  Table1.6  Table1.12
//                              p^2 q rows (count 2 / 3 / 4 / 5 / 5 / (q+1)/2+4 / 5)
//   Thm4.1c                    one squared prime, no relations -> 2
//   Thm4.2b                    one squared prime, unique p_l | p1^2-1 -> 3
// Rows that coincide with a Theorem 4 clause report both, joined by '/'
// (e.g. "Table1.3/Thm4.2b").
struct GnuResult {
  std::optional<u64> count;  // engaged iff exact
  std::string clause;        // clause id when exact, reason when not

  bool exact() const { return count.has_value(); }
};

bool is_cyclic_number(const Factorization& f);
bool is_nilpotent_number(const Factorization& f);
// Cube-free + nilpotent; equivalently gcd(n, Phi(n)) = 1 for cube-free n.
bool is_abelian_number(const Factorization& f);

// 2^s where s = number of squared primes.  Requires is_abelian_number.
u64 count_abelian(const Factorization& f);

// Exact G(p^2 q) by the completed Burnside case split; p is the squared
// prime.  Throws std::invalid_argument unless p, q are distinct primes.
u64 count_p2q(u64 p, u64 q);
// Same, also reporting the clause id and how many case rows matched
// (partition totality check; must always be 1).
struct P2qRow {
  u64 count;
  std::string_view clause;
  int rows_matched;
};
P2qRow count_p2q_row(u64 p, u64 q);

bool is_gnu2(const Factorization& f);
bool is_gnu3(const Factorization& f);

GnuResult gnu(const Factorization& f);
GnuResult gnu(u64 n);

// Clause-level trace of the classification.
struct ExplainReport {
  Factorization fact;
  OrderShape order_shape;
  DivisibilityGraph graph;
  std::vector<u64> square_witnesses;  // primes p_k (k >= 2) with p_k | p1^2 - 1
  bool cyclic = false;
  bool nilpotent = false;
  bool abelian = false;
  bool gnu2 = false;
  bool gnu3 = false;
  std::vector<std::string> notes;
  GnuResult result;
};

ExplainReport explain(const Factorization& f);
std::string render(const ExplainReport& r);

}  // namespace gnum
