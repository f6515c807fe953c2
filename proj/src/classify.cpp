#include "gnum/classify.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gnum {

std::string_view shape_name(ShapeTag t) {
  switch (t) {
    case ShapeTag::Unit: return "Unit";
    case ShapeTag::Prime: return "Prime";
    case ShapeTag::PrimeSquare: return "PrimeSquare";
    case ShapeTag::PrimeCube: return "PrimeCube";
    case ShapeTag::HigherPrimePower: return "HigherPrimePower";
    case ShapeTag::SquareFree: return "SquareFree";
    case ShapeTag::PSquareQ: return "PSquareQ";
    case ShapeTag::OneSquareCubeFree: return "OneSquareCubeFree";
    case ShapeTag::Other: return "Other";
  }
  return "?";
}

OrderShape shape(const Factorization& f) {
  const unsigned r = f.num_primes();
  if (r == 0) return {ShapeTag::Unit};
  if (r == 1) {
    switch (f.parts[0].second) {
      case 1: return {ShapeTag::Prime};
      case 2: return {ShapeTag::PrimeSquare};
      case 3: return {ShapeTag::PrimeCube};
      default: return {ShapeTag::HigherPrimePower};
    }
  }
  unsigned squares = 0, higher = 0;
  u64 sq = 0;
  for (auto& [p, a] : f.parts) {
    if (a == 2) ++squares, sq = p;
    if (a >= 3) ++higher;
  }
  if (higher == 0 && squares == 0) return {ShapeTag::SquareFree};
  if (higher == 0 && squares == 1)
    return {r == 2 ? ShapeTag::PSquareQ : ShapeTag::OneSquareCubeFree, sq};
  return {ShapeTag::Other};
}

bool is_cyclic_number(const Factorization& f) {
  return std::gcd(f.n, euler_phi(f)) == 1;
}

bool is_nilpotent_number(const Factorization& f) {
  for (auto& [p, a] : f.parts) {
    u64 pk = 1;
    for (unsigned k = 1; k <= a; ++k) {
      pk = checked_mul(pk, p);
      for (auto& [q, b] : f.parts)
        if (q != p && pk % q == 1) return false;
    }
  }
  return true;
}

bool is_abelian_number(const Factorization& f) {
  return f.is_cubefree() && is_nilpotent_number(f);
}

u64 count_abelian(const Factorization& f) {
  if (!is_abelian_number(f))
    throw std::invalid_argument("count_abelian: not an abelian number");
  unsigned s = 0;
  for (auto& [p, a] : f.parts)
    if (a == 2) ++s;
  return 1ull << s;
}

P2qRow count_p2q_row(u64 p, u64 q) {
  if (!is_prime(p) || !is_prime(q) || p == q)
    throw std::invalid_argument("count_p2q: arguments must be distinct primes");
  const bool p_div = (q - 1) % p == 0;        // p | q - 1
  const bool p2_div = (q - 1) % (p * p) == 0; // p^2 | q - 1
  const bool q_div = (p * p - 1) % q == 0;    // q | p^2 - 1
  const bool q_div_m = (p - 1) % q == 0;      // q | p - 1
  const bool q_div_p = (p + 1) % q == 0;      // q | p + 1

  P2qRow best{0, "", 0};
  auto hit = [&](u64 count, std::string_view clause) {
    ++best.rows_matched;
    best.count = count;
    best.clause = clause;
  };
  if (!p_div && !q_div) hit(2, "Table1.2");
  if (q % 2 == 1 && q_div_p && !p_div) hit(3, "Table1.3");
  if (p_div && !p2_div && !q_div) hit(4, "Table1.4");
  if (p2_div) hit(5, "Table1.5");
  if (q == 2) hit(5, "Table1.5q2");
  if (q % 2 == 1 && q_div_m) hit((q + 1) / 2 + 4, "Table1.6");
  if (p_div && q_div) hit(5, "Table1.12");  // forces p=2, q=3, n=12
  return best;
}

u64 count_p2q(u64 p, u64 q) {
  P2qRow row = count_p2q_row(p, q);
  if (row.rows_matched != 1)
    throw std::logic_error("count_p2q: case rows do not partition");
  return row.count;
}

namespace {

// Primes p_k (k >= 2) of n dividing p1^2 - 1, for the one-squared-prime shapes.
std::vector<u64> square_edge_primes(const Factorization& f, u64 sq) {
  std::vector<u64> out;
  for (auto& [p, a] : f.parts)
    if (p != sq && (sq * sq - 1) % p == 0) out.push_back(p);
  return out;
}

bool graph_edge_free(const DivisibilityGraph& g) { return g.edges.empty(); }

}  // namespace

bool is_gnu2(const Factorization& f) {
  OrderShape s = shape(f);
  switch (s.tag) {
    case ShapeTag::PrimeSquare:
      return true;  // Thm4.1a
    case ShapeTag::SquareFree:
      return divisibility_graph(f).edges.size() == 1;  // Thm4.1b
    case ShapeTag::PSquareQ:
    case ShapeTag::OneSquareCubeFree:
      return graph_edge_free(divisibility_graph(f)) &&
             square_edge_primes(f, s.squared_prime).empty();  // Thm4.1c
    default:
      return false;
  }
}

bool is_gnu3(const Factorization& f) {
  OrderShape s = shape(f);
  if (s.tag == ShapeTag::SquareFree && f.num_primes() >= 3) {
    // Exactly two edges forming a chain p_i -> p_j -> p_l.
    auto g = divisibility_graph(f);
    if (g.edges.size() != 2) return false;
    auto [a, b] = g.edges[0];
    auto [c, d] = g.edges[1];
    return b == c || d == a;
  }
  if (s.tag == ShapeTag::PSquareQ || s.tag == ShapeTag::OneSquareCubeFree) {
    return graph_edge_free(divisibility_graph(f)) &&
           square_edge_primes(f, s.squared_prime).size() == 1;  // Thm4.2b
  }
  return false;
}

GnuResult gnu(const Factorization& f) {
  OrderShape s = shape(f);
  switch (s.tag) {
    case ShapeTag::Unit:
    case ShapeTag::Prime:
      return {1, "Cyclic"};
    case ShapeTag::PrimeSquare:
      return {2, "Thm4.1a"};
    case ShapeTag::PrimeCube:
      return {5, "p^3"};
    case ShapeTag::SquareFree:
      return {count_squarefree_divisor(f), "Eq1"};
    case ShapeTag::PSquareQ: {
      u64 q = f.parts[0].first == s.squared_prime ? f.parts[1].first : f.parts[0].first;
      P2qRow row = count_p2q_row(s.squared_prime, q);
      if (row.rows_matched != 1)
        throw std::logic_error("count_p2q: case rows do not partition");
      std::string clause(row.clause);
      if (is_gnu2(f)) clause += "/Thm4.1c";
      if (is_gnu3(f)) clause += "/Thm4.2b";
      return {row.count, clause};
    }
    case ShapeTag::OneSquareCubeFree:
      if (is_gnu2(f)) return {2, "Thm4.1c"};
      if (is_gnu3(f)) return {3, "Thm4.2b"};
      return {std::nullopt, "OneSquareCubeFree outside the Theorem 4 clauses"};
    case ShapeTag::HigherPrimePower:
      return {std::nullopt, "HigherPrimePower"};
    case ShapeTag::Other:
      return {std::nullopt, "Other"};
  }
  return {std::nullopt, "unreachable"};
}

GnuResult gnu(u64 n) { return gnu(factorize(n)); }

ExplainReport explain(const Factorization& f) {
  ExplainReport r;
  r.fact = f;
  r.order_shape = shape(f);
  r.graph = divisibility_graph(f);
  if (r.order_shape.squared_prime)
    r.square_witnesses = square_edge_primes(f, r.order_shape.squared_prime);
  r.cyclic = is_cyclic_number(f);
  r.nilpotent = is_nilpotent_number(f);
  r.abelian = is_abelian_number(f);
  r.gnu2 = is_gnu2(f);
  r.gnu3 = is_gnu3(f);
  r.result = gnu(f);

  auto& notes = r.notes;
  if (r.cyclic) notes.push_back("cyclic number: gcd(n, phi(n)) = 1");
  else notes.push_back("not a cyclic number: gcd(n, phi(n)) > 1");
  if (r.abelian) notes.push_back("abelian number (cube-free, no prime-power relations)");
  else if (r.nilpotent) notes.push_back("nilpotent number but not abelian");
  else notes.push_back("not a nilpotent number");
  switch (r.order_shape.tag) {
    case ShapeTag::SquareFree:
      if (r.gnu2) notes.push_back("Thm4.1b: unique divisibility pair");
      else if (r.gnu3) notes.push_back("Thm4.2a: unique divisibility chain");
      else notes.push_back("square-free: counted by the Hoelder divisor formula");
      break;
    case ShapeTag::PSquareQ:
    case ShapeTag::OneSquareCubeFree:
      if (r.gnu2) notes.push_back("Thm4.1c: no divisibility edges and no p_k | p1^2 - 1");
      else if (r.gnu3) notes.push_back("Thm4.2b: no divisibility edges, unique p_l | p1^2 - 1");
      else notes.push_back("one squared prime, but divisibility relations exist");
      break;
    default:
      break;
  }
  return r;
}

std::string render(const ExplainReport& r) {
  std::ostringstream os;
  os << "n = " << r.fact.n << " = ";
  if (r.fact.parts.empty()) os << "1";
  for (size_t i = 0; i < r.fact.parts.size(); ++i) {
    auto [p, a] = r.fact.parts[i];
    if (i) os << " * ";
    os << p;
    if (a > 1) os << "^" << a;
  }
  os << "\nshape: " << shape_name(r.order_shape.tag);
  if (r.order_shape.squared_prime)
    os << " (squared prime " << r.order_shape.squared_prime << ")";
  os << "\ndivisibility edges:";
  if (r.graph.edges.empty()) os << " none";
  for (auto& [p, q] : r.graph.edges) os << " " << p << "->" << q;
  if (r.order_shape.squared_prime) {
    os << "\nprimes dividing p1^2 - 1 = "
       << r.order_shape.squared_prime * r.order_shape.squared_prime - 1 << ":";
    if (r.square_witnesses.empty()) os << " none";
    for (u64 p : r.square_witnesses) os << " " << p;
  }
  os << "\nflags: cyclic=" << (r.cyclic ? "yes" : "no")
     << " nilpotent=" << (r.nilpotent ? "yes" : "no")
     << " abelian=" << (r.abelian ? "yes" : "no");
  for (auto& n : r.notes) os << "\n- " << n;
  if (r.result.exact())
    os << "\nG(n) = " << *r.result.count << " [" << r.result.clause << "]";
  else
    os << "\nG(n): unsupported shape (" << r.result.clause << ")";
  os << "\n";
  return os.str();
}

}  // namespace gnum
