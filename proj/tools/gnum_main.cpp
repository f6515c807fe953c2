#include <cstdio>
#include <charconv>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gnum/classify.hpp"
#include "gnum/selfcheck.hpp"
#include "gnum/sieve.hpp"

namespace {

using namespace gnum;

enum class Format { Human, Csv, JsonLines };

constexpr const char* kClauseHelp =
    "Clause identifiers: Cyclic, Thm4.1a, p^3, Eq1, Table1.{2,3,4,5,5q2,6,12}, "
    "Thm4.1c, Thm4.2b (Table1 rows that coincide with a Theorem 4 clause "
    "report both, joined by '/').";

void append_u64(std::string& out, u64 v) {
  char buf[24];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  out.append(buf, end);
}

void append_row(std::string& out, const RangeRow& r, Format fmt) {
  switch (fmt) {
    case Format::Csv:
      append_u64(out, r.n);
      out += ',';
      out += shape_name(r.shape);
      out += r.cyclic ? ",true" : ",false";
      out += r.nilpotent ? ",true" : ",false";
      out += r.abelian ? ",true" : ",false";
      out += ',';
      if (r.gnu) append_u64(out, *r.gnu);
      out += ',';
      out += r.clause;
      out += '\n';
      break;
    case Format::JsonLines:
      out += "{\"n\":";
      append_u64(out, r.n);
      out += ",\"shape\":\"";
      out += shape_name(r.shape);
      out += "\",\"cyclic\":";
      out += r.cyclic ? "true" : "false";
      out += ",\"nilpotent\":";
      out += r.nilpotent ? "true" : "false";
      out += ",\"abelian\":";
      out += r.abelian ? "true" : "false";
      out += ",\"gnu\":";
      if (r.gnu) append_u64(out, *r.gnu); else out += "null";
      out += ",\"clause\":";
      if (r.gnu) {
        out += '"';
        out += r.clause;
        out += '"';
      } else {
        out += "null";
      }
      out += "}\n";
      break;
    case Format::Human: {
      char buf[96];
      int len = std::snprintf(buf, sizeof buf, "%10llu  %-18s %c%c%c  ",
                              static_cast<unsigned long long>(r.n),
                              std::string(shape_name(r.shape)).c_str(),
                              r.cyclic ? 'C' : '-', r.abelian ? 'A' : '-',
                              r.nilpotent ? 'N' : '-');
      out.append(buf, len);
      if (r.gnu) {
        out += "G=";
        append_u64(out, *r.gnu);
        out += " [";
        out += r.clause;
        out += ']';
      } else {
        out += "G=?";
      }
      out += '\n';
      break;
    }
  }
}

struct Filter {
  enum Kind { All, GnuEq, Cyclic, Abelian, Nilpotent, Unsupported } kind = All;
  u64 gnu_value = 0;

  bool matches(const RangeRow& r) const {
    switch (kind) {
      case All: return true;
      case GnuEq: return r.gnu && *r.gnu == gnu_value;
      case Cyclic: return r.cyclic;
      case Abelian: return r.abelian;
      case Nilpotent: return r.nilpotent;
      case Unsupported: return !r.gnu;
    }
    return false;
  }
};

bool parse_filter(const std::string& s, Filter& out) {
  if (s == "all") out.kind = Filter::All;
  else if (s == "cyclic") out.kind = Filter::Cyclic;
  else if (s == "abelian") out.kind = Filter::Abelian;
  else if (s == "nilpotent") out.kind = Filter::Nilpotent;
  else if (s == "unsupported") out.kind = Filter::Unsupported;
  else if (s.rfind("gnu=", 0) == 0) {
    out.kind = Filter::GnuEq;
    auto [p, ec] = std::from_chars(s.data() + 4, s.data() + s.size(), out.gnu_value);
    return ec == std::errc() && p == s.data() + s.size();
  } else {
    return false;
  }
  return true;
}

int cmd_gnu(u64 n, bool want_explain) {
  Factorization f = factorize(n);
  if (want_explain) {
    std::fputs(render(explain(f)).c_str(), stdout);
    return gnu(f).exact() ? 0 : 2;
  }
  GnuResult g = gnu(f);
  if (g.exact()) {
    std::printf("%llu (%s)\n", static_cast<unsigned long long>(*g.count),
                g.clause.c_str());
    return 0;
  }
  std::printf("unsupported shape: %s\n", g.clause.c_str());
  return 2;
}

int cmd_range(u64 lo, u64 hi, Format fmt, const Filter& filter, u64 spf_cap,
              unsigned jobs) {
  std::optional<SpfTable> table;
  u64 limit = std::min(hi, spf_cap);
  if (limit >= 2) table.emplace(limit, spf_cap);

  if (fmt == Format::Csv)
    std::fputs("n,shape,cyclic,nilpotent,abelian,gnu,clause\n", stdout);

  RangeStats st;
  std::string buf;
  buf.reserve(1 << 20);
  classify_range(lo, hi, table ? &*table : nullptr,
                 [&](const RangeRow& r) {
                   accumulate(st, r);
                   if (!filter.matches(r)) return;
                   append_row(buf, r, fmt);
                   if (buf.size() > (1 << 20) - 256) {
                     std::fwrite(buf.data(), 1, buf.size(), stdout);
                     buf.clear();
                   }
                 },
                 jobs);
  std::fwrite(buf.data(), 1, buf.size(), stdout);

  if (fmt == Format::Human) {
    std::printf("\n%llu integers classified\n",
                static_cast<unsigned long long>(st.total));
    std::printf("  G=1: %llu  G=2: %llu  G=3: %llu  other exact: %llu  "
                "unsupported: %llu\n",
                (unsigned long long)st.gnu1, (unsigned long long)st.gnu2,
                (unsigned long long)st.gnu3, (unsigned long long)st.other_exact,
                (unsigned long long)st.unsupported);
    std::printf("  cyclic: %llu  abelian: %llu  nilpotent: %llu\n",
                (unsigned long long)st.cyclic, (unsigned long long)st.abelian,
                (unsigned long long)st.nilpotent);
  }
  return 0;
}

int cmd_selfcheck(u64 limit) {
  auto results = run_selfcheck(limit);
  bool all_ok = true;
  for (const auto& r : results) {
    std::printf("%-20s %s%s%s\n", r.name.c_str(), r.passed ? "PASS" : "FAIL",
                r.detail.empty() ? "" : ": ", r.detail.c_str());
    all_ok = all_ok && r.passed;
  }
  return all_ok ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classify positive integers by the number of groups of that "
               "order: exact G(n) for covered order shapes, cyclic/abelian/"
               "nilpotent-number predicates, and Hoelder-formula "
               "cross-validation.\n"};
  app.require_subcommand(1);
  app.footer(kClauseHelp);

  u64 n = 0;
  auto* c_gnu = app.add_subcommand("gnu", "Print G(n) and the clause that produced it");
  c_gnu->add_option("n", n, "order to classify")->required()->check(CLI::PositiveNumber);

  auto* c_explain = app.add_subcommand("explain", "Clause-level classification report");
  c_explain->add_option("n", n, "order to classify")->required()->check(CLI::PositiveNumber);

  u64 lo = 0, hi = 0, spf_cap = 1ull << 31;
  unsigned jobs = 1;
  std::string format_s = "human", filter_s = "all";
  auto* c_range = app.add_subcommand("range", "Classify every n in [LO, HI]");
  c_range->add_option("lo", lo, "lower bound")->required()->check(CLI::PositiveNumber);
  c_range->add_option("hi", hi, "upper bound")->required()->check(CLI::PositiveNumber);
  c_range->add_option("--format", format_s, "human | csv | json-lines");
  c_range->add_option("--filter", filter_s,
                      "all | gnu=K | cyclic | abelian | nilpotent | unsupported");
  c_range->add_option("--limit-spf", spf_cap, "cap on smallest-prime-factor table entries");
  c_range->add_option("--jobs", jobs, "worker threads (output is identical for any value)");

  u64 limit = 100000;
  auto* c_check = app.add_subcommand("selfcheck", "Run the consistency suites");
  c_check->add_option("limit", limit, "sweep bound (default 100000)")
      ->check(CLI::Range(u64(2), u64(100000000)));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;  // --help exits 0; any parse failure is usage error
  }

  try {
    if (c_gnu->parsed()) return cmd_gnu(n, false);
    if (c_explain->parsed()) return cmd_gnu(n, true);
    if (c_range->parsed()) {
      Format fmt;
      if (format_s == "human") fmt = Format::Human;
      else if (format_s == "csv") fmt = Format::Csv;
      else if (format_s == "json-lines") fmt = Format::JsonLines;
      else {
        std::fprintf(stderr, "unknown format: %s\n", format_s.c_str());
        return 1;
      }
      Filter filter;
      if (!parse_filter(filter_s, filter)) {
        std::fprintf(stderr, "unknown filter: %s\n", filter_s.c_str());
        return 1;
      }
      if (lo > hi) {
        std::fprintf(stderr, "range: need lo <= hi\n");
        return 1;
      }
      return cmd_range(lo, hi, fmt, filter, spf_cap, jobs);
    }
    if (c_check->parsed()) return cmd_selfcheck(limit);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 1;
}
