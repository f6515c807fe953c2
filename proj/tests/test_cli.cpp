#include <doctest.h>

#include <array>
#include <cstdio>
#include <sstream>
#include <string>
#include <utility>
#include <sys/wait.h>

#include <json.hpp>

#include "gnum/sieve.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(GNUM_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t k;
  while ((k = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), k);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("gnu command") {
  auto r = run("gnu 75");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "3 (Table1.3/Thm4.2b)\n");

  CHECK(run("gnu 16").exit_code == 2);
  CHECK(run("gnu 0").exit_code == 1);
  CHECK(run("gnu banana").exit_code == 1);
  CHECK(run("gnu").exit_code == 1);
}

TEST_CASE("explain command") {
  auto r = run("explain 609");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("3->7") != std::string::npos);
  CHECK(r.out.find("7->29") != std::string::npos);
  CHECK(r.out.find("G(n) = 3") != std::string::npos);

  auto r45 = run("explain 45");
  CHECK(r45.exit_code == 0);
  CHECK(r45.out.find("Thm4.1c") != std::string::npos);

  auto r5 = run("explain 5");
  CHECK(r5.exit_code == 0);
  CHECK(r5.out.find("cyclic number") != std::string::npos);
  CHECK(r5.out.find("G(n) = 1") != std::string::npos);

  CHECK(run("explain 16").exit_code == 2);
}

TEST_CASE("range csv output and round trip") {
  auto r = run("range 1 100 --format csv");
  CHECK(r.exit_code == 0);
  auto ls = lines(r.out);
  REQUIRE(ls.size() == 101);
  CHECK(ls[0] == "n,shape,cyclic,nilpotent,abelian,gnu,clause");

  gnum::SpfTable t(100);
  std::vector<gnum::RangeRow> rows;
  gnum::classify_range(1, 100, &t, [&](const gnum::RangeRow& x) { rows.push_back(x); });
  for (size_t i = 0; i < rows.size(); ++i) {
    // reparse the CSV line and compare field by field
    std::vector<std::string> fields;
    std::string cur;
    for (char c : ls[i + 1]) {
      if (c == ',') fields.push_back(std::exchange(cur, ""));
      else cur += c;
    }
    fields.push_back(cur);
    REQUIRE(fields.size() == 7);
    REQUIRE(std::stoull(fields[0]) == rows[i].n);
    REQUIRE(fields[1] == gnum::shape_name(rows[i].shape));
    REQUIRE(fields[2] == (rows[i].cyclic ? "true" : "false"));
    REQUIRE(fields[3] == (rows[i].nilpotent ? "true" : "false"));
    REQUIRE(fields[4] == (rows[i].abelian ? "true" : "false"));
    if (rows[i].gnu) {
      REQUIRE(std::stoull(fields[5]) == *rows[i].gnu);
      REQUIRE(fields[6] == rows[i].clause);
    } else {
      REQUIRE(fields[5].empty());
      REQUIRE(fields[6].empty());
    }
  }
}

TEST_CASE("range json-lines output round trips") {
  auto r = run("range 1 10 --format json-lines");
  CHECK(r.exit_code == 0);
  auto ls = lines(r.out);
  REQUIRE(ls.size() == 10);
  std::uint64_t expected[] = {1, 1, 1, 2, 1, 2, 1, 5, 2, 2};
  for (size_t i = 0; i < 10; ++i) {
    auto j = nlohmann::json::parse(ls[i]);
    CHECK(j["n"] == i + 1);
    CHECK(j["gnu"] == expected[i]);
    CHECK(j.contains("shape"));
    CHECK(j.contains("cyclic"));
    CHECK(j.contains("nilpotent"));
    CHECK(j.contains("abelian"));
    CHECK(j.contains("clause"));
  }
  auto j8 = nlohmann::json::parse(ls[7]);
  CHECK(j8["shape"] == "PrimeCube");
  CHECK(j8["clause"] == "p^3");

  auto r16 = run("range 16 16 --format json-lines");
  auto j16 = nlohmann::json::parse(lines(r16.out)[0]);
  CHECK(j16["gnu"].is_null());
  CHECK(j16["clause"].is_null());
}

TEST_CASE("range filters") {
  auto r = run("range 1 100 --filter gnu=3 --format csv");
  CHECK(r.exit_code == 0);
  auto ls = lines(r.out);
  bool has75 = false;
  for (size_t i = 1; i < ls.size(); ++i) {
    CHECK(ls[i].find(",3,") != std::string::npos);
    if (ls[i].rfind("75,", 0) == 0) has75 = true;
  }
  CHECK(has75);

  auto ru = run("range 1 100 --filter unsupported --format csv");
  for (size_t i = 1; i < lines(ru.out).size(); ++i)
    CHECK(lines(ru.out)[i].back() == ',');  // no clause on unsupported rows

  CHECK(run("range 10 1").exit_code == 1);
  CHECK(run("range 1 10 --filter bogus").exit_code == 1);
  CHECK(run("range 1 10 --format bogus").exit_code == 1);
}

TEST_CASE("range human mode prints a stats block") {
  auto r = run("range 1 10");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("10 integers classified") != std::string::npos);
  CHECK(r.out.find("G=1: 5") != std::string::npos);
}

TEST_CASE("range output identical across job counts") {
  auto a = run("range 1 20000 --format csv --jobs 1");
  auto b = run("range 1 20000 --format csv --jobs 4");
  CHECK(a.exit_code == 0);
  CHECK(b.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("selfcheck") {
  auto r = run("selfcheck 3000");
  CHECK(r.exit_code == 0);
  for (const char* suite : {"holder-equivalence", "cyclic-criterion",
                            "thm4-vs-holder", "table1-partition", "fixture"})
    CHECK(r.out.find(suite) != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);

  CHECK(run("selfcheck 10").exit_code == 0);
}
