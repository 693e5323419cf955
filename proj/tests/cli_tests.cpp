#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#ifndef PADIC_CLI_PATH
#error "PADIC_CLI_PATH must point at the padic binary"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args, bool merge_stderr = false) {
  std::string cmd = std::string(PADIC_CLI_PATH) + " " + args +
                    (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("check subcommand and exit codes") {
  auto ok = run_cli("check -p 3 -k 3 -a 10");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("Solvable") != std::string::npos);
  CHECK(ok.out.find("kappa_p: 1") != std::string::npos);

  auto no = run_cli("check -p 3 -k 3 -a 4");
  CHECK(no.exit_code == 2);
  CHECK(no.out.find("ConditionIIFailed") != std::string::npos);

  auto usage = run_cli("check -p 2 -k 2 -a 1");
  CHECK(usage.exit_code == 1);
}

TEST_CASE("solve-root JSON schema and values") {
  auto r = run_cli("solve-root -p 5 -k 2 -a 6 -N 4 --json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["p"] == 5);
  CHECK(j["k"] == 2);
  CHECK(j["a"] == "6");
  CHECK(j["verdict"] == "Solvable");
  CHECK(j["kappa_p"] == 2);
  REQUIRE(j["roots"].size() == 2);
  CHECK(j["roots"][0]["xi"] == 1);
  CHECK(j["roots"][0]["valuation"] == 0);
  CHECK(j["roots"][0]["digits"] == nlohmann::json::parse("[1,3,0,4]"));
  CHECK(j["roots"][1]["digits"] == nlohmann::json::parse("[4,1,4,0]"));
}

TEST_CASE("solve-root no-solution and k = 1") {
  auto no = run_cli("solve-root -p 5 -k 2 -a 50");
  CHECK(no.exit_code == 2);
  CHECK(no.out.find("EmptySolP") != std::string::npos);

  auto k1 = run_cli("solve-root -p 5 -k 1 -a 7 -N 2");
  CHECK(k1.exit_code == 0);
  CHECK(k1.out.find("2,1@0") != std::string::npos);
}

TEST_CASE("JSON output is byte-stable across runs") {
  auto a = run_cli("solve-root -p 5 -k 2 -a 6 -N 6 --json");
  auto b = run_cli("solve-root -p 5 -k 2 -a 6 -N 6 --json");
  CHECK(a.out == b.out);
  auto c = run_cli("fixed-points -p 5 -k 2 --b 126 --c 6 --d -119 --json");
  auto d = run_cli("fixed-points -p 5 -k 2 --b 126 --c 6 --d -119 --json");
  CHECK(c.out == d.out);
}

TEST_CASE("solve-poly") {
  auto two = run_cli("solve-poly -p 5 --coeffs 1,125,-6 -N 3 --json");
  CHECK(two.exit_code == 0);
  auto j = nlohmann::json::parse(two.out);
  CHECK(j["kappa_p"] == 2);
  CHECK(j["roots"].size() == 2);

  auto none = run_cli("solve-poly -p 5 --coeffs 1,0,-2");
  CHECK(none.exit_code == 2);
  CHECK(none.out.find("EmptySolP") != std::string::npos);

  auto nonmonic = run_cli("solve-poly -p 5 --coeffs 2,0,-2", true);
  CHECK(nonmonic.exit_code == 1);
  CHECK(nonmonic.out.find("NonMonic") != std::string::npos);

  // rational coefficient: x^2 + (125/2)x - 6, same residue classes
  auto rat = run_cli("solve-poly -p 5 --coeffs 1,125/2,-6 -N 3 --json");
  CHECK(rat.exit_code == 0);
  auto jr = nlohmann::json::parse(rat.out);
  CHECK(jr["kappa_p"] == 2);
  CHECK(jr["roots"][0]["xi"] == 1);
  CHECK(jr["roots"][1]["xi"] == 4);
}

TEST_CASE("fixed-points") {
  auto r = run_cli("fixed-points -p 5 -k 2 --b 126 --c 6 --d -119 -N 4");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("kappa_p: 2") != std::string::npos);
  CHECK(r.out.find("fixed points (3)") != std::string::npos);
  CHECK(r.out.find("1,0,0,0@0") != std::string::npos);  // x = 1

  auto bad = run_cli("fixed-points -p 5 -k 2 --b 126 --c 6 --d 0", true);
  CHECK(bad.exit_code == 3);
  CHECK(bad.out.find("d != 1 - b + c") != std::string::npos);

  auto three = run_cli("fixed-points -p 3 -k 3 --b 82 --c 10 --d -71 -N 3");
  CHECK(three.exit_code == 0);
  CHECK(three.out.find("fixed points (2)") != std::string::npos);
}

TEST_CASE("oracle count") {
  auto two = run_cli("oracle count -p 5 -k 2 --expr x^2-6 -M 4");
  CHECK(two.exit_code == 0);
  CHECK(two.out.find("classes mod p^4: 2") != std::string::npos);
  CHECK(two.out.find("109") != std::string::npos);
  CHECK(two.out.find("516") != std::string::npos);

  auto zero = run_cli("oracle count -p 5 -k 2 --expr x^2-2 -M 4");
  CHECK(zero.exit_code == 0);
  CHECK(zero.out.find("classes mod p^4: 0") != std::string::npos);

  auto one = run_cli("oracle count -p 3 -k 3 --expr x^3-10 -M 5");
  CHECK(one.exit_code == 0);
  CHECK(one.out.find("classes mod p^4: 1") != std::string::npos);

  auto budget = run_cli("oracle count -p 13 -k 2 --expr x^2-6 -M 12", true);
  CHECK(budget.exit_code == 4);

  auto dense = run_cli("oracle count -p 5 -k 2 --coeffs 1,125,-6 -M 6");
  CHECK(dense.exit_code == 0);
  CHECK(dense.out.find("classes mod p^6: 2") != std::string::npos);
}

TEST_CASE("oracle fixed-points") {
  auto r = run_cli(
      "oracle fixed-points -p 5 -k 2 --b 126 --c 6 --d -119 -M 6 --json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["count"] == 3);
  CHECK(j["class_exponent"] == 5);
}

TEST_CASE("negative literals and digit forms parse") {
  auto neg = run_cli("solve-root -p 5 -k 2 -a -6 -N 4");
  CHECK(neg.exit_code == 0);  // -6 ≡ 4 (mod 5), a square: two roots
  CHECK(neg.out.find("kappa_p: 2") != std::string::npos);
  auto digitform = run_cli("solve-root -p 5 -k 2 -a 1,3,0,4@0 -N 2 --json");
  CHECK(digitform.exit_code == 0);
  auto rational = run_cli("check -p 5 -k 2 -a 1/6");
  CHECK(rational.exit_code == 0);
  // a 2-digit approximation cannot support 10 root digits: honest refusal
  auto shallow = run_cli("solve-root -p 5 -k 2 -a 1,3@0 -N 10", true);
  CHECK(shallow.exit_code == 1);
  CHECK(shallow.out.find("InsufficientPrecision") != std::string::npos);
}
