#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "doctest.h"

namespace {

struct Outcome {
  std::string out;
  int status = -1;
};

Outcome invoke(const std::string& args) {
  const std::string cmd = std::string(ADER1D_PATH) + " " + args + " 2>/dev/null";
  Outcome o;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) o.out.append(buf, n);
  const int raw = pclose(pipe);
  o.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return o;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("solve euler-smooth keeps the density positive") {
  const auto o = invoke("solve --preset euler-smooth --cells 16 --order 2 --t-out 0.2");
  REQUIRE(o.status == 0);
  const auto rows = parse_csv(o.out);
  REQUIRE(rows.size() == 17u);
  CHECK(rows[0][0] == "x");
  CHECK(rows[0][1] == "q_1");
  CHECK(rows[0].size() == 7u);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double rho = std::stod(rows[i][1]);
    CHECK(rho > 0.0);
    CHECK(std::isfinite(rho));
  }
}

TEST_CASE("zero output time echoes the initial averages") {
  const auto o = invoke("solve --preset linear-system --cells 8 --t-out 0");
  REQUIRE(o.status == 0);
  const auto rows = parse_csv(o.out);
  REQUIRE(rows.size() == 9u);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(std::stod(rows[i][1]) == doctest::Approx(std::stod(rows[i][3])).epsilon(1e-9));
    CHECK(std::stod(rows[i][2]) == doctest::Approx(std::stod(rows[i][4])).epsilon(1e-9));
  }
}

TEST_CASE("LeVeque-Yee front position") {
  const auto o = invoke("solve --preset leveque-yee --cells 100 --order 3");
  REQUIRE(o.status == 0);
  const auto rows = parse_csv(o.out);
  REQUIRE(rows.size() == 101u);
  double front = 0.0;
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (std::stod(rows[i][1]) >= 0.5) front = std::stod(rows[i][0]);
  CHECK(front == doctest::Approx(0.6).epsilon(0.03));
}

TEST_CASE("converge table layout") {
  const auto o = invoke("converge --preset linear-system --orders 2 --meshes 8,16,32,64 --t-out 0.1");
  REQUIRE(o.status == 0);
  const auto rows = parse_csv(o.out);
  REQUIRE(rows.size() == 5u);
  CHECK(rows[0] == std::vector<std::string>{"order", "mesh", "linf_err", "linf_ord", "l1_err", "l1_ord", "l2_err",
                                            "l2_ord", "cpu_s"});
  CHECK(rows[1][3] == "nan");
  CHECK(rows[4][1] == "64");
  CHECK(std::stod(rows[4][5]) > 1.5);
}

TEST_CASE("stability output is reproducible") {
  const std::string args =
      "stability --order 3 --scenarios 5 --c-min 0.1 --c-max 0.5 --c-step 0.2 --r-min -1 --r-max 0 --r-step 0.5 --seed 99";
  const auto a = invoke(args), b = invoke(args);
  REQUIRE(a.status == 0);
  CHECK(a.out == b.out);
  const auto rows = parse_csv(a.out);
  CHECK(rows[0] == std::vector<std::string>{"c", "r", "stable_fraction"});
  CHECK(rows.size() == 10u);
}

TEST_CASE("help lists the flags") {
  const auto top = invoke("--help");
  CHECK(top.status == 0);
  for (const char* flag : {"--threads", "--out", "solve", "converge", "stability"})
    CHECK(top.out.find(flag) != std::string::npos);
  const auto solve = invoke("solve --help");
  for (const char* flag : {"--preset", "--order", "--cells", "--cfl", "--alpha", "--t-out", "--boundary"})
    CHECK(solve.out.find(flag) != std::string::npos);
  const auto stab = invoke("stability --help");
  CHECK(stab.out.find("--seed") != std::string::npos);
}

TEST_CASE("bad input fails with a nonzero status") {
  CHECK(invoke("solve --preset nowhere").status != 0);
  CHECK(invoke("solve --alpha 0.5").status != 0);
}

}
