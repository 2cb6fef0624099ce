// Copyright 2026 The copierdet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "cli/commands.hpp"
#include "copierdet/errors.hpp"
#include "copierdet/information.hpp"
#include "doctest.h"

using namespace copierdet;
using namespace copierdet::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "copierdet");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

std::string field(const std::string& report, const std::string& key) {
  for (const auto& line : split(report, '\n')) {
    if (line.rfind(key + ": ", 0) == 0) return line.substr(key.size() + 2);
  }
  return {};
}

}  // namespace

TEST_CASE("sweep spec parsing and grid") {
  const auto spec = SweepSpec::parse("eps=0.5:1.0:0.005");
  CHECK(spec.name() == "eps");
  const auto g = spec.grid();
  REQUIRE(g.size() == 101);
  CHECK(g.front() == 0.5);
  CHECK(g.back() == 1.0);

  const auto uneven = SweepSpec::parse("xi=0:1:0.3").grid();
  REQUIRE(uneven.size() == 4);
  CHECK(uneven.back() == doctest::Approx(0.9));

  CHECK(SweepSpec::parse("mu=-1:1:0.5").grid().size() == 5);
  CHECK(SweepSpec::parse("p=0.2:0.2:0.1").grid() == std::vector<double>{0.2});

  CHECK_THROWS_AS(SweepSpec::parse("gamma=0:1:0.1"), ParameterError);
  CHECK_THROWS_AS(SweepSpec::parse("eps=0:1"), ParameterError);
  CHECK_THROWS_AS(SweepSpec::parse("eps=0:1:0"), ParameterError);
  CHECK_THROWS_AS(SweepSpec::parse("eps=1:0:0.1"), ParameterError);
  CHECK_THROWS_AS(SweepSpec::parse("eps=0:1.5:0.1"), ParameterError);
  CHECK_THROWS_AS(SweepSpec::parse("eps=a:1:0.1"), ParameterError);
}

TEST_CASE("levels list") {
  CHECK(parse_levels("0,1,2,3") == std::vector<int>{0, 1, 2, 3});
  CHECK(parse_levels("2") == std::vector<int>{2});
  CHECK_THROWS_AS(parse_levels("1,,2"), ParameterError);
  CHECK_THROWS_AS(parse_levels("-1"), ParameterError);
  CHECK_THROWS_AS(parse_levels("6"), ParameterError);
  CHECK_THROWS_AS(parse_levels("x"), ParameterError);
}

TEST_CASE("value formatting") {
  CHECK(format_value(0.84) == "0.84");
  CHECK(format_value(1.0) == "1");
  CHECK(format_value(0.99934464) == "0.99934464");
  CHECK(format_value(2.0 / 3.0) == "0.6666666667");
  CHECK(format_value(-0.0) == "0");
}

TEST_CASE("eval command") {
  SUBCASE("perfect copier") {
    const auto r = invoke({"eval", "--eta", "0.6", "--xi", "0", "--eps", "1", "--mu", "-1",
                           "--levels", "1", "--p", "0.5"});
    REQUIRE(r.code == kSuccess);
    CHECK(field(r.out, "eta_e_pipeline") == "0.84");
    CHECK(field(r.out, "eta_e_closed_form") == "0.84");
    CHECK(field(r.out, "improvement_threshold") == "0.7142857143");
  }
  SUBCASE("defaults are the canonical scenario") {
    CHECK(invoke({"eval"}).out == invoke({"eval", "--eta", "0.6", "--xi", "0", "--eps", "1",
                                           "--mu", "-1", "--levels", "1", "--p", "0.5"})
                                      .out);
  }
  SUBCASE("at the improvement threshold") {
    const auto report = evaluate(ModelParams{0.6, 0.0, 0.7142857, -1.0, 0.5}, 1);
    CHECK(std::abs(report.effective_efficiency - 0.6) < 1e-6);
  }
  SUBCASE("bare detector") {
    const auto r = invoke({"eval", "--levels", "0"});
    REQUIRE(r.code == kSuccess);
    CHECK(std::stod(field(r.out, "mutual_information_bits")) ==
          doctest::Approx(0.3958156020).epsilon(1e-9));
    CHECK(field(r.out, "eta_e_pipeline") == "0.6");
  }
  SUBCASE("closed form only without noise") {
    CHECK(field(invoke({"eval", "--xi", "0.1"}).out, "eta_e_closed_form").empty());
    CHECK(field(invoke({"eval", "--mu", "0"}).out, "eta_e_closed_form").empty());
  }
  SUBCASE("errors") {
    auto r = invoke({"eval", "--eta", "1.5"});
    CHECK(r.code == kUsageError);
    CHECK(r.err.find("--eta") != std::string::npos);
    r = invoke({"eval", "--mu", "-2"});
    CHECK(r.code == kUsageError);
    CHECK(r.err.find("--mu") != std::string::npos);
    r = invoke({"eval", "--p", "0"});
    CHECK(r.code == kUsageError);
    CHECK(r.err.find("--p") != std::string::npos);
    CHECK(invoke({"eval", "--levels", "1,2"}).code == kUsageError);
    CHECK(invoke({"eval", "--levels", "5"}).code == kDomainError);
    CHECK(invoke({"eval", "--bogus"}).code == kUsageError);
    CHECK(invoke({}).code == kUsageError);
    CHECK(invoke({"--help"}).code == kSuccess);
  }
}

TEST_CASE("sweep command") {
  SUBCASE("csv layout") {
    const auto r = invoke({"sweep", "--sweep", "xi=0:0.2:0.1", "--levels", "0,1"});
    REQUIRE(r.code == kSuccess);
    const auto lines = split(r.out, '\n');
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == "xi,eta_e_N0,eta_e_N1,limit");
    CHECK(lines[1] == "0,0.6,0.84,1");
    // Dark counts cost information.
    const auto noisy = split(lines[3], ',');
    CHECK(std::stod(noisy[1]) < 0.6);
    CHECK(std::stod(noisy[2]) < 0.84);
    CHECK(r.out.find('\r') == std::string::npos);
  }
  SUBCASE("matches the library row by row") {
    const auto r = invoke({"sweep", "--sweep", "mu=-1:1:0.5", "--eps", "0.8", "--eta", "0.5",
                           "--xi", "0.1", "--levels", "2"});
    REQUIRE(r.code == kSuccess);
    const auto lines = split(r.out, '\n');
    REQUIRE(lines.size() == 6);
    for (int i = 0; i < 5; ++i) {
      const auto cols = split(lines[i + 1], ',');
      const double mu = -1.0 + 0.5 * i;
      const auto want = evaluate_scheme(SchemeConfig(2, 0.5), CopierParams(0.8, mu),
                                        DetectorParams(0.5, 0.1));
      CHECK(cols[1] == format_value(want.effective_efficiency));
      CHECK(cols[2] == "0.75");
    }
  }
  SUBCASE("errors") {
    CHECK(invoke({"sweep", "--sweep", "nu=0:1:0.1"}).code == kUsageError);
    CHECK(invoke({"sweep"}).code == kUsageError);
    CHECK(invoke({"sweep", "--sweep", "eps=0:1:0.5", "--levels", "5"}).code == kDomainError);
    CHECK(invoke({"sweep", "--sweep", "p=0:1:0.5"}).code == kDomainError);
    CHECK(invoke({"sweep", "--sweep", "eps=0:1:0.5", "--output", "/nonexistent/dir/x.csv"}).code ==
          kUsageError);
  }
}

TEST_CASE("fig2 preset") {
  const auto a = invoke({"fig2"});
  REQUIRE(a.code == kSuccess);
  CHECK(a.out == invoke({"fig2"}).out);
  const auto lines = split(a.out, '\n');
  REQUIRE(lines.size() == 102);
  CHECK(lines.front() == "eps,eta_e_N0,eta_e_N1,eta_e_N2,eta_e_N3,limit");
  CHECK(lines.back() == "1,0.6,0.84,0.9744,0.99934464,1");
  CHECK(lines[1].rfind("0.5,", 0) == 0);
  CHECK(split(lines[1], ',').back() == "0");

  const double threshold = improvement_threshold(0.6);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto cols = split(lines[i], ',');
    REQUIRE(cols.size() == 6);
    const double eps = std::stod(cols[0]);
    std::vector<double> eta_e;
    for (int k = 1; k <= 4; ++k) eta_e.push_back(std::stod(cols[k]));
    for (const auto& c : cols) {
      CHECK(std::stod(c) >= 0.0);
      CHECK(std::stod(c) <= 1.0);
    }
    if (eps > threshold) {
      for (int k = 1; k < 4; ++k) CHECK(eta_e[k] >= eta_e[k - 1]);
    }
    // The N = 1 column crosses the bare-detector efficiency at the threshold.
    CHECK((eta_e[1] > 0.6) == (eps > threshold));
  }
}

TEST_CASE("montecarlo command") {
  SUBCASE("perfect detector has zero distance") {
    const auto r = invoke({"montecarlo", "--levels", "0", "--eta", "1", "--trials", "1000"});
    REQUIRE(r.code == kSuccess);
    CHECK(field(r.out, "tv_distance") == "0");
  }
  SUBCASE("one perfect copier") {
    const auto report =
        run_montecarlo(ModelParams{0.6, 0, 1, -1, 0.5}, 1, Symbol::kPhoton, 1'000'000, 42);
    CHECK(report.tv_distance < 0.004);
    CHECK(report.consistent());
  }
  SUBCASE("depth 5 needs --no-compare") {
    CHECK(invoke({"montecarlo", "--levels", "5", "--trials", "100"}).code == kDomainError);
    const auto r = invoke({"montecarlo", "--levels", "5", "--trials", "100", "--no-compare"});
    CHECK(r.code == kSuccess);
    CHECK(r.out.find("pattern,empirical") != std::string::npos);
  }
  SUBCASE("vacuum input and bad arguments") {
    const auto r = invoke({"montecarlo", "--levels", "2", "--input", "vacuum", "--eps", "0.9",
                           "--mu", "0.3", "--eta", "0.7", "--xi", "0.1"});
    CHECK(r.code == kSuccess);
    CHECK(invoke({"montecarlo", "--input", "photons"}).code == kUsageError);
    CHECK(invoke({"montecarlo", "--trials", "0"}).code == kUsageError);
  }
  SUBCASE("inconsistency is reported with its own exit code") {
    MonteCarloReport report;
    report.exact = std::vector<double>{1.0, 0.0};
    report.tv_distance = 0.5;
    report.tv_bound = 0.1;
    CHECK_FALSE(report.consistent());
  }
  CHECK(pattern_string(0b0110, 2) == "0110");
  CHECK(pattern_string(0b0001, 2) == "1000");
}
