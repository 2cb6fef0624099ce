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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "copierdet/cascade.hpp"
#include "copierdet/core_model.hpp"

namespace copierdet::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kDomainError = 2,
  kMonteCarloMismatch = 3,
};

// Physical parameters of one scheme. Defaults are the canonical scenario:
// eta = 0.6 noiseless detectors, perfect copier failing to vacuum, p = 1/2.
struct ModelParams {
  double eta = 0.6;
  double xi = 0.0;
  double eps = 1.0;
  double mu = -1.0;
  double p = 0.5;

  DetectorParams detector() const { return DetectorParams(eta, xi); }
  CopierParams copier() const { return CopierParams(eps, mu); }
};

enum class SweptParameter { kEps, kEta, kXi, kMu, kP };

// Inclusive grid `name=start:stop:step`.
struct SweepSpec {
  SweptParameter parameter = SweptParameter::kEps;
  double start = 0.0;
  double stop = 0.0;
  double step = 0.0;

  // Throws ParameterError on malformed text, an unknown parameter name,
  // step <= 0 or start > stop.
  static SweepSpec parse(std::string_view text);

  std::string_view name() const noexcept;
  // floor((stop - start) / step) + 1 points; the last one never exceeds stop
  // and snaps onto it when it lands within rounding distance.
  std::vector<double> grid() const;
  ModelParams apply(ModelParams base, double value) const;
};

// Comma-separated list of non-negative level counts, e.g. "0,1,2,3".
std::vector<int> parse_levels(std::string_view text);

// 10 significant digits, trailing zeros trimmed ("%.10g").
std::string format_value(double value);

struct EvalReport {
  double mutual_information_bits = 0.0;
  double effective_efficiency = 0.0;
  std::optional<double> closed_form_effective_efficiency;  // only for xi = 0, mu = -1
  double improvement_threshold = 0.0;
};

EvalReport evaluate(const ModelParams& params, int levels);
void write_eval(std::ostream& out, const ModelParams& params, int levels, const EvalReport& report);

// CSV: header `<swept>,eta_e_N<n>...,limit`, then one row per grid point.
void write_sweep_csv(std::ostream& out, const SweepSpec& spec, const ModelParams& base,
                     std::span<const int> levels);

SweepSpec fig2_sweep();
ModelParams fig2_params();
std::vector<int> fig2_levels();

struct MonteCarloReport {
  int levels = 0;
  Symbol input = Symbol::kPhoton;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  EmpiricalDistribution empirical;
  std::optional<std::vector<double>> exact;  // absent when comparison is skipped
  double tv_distance = 0.0;
  double tv_bound = 0.0;

  bool consistent() const { return !exact || tv_distance <= tv_bound; }
};

// Throws CapabilityError when `compare` is set and levels > kMaxExactLevels.
MonteCarloReport run_montecarlo(const ModelParams& params, int levels, Symbol input,
                                std::uint64_t trials, std::uint64_t seed, bool compare = true);
void write_montecarlo(std::ostream& out, const MonteCarloReport& report);

// Pattern as a string of leaf outcomes, leaf 0 first.
std::string pattern_string(std::uint64_t pattern, int levels);

// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace copierdet::cli
