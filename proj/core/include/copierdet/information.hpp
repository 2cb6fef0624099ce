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

#include <span>

#include "copierdet/cascade.hpp"
#include "copierdet/core_model.hpp"

namespace copierdet {

// A priori input probabilities (vacuum, photon).
class InputPriors {
 public:
  // Throws ParameterError unless both are probabilities summing to 1 within
  // kProbabilityTolerance; renormalizes otherwise.
  InputPriors(double vacuum, double photon);

  static InputPriors from_photon_probability(double p) { return InputPriors(1.0 - p, p); }

  double vacuum() const noexcept { return vacuum_; }
  double photon() const noexcept { return photon_; }

 private:
  double vacuum_;
  double photon_;
};

struct InformationResult {
  double mutual_information_bits = 0.0;
  double effective_efficiency = 0.0;
};

// Interval width at which the effective-efficiency bisection stops.
inline constexpr double kBisectionWidth = 1e-12;
inline constexpr int kBisectionMaxIterations = 200;

// H(p) in bits, with 0 log 0 = 0.
double binary_entropy(double p);

// Shannon mutual information in bits between the input symbol and the
// detection record, sum_{i,j} P(j|i) P(i) log2(P(j|i) / P(j)). Terms with
// P(j|i) = 0 contribute nothing. The result is clamped into [0, H(priors)]
// to absorb rounding.
double mutual_information(const InputPriors& priors, std::span<const double> given_vacuum,
                          std::span<const double> given_photon);
double mutual_information(const InputPriors& priors, const ConditionalOutcomeDistribution& cond);

// Mutual information of a single noiseless detector of efficiency eta_e
// with no copiers: the Z-channel P(count|photon) = eta_e, P(count|vacuum) = 0.
double baseline_mutual_information(double eta_e, double p);

// Efficiency of the noiseless bare detector that carries `target_mi` bits,
// found by bisection on [0, 1]. Requires 0 < p < 1. A target below 0 or
// above baseline_mutual_information(1, p) by more than 1e-12 is a
// DomainError.
double effective_efficiency(double target_mi, double p);

// Numeric pipeline: exact pattern distributions, mutual information, then
// effective efficiency. Works for any noise setting.
InformationResult evaluate_scheme(const SchemeConfig& cfg, const CopierParams& c,
                                  const DetectorParams& d);

// Closed form for xi = 0, mu = -1: iterate x -> eps [1 - (1 - x)^2] `levels`
// times starting from eta.
double closed_form_effective_efficiency(double eps, double eta, int levels);

// Large-N limit of the closed form. 2 - 1/eps for eps > 1/2; for eps <= 1/2
// the only fixed point of the recursion in [0, 1] is 0, which is returned
// instead of the non-positive 2 - 1/eps.
double effective_efficiency_limit(double eps);

// Smallest copier success probability for which one copier level beats the
// bare detector: 1 / (2 - eta).
double improvement_threshold(double eta);

}  // namespace copierdet
