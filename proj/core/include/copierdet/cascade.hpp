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
#include <map>
#include <span>
#include <vector>

#include "copierdet/core_model.hpp"

namespace copierdet {

// Exact pattern vectors have 2^(2^levels) entries; depth 4 is 65536.
inline constexpr int kMaxExactLevels = 4;
// Sampled patterns are packed into 64-bit indices; depth 5 uses 32 bits.
inline constexpr int kMaxMonteCarloLevels = 5;

// Depth N of the copier tree (N = 0 is a bare detector) and the prior
// probability p that the input is a photon.
class SchemeConfig {
 public:
  SchemeConfig(int levels, double prior_p);

  int levels() const noexcept { return levels_; }
  double prior_p() const noexcept { return prior_p_; }

 private:
  int levels_;
  double prior_p_;
};

// Number of leaf detectors of a depth-`levels` tree.
constexpr std::uint64_t leaf_count(int levels) noexcept { return std::uint64_t{1} << levels; }

// Number of distinct detector-outcome patterns, 2^(2^levels). Only valid for
// levels <= kMaxExactLevels.
std::size_t pattern_count(int levels);

// Joint record of all leaf detectors. Bit k is leaf k (1 = count); within
// every copier the left child (copy 1) holds the lower-order bits.
struct OutcomePattern {
  std::uint64_t bits = 0;

  bool leaf(unsigned k) const noexcept { return (bits >> k) & 1U; }
};

// P(pattern | input) for both inputs.
struct ConditionalOutcomeDistribution {
  int levels = 0;
  std::vector<double> given_vacuum;
  std::vector<double> given_photon;

  const std::vector<double>& given(Symbol input) const noexcept {
    return input == Symbol::kPhoton ? given_photon : given_vacuum;
  }
};

// Exact distribution over the 2^(2^depth) outcome patterns of a depth-`depth`
// copier tree fed `input`. Depth 0 is a single detector (index 0 = no count,
// 1 = count). For depth > 0 the root copier's output pair weights the product
// of the two child subtree distributions, left child in the low-order bits.
// Throws CapabilityError for depth > kMaxExactLevels.
std::vector<double> subtree_outcome_distribution(Symbol input, int depth, const CopierParams& c,
                                                 const DetectorParams& d);

ConditionalOutcomeDistribution conditional_distributions(const SchemeConfig& cfg,
                                                         const CopierParams& c,
                                                         const DetectorParams& d);

// Normalized pattern counts from a Monte Carlo run. Sparse, because a depth-5
// tree has 2^32 possible patterns.
struct EmpiricalDistribution {
  int levels = 0;
  std::uint64_t trials = 0;
  std::map<std::uint64_t, double> probabilities;

  double probability(std::uint64_t pattern) const;
  // Dense vector of length pattern_count(levels); CapabilityError above
  // kMaxExactLevels.
  std::vector<double> dense() const;
};

// Samples the stochastic tree `trials` times: each copier succeeds with
// probability eps, otherwise draws its pair from the failure state; each
// leaf detector then clicks with its Born probability. Deterministic for a
// fixed seed. Throws ParameterError for trials == 0 and CapabilityError for
// depth > kMaxMonteCarloLevels.
EmpiricalDistribution monte_carlo_distribution(Symbol input, int depth, const CopierParams& c,
                                               const DetectorParams& d, std::uint64_t trials,
                                               std::uint64_t seed);

// Half the L1 distance between an exact pattern vector and an empirical one.
double total_variation_distance(std::span<const double> exact,
                                const EmpiricalDistribution& empirical);
double total_variation_distance(std::span<const double> a, std::span<const double> b);

// Perfect copier, noiseless detectors of efficiency eta, one level:
// P(count | photon) = eta + (1 - eta) eta.
double perfect_copier_count_prob(double eta);

// Same setting: P(no photon | no count) = (1 - p) / (1 - eta p (2 - eta)).
// DomainError when the denominator vanishes (eta = 1, p = 1).
double perfect_copier_no_photon_posterior(double eta, double p);

// Classical copier that must itself detect the photon first:
// P(count | photon) = eta^2 (2 - eta), never above eta.
double classical_copier_count_prob(double eta);

}  // namespace copierdet
