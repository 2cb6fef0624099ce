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

#include "copierdet/cascade.hpp"

#include <array>
#include <cmath>
#include <random>
#include <string>
#include <unordered_map>

#include "copierdet/errors.hpp"

namespace copierdet {

SchemeConfig::SchemeConfig(int levels, double prior_p)
    : levels_(levels), prior_p_(checked_probability(prior_p, "prior p")) {
  if (levels < 0 || levels > kMaxMonteCarloLevels) {
    throw ParameterError("levels must lie in [0, " + std::to_string(kMaxMonteCarloLevels) +
                         "], got " + std::to_string(levels));
  }
}

std::size_t pattern_count(int levels) {
  if (levels < 0 || levels > kMaxExactLevels) {
    throw CapabilityError("exact pattern distributions support at most " +
                          std::to_string(kMaxExactLevels) + " levels, got " +
                          std::to_string(levels));
  }
  return std::size_t{1} << leaf_count(levels);
}

namespace {

using Distribution = std::vector<double>;

// Children share every parameter, so a level's distribution depends only on
// the input bit. Builds both bottom-up and returns the pair for `depth`.
std::array<Distribution, 2> both_inputs(int depth, const CopierParams& c,
                                        const DetectorParams& d) {
  std::array<Distribution, 2> level;
  for (unsigned bit : {0U, 1U}) {
    const double click = count_probability(symbol_from_bit(bit), d);
    level[bit] = {1.0 - click, click};
  }
  const std::array<PairDistribution, 2> pairs{copier_channel(Symbol::kVacuum, c),
                                              copier_channel(Symbol::kPhoton, c)};

  for (int n = 1; n <= depth; ++n) {
    const std::size_t child_size = level[0].size();
    const unsigned shift = static_cast<unsigned>(leaf_count(n - 1));
    std::array<Distribution, 2> next{Distribution(child_size * child_size, 0.0),
                                     Distribution(child_size * child_size, 0.0)};
    for (unsigned bit : {0U, 1U}) {
      Distribution& out = next[bit];
      for (unsigned left_bit : {0U, 1U}) {
        for (unsigned right_bit : {0U, 1U}) {
          const double w = pairs[bit](left_bit, right_bit);
          if (w == 0.0) continue;
          const Distribution& left = level[left_bit];
          const Distribution& right = level[right_bit];
          for (std::size_t r = 0; r < child_size; ++r) {
            const double wr = w * right[r];
            if (wr == 0.0) continue;
            double* row = out.data() + (r << shift);
            for (std::size_t l = 0; l < child_size; ++l) row[l] += wr * left[l];
          }
        }
      }
    }
    level = std::move(next);
  }
  return level;
}

void require_exact_depth(int depth) {
  if (depth < 0) throw ParameterError("depth must be non-negative");
  (void)pattern_count(depth);
}

}  // namespace

std::vector<double> subtree_outcome_distribution(Symbol input, int depth, const CopierParams& c,
                                                 const DetectorParams& d) {
  require_exact_depth(depth);
  return std::move(both_inputs(depth, c, d)[to_bit(input)]);
}

ConditionalOutcomeDistribution conditional_distributions(const SchemeConfig& cfg,
                                                         const CopierParams& c,
                                                         const DetectorParams& d) {
  require_exact_depth(cfg.levels());
  auto level = both_inputs(cfg.levels(), c, d);
  return ConditionalOutcomeDistribution{cfg.levels(), std::move(level[0]), std::move(level[1])};
}

double EmpiricalDistribution::probability(std::uint64_t pattern) const {
  const auto it = probabilities.find(pattern);
  return it == probabilities.end() ? 0.0 : it->second;
}

std::vector<double> EmpiricalDistribution::dense() const {
  std::vector<double> out(pattern_count(levels), 0.0);
  for (const auto& [pattern, prob] : probabilities) out[pattern] = prob;
  return out;
}

namespace {

class TreeSampler {
 public:
  TreeSampler(const CopierParams& c, const DetectorParams& d, std::uint64_t seed)
      : copier_(c),
        failure_(copier_failure_state(c.mu())),
        click_{count_probability(Symbol::kVacuum, d), count_probability(Symbol::kPhoton, d)},
        rng_(make_engine(seed)) {}

  std::uint64_t sample(unsigned bit, int depth) {
    if (depth == 0) return uniform() < click_[bit] ? 1U : 0U;
    unsigned left = bit;
    unsigned right = bit;
    if (uniform() >= copier_.eps()) {
      const unsigned pair = sample_failure_pair();
      left = pair >> 1;
      right = pair & 1U;
    }
    const std::uint64_t low = sample(left, depth - 1);
    const std::uint64_t high = sample(right, depth - 1);
    return low | (high << leaf_count(depth - 1));
  }

 private:
  static std::mt19937_64 make_engine(std::uint64_t seed) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
    return std::mt19937_64(seq);
  }

  // 53 random mantissa bits; identical across standard libraries, unlike
  // std::uniform_real_distribution.
  double uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

  unsigned sample_failure_pair() {
    const double u = uniform();
    double acc = 0.0;
    for (unsigned k = 0; k < 3; ++k) {
      acc += failure_.values()[k];
      if (u < acc) return k;
    }
    return 3;
  }

  CopierParams copier_;
  PairDistribution failure_;
  std::array<double, 2> click_;
  std::mt19937_64 rng_;
};

}  // namespace

EmpiricalDistribution monte_carlo_distribution(Symbol input, int depth, const CopierParams& c,
                                               const DetectorParams& d, std::uint64_t trials,
                                               std::uint64_t seed) {
  if (trials == 0) throw ParameterError("trials must be at least 1");
  if (depth < 0) throw ParameterError("depth must be non-negative");
  if (depth > kMaxMonteCarloLevels) {
    throw CapabilityError("Monte Carlo supports at most " + std::to_string(kMaxMonteCarloLevels) +
                          " levels, got " + std::to_string(depth));
  }

  TreeSampler sampler(c, d, seed);
  std::unordered_map<std::uint64_t, std::uint64_t> counts;
  for (std::uint64_t t = 0; t < trials; ++t) ++counts[sampler.sample(to_bit(input), depth)];

  EmpiricalDistribution out{depth, trials, {}};
  const double scale = 1.0 / static_cast<double>(trials);
  for (const auto& [pattern, n] : counts) {
    out.probabilities.emplace(pattern, static_cast<double>(n) * scale);
  }
  return out;
}

double total_variation_distance(std::span<const double> exact,
                                const EmpiricalDistribution& empirical) {
  double sum = 0.0;
  for (std::size_t k = 0; k < exact.size(); ++k) {
    sum += std::abs(exact[k] - empirical.probability(k));
  }
  // Sampled patterns outside the exact support (should not occur).
  for (const auto& [pattern, prob] : empirical.probabilities) {
    if (pattern >= exact.size()) sum += prob;
  }
  return 0.5 * sum;
}

double total_variation_distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw ParameterError("distributions differ in length");
  double sum = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) sum += std::abs(a[k] - b[k]);
  return 0.5 * sum;
}

double perfect_copier_count_prob(double eta) {
  eta = checked_probability(eta, "eta");
  return eta + (1.0 - eta) * eta;
}

double perfect_copier_no_photon_posterior(double eta, double p) {
  eta = checked_probability(eta, "eta");
  p = checked_probability(p, "p");
  const double denominator = 1.0 - eta * p * (2.0 - eta);
  if (denominator < 1e-15) {
    throw DomainError("no-count event has zero probability (eta = 1, p = 1)");
  }
  return (1.0 - p) / denominator;
}

double classical_copier_count_prob(double eta) {
  eta = checked_probability(eta, "eta");
  return eta * eta * (2.0 - eta);
}

}  // namespace copierdet
