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

#include "copierdet/information.hpp"

#include <cmath>
#include <string>

#include "copierdet/errors.hpp"

namespace copierdet {

InputPriors::InputPriors(double vacuum, double photon)
    : vacuum_(checked_probability(vacuum, "vacuum prior")),
      photon_(checked_probability(photon, "photon prior")) {
  const double total = vacuum_ + photon_;
  if (std::abs(total - 1.0) > kProbabilityTolerance) {
    throw ParameterError("priors must sum to 1, got " + std::to_string(total));
  }
  vacuum_ /= total;
  photon_ /= total;
}

double binary_entropy(double p) {
  p = checked_probability(p, "p");
  double h = 0.0;
  if (p > 0.0) h -= p * std::log2(p);
  if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
  return h;
}

double mutual_information(const InputPriors& priors, std::span<const double> given_vacuum,
                          std::span<const double> given_photon) {
  if (given_vacuum.size() != given_photon.size()) {
    throw ParameterError("conditional distributions differ in length");
  }
  const double pv = priors.vacuum();
  const double pp = priors.photon();
  double mi = 0.0;
  for (std::size_t j = 0; j < given_vacuum.size(); ++j) {
    const double v = given_vacuum[j];
    const double ph = given_photon[j];
    const double marginal = pv * v + pp * ph;
    if (marginal <= 0.0) continue;
    if (v > 0.0 && pv > 0.0) mi += pv * v * std::log2(v / marginal);
    if (ph > 0.0 && pp > 0.0) mi += pp * ph * std::log2(ph / marginal);
  }
  const double ceiling = binary_entropy(pp);
  if (mi < 0.0) return 0.0;
  if (mi > ceiling) return ceiling;
  return mi;
}

double mutual_information(const InputPriors& priors, const ConditionalOutcomeDistribution& cond) {
  return mutual_information(priors, cond.given_vacuum, cond.given_photon);
}

double baseline_mutual_information(double eta_e, double p) {
  eta_e = checked_probability(eta_e, "eta_e");
  const double vacuum[2] = {1.0, 0.0};
  const double photon[2] = {1.0 - eta_e, eta_e};
  return mutual_information(InputPriors::from_photon_probability(p), vacuum, photon);
}

double effective_efficiency(double target_mi, double p) {
  p = checked_probability(p, "p");
  if (p <= 0.0 || p >= 1.0) {
    throw DomainError("effective efficiency needs 0 < p < 1, got p = " + std::to_string(p));
  }
  const double ceiling = baseline_mutual_information(1.0, p);
  if (!(target_mi >= -kBisectionWidth && target_mi <= ceiling + kBisectionWidth)) {
    throw DomainError("mutual information " + std::to_string(target_mi) +
                      " lies outside [0, " + std::to_string(ceiling) + "]");
  }
  if (target_mi <= 0.0) return 0.0;
  if (target_mi >= ceiling) return 1.0;

  double lo = 0.0;
  double hi = 1.0;
  for (int i = 0; i < kBisectionMaxIterations && hi - lo >= kBisectionWidth; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (baseline_mutual_information(mid, p) < target_mi) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

InformationResult evaluate_scheme(const SchemeConfig& cfg, const CopierParams& c,
                                  const DetectorParams& d) {
  const auto cond = conditional_distributions(cfg, c, d);
  const double mi = mutual_information(InputPriors::from_photon_probability(cfg.prior_p()), cond);
  return InformationResult{mi, effective_efficiency(mi, cfg.prior_p())};
}

double closed_form_effective_efficiency(double eps, double eta, int levels) {
  eps = checked_probability(eps, "eps");
  double x = checked_probability(eta, "eta");
  if (levels < 0) throw ParameterError("levels must be non-negative");
  for (int n = 0; n < levels; ++n) {
    const double miss = 1.0 - x;
    x = eps * (1.0 - miss * miss);
  }
  return x;
}

double effective_efficiency_limit(double eps) {
  eps = checked_probability(eps, "eps");
  if (eps <= 0.5) return 0.0;
  return 2.0 - 1.0 / eps;
}

double improvement_threshold(double eta) {
  eta = checked_probability(eta, "eta");
  return 1.0 / (2.0 - eta);
}

}  // namespace copierdet
