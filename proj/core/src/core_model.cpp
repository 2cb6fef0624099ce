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

#include "copierdet/core_model.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "copierdet/errors.hpp"

namespace copierdet {

double checked_probability(double value, const char* what) {
  if (!(value >= -kProbabilityTolerance && value <= 1.0 + kProbabilityTolerance)) {
    throw ParameterError(std::string(what) + " must lie in [0, 1], got " + std::to_string(value));
  }
  if (value < 0.0) return 0.0;
  if (value > 1.0) return 1.0;
  return value;
}

DetectorParams::DetectorParams(double eta, double xi)
    : eta_(checked_probability(eta, "eta")), xi_(checked_probability(xi, "xi")) {}

namespace {

double checked_mu(double mu) {
  if (!(mu >= -1.0 - kProbabilityTolerance && mu <= 1.0 + kProbabilityTolerance)) {
    throw ParameterError("mu must lie in [-1, 1], got " + std::to_string(mu));
  }
  return std::clamp(mu, -1.0, 1.0);
}

}  // namespace

CopierParams::CopierParams(double eps, double mu)
    : eps_(checked_probability(eps, "eps")), mu_(checked_mu(mu)) {}

PovmElement::PovmElement(double a0_weight, double a1_weight)
    : a0(checked_probability(a0_weight, "POVM weight a0")),
      a1(checked_probability(a1_weight, "POVM weight a1")) {}

DiagonalQubitState::DiagonalQubitState(double p1) : p1_(checked_probability(p1, "p1")) {}

PairDistribution::PairDistribution(const std::array<double, 4>& q) : q_(q) {
  double total = 0.0;
  for (double& v : q_) {
    v = checked_probability(v, "pair probability");
    total += v;
  }
  if (std::abs(total - 1.0) > kProbabilityTolerance) {
    throw ParameterError("pair distribution must sum to 1, got " + std::to_string(total));
  }
  for (double& v : q_) v /= total;
}

TwoQubitPureState::TwoQubitPureState(const Amplitudes& amplitudes) : c_(amplitudes) {
  double norm2 = 0.0;
  for (const auto& c : c_) norm2 += std::norm(c);
  if (!(std::abs(norm2 - 1.0) <= kProbabilityTolerance)) {
    throw ParameterError("two-qubit state must be normalized, squared norm is " +
                         std::to_string(norm2));
  }
  const double scale = 1.0 / std::sqrt(norm2);
  for (auto& c : c_) c *= scale;
}

TwoQubitPureState TwoQubitPureState::basis(unsigned first, unsigned second) {
  if (first > 1 || second > 1) {
    throw ParameterError("basis labels must be 0 or 1");
  }
  Amplitudes c{};
  c[2 * first + second] = 1.0;
  return TwoQubitPureState(c, Unchecked{});
}

TwoQubitPureState TwoQubitPureState::product(std::complex<double> a0, std::complex<double> a1,
                                             std::complex<double> b0, std::complex<double> b1) {
  return TwoQubitPureState(Amplitudes{a0 * b0, a0 * b1, a1 * b0, a1 * b1});
}

DetectorPovm detector_povm(const DetectorParams& d) noexcept {
  const double dark = d.dark_count_probability();
  // minus = 1 - plus, weight by weight.
  return DetectorPovm{PovmElement(dark, d.eta()), PovmElement(1.0 - dark, 1.0 - d.eta())};
}

double outcome_probability(const DiagonalQubitState& state, const PovmElement& element) noexcept {
  return state.p1() * element.a1 + state.p0() * element.a0;
}

double count_probability(Symbol input, const DetectorParams& d) noexcept {
  return outcome_probability(DiagonalQubitState::from_symbol(input), detector_povm(d).plus);
}

PairDistribution copier_failure_state(double mu) {
  mu = checked_mu(mu);
  const double mixed = (1.0 - std::abs(mu)) / 4.0;
  std::array<double, 4> q{mixed, mixed, mixed, mixed};
  if (mu > 0.0) {
    q[3] += mu;
  } else {
    q[0] += -mu;
  }
  return PairDistribution(q);
}

PairDistribution copier_channel(Symbol input, const CopierParams& c) {
  const PairDistribution failure = copier_failure_state(c.mu());
  std::array<double, 4> q{};
  for (std::size_t i = 0; i < q.size(); ++i) {
    q[i] = (1.0 - c.eps()) * failure.values()[i];
  }
  q[input == Symbol::kPhoton ? 3 : 0] += c.eps();
  return PairDistribution(q);
}

TwoQubitPureState cnot_apply(const TwoQubitPureState& s) noexcept {
  TwoQubitPureState::Amplitudes c = s.amplitudes();
  std::swap(c[2], c[3]);
  return TwoQubitPureState(c, TwoQubitPureState::Unchecked{});
}

}  // namespace copierdet
