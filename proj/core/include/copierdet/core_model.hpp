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

#include <array>
#include <complex>
#include <cstddef>

namespace copierdet {

// Absolute tolerance used when validating probabilities. Values that miss
// their range by less than this are clamped (or renormalized); anything
// further out is rejected with ParameterError.
inline constexpr double kProbabilityTolerance = 1e-12;

// Clamps `value` into [0, 1] if it is within kProbabilityTolerance of that
// interval, otherwise throws ParameterError naming `what`.
double checked_probability(double value, const char* what);

// The two input symbols of the detection problem: vacuum |0> and a single
// photon |1>. Also used for the classical bit carried by each copy.
enum class Symbol : unsigned { kVacuum = 0, kPhoton = 1 };

constexpr unsigned to_bit(Symbol s) noexcept { return static_cast<unsigned>(s); }
constexpr Symbol symbol_from_bit(unsigned bit) noexcept {
  return bit ? Symbol::kPhoton : Symbol::kVacuum;
}

// Leaf photodetector: quantum efficiency eta and dark-count parameter xi.
// A dark count (click with no photon) happens with probability eta * xi.
// xi = 1 is admitted; every formula stays well defined there.
class DetectorParams {
 public:
  DetectorParams(double eta, double xi);

  double eta() const noexcept { return eta_; }
  double xi() const noexcept { return xi_; }
  double dark_count_probability() const noexcept { return eta_ * xi_; }

 private:
  double eta_;
  double xi_;
};

// One quantum copier: works with probability eps, and on failure emits the
// input-independent noise pair selected by mu in [-1, 1]
// (mu = -1 vacuum, mu = 0 maximally mixed, mu = 1 double photon).
class CopierParams {
 public:
  CopierParams(double eps, double mu);

  double eps() const noexcept { return eps_; }
  double mu() const noexcept { return mu_; }

 private:
  double eps_;
  double mu_;
};

// Diagonal POVM element a0 |0><0| + a1 |1><1|.
struct PovmElement {
  double a0;
  double a1;

  PovmElement(double a0_weight, double a1_weight);
};

struct DetectorPovm {
  PovmElement plus;   // count
  PovmElement minus;  // no count
};

// Qubit state diagonal in the photon-number basis.
class DiagonalQubitState {
 public:
  explicit DiagonalQubitState(double p1);

  static DiagonalQubitState from_symbol(Symbol s) {
    return DiagonalQubitState(s == Symbol::kPhoton ? 1.0 : 0.0);
  }

  double p1() const noexcept { return p1_; }
  double p0() const noexcept { return 1.0 - p1_; }

 private:
  double p1_;
};

// Diagonal two-qubit state over |00>,|01>,|10>,|11>. The first index is
// copy 1, the second copy 2, so index = 2 * copy1 + copy2.
class PairDistribution {
 public:
  // Renormalizes when the entries sum to 1 within kProbabilityTolerance,
  // throws ParameterError otherwise (or on any entry outside [0, 1]).
  explicit PairDistribution(const std::array<double, 4>& q);

  double q00() const noexcept { return q_[0]; }
  double q01() const noexcept { return q_[1]; }
  double q10() const noexcept { return q_[2]; }
  double q11() const noexcept { return q_[3]; }

  double operator()(unsigned copy1, unsigned copy2) const noexcept {
    return q_[2 * copy1 + copy2];
  }
  const std::array<double, 4>& values() const noexcept { return q_; }

 private:
  std::array<double, 4> q_;
};

// Pure two-qubit state with amplitudes ordered c00, c01, c10, c11
// (first qubit is the high-order index, as for PairDistribution).
class TwoQubitPureState {
 public:
  using Amplitudes = std::array<std::complex<double>, 4>;

  // Renormalizes when the squared norm is within kProbabilityTolerance of 1,
  // throws ParameterError otherwise.
  explicit TwoQubitPureState(const Amplitudes& amplitudes);

  static TwoQubitPureState basis(unsigned first, unsigned second);
  // |a> (x) |b> for single-qubit amplitudes a = (a0, a1), b = (b0, b1).
  static TwoQubitPureState product(std::complex<double> a0, std::complex<double> a1,
                                   std::complex<double> b0, std::complex<double> b1);

  const std::complex<double>& c00() const noexcept { return c_[0]; }
  const std::complex<double>& c01() const noexcept { return c_[1]; }
  const std::complex<double>& c10() const noexcept { return c_[2]; }
  const std::complex<double>& c11() const noexcept { return c_[3]; }
  const Amplitudes& amplitudes() const noexcept { return c_; }

 private:
  struct Unchecked {};
  TwoQubitPureState(const Amplitudes& amplitudes, Unchecked) : c_(amplitudes) {}
  friend TwoQubitPureState cnot_apply(const TwoQubitPureState& s) noexcept;

  Amplitudes c_;
};

// Count / no-count POVM of a noisy detector:
//   plus  = eta xi |0><0| + eta |1><1|
//   minus = (1 - eta xi) |0><0| + (1 - eta) |1><1|
DetectorPovm detector_povm(const DetectorParams& d) noexcept;

// Tr[rho A] for diagonal rho and A.
double outcome_probability(const DiagonalQubitState& state, const PovmElement& element) noexcept;

// Probability that a detector clicks when fed the basis state `input`.
double count_probability(Symbol input, const DetectorParams& d) noexcept;

// Noise pair emitted by a failed copier:
// (1 - |mu|) I/4 + mu |11><11| for mu > 0, + |mu| |00><00| for mu <= 0.
PairDistribution copier_failure_state(double mu);

// Output pair of one copier fed the basis state `input` (the dummy second
// input is implicit): eps |bb><bb| + (1 - eps) failure_state(mu).
PairDistribution copier_channel(Symbol input, const CopierParams& c);

// Controlled-NOT with the first qubit as control. Ideal copier on basis
// states and an entangler on superpositions.
TwoQubitPureState cnot_apply(const TwoQubitPureState& s) noexcept;

}  // namespace copierdet
