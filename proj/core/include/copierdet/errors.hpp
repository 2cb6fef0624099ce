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

#include <stdexcept>
#include <string>

namespace copierdet {

// A parameter lies outside its documented range (e.g. eta = 1.3).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An input is inconsistent with the mathematical domain of an operation,
// such as a mutual-information target above the noiseless-detector ceiling.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A request exceeds what the implementation supports, such as exact
// pattern distributions deeper than kMaxExactLevels.
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace copierdet
