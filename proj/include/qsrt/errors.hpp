// Copyright 2026 The qsrtsim Authors
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

namespace qsrt {

// Base error; `name()` is the stable identifier printed by the CLI.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(what), name_(std::move(name)) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

struct NonHermitianError : Error {
  explicit NonHermitianError(const std::string& w) : Error("NonHermitian", w) {}
};
struct DimensionCapError : Error {
  explicit DimensionCapError(const std::string& w) : Error("DimensionCap", w) {}
};
struct DimensionMismatchError : Error {
  explicit DimensionMismatchError(const std::string& w) : Error("DimensionMismatch", w) {}
};
struct InvalidDimensionError : Error {
  explicit InvalidDimensionError(const std::string& w) : Error("InvalidDimension", w) {}
};
struct LevelOutOfRangeError : Error {
  explicit LevelOutOfRangeError(const std::string& w) : Error("LevelOutOfRange", w) {}
};
struct InvalidSizeError : Error {
  explicit InvalidSizeError(const std::string& w) : Error("InvalidSize", w) {}
};
struct NotCoprimeError : Error {
  explicit NotCoprimeError(const std::string& w) : Error("NotCoprime", w) {}
};
struct InsufficientQubitsError : Error {
  explicit InsufficientQubitsError(const std::string& w) : Error("InsufficientQubits", w) {}
};
struct DomainError : Error {
  explicit DomainError(const std::string& w) : Error("DomainError", w) {}
};
struct EmptyLevelsError : Error {
  explicit EmptyLevelsError(const std::string& w) : Error("EmptyLevels", w) {}
};
struct OrderingViolationError : Error {
  explicit OrderingViolationError(const std::string& w) : Error("OrderingViolation", w) {}
};
struct AssumptionViolatedError : Error {
  explicit AssumptionViolatedError(const std::string& w) : Error("AssumptionViolated", w) {}
};
struct ConfigInvalidError : Error {
  explicit ConfigInvalidError(const std::string& w) : Error("ConfigInvalid", w) {}
};

// Thrown when a stochastic run exceeds its trial budget. `step` is the
// 1-based failing chain step when known, 0 otherwise.
class BudgetExhaustedError : public Error {
 public:
  explicit BudgetExhaustedError(const std::string& w, int step = 0)
      : Error("BudgetExhausted", w), step_(step) {}
  int step() const { return step_; }

 private:
  int step_;
};

}  // namespace qsrt
