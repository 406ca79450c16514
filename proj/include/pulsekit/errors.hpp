// Copyright 2026 The pulsekit Authors
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

#ifndef PULSEKIT_ERRORS_HPP_
#define PULSEKIT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace pulsekit {

// Root of the library's error taxonomy. Every error carries the process
// exit code the command-line front end reports for it: 2 for problems with
// inputs (bad parameters, malformed files, impossible requests) and 1 for
// failures that arise while running (fits that do not converge, searches
// that do not bracket).
class Error : public std::runtime_error {
 public:
  Error(const std::string& message, int exit_code)
      : std::runtime_error(message), exit_code_(exit_code) {}

  int exit_code() const { return exit_code_; }

 private:
  int exit_code_;
};

// A value is outside its documented domain (amplitude, sigma, fold scale...).
class ParameterError : public Error {
 public:
  explicit ParameterError(const std::string& message) : Error(message, 2) {}
};

// A schedule edit would violate schedule invariants, e.g. overlapping
// Play instructions on one channel or a negative start time.
class SchedulingError : public Error {
 public:
  explicit SchedulingError(const std::string& message) : Error(message, 2) {}
};

// A device description is malformed or inconsistent.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& message) : Error(message, 2) {}
};

// JSON or CSV content cannot be parsed or written.
class SerializationError : public Error {
 public:
  explicit SerializationError(const std::string& message) : Error(message, 2) {}
};

// A schedule rewrite was asked to handle something it does not support.
class TransformError : public Error {
 public:
  explicit TransformError(const std::string& message) : Error(message, 2) {}
};

// The request exceeds a deliberate size guard (e.g. dense propagators are
// limited to a few qubits).
class CapabilityError : public Error {
 public:
  explicit CapabilityError(const std::string& message) : Error(message, 2) {}
};

// Calibration data is missing, or calibration sweeps produced data that
// cannot be fit.
class CalibrationError : public Error {
 public:
  explicit CalibrationError(const std::string& message) : Error(message, 1) {}
};

// The noise-strength search failed to bracket or converge on its target.
class TuningError : public Error {
 public:
  explicit TuningError(const std::string& message) : Error(message, 1) {}
};

// A curve fit failed (degenerate data, non-oscillatory sweep, ...).
class FitError : public Error {
 public:
  explicit FitError(const std::string& message) : Error(message, 1) {}
};

}  // namespace pulsekit

#endif  // PULSEKIT_ERRORS_HPP_
