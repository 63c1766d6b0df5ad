// Copyright 2026 The phaseprobe Authors
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

namespace phaseprobe {

/// Caller broke a documented precondition (bad index, invalid density
/// matrix, equal number levels, ...).
class ContractViolation : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// The Bell projection annihilates the prepared qubit state.
class ZeroProbabilityError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Normalized fidelity requested for a preparation with A_i = 0.
class UndefinedNormalizationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A dense operator would exceed the configured size guard.
class ResourceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Closed form requested for a state it does not cover.
class UnsupportedStateError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Fock-space population leaked into the top levels.
class TruncationError : public std::runtime_error {
  public:
    TruncationError(const std::string &what, int suggested_n1,
                    int suggested_n2)
        : std::runtime_error(what), suggested_n1_(suggested_n1),
          suggested_n2_(suggested_n2) {}

    int suggested_n1() const noexcept { return suggested_n1_; }
    int suggested_n2() const noexcept { return suggested_n2_; }

  private:
    int suggested_n1_;
    int suggested_n2_;
};

/// Scenario file failed schema or invariant validation. `path` names the
/// offending field, e.g. "model.g1".
class ValidationError : public std::runtime_error {
  public:
    ValidationError(std::string path, std::string message,
                    const std::string &source = {})
        : std::runtime_error((source.empty() ? "" : source + ": ") +
                             (path.empty() ? message : path + ": " + message)),
          path_(std::move(path)), message_(std::move(message)) {}

    const std::string &path() const noexcept { return path_; }
    const std::string &message() const noexcept { return message_; }

  private:
    std::string path_;
    std::string message_;
};

class CalibrationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace phaseprobe
