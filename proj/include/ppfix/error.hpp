// Copyright 2026 The ppfix Authors
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

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "ppfix/core/certificate.hpp"

namespace ppfix {

/// Base of every error raised by the library. Carries whatever certificates
/// were produced before the failure so callers can still report them.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what, CertificateList certificates = {})
      : std::runtime_error(what), certificates_(std::move(certificates)) {}

  const CertificateList& certificates() const noexcept { return certificates_; }

 private:
  CertificateList certificates_;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Schema violation in a serialized operator, alpha or function document.
class ParseError : public InvalidInput {
 public:
  ParseError(std::string path, const std::string& what)
      : InvalidInput(path.empty() ? what : path + ": " + what),
        path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// A non-finite value appeared; `step` is the iteration index when known.
class NumericError : public Error {
 public:
  NumericError(const std::string& what, std::optional<std::size_t> step = {})
      : Error(step ? what + " at step " + std::to_string(*step) : what),
        step_(step) {}

  std::optional<std::size_t> step() const noexcept { return step_; }

 private:
  std::optional<std::size_t> step_;
};

/// A hypothesis that must hold at the start point does not hold.
/// `condition` is the label of the hypothesis, e.g. "(c04)".
class PreconditionError : public Error {
 public:
  PreconditionError(std::string condition, const std::string& what,
                    CertificateList certificates = {})
      : Error(condition + " " + what, std::move(certificates)),
        condition_(std::move(condition)) {}

  const std::string& condition() const noexcept { return condition_; }

 private:
  std::string condition_;
};

/// The operator left the alpha level set along the orbit, so it is not
/// alpha-admissible on this instance.
class AdmissibilityViolation : public Error {
 public:
  AdmissibilityViolation(std::string condition, std::size_t step,
                         const std::string& what,
                         CertificateList certificates = {})
      : Error(condition + " " + what + " at step " + std::to_string(step),
              std::move(certificates)),
        condition_(std::move(condition)),
        step_(step) {}

  const std::string& condition() const noexcept { return condition_; }
  std::size_t step() const noexcept { return step_; }

 private:
  std::string condition_;
  std::size_t step_;
};

/// A declared or required contraction modulus is contradicted by the operator.
class ContractionViolation : public Error {
 public:
  using Error::Error;
};

/// A file could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace ppfix
