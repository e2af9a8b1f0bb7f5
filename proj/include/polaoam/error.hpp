// Copyright 2026 The polaoam Authors
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
#include <stdexcept>
#include <string>

namespace polaoam {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A mode, path or OAM value that the registry does not know about, or
/// registries that do not match between two operands.
class RegistryError : public Error {
  public:
    using Error::Error;
};

/// Operands with different photon numbers.
class PhotonNumberError : public Error {
  public:
    using Error::Error;
};

/// An occupied mode has no image under a mode map, or the image leaves the
/// truncated OAM space.
class DomainError : public Error {
  public:
    using Error::Error;
};

/// Zero-norm state where a normalized one is required; raised when a
/// post-selection removes every amplitude.
class AnnihilatedError : public Error {
  public:
    using Error::Error;
};

/// Invalid element parameters (non-finite angle, identical PBS ports, ...).
class ElementError : public Error {
  public:
    using Error::Error;
};

/// Element failure inside a pipeline, tagged with the element position.
class PipelineError : public Error {
  public:
    PipelineError(std::size_t index, const std::string &what)
        : Error("element " + std::to_string(index) + ": " + what),
          index_(index) {}
    [[nodiscard]] std::size_t index() const { return index_; }

  private:
    std::size_t index_;
};

/// Pipeline description text that does not parse.
class ParseError : public Error {
  public:
    ParseError(std::size_t line, const std::string &what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    [[nodiscard]] std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

/// The state has no component on which a witness is defined.
class WitnessDomainError : public Error {
  public:
    using Error::Error;
};

} // namespace polaoam
