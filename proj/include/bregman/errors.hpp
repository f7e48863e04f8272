// Copyright 2026 The bregman-geometry Authors
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

namespace bregman {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  DimensionError(std::size_t expected, std::size_t actual);

  std::size_t expected() const noexcept { return expected_; }
  std::size_t actual() const noexcept { return actual_; }

 private:
  std::size_t expected_;
  std::size_t actual_;
};

/// A point left the (interior of the) domain where an operation is defined.
/// `coordinate()` names the first offending coordinate.
class DomainError : public Error {
 public:
  DomainError(std::size_t coordinate, double value, const std::string& what);

  std::size_t coordinate() const noexcept { return coordinate_; }
  double value() const noexcept { return value_; }

 private:
  std::size_t coordinate_;
  double value_;
};

/// Invalid problem data (set definitions, piecewise functions, options).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input; `path()` locates the field, e.g. "set.box.lo[1]".
class ParseError : public Error {
 public:
  ParseError(std::string path, const std::string& reason);

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace bregman
