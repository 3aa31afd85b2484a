/*
 * Copyright 2026 The sdfslam Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SDFSLAM_CORE_ERROR_HPP
#define SDFSLAM_CORE_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sdfslam {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// All points handed to a line fit coincide.
class DegenerateFit : public Error {
 public:
  using Error::Error;
};

// A hit point falls outside a fixed-size grid.
class OutOfBounds : public Error {
 public:
  using Error::Error;
};

// The Gauss-Newton normal matrix does not constrain every pose direction.
class SingularHessian : public Error {
 public:
  using Error::Error;
};

// Too few points survived trimming to estimate a pose.
class TooFewPoints : public Error {
 public:
  using Error::Error;
};

// Submaps with different resolutions cannot be merged.
class MixedResolution : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& reason)
      : Error("line " + std::to_string(line) + ": " + reason),
        line_(line),
        reason_(reason) {}

  std::size_t line() const { return line_; }
  const std::string& reason() const { return reason_; }

 private:
  std::size_t line_;
  std::string reason_;
};

class FormatError : public Error {
 public:
  using Error::Error;
};

class VersionError : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace sdfslam

#endif  // SDFSLAM_CORE_ERROR_HPP
