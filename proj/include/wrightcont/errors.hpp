// Copyright 2026 The wrightcont Authors
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

#ifndef WRIGHTCONT_ERRORS_HPP_
#define WRIGHTCONT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace wrightcont {

/// Invalid value for a mathematical operation (division by an interval
/// containing zero, log of a nonpositive interval, out-of-range exponent).
struct domain_error : std::runtime_error {
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

/// Dimension mismatch between vectors/matrices/sequence points.
struct shape_error : std::runtime_error {
  explicit shape_error(const std::string& what) : std::runtime_error(what) {}
};

/// A plain floating point computation broke down (singular pivot, NaN).
struct numerical_error : std::runtime_error {
  explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

/// An iterative scheme did not reach its tolerance within its budget.
struct convergence_error : std::runtime_error {
  explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

/// A rigorous certificate could not be established (or a prerequisite
/// certificate is missing/invalid).
struct certificate_error : std::runtime_error {
  explicit certificate_error(const std::string& what) : std::runtime_error(what) {}
};

/// Filesystem failure while reading or writing artifacts.
struct io_error : std::runtime_error {
  explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or stale certificate file.
struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace wrightcont

#endif  // WRIGHTCONT_ERRORS_HPP_
