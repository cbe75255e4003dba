// SPDX-License-Identifier: Apache-2.0
//
// rispolsk: link-level simulation of RIS-encoded polarization shift keying
// Copyright (C) 2026 The rispolsk authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <stdexcept>
#include <string>

namespace rispolsk {

/// Base of every exception thrown by the library.
class error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Source or receiver coincides with the RIS center (zero link distance).
class degenerate_geometry : public error {
  public:
    using error::error;
};

/// A phase configuration does not have one entry per RIS unit.
class config_size_mismatch : public error {
  public:
    config_size_mismatch(std::size_t expected, std::size_t actual)
        : error("phase configuration has " + std::to_string(actual) + " units, expected " +
                std::to_string(expected)) {}
};

/// Argument outside the mathematical domain of a function.
class domain_error : public error {
  public:
    using error::error;
};

/// Adaptive quadrature could not reach the requested tolerance.
class convergence_failure : public error {
  public:
    convergence_failure(const std::string& what, double estimate, double error_estimate)
        : error(what), estimate_(estimate), error_estimate_(error_estimate) {}

    double estimate() const noexcept { return estimate_; }
    double error_estimate() const noexcept { return error_estimate_; }

  private:
    double estimate_;
    double error_estimate_;
};

/// round(area / unit_area) is zero.
class area_too_small : public error {
  public:
    using error::error;
};

/// Malformed configuration document.
class parse_error : public error {
  public:
    using error::error;
};

/// A field holds a value that violates its contract. `field()` names it.
class validation_error : public error {
  public:
    validation_error(std::string field, const std::string& reason)
        : error(field + ": " + reason), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

  private:
    std::string field_;
};

} // namespace rispolsk
