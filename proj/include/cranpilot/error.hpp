// SPDX-License-Identifier: Apache-2.0
//
// cranpilot: locally orthogonal pilot design for cloud radio access networks
// Copyright (C) 2026 The cranpilot authors
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

#ifndef CRANPILOT_ERROR_HPP
#define CRANPILOT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cranpilot {

// Argument outside its mathematical or physical domain (negative power, r <= 0, ...).
class ParameterError : public std::invalid_argument {
public:
    explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

// Inputs that are individually fine but disagree with each other.
class ConsistencyError : public std::logic_error {
public:
    explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

// Exact search refused because the instance exceeds the configured size guard.
class SizeError : public std::length_error {
public:
    explicit SizeError(const std::string& what) : std::length_error(what) {}
};

// A user sits exactly on top of an RRH.
class DegenerateGeometryError : public std::domain_error {
public:
    explicit DegenerateGeometryError(const std::string& what) : std::domain_error(what) {}
};

// The coloring needs at least as many channel uses as the coherence time holds.
class InfeasibleTrainingError : public std::runtime_error {
public:
    InfeasibleTrainingError(const std::string& what, int colors, int coherence)
        : std::runtime_error(what), colors_(colors), coherence_(coherence)
    {
    }
    int colors() const noexcept { return colors_; }
    int coherence() const noexcept { return coherence_; }

private:
    int colors_;
    int coherence_;
};

class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace cranpilot

#endif
