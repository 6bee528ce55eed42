/*
 * Copyright 2026 the cardano-poly authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace cardano {

// Thrown when an iterative solver exhausts its iteration budget.
class NonConvergenceError : public std::runtime_error {
 public:
  explicit NonConvergenceError(const std::string& what)
      : std::runtime_error(what) {}
};

// Thrown when the input data is mutually contradictory (e.g. a quartic whose
// resolvent forces a factorization that the remaining coefficients rule out).
class InconsistentInputError : public std::runtime_error {
 public:
  explicit InconsistentInputError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace cardano
