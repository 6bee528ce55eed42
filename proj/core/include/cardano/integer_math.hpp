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

#include <cstdint>

namespace cardano {

// Overflow-checked signed 64-bit arithmetic.  All throw std::overflow_error
// when the exact result does not fit.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

// Exact integer division; throws std::logic_error if den does not divide num
// (used where divisibility is an algebraic invariant, not an input property).
std::int64_t exact_div(std::int64_t num, std::int64_t den);

// Binomial coefficient, exact.  Returns 0 for k < 0 or k > n; throws
// std::domain_error for n < 0 and std::overflow_error when the value does
// not fit in int64.
std::int64_t binomial(int n, int k);

}  // namespace cardano
