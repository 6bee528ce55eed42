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

#include "cardano/integer_math.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cardano {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw std::overflow_error("int64 addition overflow");
  }
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw std::overflow_error("int64 subtraction overflow");
  }
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error("int64 multiplication overflow");
  }
  return r;
}

std::int64_t exact_div(std::int64_t num, std::int64_t den) {
  if (den == 0 || num % den != 0) {
    throw std::logic_error("expected exact division: " + std::to_string(num) +
                           " / " + std::to_string(den));
  }
  return num / den;
}

std::int64_t binomial(int n, int k) {
  if (n < 0) {
    throw std::domain_error("binomial needs n >= 0");
  }
  if (k < 0 || k > n) {
    return 0;
  }
  k = std::min(k, n - k);
  std::int64_t r = 1;
  // r stays exact at each step: the division by i is exact because r is then
  // a product of i consecutive integers divided by (i-1)!.
  for (int i = 1; i <= k; ++i) {
    r = checked_mul(r, n - k + i);
    r /= i;
  }
  return r;
}

}  // namespace cardano
