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

#include "cardano/chebyshev.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cardano/integer_math.hpp"

namespace cardano {

Polynomial VietaLucasPoly::to_polynomial() const {
  std::vector<Complex> c(coeffs.size());
  std::transform(coeffs.begin(), coeffs.end(), c.begin(), [](std::int64_t v) {
    return Complex(static_cast<double>(v), 0.0);
  });
  return poly_raw(std::move(c));
}

VietaLucasPoly vieta_lucas_closed(int n) {
  if (n < 1) {
    throw std::domain_error("order must be at least 1");
  }
  VietaLucasPoly v;
  v.order = n;
  v.coeffs.assign(n + 1, 0);
  for (int k = 0; k <= n / 2; ++k) {
    // n / (n - k) * C(n - k, k) is an exact integer.
    std::int64_t term = exact_div(checked_mul(n, binomial(n - k, k)), n - k);
    if (k % 2 != 0) {
      term = -term;
    }
    v.coeffs[n - 2 * k] = term;
  }
  return v;
}

VietaLucasPoly vieta_lucas_recurrence(int n) {
  if (n < 1) {
    throw std::domain_error("order must be at least 1");
  }
  std::vector<std::int64_t> prev{0, 1};         // V_1 = x
  std::vector<std::int64_t> curr{-2, 0, 1};     // V_2 = x^2 - 2
  if (n == 1) {
    return {1, std::move(prev)};
  }
  for (int k = 2; k < n; ++k) {
    // next = x * curr - prev
    std::vector<std::int64_t> next(curr.size() + 1, 0);
    for (std::size_t i = 0; i < curr.size(); ++i) {
      next[i + 1] = curr[i];
    }
    for (std::size_t i = 0; i < prev.size(); ++i) {
      next[i] = checked_sub(next[i], prev[i]);
    }
    prev = std::move(curr);
    curr = std::move(next);
  }
  return {n, std::move(curr)};
}

double chebyshev_identity_error(int n, int samples) {
  if (n < 1) {
    throw std::domain_error("order must be at least 1");
  }
  if (samples < 1) {
    throw std::domain_error("need at least one sample angle");
  }
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double theta = std::numbers::pi * (static_cast<double>(i) + 0.5) /
                         static_cast<double>(samples);
    const double x = 2.0 * std::cos(theta);
    // Evaluate through the three-term value recurrence: monomial-basis
    // Horner cancels catastrophically near |x| = 2 for n ~ 25.
    double prev = x;            // value of the order-1 member
    double curr = x * x - 2.0;  // value of the order-2 member
    if (n == 1) {
      curr = prev;
    }
    for (int k = 2; k < n; ++k) {
      const double next = x * curr - prev;
      prev = curr;
      curr = next;
    }
    const double rhs = 2.0 * std::cos(static_cast<double>(n) * theta);
    worst = std::max(worst, std::abs(curr - rhs));
  }
  return worst;
}

Polynomial cardano_from_vieta_lucas(const CardanoParams& params) {
  if (params.c <= 0.0) {
    throw std::domain_error(
        "the scaled identity needs a positive first parameter");
  }
  const VietaLucasPoly v = vieta_lucas_recurrence(params.n);
  std::vector<Complex> coeffs(params.n + 1, Complex(0.0, 0.0));
  for (int k = params.n % 2; k <= params.n; k += 2) {
    const double weight = static_cast<double>(v.coeffs[k]);
    coeffs[k] = weight * pow_int(params.c, (params.n - k) / 2);
  }
  coeffs[0] -= 2.0 * params.d;
  return poly_raw(std::move(coeffs));
}

std::vector<Polynomial> cardano_sequence(double c, double d, int max_n) {
  if (max_n < 3) {
    throw std::invalid_argument("the ladder needs max_n >= 3");
  }
  if (!std::isfinite(c) || !std::isfinite(d)) {
    throw std::invalid_argument("parameters must be finite");
  }
  std::vector<Polynomial> seq;
  seq.reserve(max_n);
  seq.push_back(poly_raw({Complex(-2.0 * d, 0.0), Complex(1.0, 0.0)}));
  seq.push_back(poly_raw({Complex(-2.0 * c - 2.0 * d, 0.0), Complex(0.0, 0.0),
                          Complex(1.0, 0.0)}));
  const Polynomial tail =
      poly_raw({Complex(-2.0 * d * (c + 1.0), 0.0), Complex(2.0 * d, 0.0)});
  for (int k = 3; k <= max_n; ++k) {
    const Polynomial& c1 = seq[k - 2];  // C_{k-1}
    const Polynomial& c2 = seq[k - 3];  // C_{k-2}
    seq.push_back(c1.shifted_up(1) - Complex(c, 0.0) * c2 + tail);
  }
  return seq;
}

}  // namespace cardano
