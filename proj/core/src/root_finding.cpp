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

#include "cardano/root_finding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace cardano {

RootSet durand_kerner_roots(const Polynomial& p,
                            const RootFindingOptions& options) {
  const std::size_t n = p.degree();
  if (n == 0) {
    throw std::invalid_argument("root finding needs degree >= 1");
  }

  const Complex lead = p.leading();
  std::vector<Complex> monic(p.coeffs());
  for (Complex& z : monic) {
    z /= lead;
  }

  if (n == 1) {
    return {-monic[0]};
  }

  auto eval_monic = [&monic](Complex x) {
    Complex acc = monic.back();
    for (std::size_t k = monic.size() - 1; k-- > 0;) {
      acc = acc * x + monic[k];
    }
    return acc;
  };

  // Deterministic non-symmetric starting points (0.4 + 0.9i)^k, k >= 0.
  const Complex seed(0.4, 0.9);
  std::vector<Complex> z(n);
  Complex power = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    z[k] = power;
    power *= seed;
  }

  double monic_l1 = 0.0;
  for (Complex c : monic) {
    monic_l1 += std::abs(c);
  }
  const double target = options.residual_tol * monic_l1;
  for (int iter = 0; iter < options.max_iterations; ++iter) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const Complex value = eval_monic(z[i]);
      worst = std::max(worst, std::abs(value));
      Complex denom = 1.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) {
          denom *= z[i] - z[j];
        }
      }
      if (denom == 0.0) {
        // Collided iterates: nudge and let the next sweep separate them.
        z[i] += Complex(1e-8, 1e-8);
        continue;
      }
      z[i] -= value / denom;
    }
    if (worst <= target) {
      return z;
    }
  }
  throw NonConvergenceError(
      "root iteration did not reach the residual target in " +
      std::to_string(options.max_iterations) + " sweeps");
}

bool root_multiset_equal(const RootSet& a, const RootSet& b, double tol) {
  if (a.size() != b.size()) {
    return false;
  }
  const std::size_t n = a.size();
  std::vector<bool> used_a(n, false);
  std::vector<bool> used_b(n, false);
  // Greedy global matching: repeatedly pair the closest unmatched points.
  for (std::size_t round = 0; round < n; ++round) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t bi = 0;
    std::size_t bj = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (used_a[i]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (used_b[j]) continue;
        const double dist = std::abs(a[i] - b[j]);
        if (dist < best) {
          best = dist;
          bi = i;
          bj = j;
        }
      }
    }
    if (best > tol) {
      return false;
    }
    used_a[bi] = true;
    used_b[bj] = true;
  }
  return true;
}

}  // namespace cardano
