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

#include "cardano/ferrari.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "cardano/cardano.hpp"
#include "cardano/errors.hpp"

namespace cardano {

namespace {

// Relative threshold deciding that 2y - a (so alpha^2) is numerically zero.
constexpr double kAlphaSquaredRel = 1e-10;

// Stable roots of x^2 + bx + c with real b, c.
std::pair<Complex, Complex> solve_real_quadratic(double b, double c) {
  const double disc = b * b - 4.0 * c;
  if (disc >= 0.0) {
    const double sd = std::sqrt(disc);
    const double qq = -0.5 * (b + std::copysign(sd, b));
    const double r1 = qq;
    const double r2 = (qq != 0.0) ? c / qq : 0.0;
    return {Complex(r1, 0.0), Complex(r2, 0.0)};
  }
  const double re = -b / 2.0;
  const double im = std::sqrt(-disc) / 2.0;
  return {Complex(re, im), Complex(re, -im)};
}

}  // namespace

Polynomial resolvent_cubic(double a, double b, double c) {
  return poly_raw({Complex((4.0 * a * c - b * b) / 8.0, 0.0),
                   Complex(-c, 0.0), Complex(-a / 2.0, 0.0),
                   Complex(1.0, 0.0)});
}

QuarticSolution solve_depressed_quartic(double a, double b, double c) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c)) {
    throw std::invalid_argument("quartic coefficients must be finite");
  }
  QuarticSolution sol;
  sol.resolvent = resolvent_cubic(a, b, c);
  const double zero_scale = kAlphaSquaredRel * (1.0 + std::abs(a));

  if (std::abs(b) <= zero_scale) {
    // No odd term: x^4 + ax^2 + c. y = a/2 solves the resolvent with
    // alpha = 0 exactly, so factor through u = x^2 instead.
    const double y = a / 2.0;
    sol.biquadratic = true;
    sol.aux = {y, 0.0, std::sqrt(std::max(y * y - c, 0.0))};
    const auto [u1, u2] = solve_real_quadratic(a, c);  // u = x^2
    const Complex s1 = std::sqrt(u1);
    const Complex s2 = std::sqrt(u2);
    sol.roots = {s1, -s1, s2, -s2};
    return sol;
  }

  // Real resolvent roots; the depressed cubic solver returns all three.
  const RootSet cubic_roots =
      solve_cubic(-a / 2.0, -c, (4.0 * a * c - b * b) / 8.0);
  bool found = false;
  double y = 0.0;
  for (Complex r : cubic_roots) {
    if (std::abs(r.imag()) <= 1e-9 * (1.0 + std::abs(r.real()))) {
      if (!found || r.real() > y) {
        y = r.real();
        found = true;
      }
    }
  }
  if (!found) {
    // A real cubic always has a real root; only numerical havoc gets here.
    throw InconsistentInputError("resolvent cubic produced no real root");
  }

  const double alpha_sq = 2.0 * y - a;
  if (alpha_sq <= zero_scale) {
    // With b away from zero the factorization needs a genuinely positive
    // alpha^2; a real quartic always provides one.
    throw InconsistentInputError(
        "degenerate factorization but a nonzero odd coefficient");
  }

  const double alpha = std::sqrt(alpha_sq);
  const double beta = -b / (2.0 * alpha);
  sol.biquadratic = false;
  sol.aux = {y, alpha, beta};
  // (x^2 - alpha x + (y - beta)) (x^2 + alpha x + (y + beta))
  const auto [r1, r2] = solve_real_quadratic(-alpha, y - beta);
  const auto [r3, r4] = solve_real_quadratic(alpha, y + beta);
  sol.roots = {r1, r2, r3, r4};
  return sol;
}

QuarticSolution solve_quartic(double a3, double a2, double a1, double a0) {
  if (!std::isfinite(a3) || !std::isfinite(a2) || !std::isfinite(a1) ||
      !std::isfinite(a0)) {
    throw std::invalid_argument("quartic coefficients must be finite");
  }
  const double h = a3 / 4.0;
  const double dp = a2 - 6.0 * h * h;
  const double dq = a1 - 2.0 * a2 * h + 8.0 * h * h * h;
  const double dr = a0 - a1 * h + a2 * h * h - 3.0 * h * h * h * h;
  QuarticSolution sol = solve_depressed_quartic(dp, dq, dr);
  for (Complex& r : sol.roots) {
    r -= h;
  }
  return sol;
}

}  // namespace cardano
