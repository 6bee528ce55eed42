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

#include "cardano/cardano.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "cardano/integer_math.hpp"

namespace cardano {

namespace {

// Relative width of the band around D = 0 that is routed to the p = q
// boundary solution.
constexpr double kDiscriminantBandRel = 1e-12;

double discriminant_scale(const CardanoParams& params) {
  return std::max({1.0, params.d * params.d,
                   std::abs(pow_int(params.c, params.n))});
}

// x_i for integer index i (taken mod n), valid for both branch forms.
Complex root_at(const CardanoParams& params, const RadicalPair& pair,
                long index) {
  const int n = params.n;
  long i = index % n;
  if (i < 0) {
    i += n;
  }
  if (pair.form == RadicalForm::kConjugatePair) {
    const double x = 2.0 * std::sqrt(params.c) *
                     std::cos((pair.alpha + 2.0 * std::numbers::pi *
                                                static_cast<double>(i)) /
                              static_cast<double>(n));
    return Complex(x, 0.0);
  }
  const double theta =
      2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
  const Complex w = std::polar(1.0, theta);
  return pair.p * w + pair.q * std::conj(w);
}

// The signed index sequence 0, +1, -1, +2, -2, ..., +m, -m.
std::vector<long> index_order(int m) {
  std::vector<long> order{0};
  for (long j = 1; j <= m; ++j) {
    order.push_back(j);
    order.push_back(-j);
  }
  return order;
}

}  // namespace

double pow_int(double base, int exponent) {
  if (exponent < 0) {
    throw std::domain_error("pow_int needs exponent >= 0");
  }
  double r = 1.0;
  for (int i = 0; i < exponent; ++i) {
    r *= base;
  }
  return r;
}

double signed_nth_root(double x, int n) {
  if (n <= 0 || n % 2 == 0) {
    throw std::domain_error("signed_nth_root needs odd positive n");
  }
  return std::copysign(std::pow(std::abs(x), 1.0 / static_cast<double>(n)), x);
}

CardanoParams CardanoParams::make(int n, double c, double d) {
  if (n < 3 || n % 2 == 0) {
    throw std::invalid_argument("degree must be odd and at least 3, got " +
                                std::to_string(n));
  }
  if (!std::isfinite(c) || !std::isfinite(d)) {
    throw std::invalid_argument("parameters must be finite");
  }
  CardanoParams p;
  p.n = n;
  p.m = (n - 1) / 2;
  p.c = c;
  p.d = d;
  p.discriminant = d * d - pow_int(c, n);
  return p;
}

std::int64_t cardano_coeff(int m, int j) {
  if (m < 1 || j < 0 || j > m - 1) {
    throw std::domain_error("cardano_coeff needs m >= 1 and 0 <= j < m");
  }
  const std::int64_t bin = binomial(m + j, 2 * j);
  const std::int64_t num = checked_mul(2 * m + 1, bin);
  std::int64_t value = exact_div(num, 2 * j + 1);
  if ((m - 1 - j) % 2 != 0) {
    value = -value;
  }
  return value;
}

std::int64_t cardano_coeff_double_sum(int m, int j) {
  if (m < 1 || j < 0 || j > m - 1) {
    throw std::domain_error("cardano_coeff_double_sum needs m >= 1, 0 <= j < m");
  }
  std::int64_t sum = 0;
  for (int t = 0; t <= m - 1 - j; ++t) {
    std::int64_t term = checked_mul(binomial(2 * m + 1, m - j - t),
                                    2 * (j + t) + 1);
    term = checked_mul(term, binomial(2 * j + t, t));
    if (t % 2 != 0) {
      term = -term;
    }
    sum = checked_add(sum, term);
  }
  // The alternating sum already carries the (-1)^(m-1-j) sign of the weight;
  // only the exact division by 2j+1 remains.
  return exact_div(sum, 2 * j + 1);
}

std::int64_t completed_binomial_sum(int m, int j) {
  if (m < 1 || j < 0 || j > m - 1) {
    throw std::domain_error("completed_binomial_sum needs m >= 1, 0 <= j < m");
  }
  // Unscaled alternating sum with the final t = m - j term included; adding
  // that term cancels everything that the truncated sum accumulates.
  std::int64_t sum = 0;
  for (int t = 0; t <= m - j; ++t) {
    std::int64_t term = checked_mul(binomial(2 * m + 1, m - j - t),
                                    2 * (j + t) + 1);
    term = checked_mul(term, binomial(2 * j + t, t));
    if (t % 2 != 0) {
      term = -term;
    }
    sum = checked_add(sum, term);
  }
  return sum;
}

Polynomial cardano_polynomial(const CardanoParams& params) {
  std::vector<Complex> coeffs(params.n + 1, Complex(0.0, 0.0));
  coeffs[params.n] = 1.0;
  coeffs[0] = -(2.0 * params.d);
  for (int j = 0; j <= params.m - 1; ++j) {
    const double weight = static_cast<double>(cardano_coeff(params.m, j));
    coeffs[2 * j + 1] = -(weight * pow_int(params.c, params.m - j));
  }
  return poly_raw(std::move(coeffs));
}

RadicalPair radical_pair(const CardanoParams& params) {
  const int n = params.n;
  const double cn = pow_int(params.c, n);
  const double D = params.discriminant;
  const double band = kDiscriminantBandRel * discriminant_scale(params);

  RadicalPair pair;
  if (std::abs(D) <= band) {
    // Boundary: repeated radicand, p = q = d^(1/n).
    const double r = signed_nth_root(params.d, n);
    pair.p = Complex(r, 0.0);
    pair.q = Complex(r, 0.0);
    pair.form = RadicalForm::kRealRadical;
    pair.alpha = 0.0;
    return pair;
  }

  if (D > 0.0) {
    const double sqrt_d = std::sqrt(D);
    // u = p^n, v = q^n with u v = c^n.  Evaluate the larger-magnitude
    // radicand directly and recover the other by division to dodge cancellation.
    double u;
    double v;
    if (params.d >= 0.0) {
      u = params.d + sqrt_d;
      v = (u == 0.0) ? 0.0 : cn / u;
    } else {
      v = params.d - sqrt_d;
      u = (v == 0.0) ? 0.0 : cn / v;
    }
    pair.p = Complex(signed_nth_root(u, n), 0.0);
    pair.q = Complex(signed_nth_root(v, n), 0.0);
    pair.form = RadicalForm::kRealRadical;
    pair.alpha = 0.0;
    return pair;
  }

  // D < 0 requires c^n > d^2 >= 0, hence c > 0 for odd n.
  if (params.c <= 0.0) {
    throw std::domain_error(
        "negative discriminant requires a positive first parameter");
  }
  const double half_power = std::sqrt(cn);
  const double cos_alpha = std::clamp(params.d / half_power, -1.0, 1.0);
  const double alpha = std::acos(cos_alpha);
  pair.p = std::polar(std::sqrt(params.c), alpha / static_cast<double>(n));
  pair.q = std::conj(pair.p);
  pair.form = RadicalForm::kConjugatePair;
  pair.alpha = alpha;
  return pair;
}

RootSet cardano_roots(const CardanoParams& params) {
  const RadicalPair pair = radical_pair(params);
  RootSet roots;
  roots.reserve(params.n);
  for (long j : index_order(params.m)) {
    roots.push_back(root_at(params, pair, j));
  }
  return roots;
}

RootSet trig_roots(const CardanoParams& params) {
  const RadicalPair pair = radical_pair(params);
  if (pair.form != RadicalForm::kConjugatePair) {
    throw std::domain_error(
        "trig form needs a negative discriminant (oscillatory branch)");
  }
  RootSet roots;
  roots.reserve(params.n);
  for (long j : index_order(params.m)) {
    roots.push_back(root_at(params, pair, j));
  }
  return roots;
}

RootSet branch_roots(const CardanoParams& params, int k) {
  const RadicalPair pair = radical_pair(params);
  RootSet roots;
  roots.reserve(params.n);
  for (long j : index_order(params.m)) {
    roots.push_back(root_at(params, pair, j + k));
  }
  return roots;
}

std::optional<CardanoParams> recognize_cardano(const Polynomial& p,
                                               double tol) {
  const std::size_t deg = p.degree();
  if (deg < 3 || deg % 2 == 0) {
    return std::nullopt;
  }
  const Complex lead = p.leading();
  std::vector<Complex> norm(p.coeffs());
  for (Complex& z : norm) {
    z /= lead;
  }

  double max_abs = 0.0;
  for (Complex z : norm) {
    max_abs = std::max(max_abs, std::abs(z));
  }
  const double cut = tol * (1.0 + max_abs);
  for (Complex z : norm) {
    if (std::abs(z.imag()) > cut) {
      return std::nullopt;
    }
  }

  const int n = static_cast<int>(deg);
  const double c = -norm[deg - 2].real() / static_cast<double>(n);
  const double d = -norm[0].real() / 2.0;
  CardanoParams candidate = CardanoParams::make(n, c, d);
  const Polynomial rebuilt = cardano_polynomial(candidate);
  for (std::size_t k = 0; k <= deg; ++k) {
    if (std::abs(norm[k] - rebuilt.coeff(k)) > cut) {
      return std::nullopt;
    }
  }
  return candidate;
}

DepressedCubic DepressedCubic::from_general(double a, double b, double c) {
  DepressedCubic dep;
  dep.s = b / 3.0 - a * a / 9.0;
  dep.t = c - a * b / 3.0 + 2.0 * a * a * a / 27.0;
  dep.shift = a / 3.0;
  dep.delta = dep.t * dep.t + 4.0 * dep.s * dep.s * dep.s;
  return dep;
}

CardanoParams DepressedCubic::params() const {
  return CardanoParams::make(3, -s, -t / 2.0);
}

RootSet solve_cubic(double a, double b, double c) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c)) {
    throw std::invalid_argument("cubic coefficients must be finite");
  }
  const DepressedCubic dep = DepressedCubic::from_general(a, b, c);
  RootSet roots = cardano_roots(dep.params());
  for (Complex& r : roots) {
    r -= dep.shift;
  }
  return roots;
}

}  // namespace cardano
