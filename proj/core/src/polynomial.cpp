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

#include "cardano/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cardano {

namespace {

constexpr double kTrimRel = 1e-14;

bool finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

void strip_exact_zero_tail(std::vector<Complex>& c) {
  while (c.size() > 1 && c.back() == 0.0) {
    c.pop_back();
  }
}

}  // namespace

Polynomial::Polynomial(std::vector<Complex> coeffs) {
  if (coeffs.empty()) {
    throw std::invalid_argument("polynomial needs at least one coefficient");
  }
  double max_abs = 0.0;
  for (Complex z : coeffs) {
    if (!finite(z)) {
      throw std::invalid_argument("polynomial coefficients must be finite");
    }
    max_abs = std::max(max_abs, std::abs(z));
  }
  const double cut = kTrimRel * max_abs;
  while (coeffs.size() > 1 && std::abs(coeffs.back()) < cut) {
    coeffs.pop_back();
  }
  strip_exact_zero_tail(coeffs);
  coeffs_ = std::move(coeffs);
}

Polynomial::Polynomial(std::vector<Complex> coeffs, RawTag) {
  if (coeffs.empty()) {
    throw std::invalid_argument("polynomial needs at least one coefficient");
  }
  strip_exact_zero_tail(coeffs);
  coeffs_ = std::move(coeffs);
}

Polynomial poly_raw(std::vector<Complex> coeffs) {
  return Polynomial::raw(std::move(coeffs));
}

Polynomial Polynomial::from_real(const std::vector<double>& coeffs) {
  std::vector<Complex> c(coeffs.begin(), coeffs.end());
  return Polynomial(std::move(c));
}

Polynomial Polynomial::from_roots(std::span<const Complex> roots,
                                  Complex leading) {
  if (roots.empty()) {
    throw std::invalid_argument("from_roots needs at least one root");
  }
  if (leading == 0.0) {
    throw std::invalid_argument("from_roots needs a nonzero leading factor");
  }
  std::vector<Complex> c{leading};
  c.reserve(roots.size() + 1);
  for (Complex r : roots) {
    if (!finite(r)) {
      throw std::invalid_argument("from_roots needs finite roots");
    }
    c.push_back(c.back());
    for (std::size_t k = c.size() - 2; k > 0; --k) {
      c[k] = c[k - 1] - r * c[k];
    }
    c[0] *= -r;
  }
  return raw(std::move(c));
}

Complex Polynomial::operator()(Complex x) const {
  Complex acc = coeffs_.back();
  for (std::size_t k = coeffs_.size() - 1; k-- > 0;) {
    acc = acc * x + coeffs_[k];
  }
  return acc;
}

bool Polynomial::is_real(double tol) const {
  const double cut = tol * (1.0 + max_abs_coeff());
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [cut](Complex z) { return std::abs(z.imag()) <= cut; });
}

double Polynomial::max_abs_coeff() const {
  double m = 0.0;
  for (Complex z : coeffs_) {
    m = std::max(m, std::abs(z));
  }
  return m;
}

double Polynomial::l1_norm() const {
  double s = 0.0;
  for (Complex z : coeffs_) {
    s += std::abs(z);
  }
  return s;
}

Polynomial Polynomial::shifted_up(std::size_t k) const {
  if (is_zero()) {
    return *this;
  }
  std::vector<Complex> c(coeffs_.size() + k, Complex(0.0, 0.0));
  std::copy(coeffs_.begin(), coeffs_.end(), c.begin() + k);
  return raw(std::move(c));
}

Polynomial Polynomial::operator-() const {
  std::vector<Complex> c(coeffs_);
  for (Complex& z : c) {
    z = -z;
  }
  return raw(std::move(c));
}

Polynomial& Polynomial::operator*=(Complex scale) {
  for (Complex& z : coeffs_) {
    z *= scale;
  }
  strip_exact_zero_tail(coeffs_);
  return *this;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Complex> c(std::max(a.coeffs_.size(), b.coeffs_.size()),
                         Complex(0.0, 0.0));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) {
    c[k] += a.coeffs_[k];
  }
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) {
    c[k] += b.coeffs_[k];
  }
  return Polynomial::raw(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  return a + (-b);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  std::vector<Complex> c(a.coeffs_.size() + b.coeffs_.size() - 1,
                         Complex(0.0, 0.0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Polynomial::raw(std::move(c));
}

}  // namespace cardano
