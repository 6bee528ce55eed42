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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace cardano {

using Complex = std::complex<double>;
using RootSet = std::vector<Complex>;

// Dense univariate polynomial over the complex doubles, stored as ascending
// coefficients: coeffs()[k] multiplies x^k.  The coefficient list is never
// empty; the zero polynomial is {0} with degree 0.
class Polynomial {
 public:
  // Degree 0 zero polynomial.
  Polynomial() : coeffs_{Complex(0.0, 0.0)} {}

  // Validating constructor for externally supplied coefficient lists.
  // Requires a non-empty, finite list.  Trailing coefficients smaller than
  // 1e-14 * max|coeff| are treated as numerical zeros and dropped, so the
  // stored leading coefficient is nonzero unless the polynomial is zero.
  explicit Polynomial(std::vector<Complex> coeffs);

  static Polynomial from_real(const std::vector<double>& coeffs);

  // Expands leading * prod_j (x - roots[j]).  The degree always equals
  // roots.size(); no magnitude-based trimming is applied.  Throws
  // std::invalid_argument for an empty root list or a zero leading factor.
  static Polynomial from_roots(std::span<const Complex> roots,
                               Complex leading = Complex(1.0, 0.0));

  std::size_t degree() const { return coeffs_.size() - 1; }
  const std::vector<Complex>& coeffs() const { return coeffs_; }

  // Coefficient of x^k; zero beyond the stored degree.
  Complex coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Complex(0.0, 0.0);
  }

  Complex leading() const { return coeffs_.back(); }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0.0; }

  // Horner evaluation.
  Complex operator()(Complex x) const;

  // True when every imaginary part is at most tol * (1 + max|coeff|).
  bool is_real(double tol) const;

  double max_abs_coeff() const;
  double l1_norm() const;

  // Multiplies by x^k (shifts coefficients up).
  Polynomial shifted_up(std::size_t k) const;

  Polynomial operator-() const;
  Polynomial& operator*=(Complex scale);

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Complex scale, Polynomial p) {
    p *= scale;
    return p;
  }

 private:
  struct RawTag {};
  // Trusted path for structurally built coefficients (products, expansions):
  // only exact 0.0 tail entries are stripped.
  Polynomial(std::vector<Complex> coeffs, RawTag);

  static Polynomial raw(std::vector<Complex> coeffs) {
    return Polynomial(std::move(coeffs), RawTag{});
  }

  std::vector<Complex> coeffs_;

  friend Polynomial poly_raw(std::vector<Complex> coeffs);
};

// Trusted construction without magnitude trimming, for code that builds
// coefficient lists whose degree is known by construction.
Polynomial poly_raw(std::vector<Complex> coeffs);

}  // namespace cardano
