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

#include "cardano/operators.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "cardano/ferrari.hpp"

namespace cardano {

namespace {

constexpr double kCirculantTol = 1e-10;

void check_dim(int n) {
  if (n < 2 || n > kMaxOperatorDim) {
    throw std::invalid_argument("operator dimension must lie in [2, " +
                                std::to_string(kMaxOperatorDim) + "], got " +
                                std::to_string(n));
  }
}

// w^k with the exponent reduced mod n before touching the unit circle.
Complex unit_root(int n, long k) {
  long r = k % n;
  if (r < 0) {
    r += n;
  }
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) /
                             static_cast<double>(n));
}

}  // namespace

CMatrix clock_matrix(int n) {
  check_dim(n);
  CMatrix z = CMatrix::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    z(j, j) = unit_root(n, j);
  }
  return z;
}

CMatrix shift_matrix(int n) {
  check_dim(n);
  CMatrix x = CMatrix::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    x((j + 1) % n, j) = 1.0;
  }
  return x;
}

CMatrix dft_matrix(int n) {
  check_dim(n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  CMatrix f(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      f(i, j) = scale * unit_root(n, static_cast<long>(i) * j);
    }
  }
  return f;
}

CMatrix fujii_operator(const CardanoParams& params) {
  check_dim(params.n);
  const RadicalPair pair = radical_pair(params);
  CMatrix w = CMatrix::Zero(params.n, params.n);
  for (int j = 0; j < params.n; ++j) {
    const Complex wj = unit_root(params.n, j);
    w(j, j) = pair.p * wj + pair.q * std::conj(wj);
  }
  return w;
}

CMatrix cardano_operator(const CardanoParams& params) {
  const CMatrix f = dft_matrix(params.n);
  return f.adjoint() * fujii_operator(params) * f;
}

std::optional<std::vector<Complex>> circulant_first_row(const CMatrix& m,
                                                        double tol) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw std::invalid_argument("circulant test needs a square matrix");
  }
  const int n = static_cast<int>(m.rows());
  std::vector<Complex> row(n);
  for (int j = 0; j < n; ++j) {
    row[j] = m(0, j);
  }
  for (int i = 1; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int k = ((j - i) % n + n) % n;
      if (std::abs(m(i, j) - row[k]) > tol) {
        return std::nullopt;
      }
    }
  }
  return row;
}

CMatrix eval_at_matrix(const Polynomial& p, const CMatrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("matrix evaluation needs a square matrix");
  }
  const auto& coeffs = p.coeffs();
  const int n = static_cast<int>(m.rows());
  CMatrix acc = CMatrix::Zero(n, n);
  acc.diagonal().array() += coeffs.back();
  for (std::size_t k = coeffs.size() - 1; k-- > 0;) {
    acc = (acc * m).eval();
    acc.diagonal().array() += coeffs[k];
  }
  return acc;
}

std::vector<Complex> circulant_spectrum(const std::vector<Complex>& row) {
  const int n = static_cast<int>(row.size());
  if (n < 1) {
    throw std::invalid_argument("spectrum needs a non-empty first row");
  }
  std::vector<Complex> lambda(n);
  for (int j = 0; j < n; ++j) {
    Complex sum = 0.0;
    for (int b = 0; b < n; ++b) {
      sum += row[b] * unit_root(n, -static_cast<long>(j) * b);
    }
    lambda[j] = sum;
  }
  return lambda;
}

OperatorReport verify_cardano_identity(const CardanoParams& params) {
  const Polynomial poly = cardano_polynomial(params);
  const CMatrix w = fujii_operator(params);
  const CMatrix x = cardano_operator(params);

  OperatorReport report;
  report.w_residual = eval_at_matrix(poly, w).norm();
  report.x_residual = eval_at_matrix(poly, x).norm();
  report.first_row = circulant_first_row(x, kCirculantTol);

  std::vector<Complex> row(params.n);
  for (int j = 0; j < params.n; ++j) {
    row[j] = x(0, j);
  }
  report.spectrum = circulant_spectrum(row);
  return report;
}

double commutation_residual(int n) {
  const CMatrix z = clock_matrix(n);
  const CMatrix x = shift_matrix(n);
  const Complex w = unit_root(n, 1);
  return (z * x - w * (x * z)).norm();
}

RootSet fourier_root_recovery(const CardanoParams& params) {
  const CMatrix x = cardano_operator(params);
  const CMatrix f = dft_matrix(params.n);
  const Eigen::RowVectorXcd row = x.row(0);
  const Eigen::RowVectorXcd rec =
      row * (std::sqrt(static_cast<double>(params.n)) * f.adjoint());
  return RootSet(rec.begin(), rec.end());
}

double ferrari_operator_residual(double a, double b, double c) {
  const QuarticSolution sol = solve_depressed_quartic(a, b, c);
  const int n = static_cast<int>(sol.roots.size());
  CMatrix diag = CMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    diag(i, i) = sol.roots[i];
  }
  const Polynomial quartic =
      poly_raw({Complex(c, 0.0), Complex(b, 0.0), Complex(a, 0.0),
                Complex(0.0, 0.0), Complex(1.0, 0.0)});
  return eval_at_matrix(quartic, diag).norm();
}

}  // namespace cardano
