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

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "cardano/cardano.hpp"
#include "cardano/polynomial.hpp"

namespace cardano {

using CMatrix = Eigen::MatrixXcd;

// Dimension guard for the dense operator constructions below.
inline constexpr int kMaxOperatorDim = 64;

// Diagonal clock matrix Z = diag(1, w, w^2, ..., w^(n-1)), w = exp(2*pi*i/n).
CMatrix clock_matrix(int n);

// Cyclic shift X: column j maps to row (j+1 mod n); X e_j = e_{j+1 mod n}.
CMatrix shift_matrix(int n);

// Discrete Fourier matrix F with entries F(i, j) = w^(i*j) / sqrt(n).
// Conjugating with it turns clock into shift: F^+ Z F = X.
CMatrix dft_matrix(int n);

// Diagonal operator W = p Z + q Z^{-1}; its diagonal entries are exactly the
// closed-form roots p w^j + q w^{-j}.
CMatrix fujii_operator(const CardanoParams& params);

// The conjugated operator X_c = F^+ W F = p X + q X^{-1}: a circulant with
// first row (0, q, 0, ..., 0, p).  Annihilated by the family polynomial.
CMatrix cardano_operator(const CardanoParams& params);

// First row of M if M is circulant (every row the previous one shifted one
// place right) within entrywise tolerance tol; std::nullopt otherwise.
std::optional<std::vector<Complex>> circulant_first_row(const CMatrix& m,
                                                        double tol);

// Horner evaluation of p at a square matrix (constant term times identity).
CMatrix eval_at_matrix(const Polynomial& p, const CMatrix& m);

// Eigenvalues of a circulant from its first row: lambda_j = sum_b row[b]
// w^(-j b) (inverse Fourier sum; valid for circulants only, j = 0..n-1).
std::vector<Complex> circulant_spectrum(const std::vector<Complex>& row);

struct OperatorReport {
  double w_residual;  // Frobenius norm of C(W)
  double x_residual;  // Frobenius norm of C(X_c)
  std::optional<std::vector<Complex>> first_row;  // circulant row of X_c
  RootSet spectrum;   // eigenvalues of X_c via the circulant formula
};

// Builds W and X_c for the parameters, evaluates the family polynomial at
// both, checks circulant structure (tolerance 1e-10) and reports the
// spectrum.  The natural residual scale is (1 + max_j |lambda_j|)^n.
OperatorReport verify_cardano_identity(const CardanoParams& params);

// Frobenius norm of Z X - w X Z (exactly zero in exact arithmetic).
double commutation_residual(int n);

// Recovers the root sequence from the first row of the conjugated operator:
// row * sqrt(n) * F^+.  Entry j is the root p w^j + q w^{-j}.
RootSet fourier_root_recovery(const CardanoParams& params);

// Builds the diagonal operator of the depressed-quartic roots, evaluates
// x^4 + a x^2 + b x + c at it and returns the Frobenius residual.
double ferrari_operator_residual(double a, double b, double c);

}  // namespace cardano
