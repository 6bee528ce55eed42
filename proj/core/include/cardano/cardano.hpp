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
#include <optional>

#include "cardano/polynomial.hpp"

namespace cardano {

// Parameters of the two-parameter odd-degree family
//
//   C_{n,c,d}(x) = x^n - sum_{j=0}^{m-1} B_{m,j} c^{m-j} x^{2j+1} - 2d,
//
// with n = 2m + 1 and integer weights B_{m,j} (see cardano_coeff).  Every
// member is solvable by radicals: its roots are p w^j + q w^{-j} where
// p^n q^n = c^n, p^n + q^n = 2d and w = exp(2*pi*i/n).
struct CardanoParams {
  int n;            // odd degree, n >= 3
  int m;            // (n - 1) / 2
  double c;
  double d;
  double discriminant;  // D = d^2 - c^n; sign selects the solution branch

  // Validates n (odd, >= 3) and finiteness of c, d; computes m and D.
  // Throws std::invalid_argument on violation.
  static CardanoParams make(int n, double c, double d);
};

enum class RadicalForm {
  kRealRadical,    // D >= 0: p, q real, p*q = c
  kConjugatePair,  // D < 0: q = conj(p), |p| = sqrt(c); forces c > 0
};

// The pair (p, q) with p^n = d + sqrt(D), q^n = d - sqrt(D).
struct RadicalPair {
  Complex p;
  Complex q;
  RadicalForm form;
  // Phase angle with cos(alpha) = d / c^(n/2); only meaningful for
  // kConjugatePair (0 otherwise).
  double alpha;
};

// Integer weight B_{m,j} = (-1)^(m-1-j) * (2m+1)/(2j+1) * C(m+j, 2j), exact.
// Requires m >= 1 and 0 <= j <= m-1 (std::domain_error otherwise); throws
// std::overflow_error beyond int64 range.
std::int64_t cardano_coeff(int m, int j);

// Independent route to B_{m,j}: the alternating double-binomial sum
//   (2j+1) * B_{m,j} = sum_{t=0}^{m-1-j} (-1)^t C(2m+1, m-j-t)
//                      * (2(j+t)+1) * C(2j+t, t),
// evaluated in checked integer arithmetic with the division performed (and
// asserted exact) at the end.  Agrees with cardano_coeff for all valid m, j.
std::int64_t cardano_coeff_double_sum(int m, int j);

// The same alternating sum with the index range extended by one final term
// (t = m - j).  The extension makes the sum telescope to exactly zero; the
// returned value is that completed sum (always 0 for valid inputs).
std::int64_t completed_binomial_sum(int m, int j);

// Monic degree-n member of the family, ascending real coefficients.  Even
// powers above the constant term vanish identically.
Polynomial cardano_polynomial(const CardanoParams& params);

// Solves u^2 - 2 d u + c^n = 0 for u = p^n (and v = q^n) and extracts the
// pair (p, q).  For D >= 0 both n-th roots are real (signed real root); the
// smaller-magnitude radicand is recovered as c^n / u to avoid cancellation.
// For D < 0, c must be positive and p = sqrt(c) * exp(i*alpha/n) with
// alpha = arccos(d / c^(n/2)), q = conj(p).  A band |D| <= 1e-12 *
// max(1, d^2, |c|^n) is treated as the boundary case p = q = d^(1/n).
RadicalPair radical_pair(const CardanoParams& params);

// All n roots in the fixed index order j = 0, +1, -1, +2, -2, ..., +m, -m:
// x_j = p w^j + q w^{-j}.  When D < 0 this delegates to trig_roots, so every
// returned root is real in that regime.
RootSet cardano_roots(const CardanoParams& params);

// Real-root form for the oscillatory branch (D < 0):
//   x_j = 2 sqrt(c) cos((alpha + 2*pi*j)/n), same index order as
// cardano_roots.  Throws std::domain_error when D >= 0.
RootSet trig_roots(const CardanoParams& params);

// Roots with every index shifted by k (x_{j+k mod n}); k = 0 reproduces
// cardano_roots exactly.  As a set the result is independent of k.
RootSet branch_roots(const CardanoParams& params, int k);

// Decides membership in the family.  Accepts any polynomial whose
// coefficients, after normalization by the leading coefficient, are real
// within tol and match cardano_polynomial(n, c, d) coefficient-wise within
// tol * (1 + max|coeff|), where c = -a_{n-2}/n and d = -a_0/2 are read off
// the normalized input.  Returns std::nullopt on any mismatch (even degree,
// nonzero x^{n-1} term, stray even powers, ...).
std::optional<CardanoParams> recognize_cardano(const Polynomial& p,
                                               double tol);

// Depressed form of the general monic cubic x^3 + a x^2 + b x + c obtained
// by the shift x -> x - a/3:  y^3 + 3 s y + t with
//   s = b/3 - a^2/9,   t = c - a b/3 + 2 a^3/27.
// The depressed cubic is the n = 3 family member with c = -s, d = -t/2, and
// delta = t^2 + 4 s^3 equals 4 * discriminant of those parameters.
struct DepressedCubic {
  double s;
  double t;
  double shift;  // a/3; roots of the original cubic are y - shift
  double delta;

  static DepressedCubic from_general(double a, double b, double c);
  CardanoParams params() const;
};

// Roots of x^3 + a x^2 + b x + c via the depressed form and the n = 3 family
// solver.  Same index order as cardano_roots, shifted back by a/3.
RootSet solve_cubic(double a, double b, double c);

// Left-associated integer power: ((base * base) * base) * ...  Exponent >= 0.
double pow_int(double base, int exponent);

// Signed real n-th root for odd n: preserves the sign of x.
double signed_nth_root(double x, int n);

}  // namespace cardano
