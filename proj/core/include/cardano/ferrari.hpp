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

#include "cardano/polynomial.hpp"

namespace cardano {

// Auxiliary quantities of the quartic factorization
//   x^4 + a x^2 + b x + c =
//     (x^2 - alpha x + (y - beta)) (x^2 + alpha x + (y + beta)),
// where y is the chosen real root of the resolvent cubic, alpha^2 = 2y - a
// and beta = -b / (2 alpha).  On the biquadratic path (alpha ~ 0) beta is
// reported as sqrt(max(y^2 - c, 0)) and alpha as 0.
struct FerrariAux {
  double y;
  double alpha;
  double beta;
};

struct QuarticSolution {
  RootSet roots;        // all four roots, factor by factor
  FerrariAux aux;
  Polynomial resolvent; // monic resolvent cubic, ascending coefficients
  bool biquadratic;     // true when the alpha ~ 0 route was taken
};

// Resolvent cubic of the depressed quartic x^4 + a x^2 + b x + c, i.e. the
// monic form of 4 (y^2 - c)(2y - a) - b^2 = 0:
//   y^3 - (a/2) y^2 - c y + (4 a c - b^2)/8.
Polynomial resolvent_cubic(double a, double b, double c);

// Solves the depressed quartic x^4 + a x^2 + b x + c = 0.  Picks the largest
// real resolvent root y (one with 2y - a >= 0 always exists).  When
// |2y - a| <= 1e-10 (1 + |a|) the quartic must be biquadratic; a nonzero b
// beyond that scale raises InconsistentInputError.
QuarticSolution solve_depressed_quartic(double a, double b, double c);

// General monic quartic x^4 + a3 x^3 + a2 x^2 + a1 x + a0: depresses with
// x -> x - a3/4, solves, and shifts the roots back.  aux and resolvent refer
// to the depressed form.
QuarticSolution solve_quartic(double a3, double a2, double a1, double a0);

}  // namespace cardano
