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
#include <vector>

#include "cardano/cardano.hpp"
#include "cardano/polynomial.hpp"

namespace cardano {

// Vieta-Lucas polynomial V_n, the monic degree-n solution of
// V_n(2 cos t) = 2 cos(n t).  Integer coefficients, ascending; only the
// powers with the parity of n are populated.
struct VietaLucasPoly {
  int order;
  std::vector<std::int64_t> coeffs;  // coeffs[k] multiplies x^k

  Polynomial to_polynomial() const;
};

// Closed form: V_n(x) = sum_{k=0}^{floor(n/2)} (-1)^k n/(n-k) C(n-k, k)
// x^(n-2k).  The rational factor is an exact integer (asserted).  n >= 1;
// throws std::domain_error otherwise, std::overflow_error past int64.
VietaLucasPoly vieta_lucas_closed(int n);

// Three-term recurrence V_{n+2} = x V_{n+1} - V_n seeded with V_1 = x,
// V_2 = x^2 - 2.  Produces coefficients identical to the closed form.
VietaLucasPoly vieta_lucas_recurrence(int n);

// Max over sample angles t in (0, pi) of |V_n(2 cos t) - 2 cos(n t)|,
// evaluated in doubles.  samples >= 1.
double chebyshev_identity_error(int n, int samples);

// Expresses the degree-n family member through the Vieta-Lucas polynomial:
//   C_{n,c,d}(x) = c^(n/2) V_n(x / sqrt(c)) - 2d,
// expanded coefficient-wise (coeff of x^k is V-coeff * c^((n-k)/2)).
// Requires c > 0 (std::domain_error otherwise); matches cardano_polynomial.
Polynomial cardano_from_vieta_lucas(const CardanoParams& params);

// The whole family ladder C_1 .. C_max_n for fixed (c, d) via the coupled
// recurrence C_{k+2} = x C_{k+1} - c C_k + 2d (x - c - 1), seeded with
// C_1 = x - 2d and C_2 = x^2 - 2c - 2d.  Element i is C_{i+1}; the odd
// entries agree with cardano_polynomial.  max_n >= 3.
std::vector<Polynomial> cardano_sequence(double c, double d, int max_n);

}  // namespace cardano
