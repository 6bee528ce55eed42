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

#include "cardano/errors.hpp"
#include "cardano/polynomial.hpp"

namespace cardano {

struct RootFindingOptions {
  int max_iterations = 1000;
  // Accept once max_j |p(z_j)| <= residual_tol * l1_norm(p).
  double residual_tol = 1e-10;
};

// Simultaneous-iteration (Durand-Kerner) root finder.  Deterministic: the
// starting points are (0.4 + 0.9i)^k, k = 1..degree.  Returns all degree
// roots with multiplicity; throws NonConvergenceError if the residual target
// is not met within the iteration budget, std::invalid_argument for degree 0.
RootSet durand_kerner_roots(const Polynomial& p,
                            const RootFindingOptions& options = {});

// Multiset comparison: greedily pairs the globally closest remaining points
// and requires every matched pair to lie within tol.  Size mismatch is false.
bool root_multiset_equal(const RootSet& a, const RootSet& b, double tol);

}  // namespace cardano
