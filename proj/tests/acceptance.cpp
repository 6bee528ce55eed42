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

// End-to-end acceptance gate: nine numbered checks, one line of output per
// check, nonzero exit when any of them fails.  Tolerances are pinned here
// on purpose -- loosening one is a deliberate, reviewable act.

#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "cardano/cardano.hpp"
#include "cardano/chebyshev.hpp"
#include "cardano/ferrari.hpp"
#include "cardano/operators.hpp"
#include "cardano/polynomial.hpp"
#include "cardano/root_finding.hpp"

namespace {

using cardano::CardanoParams;
using cardano::Complex;
using cardano::Polynomial;
using cardano::RootSet;

bool coeffs_exact(const Polynomial& p, const std::vector<double>& want) {
  if (p.coeffs().size() != want.size()) {
    return false;
  }
  for (std::size_t k = 0; k < want.size(); ++k) {
    if (p.coeff(k) != Complex(want[k], 0.0)) {
      return false;
    }
  }
  return true;
}

double max_root_residual(const Polynomial& p, const RootSet& roots) {
  double worst = 0.0;
  for (Complex r : roots) {
    worst = std::max(worst, std::abs(p(r)));
  }
  return worst;
}

// 1. Worked cubic: closed form, pinned roots, oracle agreement.
bool criterion1() {
  const Polynomial p = cardano::poly_raw(
      {Complex(-9.0, 0.0), Complex(-6.0, 0.0), Complex(0.0, 0.0),
       Complex(1.0, 0.0)});
  const RootSet roots = cardano::solve_cubic(0.0, -6.0, -9.0);
  if (roots.size() != 3) {
    return false;
  }
  const double h = std::sqrt(3.0) / 2.0;
  const RootSet expected{Complex(3.0, 0.0), Complex(-1.5, h),
                         Complex(-1.5, -h)};
  if (!cardano::root_multiset_equal(roots, expected, 1e-9)) {
    return false;
  }
  if (max_root_residual(p, roots) > 1e-10) {
    return false;
  }
  return cardano::root_multiset_equal(roots, cardano::durand_kerner_roots(p),
                                      1e-9);
}

// 2. Family members (3,1,1) and (5,1,1): exact coefficients, known roots.
bool criterion2() {
  const CardanoParams p3 = CardanoParams::make(3, 1.0, 1.0);
  const Polynomial c3 = cardano::cardano_polynomial(p3);
  if (!coeffs_exact(c3, {-2.0, -3.0, 0.0, 1.0})) {
    return false;
  }
  const RootSet r3 = cardano::cardano_roots(p3);
  const RootSet want3{Complex(2.0, 0.0), Complex(-1.0, 0.0),
                      Complex(-1.0, 0.0)};
  if (!cardano::root_multiset_equal(r3, want3, 1e-6)) {
    return false;
  }
  if (max_root_residual(c3, r3) > 1e-8) {
    return false;
  }

  const CardanoParams p5 = CardanoParams::make(5, 1.0, 1.0);
  const Polynomial c5 = cardano::cardano_polynomial(p5);
  if (!coeffs_exact(c5, {-2.0, 5.0, 0.0, -5.0, 0.0, 1.0})) {
    return false;
  }
  const double golden_small = (std::sqrt(5.0) - 1.0) / 2.0;   // 2cos(72deg)
  const double golden_large = -(std::sqrt(5.0) + 1.0) / 2.0;  // 2cos(144deg)
  const RootSet want5{Complex(2.0, 0.0), Complex(golden_small, 0.0),
                      Complex(golden_small, 0.0), Complex(golden_large, 0.0),
                      Complex(golden_large, 0.0)};
  const RootSet r5 = cardano::cardano_roots(p5);
  if (!cardano::root_multiset_equal(r5, want5, 1e-6)) {
    return false;
  }
  return max_root_residual(c5, r5) <= 1e-8;
}

// 3. Oscillatory quintic (5,3,2): exact build, exact discriminant, trig roots.
bool criterion3() {
  const CardanoParams params = CardanoParams::make(5, 3.0, 2.0);
  const Polynomial poly = cardano::cardano_polynomial(params);
  if (!coeffs_exact(poly, {-4.0, 45.0, 0.0, -15.0, 0.0, 1.0})) {
    return false;
  }
  if (params.discriminant != -239.0) {
    return false;
  }
  const RootSet roots = cardano::trig_roots(params);
  if (roots.size() != 5 || std::abs(roots[0].real() - 3.3215) > 5e-4) {
    return false;
  }
  return max_root_residual(poly, roots) <= 1e-9;
}

// 4. Exact integer identities for the coefficient weights, m up to 20.
bool criterion4() {
  int pairs = 0;
  for (int m = 1; m <= 20; ++m) {
    for (int j = 0; j < m; ++j) {
      if (cardano::cardano_coeff_double_sum(m, j) !=
          cardano::cardano_coeff(m, j)) {
        return false;
      }
      if (cardano::completed_binomial_sum(m, j) != 0) {
        return false;
      }
      ++pairs;
    }
  }
  return pairs == 210;
}

// 5. Degree-7 member reproduces its textbook form in exact double arithmetic.
bool criterion5() {
  std::mt19937 rng(90210);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int trial = 0; trial < 20; ++trial) {
    const double c = u(rng);
    const double d = u(rng);
    const Polynomial poly =
        cardano::cardano_polynomial(CardanoParams::make(7, c, d));
    const double c2 = c * c;          // left-associated powers, as built
    const double c3 = (c * c) * c;
    const std::vector<double> want{-(2.0 * d), -(7.0 * c3), 0.0,
                                   -(-14.0 * c2), 0.0, -(7.0 * c),
                                   0.0, 1.0};
    if (!coeffs_exact(poly, want)) {
      return false;
    }
  }
  return true;
}

// 6. The 2cos(n theta) bridge: closed == recurrence, scaled identity matches
//    the builder, and the ladder recurrence holds from the derived seeds.
bool criterion6() {
  for (int n = 1; n <= 30; ++n) {
    if (cardano::vieta_lucas_closed(n).coeffs !=
        cardano::vieta_lucas_recurrence(n).coeffs) {
      return false;
    }
  }

  std::mt19937 rng(24601);
  std::uniform_real_distribution<double> uc(0.01, 5.0);
  std::uniform_real_distribution<double> ud(-5.0, 5.0);
  std::uniform_int_distribution<int> half(1, 10);  // odd n up to 21
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 * half(rng) + 1;
    const CardanoParams params = CardanoParams::make(n, uc(rng), ud(rng));
    const Polynomial via_bridge = cardano::cardano_from_vieta_lucas(params);
    const Polynomial direct = cardano::cardano_polynomial(params);
    if (via_bridge.coeffs().size() != direct.coeffs().size()) {
      return false;
    }
    const double scale = 1.0 + direct.max_abs_coeff();
    for (std::size_t k = 0; k < direct.coeffs().size(); ++k) {
      if (std::abs(via_bridge.coeff(k) - direct.coeff(k)) > 1e-9 * scale) {
        return false;
      }
    }
  }

  // Ladder: C_{k+2} = x C_{k+1} - c C_k + 2d(x - c - 1), seeds C_1 = x - 2d,
  // C_2 = x^2 - 2c - 2d, checked coefficient-wise at every order.
  for (int trial = 0; trial < 10; ++trial) {
    const double c = ud(rng);
    const double d = ud(rng);
    const auto seq = cardano::cardano_sequence(c, d, 16);
    if (seq.size() != 16) {
      return false;
    }
    if (seq[0].coeff(0) != Complex(-2.0 * d, 0.0) ||
        seq[0].coeff(1) != Complex(1.0, 0.0) || seq[0].degree() != 1) {
      return false;
    }
    if (seq[1].coeff(0) != Complex(-2.0 * c - 2.0 * d, 0.0) ||
        seq[1].coeff(1) != Complex(0.0, 0.0) ||
        seq[1].coeff(2) != Complex(1.0, 0.0)) {
      return false;
    }
    for (std::size_t k = 0; k + 2 < seq.size(); ++k) {
      const Polynomial& low = seq[k];
      const Polynomial& mid = seq[k + 1];
      const Polynomial& high = seq[k + 2];
      double scale = 1.0 + high.max_abs_coeff();
      scale = std::max(scale, 1.0 + mid.max_abs_coeff());
      for (std::size_t i = 0; i < high.coeffs().size(); ++i) {
        Complex rhs = (i >= 1 && i - 1 < mid.coeffs().size())
                          ? mid.coeff(i - 1)
                          : Complex(0.0, 0.0);
        if (i < low.coeffs().size()) {
          rhs -= c * low.coeff(i);
        }
        if (i == 0) {
          rhs += Complex(-2.0 * d * (c + 1.0), 0.0);
        }
        if (i == 1) {
          rhs += Complex(2.0 * d, 0.0);
        }
        if (std::abs(high.coeff(i) - rhs) > 1e-9 * scale) {
          return false;
        }
      }
    }
  }
  return true;
}

// 7. Quartic pipeline: exact resolvent, its depressed form as a family
//    member, pinned largest root, residual and oracle bounds.
bool criterion7() {
  const Polynomial resolvent = cardano::resolvent_cubic(6.0, 8.0, 3.0);
  if (!coeffs_exact(resolvent, {1.0, -3.0, -3.0, 1.0})) {
    return false;
  }

  const cardano::DepressedCubic dep =
      cardano::DepressedCubic::from_general(-3.0, -3.0, 1.0);
  if (dep.s != -2.0 || dep.t != -4.0) {
    return false;
  }
  const CardanoParams zp = dep.params();
  if (zp.n != 3 || zp.c != 2.0 || zp.d != 2.0) {
    return false;
  }
  const RootSet z = cardano::cardano_roots(zp);
  if (std::abs(z[0] - Complex(1.0 + std::sqrt(3.0), 0.0)) > 1e-10) {
    return false;
  }

  const cardano::QuarticSolution sol =
      cardano::solve_depressed_quartic(6.0, 8.0, 3.0);
  const Polynomial quartic = cardano::poly_raw(
      {Complex(3.0, 0.0), Complex(8.0, 0.0), Complex(6.0, 0.0),
       Complex(0.0, 0.0), Complex(1.0, 0.0)});
  if (sol.roots.size() != 4 || max_root_residual(quartic, sol.roots) > 1e-8) {
    return false;
  }

  std::mt19937 rng(5882353);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const double a = u(rng);
    const double b = u(rng);
    const double c = u(rng);
    const cardano::QuarticSolution s = cardano::solve_depressed_quartic(a, b, c);
    const Polynomial p = cardano::poly_raw(
        {Complex(c, 0.0), Complex(b, 0.0), Complex(a, 0.0),
         Complex(0.0, 0.0), Complex(1.0, 0.0)});
    if (!cardano::root_multiset_equal(s.roots, cardano::durand_kerner_roots(p),
                                      1e-6)) {
      return false;
    }
  }
  return true;
}

// 8. Operator layer: annihilation, circulant structure, spectrum agreement,
//    commutation and Fourier recovery across the family.
bool criterion8() {
  std::mt19937 rng(1729);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int n = 3; n <= 15; n += 2) {
    if (cardano::commutation_residual(n) > 1e-12 * n) {
      return false;
    }
    for (int trial = 0; trial < 50; ++trial) {
      const CardanoParams params = CardanoParams::make(n, u(rng), u(rng));
      const cardano::OperatorReport report =
          cardano::verify_cardano_identity(params);

      double max_abs = 0.0;
      for (Complex z : report.spectrum) {
        max_abs = std::max(max_abs, std::abs(z));
      }
      const double scale = std::pow(1.0 + max_abs, n);
      if (report.w_residual > 1e-8 * scale ||
          report.x_residual > 1e-8 * scale) {
        return false;
      }

      if (!report.first_row.has_value()) {
        return false;
      }
      const cardano::RadicalPair pq = cardano::radical_pair(params);
      for (int j = 0; j < n; ++j) {
        Complex expected(0.0, 0.0);
        if (j == 1) {
          expected = pq.q;
        } else if (j == n - 1) {
          expected = pq.p;
        }
        if (std::abs((*report.first_row)[j] - expected) > 1e-10) {
          return false;
        }
      }

      const cardano::CMatrix w = cardano::fujii_operator(params);
      for (int j = 0; j < n; ++j) {
        if (std::abs(report.spectrum[j] - w(j, j)) > 1e-9) {
          return false;
        }
      }

      const RootSet closed = cardano::cardano_roots(params);
      if (!cardano::root_multiset_equal(
              cardano::fourier_root_recovery(params), closed, 1e-9)) {
        return false;
      }
    }
  }
  return true;
}

// 9. Recognition round-trip and rejections.
bool criterion9() {
  std::mt19937 rng(8128);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  std::uniform_int_distribution<int> half(1, 7);  // odd n up to 15
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 * half(rng) + 1;
    const double c = u(rng);
    const double d = u(rng);
    const Polynomial poly =
        cardano::cardano_polynomial(CardanoParams::make(n, c, d));
    const auto rec = cardano::recognize_cardano(poly, 1e-9);
    if (!rec.has_value() || rec->n != n) {
      return false;
    }
    if (std::abs(rec->c - c) > 1e-9 * (1.0 + std::abs(c)) ||
        std::abs(rec->d - d) > 1e-9 * (1.0 + std::abs(d))) {
      return false;
    }
  }

  const Polynomial not_member = cardano::poly_raw(
      {Complex(1.0, 0.0), Complex(1.0, 0.0), Complex(0.0, 0.0),
       Complex(0.0, 0.0), Complex(0.0, 0.0), Complex(1.0, 0.0)});
  if (cardano::recognize_cardano(not_member, 1e-9).has_value()) {
    return false;
  }

  // A nonzero second-highest coefficient must always be rejected.
  for (int trial = 0; trial < 5; ++trial) {
    const int n = 2 * half(rng) + 1;
    const Polynomial poly =
        cardano::cardano_polynomial(CardanoParams::make(n, u(rng), u(rng)));
    std::vector<Complex> coeffs = poly.coeffs();
    coeffs[coeffs.size() - 2] += 0.5;
    if (cardano::recognize_cardano(cardano::poly_raw(std::move(coeffs)), 1e-9)
            .has_value()) {
      return false;
    }
  }
  return true;
}

struct Criterion {
  const char* description;
  bool (*run)();
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"worked cubic x^3-6x-9: roots {3, (-3 +/- i sqrt(3))/2}, residuals <= "
       "1e-10, oracle multiset match at 1e-9",
       &criterion1},
      {"family members (3,1,1) and (5,1,1): exact coefficients, expected root "
       "multisets, residuals <= 1e-8",
       &criterion2},
      {"quintic (5,3,2): exact coefficients, discriminant exactly -239, "
       "leading trig root within 5e-4 of 3.3215, residuals <= 1e-9",
       &criterion3},
      {"coefficient identities: independent double sum and telescoping "
       "completion agree exactly on all 210 pairs with m <= 20",
       &criterion4},
      {"degree-7 build equals x^7-7cx^5+14c^2x^3-7c^3x-2d in exact double "
       "arithmetic for 20 random (c,d)",
       &criterion5},
      {"2cos bridge: closed == recurrence for n <= 30, scaled identity "
       "matches the builder at 1e-9, ladder holds from derived seeds",
       &criterion6},
      {"quartic route: exact resolvent, depressed map to (c,d)=(2,2), z[0] = "
       "1+sqrt(3) at 1e-10, residuals <= 1e-8, 1000 random vs oracle at 1e-6",
       &criterion7},
      {"operator suite, odd n in [3,15] x 50 draws: annihilation <= "
       "1e-8*scale, circulant row (0,q,0,...,0,p), spectrum at 1e-9, "
       "commutation <= 1e-12*n, Fourier recovery at 1e-9",
       &criterion8},
      {"recognition round-trip recovers (n,c,d) within 1e-9 on 200 draws; "
       "rejects x^5+x+1 and perturbed second-highest coefficients",
       &criterion9},
  };

  int passed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    bool ok = false;
    try {
      ok = criteria[i].run();
    } catch (const std::exception& e) {
      std::fprintf(stderr, "criterion %zu threw: %s\n", i + 1, e.what());
      ok = false;
    }
    std::printf("[%zu/9] %s %s\n", i + 1, ok ? "PASS" : "FAIL",
                criteria[i].description);
    if (ok) {
      ++passed;
    }
  }
  std::printf("acceptance: %d/9 criteria passed\n", passed);
  return passed == static_cast<int>(criteria.size()) ? 0 : 1;
}
