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

#include <benchmark/benchmark.h>

#include "cardano/cardano.hpp"
#include "cardano/chebyshev.hpp"
#include "cardano/ferrari.hpp"
#include "cardano/operators.hpp"
#include "cardano/polynomial.hpp"
#include "cardano/root_finding.hpp"

namespace {

using cardano::CardanoParams;

void BM_BuildPolynomial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const CardanoParams params = CardanoParams::make(n, 1.5, -2.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cardano::cardano_polynomial(params));
  }
}
BENCHMARK(BM_BuildPolynomial)->Arg(5)->Arg(15)->Arg(25);

void BM_ClosedFormRoots(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const CardanoParams params = CardanoParams::make(n, 1.5, -2.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cardano::cardano_roots(params));
  }
}
BENCHMARK(BM_ClosedFormRoots)->Arg(5)->Arg(15)->Arg(25);

void BM_OracleRoots(benchmark::State& state) {
  // Oscillatory member: nine distinct real roots, a fair iterative workload.
  const CardanoParams params = CardanoParams::make(9, 1.25, 0.75);
  const cardano::Polynomial poly = cardano::cardano_polynomial(params);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cardano::durand_kerner_roots(poly));
  }
}
BENCHMARK(BM_OracleRoots);

void BM_Recognize(benchmark::State& state) {
  const cardano::Polynomial poly =
      cardano::cardano_polynomial(CardanoParams::make(25, 1.5, -2.5));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cardano::recognize_cardano(poly, 1e-9));
  }
}
BENCHMARK(BM_Recognize);

void BM_FerrariSolve(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(cardano::solve_depressed_quartic(6.0, 8.0, 3.0));
  }
}
BENCHMARK(BM_FerrariSolve);

void BM_CardanoOperator(benchmark::State& state) {
  const CardanoParams params = CardanoParams::make(33, 2.0, 3.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cardano::cardano_operator(params));
  }
}
BENCHMARK(BM_CardanoOperator);

void BM_VerifyIdentity(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const CardanoParams params = CardanoParams::make(n, 2.0, 3.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cardano::verify_cardano_identity(params));
  }
}
BENCHMARK(BM_VerifyIdentity)->Arg(7)->Arg(15);

void BM_FourierRecovery(benchmark::State& state) {
  const CardanoParams params = CardanoParams::make(63, 1.2, 0.8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cardano::fourier_root_recovery(params));
  }
}
BENCHMARK(BM_FourierRecovery);

void BM_ChebyshevLadder(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(cardano::cardano_sequence(1.5, -2.5, 24));
  }
}
BENCHMARK(BM_ChebyshevLadder);

}  // namespace

BENCHMARK_MAIN();
