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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cardano/cardano.hpp"
#include "cardano/chebyshev.hpp"
#include "cardano/errors.hpp"
#include "cardano/ferrari.hpp"
#include "cardano/operators.hpp"
#include "cardano/polynomial.hpp"
#include "cardano/root_finding.hpp"

namespace {

using cardano::CardanoParams;
using cardano::Complex;
using cardano::Polynomial;
using cardano::RootSet;
using nlohmann::json;

// Exit codes of the tool.
constexpr int kOk = 0;
constexpr int kNotCardano = 1;
constexpr int kUsage = 2;
constexpr int kNonConvergence = 3;
constexpr int kVerificationFailed = 4;

// Flush negative zero so serialized reports are textually stable.
double canon(double v) { return v == 0.0 ? 0.0 : v; }

json pair_json(Complex z) {
  return json::array({canon(z.real()), canon(z.imag())});
}

json root_json(Complex z) {
  return json{{"re", canon(z.real())}, {"im", canon(z.imag())}};
}

json poly_json(const Polynomial& p) {
  json arr = json::array();
  for (Complex z : p.coeffs()) {
    arr.push_back(pair_json(z));
  }
  return arr;
}

json params_json(const CardanoParams& p) {
  return json{{"n", p.n},
              {"c", canon(p.c)},
              {"d", canon(p.d)},
              {"D", canon(p.discriminant)}};
}

void sort_roots(RootSet& roots) {
  std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
    const double ar = canon(a.real());
    const double br = canon(b.real());
    if (ar != br) {
      return ar < br;
    }
    return canon(a.imag()) < canon(b.imag());
  });
}

json roots_json(RootSet roots) {
  sort_roots(roots);
  json arr = json::array();
  for (Complex z : roots) {
    arr.push_back(root_json(z));
  }
  return arr;
}

// residual_max is recomputed from the serialized arrays themselves, so the
// reported figure is consistent with the printed digits' round-trip values.
void finalize_residual(json& report) {
  std::vector<Complex> coeffs;
  for (const auto& pr : report.at("polynomial")) {
    coeffs.emplace_back(pr.at(0).get<double>(), pr.at(1).get<double>());
  }
  double worst = 0.0;
  for (const auto& r : report.at("roots")) {
    const Complex z(r.at("re").get<double>(), r.at("im").get<double>());
    Complex acc = coeffs.back();
    for (std::size_t k = coeffs.size() - 1; k-- > 0;) {
      acc = acc * z + coeffs[k];
    }
    worst = std::max(worst, std::abs(acc));
  }
  report["residual_max"] = canon(worst);
}

void emit(const json& j, bool pretty) {
  std::cout << (pretty ? j.dump(2) : j.dump()) << "\n";
}

double parse_double_strict(const std::string& token) {
  std::size_t begin = token.find_first_not_of(" \t");
  std::size_t end = token.find_last_not_of(" \t");
  if (begin == std::string::npos) {
    throw std::invalid_argument("empty coefficient entry");
  }
  const char* first = token.data() + begin;
  const char* last = token.data() + end + 1;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
    throw std::invalid_argument("bad coefficient entry: '" + token + "'");
  }
  return value;
}

// Comma-separated ascending real coefficients, e.g. "-9,-6,0,1".
Polynomial parse_coeffs(const std::string& text) {
  std::vector<double> values;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string token = text.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    values.push_back(parse_double_strict(token));
    if (comma == std::string::npos) {
      break;
    }
    pos = comma + 1;
  }
  return Polynomial::from_real(values);
}

double report_tolerance() {
  double tol = 1e-8;
  if (const char* env = std::getenv("CARDANO_TOL")) {
    const std::string text(env);
    try {
      std::size_t used = 0;
      tol = std::stod(text, &used);
      if (used != text.size() || !(tol > 0.0) || !std::isfinite(tol)) {
        throw std::invalid_argument(text);
      }
    } catch (const std::exception&) {
      throw std::invalid_argument("CARDANO_TOL must be a positive number, got '" +
                                  text + "'");
    }
  }
  return tol;
}

int run_build(int n, double c, double d, bool pretty) {
  const CardanoParams params = CardanoParams::make(n, c, d);
  json report;
  report["params"] = params_json(params);
  report["polynomial"] = poly_json(cardano_polynomial(params));
  report["roots"] = json::array();
  finalize_residual(report);
  emit(report, pretty);
  return kOk;
}

int run_solve(const std::optional<std::string>& coeffs,
              const std::optional<int>& n, const std::optional<double>& c,
              const std::optional<double>& d, bool pretty) {
  const double tol = report_tolerance();
  Polynomial poly;
  std::optional<CardanoParams> params;
  RootSet roots;
  std::string method;

  if (coeffs.has_value()) {
    poly = parse_coeffs(*coeffs);
    params = cardano::recognize_cardano(poly, tol);
    if (params.has_value()) {
      roots = cardano::cardano_roots(*params);
      method = cardano::radical_pair(*params).form ==
                       cardano::RadicalForm::kConjugatePair
                   ? "trig"
                   : "radical";
    } else {
      roots = cardano::durand_kerner_roots(poly);
      method = "oracle";
    }
  } else {
    const CardanoParams p = CardanoParams::make(*n, *c, *d);
    params = p;
    poly = cardano_polynomial(p);
    roots = cardano::cardano_roots(p);
    method = cardano::radical_pair(p).form ==
                     cardano::RadicalForm::kConjugatePair
                 ? "trig"
                 : "radical";
  }

  json report;
  if (params.has_value()) {
    report["params"] = params_json(*params);
  }
  report["polynomial"] = poly_json(poly);
  report["roots"] = roots_json(roots);
  report["method"] = method;
  finalize_residual(report);
  emit(report, pretty);
  return kOk;
}

int run_recognize(const std::string& coeffs, bool pretty) {
  const double tol = report_tolerance();
  const Polynomial poly = parse_coeffs(coeffs);
  const auto params = cardano::recognize_cardano(poly, tol);
  if (!params.has_value()) {
    emit(json("not-cardano"), pretty);
    return kNotCardano;
  }
  emit(params_json(*params), pretty);
  return kOk;
}

int run_ferrari(const std::optional<double>& a, const std::optional<double>& b,
                const std::optional<double>& c, const std::optional<double>& a3,
                const std::optional<double>& a2, const std::optional<double>& a1,
                const std::optional<double>& a0, bool pretty) {
  cardano::QuarticSolution sol;
  Polynomial quartic;
  if (a.has_value()) {
    sol = cardano::solve_depressed_quartic(*a, *b, *c);
    quartic = cardano::poly_raw({Complex(*c, 0.0), Complex(*b, 0.0),
                                 Complex(*a, 0.0), Complex(0.0, 0.0),
                                 Complex(1.0, 0.0)});
  } else {
    sol = cardano::solve_quartic(*a3, *a2, *a1, *a0);
    quartic = cardano::poly_raw({Complex(*a0, 0.0), Complex(*a1, 0.0),
                                 Complex(*a2, 0.0), Complex(*a3, 0.0),
                                 Complex(1.0, 0.0)});
  }

  json report;
  report["polynomial"] = poly_json(quartic);
  json resolvent = json::array();
  for (Complex z : sol.resolvent.coeffs()) {
    resolvent.push_back(canon(z.real()));
  }
  report["resolvent"] = resolvent;
  report["roots"] = roots_json(sol.roots);
  report["method"] = "ferrari";
  finalize_residual(report);
  emit(report, pretty);
  return kOk;
}

int run_verify_op(int n, double c, double d, bool pretty) {
  const double tol = report_tolerance();
  const CardanoParams params = CardanoParams::make(n, c, d);
  const cardano::OperatorReport op = cardano::verify_cardano_identity(params);
  const double comm = cardano::commutation_residual(n);
  const RootSet recovered = cardano::fourier_root_recovery(params);
  const RootSet closed = cardano::cardano_roots(params);
  const cardano::RadicalPair pq = cardano::radical_pair(params);

  double max_abs = 0.0;
  for (Complex z : op.spectrum) {
    max_abs = std::max(max_abs, std::abs(z));
  }
  const double scale = std::pow(1.0 + max_abs, n);

  const bool ok_w = op.w_residual <= tol * scale;
  const bool ok_x = op.x_residual <= tol * scale;
  bool ok_row = op.first_row.has_value();
  if (ok_row) {
    const auto& row = *op.first_row;
    for (int j = 0; j < n; ++j) {
      Complex expected(0.0, 0.0);
      if (j == 1) {
        expected = pq.q;
      } else if (j == n - 1) {
        expected = pq.p;
      }
      if (std::abs(row[j] - expected) > 1e-10) {
        ok_row = false;
        break;
      }
    }
  }
  const bool ok_spectrum = cardano::root_multiset_equal(op.spectrum, closed, 1e-9);
  const bool ok_comm = comm <= 1e-12 * static_cast<double>(n);
  const bool ok_fourier = cardano::root_multiset_equal(recovered, closed, 1e-9);

  json report;
  report["params"] = params_json(params);
  report["polynomial"] = poly_json(cardano_polynomial(params));
  report["roots"] = roots_json(op.spectrum);
  report["method"] = "operator";
  report["w_residual"] = op.w_residual;
  report["x_residual"] = op.x_residual;
  report["commutation_residual"] = comm;
  if (op.first_row.has_value()) {
    json row = json::array();
    for (Complex z : *op.first_row) {
      row.push_back(pair_json(z));
    }
    report["circulant_first_row"] = row;
  }
  report["checks"] = json{{"annihilation_w", ok_w},
                          {"annihilation_x", ok_x},
                          {"circulant_row", ok_row},
                          {"spectrum_match", ok_spectrum},
                          {"commutation", ok_comm},
                          {"fourier_recovery", ok_fourier}};
  finalize_residual(report);
  emit(report, pretty);

  const bool all_ok =
      ok_w && ok_x && ok_row && ok_spectrum && ok_comm && ok_fourier;
  return all_ok ? kOk : kVerificationFailed;
}

int run_chebyshev(int n, const std::optional<double>& c,
                  const std::optional<double>& d, bool pretty) {
  if (c.has_value() != d.has_value()) {
    throw std::invalid_argument("--c and --d must be given together");
  }
  if (n < 1) {
    throw std::invalid_argument("order must be at least 1");
  }
  if (c.has_value()) {
    const auto seq = cardano::cardano_sequence(*c, *d, std::max(n, 3));
    const Polynomial& poly = seq[static_cast<std::size_t>(n) - 1];
    json arr = json::array();
    for (Complex z : poly.coeffs()) {
      arr.push_back(canon(z.real()));
    }
    emit(arr, pretty);
    return kOk;
  }
  const cardano::VietaLucasPoly v = cardano::vieta_lucas_closed(n);
  json arr = json::array();
  for (std::int64_t w : v.coeffs) {
    arr.push_back(w);
  }
  emit(arr, pretty);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Construct, solve, recognize and spectrally verify the two-parameter "
      "family of odd-degree radical-solvable polynomials"};
  app.require_subcommand(1);
  bool pretty = false;
  bool json_flag = false;
  app.add_flag("--pretty", pretty, "Pretty-print the JSON output");
  app.add_flag("--json", json_flag, "Emit compact JSON (the default)");

  auto* build = app.add_subcommand("build", "Construct a family member");
  int build_n = 0;
  double build_c = 0.0;
  double build_d = 0.0;
  build->add_option("--n", build_n, "Odd degree >= 3")->required();
  build->add_option("--c", build_c, "First parameter")->required();
  build->add_option("--d", build_d, "Second parameter")->required();

  auto* solve = app.add_subcommand(
      "solve", "Solve a polynomial (closed form when recognized)");
  std::string solve_coeffs;
  int solve_n = 0;
  double solve_c = 0.0;
  double solve_d = 0.0;
  auto* solve_coeffs_opt = solve->add_option(
      "--coeffs", solve_coeffs, "Ascending real coefficients, comma separated");
  auto* solve_n_opt = solve->add_option("--n", solve_n, "Odd degree >= 3");
  auto* solve_c_opt = solve->add_option("--c", solve_c, "First parameter");
  auto* solve_d_opt = solve->add_option("--d", solve_d, "Second parameter");

  auto* recognize = app.add_subcommand(
      "recognize", "Decide membership in the family and report parameters");
  std::string rec_coeffs;
  recognize
      ->add_option("--coeffs", rec_coeffs,
                   "Ascending real coefficients, comma separated")
      ->required();

  auto* ferrari = app.add_subcommand(
      "ferrari", "Solve a quartic through its resolvent cubic");
  double fa = 0.0, fb = 0.0, fc = 0.0;
  double fa3 = 0.0, fa2 = 0.0, fa1 = 0.0, fa0 = 0.0;
  auto* fa_opt = ferrari->add_option("--a", fa, "x^2 coefficient (depressed)");
  auto* fb_opt = ferrari->add_option("--b", fb, "x coefficient (depressed)");
  auto* fc_opt = ferrari->add_option("--c", fc, "constant (depressed)");
  auto* fa3_opt = ferrari->add_option("--a3", fa3, "x^3 coefficient");
  auto* fa2_opt = ferrari->add_option("--a2", fa2, "x^2 coefficient");
  auto* fa1_opt = ferrari->add_option("--a1", fa1, "x coefficient");
  auto* fa0_opt = ferrari->add_option("--a0", fa0, "constant");

  auto* verify = app.add_subcommand(
      "verify-op", "Check the operator identities for a parameter set");
  int ver_n = 0;
  double ver_c = 0.0;
  double ver_d = 0.0;
  verify->add_option("--n", ver_n, "Odd degree >= 3")->required();
  verify->add_option("--c", ver_c, "First parameter")->required();
  verify->add_option("--d", ver_d, "Second parameter")->required();

  auto* chebyshev = app.add_subcommand(
      "chebyshev", "Emit the order-n monic 2cos(nt) polynomial (or the family "
                   "member when --c/--d are given)");
  int che_n = 0;
  double che_c = 0.0;
  double che_d = 0.0;
  chebyshev->add_option("--n", che_n, "Order >= 1")->required();
  auto* che_c_opt = chebyshev->add_option("--c", che_c, "First parameter");
  auto* che_d_opt = chebyshev->add_option("--d", che_d, "Second parameter");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (build->parsed()) {
      return run_build(build_n, build_c, build_d, pretty);
    }
    if (solve->parsed()) {
      const bool has_coeffs = solve_coeffs_opt->count() > 0;
      const bool has_triplet = solve_n_opt->count() > 0 &&
                               solve_c_opt->count() > 0 &&
                               solve_d_opt->count() > 0;
      const bool has_any_param = solve_n_opt->count() > 0 ||
                                 solve_c_opt->count() > 0 ||
                                 solve_d_opt->count() > 0;
      if (has_coeffs == has_any_param || (has_any_param && !has_triplet)) {
        std::cerr << "solve needs either --coeffs or the full --n/--c/--d "
                     "triplet\n";
        return kUsage;
      }
      return run_solve(
          has_coeffs ? std::optional<std::string>(solve_coeffs) : std::nullopt,
          has_triplet ? std::optional<int>(solve_n) : std::nullopt,
          has_triplet ? std::optional<double>(solve_c) : std::nullopt,
          has_triplet ? std::optional<double>(solve_d) : std::nullopt, pretty);
    }
    if (recognize->parsed()) {
      return run_recognize(rec_coeffs, pretty);
    }
    if (ferrari->parsed()) {
      const bool dep = fa_opt->count() > 0 || fb_opt->count() > 0 ||
                       fc_opt->count() > 0;
      const bool gen = fa3_opt->count() > 0 || fa2_opt->count() > 0 ||
                       fa1_opt->count() > 0 || fa0_opt->count() > 0;
      if (dep == gen) {
        std::cerr << "ferrari needs either --a/--b/--c or --a3/--a2/--a1/--a0\n";
        return kUsage;
      }
      if (dep && (fa_opt->count() == 0 || fb_opt->count() == 0 ||
                  fc_opt->count() == 0)) {
        std::cerr << "ferrari depressed form needs all of --a, --b, --c\n";
        return kUsage;
      }
      if (gen && (fa3_opt->count() == 0 || fa2_opt->count() == 0 ||
                  fa1_opt->count() == 0 || fa0_opt->count() == 0)) {
        std::cerr << "ferrari general form needs all of --a3, --a2, --a1, --a0\n";
        return kUsage;
      }
      if (dep) {
        return run_ferrari(fa, fb, fc, std::nullopt, std::nullopt,
                           std::nullopt, std::nullopt, pretty);
      }
      return run_ferrari(std::nullopt, std::nullopt, std::nullopt, fa3, fa2,
                         fa1, fa0, pretty);
    }
    if (verify->parsed()) {
      return run_verify_op(ver_n, ver_c, ver_d, pretty);
    }
    if (chebyshev->parsed()) {
      return run_chebyshev(
          che_n,
          che_c_opt->count() > 0 ? std::optional<double>(che_c) : std::nullopt,
          che_d_opt->count() > 0 ? std::optional<double>(che_d) : std::nullopt,
          pretty);
    }
    std::cerr << "no subcommand given\n";
    return kUsage;
  } catch (const cardano::NonConvergenceError& e) {
    std::cerr << "non-convergence: " << e.what() << "\n";
    return kNonConvergence;
  } catch (const cardano::InconsistentInputError& e) {
    std::cerr << "inconsistent input: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
