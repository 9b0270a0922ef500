// padiclab: command-line front-end for the p-adic spectral analysis library.
//
// Exit codes: 0 success, 1 invariant or requested-value failure, 2
// configuration error.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <padiclab/serialization.hpp>
#include <padiclab/verify.hpp>

namespace {

using namespace padiclab;

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

int print_reports(const std::vector<RunReport>& reports) {
  std::size_t total = 0, passed = 0;
  for (const auto& rep : reports) {
    std::printf("[suite %s]\n", rep.suite.c_str());
    for (const auto& c : rep.checks) {
      ++total;
      if (c.pass) ++passed;
      std::printf("[%s] %s defect=%s tol=%s (%.3fs)\n", c.pass ? "PASS" : "FAIL",
                  c.name.c_str(), fmt17(c.defect).c_str(), fmt17(c.tol).c_str(), c.seconds);
    }
  }
  std::printf("SUMMARY: %zu/%zu checks passed\n", passed, total);
  return passed == total ? 0 : 1;
}

int cmd_verify(const std::string& suite, std::uint64_t p, double alpha, double tol,
               std::uint64_t seed) {
  return print_reports(run_suites(suite, p, alpha, tol, seed));
}

int cmd_green_table(std::uint64_t p, double alpha, const std::string& point, long lo, long hi,
                    double tol, const std::string& out, bool include_diagonal) {
  PadicRational xk = PadicRational::parse(p, point);
  (void)xk;  // the radial profile is anchor-independent; parsing validates the input
  if (!(alpha > 0.5)) {
    std::fprintf(stderr, "no L2 solution for alpha <= 1/2\n");
    return 1;
  }
  if (lo > hi) {
    std::fprintf(stderr, "empty gamma range\n");
    return 2;
  }
  std::ofstream os(out);
  if (!os) {
    std::fprintf(stderr, "cannot open output file '%s'\n", out.c_str());
    return 2;
  }
  os << "gamma0,radius,h_value,tail_bound\n";
  for (long g = lo; g <= hi; ++g) {
    SeriesValue v = radial_green_value(p, alpha, g, tol);
    os << g << ',' << fmt17(std::pow(static_cast<double>(p), static_cast<double>(g))) << ','
       << fmt17(v.value) << ',' << fmt17(v.bound) << '\n';
  }
  if (include_diagonal) {
    if (!(alpha > 1.0)) {
      std::fprintf(stderr, "diagonal value requested but the series diverges for alpha <= 1\n");
      return 1;
    }
    SeriesValue d = green_diagonal_value(p, alpha, tol);
    os << "diagonal,0," << fmt17(d.value) << ',' << fmt17(d.bound) << '\n';
  }
  return 0;
}

int cmd_classify(const std::string& config_path, double tol, const std::string& out) {
  std::ifstream is(config_path);
  if (!is) {
    std::fprintf(stderr, "cannot open config '%s'\n", config_path.c_str());
    return 2;
  }
  InteractionConfig cfg = interaction_config_from_json(Json::parse(is));

  RMatrix R = build_r_matrix(cfg, tol);
  OrderedJson report;
  report["self_adjoint"] = is_self_adjoint(cfg);
  if (cfg.eta_matrix()) {
    EtaClassification cls = is_eta_self_adjoint(cfg, R);  // throws on singular Y
    report["eta_self_adjoint"] = cls.eta_self_adjoint;
    report["RY_hermitian"] =
        cls.ry_hermitian ? OrderedJson(*cls.ry_hermitian) : OrderedJson(nullptr);
    EtaTransformReport trans = eta_transform_check(cfg, R);
    report["diagnostics"] = OrderedJson{{"yb_hermitian", cls.yb_hermitian},
                                        {"yb_defect", cls.yb_defect},
                                        {"ry_defect", cls.ry_defect},
                                        {"boundary_transform_defect",
                                         trans.gamma0_identity_defect},
                                        {"failure", cls.failure}};
  } else {
    report["eta_self_adjoint"] = nullptr;
    report["RY_hermitian"] = nullptr;
    report["diagnostics"] =
        OrderedJson{{"coupling_hermitian_defect", cfg.coupling().hermitian_defect()}};
  }
  report["R"] = OrderedJson(matrix_to_json(R.values));
  std::string text = report.dump(2);
  std::printf("%s\n", text.c_str());
  if (!out.empty()) {
    std::ofstream os(out);
    if (!os) {
      std::fprintf(stderr, "cannot open output file '%s'\n", out.c_str());
      return 2;
    }
    os << text << '\n';
  }
  return 0;
}

int cmd_counterexample(std::uint64_t p, long n_max, const std::string& out) {
  if (n_max < 1) {
    std::fprintf(stderr, "n-max must be >= 1\n");
    return 2;
  }
  std::ofstream os(out);
  if (!os) {
    std::fprintf(stderr, "cannot open output file '%s'\n", out.c_str());
    return 2;
  }
  ContinuityCounterexample f(p);
  os << "n,series_re,series_im,formula_re,formula_im\n";
  double worst = 0;
  for (long n = 1; n <= n_max; ++n) {
    Complex series = f.series_value(n);
    Complex formula = f.closed_value(n);
    worst = std::max(worst, std::abs(series - formula));
    os << n << ',' << fmt17(series.real()) << ',' << fmt17(series.imag()) << ','
       << fmt17(formula.real()) << ',' << fmt17(formula.imag()) << '\n';
  }
  if (worst > 1e-12) {
    std::fprintf(stderr, "series and closed formula disagree: %s\n", fmt17(worst).c_str());
    return 1;
  }
  return 0;
}

int cmd_friedrichs_check(const std::string& config_path, double tol) {
  std::ifstream is(config_path);
  if (!is) {
    std::fprintf(stderr, "cannot open config '%s'\n", config_path.c_str());
    return 2;
  }
  InteractionConfig cfg = interaction_config_from_json(Json::parse(is));
  RMatrix R = build_r_matrix(cfg, tol);
  std::size_t n = cfg.size();
  bool low = cfg.low_regime();

  std::vector<Complex> zeros(n, Complex{0, 0});
  std::vector<Complex> ones(n, Complex{1, 0});
  std::vector<Complex> minus_ones(n, Complex{-1, 0});

  OrderedJson probes = OrderedJson::array();
  bool all_match = true;
  auto record = [&](const std::string& name, const DomainElement& f, bool expected) {
    bool got = friedrichs_domain_check(f, cfg, R, tol);
    all_match = all_match && (got == expected);
    probes.push_back(
        OrderedJson{{"probe", name}, {"in_domain", got}, {"expected", expected}});
  };

  // regular element with unit point values: admissible only in the low regime
  record("regular_nonvanishing", element_with_boundary(ones, zeros, cfg, R), low);
  // defect element with vanishing extended values: admissible only above one
  record("defect_vanishing_values", element_with_boundary(zeros, minus_ones, cfg, R), !low);
  // same element with one point value knocked off
  DomainElement perturbed = element_with_boundary(zeros, minus_ones, cfg, R);
  perturbed.regular.add(
      WaveletIndex(cfg.prime(), -6, 1, WaveletIndex::coset_of(cfg.prime(), -6, cfg.points()[0])),
      Complex{0.3, 0.0});
  record("defect_perturbed_value", perturbed, false);

  OrderedJson report{{"alpha", cfg.alpha()},
                     {"regime", low ? "low" : "high"},
                     {"probes", probes},
                     {"pass", all_match}};
  std::printf("%s\n", report.dump(2).c_str());
  return all_match ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"p-adic spectral analysis toolkit"};
  app.require_subcommand(1);

  std::uint64_t p = 2;
  double alpha = 1.5;
  double tol = 1e-10;
  std::uint64_t seed = 7;
  std::string suite = "all";
  std::string point = "0";
  std::string config_path;
  std::string out_path;
  long gamma_lo = -5, gamma_hi = 5;
  long n_max = 10;
  bool diagonal = false;

  auto* verify = app.add_subcommand("verify", "run a module's seeded invariant suite");
  verify->add_option("suite", suite, "core|schwartz|wavelets|vladimirov|green|realization|all");
  verify->add_option("--p", p, "prime");
  verify->add_option("--alpha", alpha, "differentiation exponent");
  verify->add_option("--tol", tol, "tolerance");
  verify->add_option("--seed", seed, "RNG seed");

  auto* table = app.add_subcommand("green-table", "emit radial solution values as CSV");
  table->add_option("--p", p, "prime");
  table->add_option("--alpha", alpha, "differentiation exponent")->required();
  table->add_option("--point", point, "anchor point (rational string)");
  table->add_option("--gamma-lo", gamma_lo, "lowest shell exponent");
  table->add_option("--gamma-hi", gamma_hi, "highest shell exponent");
  table->add_option("--tol", tol, "tail tolerance");
  table->add_option("--out", out_path, "output CSV path")->required();
  table->add_flag("--diagonal", diagonal, "append the on-point value (alpha > 1 only)");

  auto* classify = app.add_subcommand("classify", "classify an interaction configuration");
  classify->add_option("--config", config_path, "config JSON path")->required();
  classify->add_option("--tol", tol, "evaluation tolerance");
  classify->add_option("--out", out_path, "optional JSON report path");

  auto* cex = app.add_subcommand("counterexample",
                                 "tabulate the discontinuous domain element along p^n");
  cex->add_option("--p", p, "prime");
  cex->add_option("--n-max", n_max, "largest n");
  cex->add_option("--out", out_path, "output CSV path")->required();

  auto* fried = app.add_subcommand("friedrichs-check",
                                   "probe the Friedrichs domain predicate for a configuration");
  fried->add_option("--config", config_path, "config JSON path")->required();
  fried->add_option("--tol", tol, "tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") return app.exit(e);
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (verify->parsed()) return cmd_verify(suite, p, alpha, tol, seed);
    if (table->parsed())
      return cmd_green_table(p, alpha, point, gamma_lo, gamma_hi, tol, out_path, diagonal);
    if (classify->parsed()) return cmd_classify(config_path, tol, out_path);
    if (cex->parsed()) return cmd_counterexample(p, n_max, out_path);
    if (fried->parsed()) return cmd_friedrichs_check(config_path, tol);
  } catch (const SingularMatrixError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const NotInL2Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const DiagonalDivergenceError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const Json::parse_error& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}
