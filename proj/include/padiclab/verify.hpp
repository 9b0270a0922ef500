#pragma once

#include <chrono>
#include <functional>
#include <string>
#include <vector>

#include "padiclab/realization.hpp"
#include "padiclab/rng.hpp"

namespace padiclab {

// ---------------------------------------------------------------------------
// Seeded invariant suites, one per module, shared by the CLI and usable as a
// smoke check from client code. Every check reports its measured defect, the
// tolerance it was held to, and its runtime; a suite passes when every check
// does.
// ---------------------------------------------------------------------------

struct CheckResult {
  std::string name;
  bool pass;
  double defect;
  double tol;
  double seconds;
};

struct RunReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

namespace verify_detail {

class Suite {
 public:
  explicit Suite(std::string name) { report_.suite = std::move(name); }

  /// Runs body() -> defect and records pass = defect <= tol.
  void check(const std::string& name, double tol, const std::function<double()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    double defect;
    bool pass;
    try {
      defect = body();
      pass = defect <= tol;
    } catch (const std::exception&) {
      defect = std::numeric_limits<double>::infinity();
      pass = false;
    }
    auto t1 = std::chrono::steady_clock::now();
    report_.checks.push_back(
        {name, pass, defect, tol, std::chrono::duration<double>(t1 - t0).count()});
  }

  /// Boolean check: defect 1 on failure or on an unexpected throw.
  void expect(const std::string& name, const std::function<bool()>& body) {
    check(name, 0.0, [&]() { return body() ? 0.0 : 1.0; });
  }

  RunReport take() { return std::move(report_); }

 private:
  RunReport report_;
};

inline TestFunction random_test_function(SplitMix64& rng, std::uint64_t p, int max_terms = 4) {
  TestFunction f(p);
  int n = static_cast<int>(rng.uniform_int(1, max_terms));
  for (int i = 0; i < n; ++i)
    f.add_term(Ball(p, rng.rational(), static_cast<long>(rng.uniform_int(-3, 3))),
               rng.complex_unit_box());
  return f.canonicalize();
}

inline WaveletExpansion random_expansion(SplitMix64& rng, std::uint64_t p, int max_terms = 6) {
  WaveletExpansion e(p);
  int n = static_cast<int>(rng.uniform_int(1, max_terms));
  for (int i = 0; i < n; ++i) {
    long N = static_cast<long>(rng.uniform_int(-3, 3));
    long j = static_cast<long>(rng.uniform_int(1, static_cast<std::int64_t>(p - 1)));
    PadicRational y(p, rng.rational());
    e.add(WaveletIndex(p, N, j, WaveletIndex::coset_of(p, N, y)), rng.complex_unit_box());
  }
  return e;
}

inline std::vector<PadicRational> random_points(SplitMix64& rng, std::uint64_t p, std::size_t n) {
  std::vector<PadicRational> pts;
  while (pts.size() < n) {
    PadicRational cand(p, rng.rational());
    bool dup = false;
    for (const auto& q : pts)
      if ((q - cand).is_zero()) dup = true;
    if (!dup) pts.push_back(cand);
  }
  return pts;
}

inline ComplexMatrix random_matrix(SplitMix64& rng, std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.complex_unit_box();
  return m;
}

inline ComplexMatrix random_hermitian(SplitMix64& rng, std::size_t n) {
  ComplexMatrix m = random_matrix(rng, n);
  ComplexMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
  return h;
}

}  // namespace verify_detail

inline RunReport run_core_suite(std::uint64_t p, double tol, std::uint64_t seed) {
  verify_detail::Suite s("core");
  SplitMix64 rng(seed);

  s.expect("ultrametric inequality with sharp unequal-norm case", [&] {
    for (int i = 0; i < 300; ++i) {
      PadicRational x(p, rng.rational()), y(p, rng.rational());
      Rational lhs = (x + y).norm();
      Rational mx = std::max(x.norm(), y.norm());
      if (lhs > mx) return false;
      if (x.norm() != y.norm() && lhs != mx) return false;
    }
    return true;
  });

  s.expect("x minus its fractional part is a p-adic integer", [&] {
    for (int i = 0; i < 300; ++i) {
      PadicRational x(p, rng.rational());
      auto v = PadicRational(p, x.value() - x.fractional_part()).valuation();
      if (v && *v < 0) return false;
    }
    return true;
  });

  s.expect("character is additive", [&] {
    for (int i = 0; i < 300; ++i) {
      PadicRational x(p, rng.rational()), y(p, rng.rational());
      if (!((x + y).character() == x.character() * y.character())) return false;
    }
    return true;
  });

  s.expect("balls split into p children of equal measure", [&] {
    for (int i = 0; i < 50; ++i) {
      Ball b(p, rng.rational(), static_cast<long>(rng.uniform_int(-3, 3)));
      auto kids = b.children();
      if (kids.size() != p) return false;
      Rational total(0);
      for (std::size_t a = 0; a < kids.size(); ++a) {
        total += kids[a].measure();
        if (ball_relation(kids[a], b) != BallRelation::FirstInsideSecond) return false;
        for (std::size_t c = a + 1; c < kids.size(); ++c)
          if (ball_relation(kids[a], kids[c]) != BallRelation::Disjoint) return false;
      }
      if (total != b.measure()) return false;
    }
    return true;
  });

  (void)tol;
  return s.take();
}

inline RunReport run_schwartz_suite(std::uint64_t p, double tol, std::uint64_t seed) {
  verify_detail::Suite s("schwartz");
  SplitMix64 rng(seed);

  s.check("canonical form preserves pointwise values", tol, [&] {
    double defect = 0;
    for (int rep = 0; rep < 8; ++rep) {
      TestFunction raw(p);
      for (int i = 0; i < 5; ++i)
        raw.add_term(Ball(p, rng.rational(), static_cast<long>(rng.uniform_int(-3, 3))),
                     rng.complex_unit_box());
      TestFunction canon = raw.canonicalize();
      for (int i = 0; i < 100; ++i) {
        PadicRational x(p, rng.rational());
        defect = std::max(defect, std::abs(raw.evaluate(x) - canon.evaluate(x)));
      }
    }
    return defect;
  });

  s.check("fourier twice reflects", tol, [&] {
    double defect = 0;
    for (int rep = 0; rep < 5; ++rep) {
      TestFunction f = verify_detail::random_test_function(rng, p);
      TestFunction ff = f.fourier().fourier();
      for (int i = 0; i < 20; ++i) {
        PadicRational x(p, rng.rational());
        defect = std::max(defect, std::abs(ff.evaluate(x) - f.evaluate(-x)));
      }
    }
    return defect;
  });

  s.check("Parseval identity", tol, [&] {
    double defect = 0;
    for (int rep = 0; rep < 5; ++rep) {
      TestFunction f = verify_detail::random_test_function(rng, p);
      TestFunction g = verify_detail::random_test_function(rng, p);
      defect = std::max(defect,
                        std::abs(f.inner_product(g) - f.fourier().inner_product(g.fourier())));
    }
    return defect;
  });

  s.check("integral of the transform is the value at zero", tol, [&] {
    double defect = 0;
    for (int rep = 0; rep < 5; ++rep) {
      TestFunction f = verify_detail::random_test_function(rng, p);
      defect = std::max(defect,
                        std::abs(f.fourier().integrate() - f.evaluate(PadicRational(p, 0))));
    }
    return defect;
  });

  s.expect("support and constancy exponents swap on single balls", [&] {
    for (int rep = 0; rep < 20; ++rep) {
      Ball b(p, rng.rational(), static_cast<long>(rng.uniform_int(-3, 3)));
      TestFunction f = TestFunction::indicator(b);
      TestFunction g = f.fourier();
      if (*g.constancy_exponent() != -*f.support_exponent()) return false;
      if (*g.support_exponent() != -*f.constancy_exponent()) return false;
    }
    return true;
  });

  return s.take();
}

inline RunReport run_wavelets_suite(std::uint64_t p, double tol, std::uint64_t seed) {
  verify_detail::Suite s("wavelets");
  SplitMix64 rng(seed);

  s.check("gram matrix on a window equals the identity", tol, [&] {
    double defect = 0;
    std::vector<WaveletIndex> idx;
    for (long N = -2; N <= 2; ++N) {
      long count = (N >= 2) ? 1 : static_cast<long>(integer_pow(p, 2 - N).get_si());
      for (long k = 0; k < count; ++k) {
        PadicRational y(p, Rational(k) * rational_pow(p, -2));
        for (long j = 1; static_cast<std::uint64_t>(j) < p; ++j)
          idx.emplace_back(p, N, j, WaveletIndex::coset_of(p, N, y));
      }
    }
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t k = i; k < idx.size(); ++k) {
        if (ball_relation(idx[i].support(), idx[k].support()) == BallRelation::Disjoint) continue;
        PhaseSum exact = wavelet_pair_inner_unscaled(idx[i], idx[k]);
        double scale = std::pow(static_cast<double>(p),
                                -0.5 * static_cast<double>(idx[i].level() + idx[k].level()));
        Complex entry = scale * exact.to_complex();
        Complex want = (i == k) ? Complex{1, 0} : Complex{0, 0};
        defect = std::max(defect, std::abs(entry - want));
        if (i != k && !exact.is_zero()) return 1.0;
      }
    return defect;
  });

  s.expect("support law matches the evaluation", [&] {
    for (int rep = 0; rep < 40; ++rep) {
      long N = static_cast<long>(rng.uniform_int(-3, 3));
      long j = static_cast<long>(rng.uniform_int(1, static_cast<std::int64_t>(p - 1)));
      PadicRational y(p, rng.rational());
      WaveletIndex idx(p, N, j, WaveletIndex::coset_of(p, N, y));
      PadicRational x(p, rng.rational());
      bool inside = idx.support().contains(x);
      if ((wavelet_eval(idx, x) != Complex{0.0, 0.0}) != inside) return false;
    }
    return true;
  });

  s.check("Parseval tail accounting", 10 * tol, [&] {
    double defect = 0;
    for (int rep = 0; rep < 4; ++rep) {
      TestFunction f = verify_detail::random_test_function(rng, p, 3);
      WaveletExpansion e = expand_test_function(f, *f.constancy_exponent() + 1, 8);
      double total = f.inner_product(f).real();
      defect = std::max(defect, std::abs(total - (e.norm_sq() + e.l2_tail() * e.l2_tail())));
    }
    return defect;
  });

  s.expect("point evaluation stays within the sup bound", [&] {
    for (int rep = 0; rep < 4; ++rep) {
      TestFunction f = verify_detail::random_test_function(rng, p, 3);
      WaveletExpansion e = expand_test_function(f, *f.constancy_exponent() + 1, 8);
      for (int i = 0; i < 10; ++i) {
        PadicRational x(p, rng.rational());
        PointValue v = e.point_eval(x);
        if (std::abs(v.value - f.evaluate(x)) > v.bound + 1e-10) return false;
      }
    }
    return true;
  });

  return s.take();
}

inline RunReport run_vladimirov_suite(std::uint64_t p, double alpha, double tol,
                                      std::uint64_t seed) {
  verify_detail::Suite s("vladimirov");
  SplitMix64 rng(seed);

  s.check("eigenrelation between the point oracle and the wavelet route", 1e-9, [&] {
    double defect = 0;
    for (long N : {-1L, 0L, 1L, 2L}) {
      PadicRational y(p, rng.rational());
      WaveletIndex idx(p, N, 1, WaveletIndex::coset_of(p, N, y));
      TestFunction psi = wavelet_test_function(idx);
      double lam = std::pow(static_cast<double>(p), alpha * (1.0 - static_cast<double>(N)));
      for (int i = 0; i < 10; ++i) {
        PadicRational x(p, rng.rational());
        Complex got = dalpha_point_oracle(psi, alpha, x);
        Complex want = lam * wavelet_eval(idx, x);
        defect = std::max(defect, std::abs(got - want) / (1.0 + std::abs(want)));
      }
    }
    return defect;
  });

  s.check("semigroup composition", 1e-12, [&] {
    double defect = 0;
    for (int rep = 0; rep < 20; ++rep) {
      WaveletExpansion e = verify_detail::random_expansion(rng, p);
      double a1 = rng.uniform(0.1, 2.0), a2 = rng.uniform(0.1, 2.0);
      WaveletExpansion lhs =
          apply_spectral(SpectralMultiplier(a2), apply_spectral(SpectralMultiplier(a1), e));
      WaveletExpansion rhs = apply_spectral(SpectralMultiplier(a1 + a2), e);
      auto it = rhs.coeffs().begin();
      for (const auto& [idx, c] : lhs.coeffs()) {
        defect = std::max(defect, std::abs(c - it->second) / (1.0 + std::abs(it->second)));
        ++it;
      }
    }
    return defect;
  });

  s.expect("quadratic form is nonnegative", [&] {
    for (int rep = 0; rep < 20; ++rep) {
      WaveletExpansion e = verify_detail::random_expansion(rng, p);
      Complex q = expansion_inner(apply_spectral(SpectralMultiplier(alpha), e), e);
      double slack = 1e-12 * (1.0 + std::abs(q));
      if (q.real() < -slack || std::abs(q.imag()) > slack) return false;
    }
    return true;
  });

  s.check("counterexample: series route equals the closed form", 1e-12, [&] {
    ContinuityCounterexample f(p);
    double defect = 0;
    for (long n = 1; n <= 30; ++n)
      defect = std::max(defect, std::abs(f.series_value(n) - f.closed_value(n)));
    return defect;
  });

  s.expect("membership threshold: bounded below 1/2, divergent above", [&] {
    ContinuityCounterexample f(p);
    auto low = f.membership_partial(0.4, -400);
    if (!(low.back() - low[low.size() / 2] < 1e-6 * low.back())) return false;
    auto high = f.membership_partial(0.75, -60);
    return high.back() > 1e3;
  });

  (void)tol;
  return s.take();
}

inline RunReport run_green_suite(std::uint64_t p, double alpha, double tol, std::uint64_t seed) {
  verify_detail::Suite s("green");
  SplitMix64 rng(seed);

  if (alpha <= 0.5) {
    s.expect("solutions are rejected at or below the threshold", [&] {
      try {
        GreenFunction g(p, alpha, PadicRational(p, 0));
        return false;
      } catch (const NotInL2Error&) {
      }
      try {
        radial_green_value(p, alpha, 0, 1e-9);
        return false;
      } catch (const NotInL2Error&) {
      }
      return true;
    });
    s.expect("coefficient-norm series diverges", [&] {
      auto partial = green_norm_sq_partial(p, alpha, -300);
      return partial.back() > 1e3;
    });
    return s.take();
  }

  s.expect("coefficient term bound p^{-N}", [&] {
    GreenFunction g(p, alpha, PadicRational(p, rng.rational()));
    for (int rep = 0; rep < 60; ++rep) {
      long N = static_cast<long>(rng.uniform_int(-6, 6));
      long j = static_cast<long>(rng.uniform_int(1, static_cast<std::int64_t>(p - 1)));
      WaveletIndex idx(p, N, j, g.level_coset(N));
      double term = std::abs(g.coefficient(idx)) * idx.scale();
      if (term > std::pow(static_cast<double>(p), -static_cast<double>(N)) * (1 + 1e-14))
        return false;
    }
    return true;
  });

  s.check("direct series equals the radial closed form", 1e-8, [&] {
    double defect = 0;
    for (int rep = 0; rep < 12; ++rep) {
      PadicRational xk(p, rng.rational());
      PadicRational x(p, rng.rational());
      if ((x - xk).is_zero()) continue;
      GreenFunction g(p, alpha, xk);
      SeriesValue direct = g.eval(x, 1e-9);
      SeriesValue radial = g.radial(-*(x - xk).valuation(), 1e-9);
      defect = std::max(defect, std::abs(direct.value - radial.value));
    }
    return defect;
  });

  s.check("values depend on the distance only", 1e-11, [&] {
    GreenFunction g(p, alpha, PadicRational(p, rng.rational()));
    double defect = 0;
    for (long gamma0 : {-2L, 0L, 3L}) {
      Rational shift = rational_pow(p, -gamma0);
      PadicRational a(p, g.anchor().value() + shift);
      PadicRational b(p, g.anchor().value() + shift * Rational(static_cast<long>(p) + 1));
      defect = std::max(defect, std::abs(g.eval(a, 1e-12).value - g.eval(b, 1e-12).value));
    }
    return defect;
  });

  s.check("weak identity against the unit ball", 1e-10, [&] {
    double defect = 0;
    for (const Rational& xk : {Rational(0), Rational(1), Rational(1, static_cast<long>(p))}) {
      GreenFunction g(p, alpha, PadicRational(p, xk));
      WeakResidual r = weak_residual(g, TestFunction::omega(p), 1e-11);
      defect = std::max(defect, r.residual);
    }
    return defect;
  });

  s.check("weak identity, exact route", 1e-12, [&] {
    double defect = 0;
    for (int rep = 0; rep < 10; ++rep) {
      GreenFunction g(p, alpha, PadicRational(p, rng.rational()));
      WeakResidual r = weak_residual(g, verify_detail::random_expansion(rng, p));
      defect = std::max(defect, r.residual);
    }
    return defect;
  });

  s.expect("diagonal behaviour matches the regime", [&] {
    if (alpha > 1.0) {
      SeriesValue d = green_diagonal_value(p, alpha, 1e-10);
      GreenFunction g1(p, alpha, PadicRational(p, 0));
      GreenFunction g2(p, alpha, PadicRational(p, rng.nonzero_rational()));
      double v1 = g1.eval(g1.anchor(), 1e-10).value;
      double v2 = g2.eval(g2.anchor(), 1e-10).value;
      return std::abs(v1 - d.value) <= 2e-10 && v1 == v2;
    }
    try {
      green_diagonal_value(p, alpha, 1e-10);
      return false;
    } catch (const DiagonalDivergenceError&) {
      return true;
    }
  });

  s.expect("half-power membership dichotomy", [&] {
    GreenFunction g(p, alpha, PadicRational(p, 0));
    MembershipSums m = half_power_membership(g, -120);
    if (alpha > 1.0) {
      return m.lower.back() - m.lower[m.lower.size() - 2] < 1e-10 &&
             std::isfinite(m.lower.back());
    }
    return m.lower.back() > 1e3;
  });

  (void)tol;
  return s.take();
}

inline RunReport run_realization_suite(std::uint64_t p, double alpha, double tol,
                                       std::uint64_t seed) {
  verify_detail::Suite s("realization");
  SplitMix64 rng(seed);
  if (alpha <= 0.5) {
    s.expect("configs are rejected at or below the threshold", [&] {
      try {
        InteractionConfig cfg(p, alpha, verify_detail::random_points(rng, p, 2),
                              ComplexMatrix::identity(2));
        return false;
      } catch (const NotInL2Error&) {
        return true;
      }
    });
    return s.take();
  }

  auto make_cfg = [&](std::size_t n, ComplexMatrix B,
                      std::optional<ComplexMatrix> Y = std::nullopt) {
    return InteractionConfig(p, alpha, verify_detail::random_points(rng, p, n), std::move(B), 0.0,
                             std::move(Y));
  };

  s.check("abstract Green identity on random pairs", 1e-10, [&] {
    double defect = 0;
    for (std::size_t n : {1u, 2u, 3u}) {
      InteractionConfig cfg = make_cfg(n, verify_detail::random_hermitian(rng, n));
      RMatrix R = build_r_matrix(cfg);
      for (int rep = 0; rep < 5; ++rep) {
        DomainElement f{verify_detail::random_expansion(rng, p), {}};
        DomainElement g{verify_detail::random_expansion(rng, p), {}};
        f.defect.resize(n);
        g.defect.resize(n);
        for (auto& z : f.defect) z = rng.complex_unit_box();
        for (auto& z : g.defect) z = rng.complex_unit_box();
        defect = std::max(defect, green_identity_defect(f, g, cfg, R));
      }
    }
    return defect;
  });

  s.check("boundary surjectivity round trip", 1e-10, [&] {
    double defect = 0;
    for (std::size_t n : {1u, 2u, 3u}) {
      InteractionConfig cfg = make_cfg(n, verify_detail::random_hermitian(rng, n));
      RMatrix R = build_r_matrix(cfg);
      std::vector<Complex> a(n), b(n);
      for (std::size_t k = 0; k < n; ++k) {
        a[k] = rng.complex_unit_box();
        b[k] = rng.complex_unit_box();
      }
      DomainElement f = element_with_boundary(a, b, cfg, R);
      BoundaryData bd = gamma_maps(f, cfg, R);
      for (std::size_t k = 0; k < n; ++k) {
        defect = std::max(defect, std::abs(bd.gamma0[k] - a[k]));
        defect = std::max(defect, std::abs(bd.gamma1[k] - b[k]));
      }
    }
    return defect;
  });

  s.expect("symmetry transfers exactly for Hermitian couplings", [&] {
    for (int rep = 0; rep < 5; ++rep) {
      InteractionConfig cfg = make_cfg(2, verify_detail::random_hermitian(rng, 2));
      RMatrix R = build_r_matrix(cfg);
      std::vector<Complex> c{rng.complex_unit_box(), rng.complex_unit_box()};
      std::vector<Complex> d{rng.complex_unit_box(), rng.complex_unit_box()};
      DomainElement f = construct_domain_element(c, cfg, R);
      DomainElement g = construct_domain_element(d, cfg, R);
      if (green_identity_defect(f, g, cfg, R) > 1e-9) return false;
      if (!is_self_adjoint(cfg)) return false;
    }
    // a non-Hermitian coupling must produce a witness pair
    ComplexMatrix B(2, 2);
    B(0, 1) = {1.0, 0.0};
    InteractionConfig bad = make_cfg(2, B);
    RMatrix Rb = build_r_matrix(bad);
    std::vector<Complex> e1{Complex{0, 0}, Complex{1, 0}};
    std::vector<Complex> g1 = bad.coupling() * e1;
    DomainElement fw = element_with_boundary(e1, g1, bad, Rb);
    std::vector<Complex> e0{Complex{1, 0}, Complex{0, 0}};
    std::vector<Complex> g0 = bad.coupling() * e0;
    DomainElement gw = element_with_boundary(e0, g0, bad, Rb);
    BoundaryData bf = gamma_maps(fw, bad, Rb);
    BoundaryData bg = gamma_maps(gw, bad, Rb);
    Complex boundary{0, 0};
    for (std::size_t k = 0; k < 2; ++k)
      boundary += bf.gamma1[k] * std::conj(bg.gamma0[k]) - bf.gamma0[k] * std::conj(bg.gamma1[k]);
    return std::abs(boundary) > 10 * 1e-10 && !is_self_adjoint(bad);
  });

  s.expect("adjoint flips the defect part", [&] {
    InteractionConfig cfg = make_cfg(2, verify_detail::random_hermitian(rng, 2));
    DomainElement f{WaveletExpansion(p), {Complex{1, 2}, Complex{-3, 0.5}}};
    DomainElement af = adjoint_apply(f, cfg);
    return af.defect[0] == Complex{-1, -2} && af.defect[1] == Complex{3, -0.5} &&
           af.regular.empty();
  });

  s.expect("eta boundary transformation law", [&] {
    InteractionConfig cfg = make_cfg(2, verify_detail::random_hermitian(rng, 2),
                                     ComplexMatrix::identity(2));
    RMatrix R = build_r_matrix(cfg);
    EtaTransformReport rep = eta_transform_check(cfg, R);
    if (!rep.identities_hold || !rep.ry_commutes) return false;
    // a diagonal Y with distinct entries must be flagged whenever the
    // off-diagonal entries of R are visible
    ComplexMatrix Y(2, 2);
    Y(0, 0) = {1, 0};
    Y(1, 1) = {2, 0};
    InteractionConfig cfg2(p, alpha, cfg.points(), cfg.coupling(), 0.0, Y);
    RMatrix R2 = build_r_matrix(cfg2);
    EtaTransformReport rep2 = eta_transform_check(cfg2, R2);
    if (std::abs(R2.values(0, 1)) > 1e-9) return !rep2.ry_commutes;
    return true;
  });

  (void)tol;
  return s.take();
}

inline std::vector<RunReport> run_suites(const std::string& which, std::uint64_t p, double alpha,
                                         double tol, std::uint64_t seed) {
  std::vector<RunReport> out;
  auto want = [&](const char* name) { return which == "all" || which == name; };
  if (want("core")) out.push_back(run_core_suite(p, tol, seed));
  if (want("schwartz")) out.push_back(run_schwartz_suite(p, tol, seed));
  if (want("wavelets")) out.push_back(run_wavelets_suite(p, tol, seed));
  if (want("vladimirov")) out.push_back(run_vladimirov_suite(p, alpha, tol, seed));
  if (want("green")) out.push_back(run_green_suite(p, alpha, tol, seed));
  if (want("realization")) out.push_back(run_realization_suite(p, alpha, tol, seed));
  if (out.empty()) throw std::invalid_argument("unknown suite: " + which);
  return out;
}

}  // namespace padiclab
