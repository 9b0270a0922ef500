#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <padiclab/realization.hpp>

#include "support.hpp"
#include "support_functions.hpp"

using namespace padiclab;

namespace {

std::vector<PadicRational> make_points(std::uint64_t p, std::initializer_list<Rational> vals) {
  std::vector<PadicRational> out;
  for (const auto& v : vals) out.emplace_back(p, v);
  return out;
}

ComplexMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
  ComplexMatrix m(2, 2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

ComplexMatrix random_matrix(test_support::SplitMix64& rng, std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.complex_unit_box();
  return m;
}

ComplexMatrix random_hermitian(test_support::SplitMix64& rng, std::size_t n) {
  ComplexMatrix m = random_matrix(rng, n);
  ComplexMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
  return h;
}

InteractionConfig random_config(test_support::SplitMix64& rng, std::uint64_t p, std::size_t n,
                                double alpha, std::optional<ComplexMatrix> Y = std::nullopt,
                                bool hermitian = true) {
  std::vector<PadicRational> pts;
  while (pts.size() < n) {
    PadicRational cand(p, test_support::random_rational(rng));
    bool dup = false;
    for (const auto& q : pts)
      if ((q - cand).is_zero()) dup = true;
    if (!dup) pts.push_back(cand);
  }
  ComplexMatrix B = hermitian ? random_hermitian(rng, n) : random_matrix(rng, n);
  return InteractionConfig(p, alpha, std::move(pts), std::move(B), 0.0, std::move(Y));
}

DomainElement random_domain_element(test_support::SplitMix64& rng, const InteractionConfig& cfg) {
  DomainElement f{test_support::random_finite_expansion(rng, cfg.prime(), 5),
                  std::vector<Complex>(cfg.size())};
  for (auto& z : f.defect) z = rng.complex_unit_box();
  return f;
}

}  // namespace

TEST_CASE("config validation") {
  CHECK_THROWS_AS(InteractionConfig(2, 0.4, make_points(2, {Rational(0)}),
                                    ComplexMatrix::identity(1)),
                  NotInL2Error);
  CHECK_THROWS_AS(InteractionConfig(2, 2.0, make_points(2, {Rational(0), Rational(0)}),
                                    ComplexMatrix::identity(2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(InteractionConfig(2, 2.0, make_points(2, {Rational(0)}),
                                    ComplexMatrix::identity(2)),
                  std::invalid_argument);
  CHECK_NOTHROW(InteractionConfig(2, 0.8, make_points(2, {Rational(0), Rational(1)}),
                                  ComplexMatrix::identity(2)));
}

TEST_CASE("R matrix: single point and diagonal regimes") {
  InteractionConfig cfg(2, 2.0, make_points(2, {Rational(0)}), ComplexMatrix::identity(1));
  RMatrix R = build_r_matrix(cfg, 1e-11);
  SeriesValue d = green_diagonal_value(2, 2.0, 1e-11);
  CHECK(R.values(0, 0).real() == doctest::Approx(d.value).epsilon(1e-12));
  CHECK(R.provenance[0] == REntryProvenance::Computed);

  InteractionConfig low(2, 0.8, make_points(2, {Rational(0), Rational(1)}),
                        ComplexMatrix::identity(2), 0.0);
  RMatrix Rlow = build_r_matrix(low, 1e-11);
  CHECK(Rlow.values(0, 0) == Complex{0.0, 0.0});
  CHECK(Rlow.provenance[0] == REntryProvenance::Regularized);
  CHECK(Rlow.provenance[1] == REntryProvenance::Computed);
  // off-diagonals are the radial values at the pairwise distance
  SeriesValue v = radial_green_value(2, 0.8, 0, 1e-11);
  CHECK(Rlow.values(0, 1).real() == doctest::Approx(v.value).epsilon(1e-12));
  CHECK(Rlow.values(1, 0) == Rlow.values(0, 1));

  // nonzero user regularization lands on the diagonal
  InteractionConfig reg(2, 0.8, make_points(2, {Rational(0), Rational(1)}),
                        ComplexMatrix::identity(2), 0.75);
  CHECK(build_r_matrix(reg, 1e-11).values(1, 1) == Complex{0.75, 0.0});

  // Hermitian symmetry on a random configuration
  test_support::SplitMix64 rng(1);
  for (double alpha : {0.8, 1.5}) {
    InteractionConfig c3 = random_config(rng, 3, 3, alpha);
    CHECK(build_r_matrix(c3, 1e-10).values.hermitian_defect() <= 1e-10);
  }
}

TEST_CASE("boundary maps: stated cases and linearity") {
  test_support::SplitMix64 rng(2);
  InteractionConfig cfg = random_config(rng, 2, 2, 1.5);
  RMatrix R = build_r_matrix(cfg);

  DomainElement f{test_support::random_finite_expansion(rng, 2, 4),
                  {Complex{0, 0}, Complex{0, 0}}};
  BoundaryData b = gamma_maps(f, cfg, R);
  for (std::size_t k = 0; k < 2; ++k) {
    CHECK(b.gamma0[k] == f.regular.point_eval(cfg.points()[k]).value);
    CHECK(b.gamma1[k] == Complex{0.0, 0.0});
  }

  DomainElement pure{WaveletExpansion(2), {Complex{1, 0}, Complex{0, 0}}};
  BoundaryData bp = gamma_maps(pure, cfg, R);
  CHECK(bp.gamma0[0] == R.values(0, 0));
  CHECK(bp.gamma0[1] == R.values(1, 0));
  CHECK(bp.gamma1[0] == Complex{-1.0, 0.0});

  // linearity in (u, c)
  DomainElement g = random_domain_element(rng, cfg);
  DomainElement h = random_domain_element(rng, cfg);
  DomainElement sum{WaveletExpansion(2), std::vector<Complex>(2)};
  sum.regular = g.regular;
  for (const auto& [idx, c] : h.regular.coeffs()) sum.regular.add(idx, c);
  for (std::size_t k = 0; k < 2; ++k) sum.defect[k] = g.defect[k] + h.defect[k];
  BoundaryData bs = gamma_maps(sum, cfg, R);
  BoundaryData bg = gamma_maps(g, cfg, R);
  BoundaryData bh = gamma_maps(h, cfg, R);
  for (std::size_t k = 0; k < 2; ++k) {
    CHECK(std::abs(bs.gamma0[k] - bg.gamma0[k] - bh.gamma0[k]) < 1e-12);
    CHECK(std::abs(bs.gamma1[k] - bg.gamma1[k] - bh.gamma1[k]) < 1e-12);
  }
}

TEST_CASE("adjoint action: eigenvector fixed point and defect sign flip") {
  InteractionConfig cfg(2, 2.0, make_points(2, {Rational(0)}), ComplexMatrix::identity(1));
  WaveletExpansion psi(2);
  psi.add(WaveletIndex(2, 1, 1, Rational(0)), Complex{1.0, 0.0});
  DomainElement f{psi, {Complex{0.0, 0.0}}};
  DomainElement af = adjoint_apply(f, cfg);
  CHECK(af.regular.coeffs().begin()->second == Complex{1.0, 0.0});  // eigenvalue p^{2(1-1)} = 1
  CHECK(af.defect[0] == Complex{0.0, 0.0});

  DomainElement pure{WaveletExpansion(2), {Complex{2.0, -1.0}}};
  DomainElement ap = adjoint_apply(pure, cfg);
  CHECK(ap.defect[0] == Complex{-2.0, 1.0});
  CHECK(ap.regular.empty());
}

TEST_CASE("green identity holds on random pairs") {
  test_support::SplitMix64 rng(3);
  for (std::uint64_t p : {2ull, 3ull}) {
    for (double alpha : {0.8, 1.5, 3.0}) {
      for (std::size_t n : {1u, 2u, 3u}) {
        InteractionConfig cfg = random_config(rng, p, n, alpha);
        RMatrix R = build_r_matrix(cfg);
        for (int rep = 0; rep < 4; ++rep) {
          DomainElement f = random_domain_element(rng, cfg);
          DomainElement g = random_domain_element(rng, cfg);
          CHECK(green_identity_defect(f, g, cfg, R) <= 1e-10);
        }
        // symmetric restriction: both sides vanish when c = 0
        DomainElement f0{test_support::random_finite_expansion(rng, p, 4),
                         std::vector<Complex>(n, Complex{0, 0})};
        DomainElement g0{test_support::random_finite_expansion(rng, p, 4),
                         std::vector<Complex>(n, Complex{0, 0})};
        CHECK(green_identity_defect(f0, g0, cfg, R) <= 1e-11);
        // antisymmetry: f against itself
        DomainElement ff = random_domain_element(rng, cfg);
        CHECK(green_identity_defect(ff, ff, cfg, R) <= 1e-10);
      }
    }
  }
}

TEST_CASE("boundary surjectivity round trip") {
  test_support::SplitMix64 rng(4);
  for (double alpha : {0.8, 1.5}) {
    for (std::size_t n : {1u, 2u, 3u}) {
      InteractionConfig cfg = random_config(rng, 2, n, alpha);
      RMatrix R = build_r_matrix(cfg);
      std::vector<Complex> a(n), b(n);
      for (std::size_t k = 0; k < n; ++k) {
        a[k] = rng.complex_unit_box();
        b[k] = rng.complex_unit_box();
      }
      DomainElement f = element_with_boundary(a, b, cfg, R);
      BoundaryData bd = gamma_maps(f, cfg, R);
      for (std::size_t k = 0; k < n; ++k) {
        CHECK(std::abs(bd.gamma0[k] - a[k]) <= 1e-10);
        CHECK(std::abs(bd.gamma1[k] - b[k]) <= 1e-10);
      }
    }
  }
}

TEST_CASE("domain membership: zero coupling, construction, perturbation") {
  test_support::SplitMix64 rng(5);
  InteractionConfig cfg(2, 1.5, make_points(2, {Rational(0), Rational(1)}),
                        ComplexMatrix(2, 2));  // B = 0
  RMatrix R = build_r_matrix(cfg);

  // with B = 0 the condition reads c = 0
  DomainElement f0{test_support::random_finite_expansion(rng, 2, 4), {Complex{0, 0}, Complex{0, 0}}};
  CHECK(realization_domain_check(f0, cfg, R, 1e-10));
  DomainElement f1{f0.regular, {Complex{0.1, 0}, Complex{0, 0}}};
  CHECK_FALSE(realization_domain_check(f1, cfg, R, 1e-10));

  // construct_domain_element with infeasible defect data must reject
  CHECK_THROWS_AS(construct_domain_element({Complex{1, 0}, Complex{0, 0}}, cfg, R),
                  BoundaryRangeError);
  CHECK_NOTHROW(construct_domain_element({Complex{0, 0}, Complex{0, 0}}, cfg, R));

  // invertible coupling: round trip then perturb
  for (double alpha : {0.8, 2.0}) {
    InteractionConfig inv = random_config(rng, 3, 2, alpha);
    RMatrix Rinv = build_r_matrix(inv);
    std::vector<Complex> c{rng.complex_unit_box(), rng.complex_unit_box()};
    DomainElement f = construct_domain_element(c, inv, Rinv);
    CHECK(realization_domain_check(f, inv, Rinv, 1e-10));
    DomainElement g{f.regular, f.defect};
    g.defect[0] += 0.1;
    CHECK_FALSE(realization_domain_check(g, inv, Rinv, 1e-10));
  }

  // singular-but-consistent coupling goes through the least-norm branch
  InteractionConfig sing(2, 1.5, make_points(2, {Rational(0), Rational(1)}),
                         mat2({1, 0}, {0, 0}, {0, 0}, {0, 0}));
  RMatrix Rs = build_r_matrix(sing);
  DomainElement fs = construct_domain_element({Complex{-1, 0}, Complex{0, 0}}, sing, Rs);
  CHECK(realization_domain_check(fs, sing, Rs, 1e-10));
}

TEST_CASE("one-point worked construction") {
  InteractionConfig cfg(2, 2.0, make_points(2, {Rational(0)}), ComplexMatrix::identity(1));
  RMatrix R = build_r_matrix(cfg);
  // B v = -c with B = [1], c = [-1] gives v = [1]; the regular part must take
  // the value 1 - r11 * (-1) at the point
  DomainElement f = construct_domain_element({Complex{-1, 0}}, cfg, R);
  Complex u_at = f.regular.point_eval(cfg.points()[0]).value;
  CHECK(std::abs(u_at - (Complex{1, 0} + R.values(0, 0))) < 1e-12);
  CHECK(realization_domain_check(f, cfg, R, 1e-10));
}

TEST_CASE("self-adjointness is Hermitian coupling") {
  CHECK(is_self_adjoint(InteractionConfig(2, 1.5, make_points(2, {Rational(0), Rational(1)}),
                                          mat2({1, 0}, {0, 0}, {0, 0}, {2, 0}))));
  CHECK_FALSE(is_self_adjoint(InteractionConfig(2, 1.5, make_points(2, {Rational(0), Rational(1)}),
                                                mat2({0, 0}, {1, 0}, {0, 0}, {0, 0}))));
  CHECK(is_self_adjoint(InteractionConfig(2, 1.5, make_points(2, {Rational(0), Rational(1)}),
                                          mat2({1, 0}, {0, 1}, {0, -1}, {3, 0}))));
}

TEST_CASE("symmetry transfers to constructed domain pairs exactly for Hermitian couplings") {
  test_support::SplitMix64 rng(6);
  for (int rep = 0; rep < 10; ++rep) {
    InteractionConfig cfg = random_config(rng, 2, 2, 1.5, std::nullopt, true);
    RMatrix R = build_r_matrix(cfg);
    std::vector<Complex> c{rng.complex_unit_box(), rng.complex_unit_box()};
    std::vector<Complex> d{rng.complex_unit_box(), rng.complex_unit_box()};
    DomainElement f = construct_domain_element(c, cfg, R);
    DomainElement g = construct_domain_element(d, cfg, R);
    // (A*f, g) - (f, A*g) equals the boundary form, which vanishes on the
    // domain of a Hermitian coupling
    BoundaryData bf = gamma_maps(f, cfg, R);
    BoundaryData bg = gamma_maps(g, cfg, R);
    Complex boundary{0, 0};
    for (std::size_t k = 0; k < 2; ++k)
      boundary += bf.gamma1[k] * std::conj(bg.gamma0[k]) - bf.gamma0[k] * std::conj(bg.gamma1[k]);
    CHECK(std::abs(boundary) <= 1e-9);
    CHECK(green_identity_defect(f, g, cfg, R) <= 1e-10);
  }

  // non-Hermitian coupling: an aligned witness pair shows a macroscopic defect
  InteractionConfig bad(2, 1.5, make_points(2, {Rational(0), Rational(1)}),
                        mat2({0, 0}, {1, 0}, {0, 0}, {0, 0}));
  RMatrix Rb = build_r_matrix(bad);
  std::vector<Complex> e0{Complex{1, 0}, Complex{0, 0}};
  std::vector<Complex> e1{Complex{0, 0}, Complex{1, 0}};
  auto in_domain = [&](const std::vector<Complex>& g0) {
    std::vector<Complex> g1 = bad.coupling() * g0;
    return element_with_boundary(g0, g1, bad, Rb);
  };
  DomainElement fw = in_domain(e1);
  DomainElement gw = in_domain(e0);
  BoundaryData bf = gamma_maps(fw, bad, Rb);
  BoundaryData bg = gamma_maps(gw, bad, Rb);
  Complex boundary{0, 0};
  for (std::size_t k = 0; k < 2; ++k)
    boundary += bf.gamma1[k] * std::conj(bg.gamma0[k]) - bf.gamma0[k] * std::conj(bg.gamma1[k]);
  CHECK(std::abs(boundary) > 1e-3);
}

TEST_CASE("eta transform: identity and diagonal cases") {
  test_support::SplitMix64 rng(7);
  // Y = I: identities hold for any R
  InteractionConfig cfg = random_config(rng, 2, 2, 1.5, ComplexMatrix::identity(2));
  RMatrix R = build_r_matrix(cfg);
  EtaTransformReport rep = eta_transform_check(cfg, R);
  CHECK(rep.identities_hold);
  CHECK(rep.ry_commutes);
  CHECK(rep.gamma1_identity_defect == 0.0);

  // diagonal real Y against a symmetric R with nonzero off-diagonal: the
  // commutation holds iff the diagonal entries coincide
  ComplexMatrix Yneq(2, 2);
  Yneq(0, 0) = {1, 0};
  Yneq(1, 1) = {2, 0};
  InteractionConfig cfg2(2, 2.0, make_points(2, {Rational(0), Rational(1)}),
                         ComplexMatrix::identity(2), 0.0, Yneq);
  RMatrix R2 = build_r_matrix(cfg2);
  REQUIRE(std::abs(R2.values(0, 1)) > 1e-6);
  EtaTransformReport rep2 = eta_transform_check(cfg2, R2);
  CHECK_FALSE(rep2.ry_commutes);
  CHECK_FALSE(rep2.identities_hold);
  // the commutator is [[0, r12], [-r12, 0]], so the basis probes see |r12|
  CHECK(rep2.gamma0_identity_defect >= std::abs(R2.values(0, 1)) * (1 - 1e-12));
  CHECK(rep2.ry_commutation_defect == doctest::Approx(std::abs(R2.values(0, 1))));

  ComplexMatrix Yeq = ComplexMatrix::identity(2);
  Yeq(0, 0) = Yeq(1, 1) = {3, 0};
  InteractionConfig cfg3(2, 2.0, make_points(2, {Rational(0), Rational(1)}),
                         ComplexMatrix::identity(2), 0.0, Yeq);
  EtaTransformReport rep3 = eta_transform_check(cfg3, build_r_matrix(cfg3));
  CHECK(rep3.ry_commutes);
  CHECK(rep3.identities_hold);
}

TEST_CASE("eta self-adjointness classification") {
  test_support::SplitMix64 rng(8);
  auto pts = make_points(2, {Rational(0), Rational(1)});

  // Y = I reduces to plain self-adjointness
  ComplexMatrix H = random_hermitian(rng, 2);
  InteractionConfig cfg(2, 2.0, pts, H, 0.0, ComplexMatrix::identity(2));
  RMatrix R = build_r_matrix(cfg);
  EtaClassification cls = is_eta_self_adjoint(cfg, R);
  CHECK(cls.eta_self_adjoint);
  CHECK(cls.yb_defect <= 1e-12);
  CHECK_FALSE(cls.ry_condition_required);

  // swap matrix: YB Hermitian forces the stated pattern
  ComplexMatrix Y = mat2({0, 0}, {1, 0}, {1, 0}, {0, 0});
  ComplexMatrix B = mat2({0.3, 0.7}, {0.9, 0}, {0.4, 0}, {0.3, -0.7});
  // YB = [[0.4, 0.3-0.7i], [0.3+0.7i, 0.9]] is Hermitian
  InteractionConfig cfg2(2, 2.0, pts, B, 0.0, Y);
  EtaClassification cls2 = is_eta_self_adjoint(cfg2, build_r_matrix(cfg2));
  CHECK(cls2.eta_self_adjoint);
  CHECK_FALSE(is_self_adjoint(cfg2));  // genuinely eta-self-adjoint only

  // B = Y^{-1} H with invertible Y: always eta-self-adjoint
  for (int rep = 0; rep < 10; ++rep) {
    ComplexMatrix Yr = ComplexMatrix::identity(2);
    ComplexMatrix noise = random_matrix(rng, 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) Yr(i, j) += 0.2 * noise(i, j);
    ComplexMatrix Hr = random_hermitian(rng, 2);
    ComplexMatrix Br = inverse(Yr) * Hr;
    InteractionConfig c(2, 2.0, pts, Br, 0.0, Yr);
    EtaClassification e = is_eta_self_adjoint(c, build_r_matrix(c));
    CHECK(e.yb_defect <= 1e-12);
    CHECK(e.eta_self_adjoint);
  }

  // singular eta is rejected
  InteractionConfig sing(2, 2.0, pts, H, 0.0, ComplexMatrix(2, 2));
  CHECK_THROWS_AS(is_eta_self_adjoint(sing, R), SingularMatrixError);

  // low regime: the RY condition gates the verdict
  RMatrix Rlow = [&] {
    InteractionConfig tmp(2, 0.8, pts, H, 0.25);
    return build_r_matrix(tmp);
  }();
  // Y commuting with R: a polynomial in R
  ComplexMatrix Ycomm(2, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      Ycomm(i, j) = (i == j ? Complex{2, 0} : Complex{0, 0}) + 0.5 * Rlow.values(i, j);
  ComplexMatrix Hlow = random_hermitian(rng, 2);
  InteractionConfig good(2, 0.8, pts, inverse(Ycomm) * Hlow, 0.25, Ycomm);
  EtaClassification egood = is_eta_self_adjoint(good, Rlow);
  CHECK(egood.ry_condition_required);
  REQUIRE(egood.ry_hermitian.has_value());
  CHECK(*egood.ry_hermitian);
  CHECK(egood.eta_self_adjoint);

  ComplexMatrix Ybad(2, 2);
  Ybad(0, 0) = {1, 0};
  Ybad(1, 1) = {2, 0};
  InteractionConfig gated(2, 0.8, pts, inverse(Ybad) * Hlow, 0.25, Ybad);
  EtaClassification egate = is_eta_self_adjoint(gated, Rlow);
  CHECK(egate.yb_hermitian);
  REQUIRE(egate.ry_hermitian.has_value());
  CHECK_FALSE(*egate.ry_hermitian);
  CHECK_FALSE(egate.eta_self_adjoint);
  CHECK(egate.failure == "RY is not Hermitian");
}

TEST_CASE("Friedrichs membership by regime") {
  test_support::SplitMix64 rng(9);

  // low regime: exactly the c = 0 elements
  InteractionConfig low = random_config(rng, 2, 2, 0.8);
  RMatrix Rlow = build_r_matrix(low);
  DomainElement u_only{test_support::random_finite_expansion(rng, 2, 4),
                       {Complex{0, 0}, Complex{0, 0}}};
  CHECK(friedrichs_domain_check(u_only, low, Rlow, 1e-10));
  DomainElement with_c{u_only.regular, {Complex{1, 0}, Complex{0, 0}}};
  CHECK_FALSE(friedrichs_domain_check(with_c, low, Rlow, 1e-10));

  // high regime: vanishing extended values, defect coefficients free
  InteractionConfig high = random_config(rng, 2, 2, 2.0);
  RMatrix Rhigh = build_r_matrix(high);
  std::vector<Complex> c{rng.complex_unit_box(), rng.complex_unit_box()};
  std::vector<Complex> zero(2, Complex{0, 0});
  std::vector<Complex> minus_c{-c[0], -c[1]};
  DomainElement f = element_with_boundary(zero, minus_c, high, Rhigh);
  CHECK(vec_inf_norm(f.defect) > 0.1);
  CHECK(friedrichs_domain_check(f, high, Rhigh, 1e-10));
  // perturbing the value at one point leaves the Friedrichs domain
  DomainElement g = f;
  g.regular.add(WaveletIndex(2, -5, 1, WaveletIndex::coset_of(2, -5, high.points()[0])),
                Complex{0.3, 0.0});
  CHECK_FALSE(friedrichs_domain_check(g, high, Rhigh, 1e-10));
  // a plain eigenfunction with a nonzero point value is outside
  DomainElement h{WaveletExpansion(2), zero};
  h.regular.add(WaveletIndex(2, -4, 1, WaveletIndex::coset_of(2, -4, high.points()[0])),
                Complex{1.0, 0.0});
  CHECK_FALSE(friedrichs_domain_check(h, high, Rhigh, 1e-10));
}
