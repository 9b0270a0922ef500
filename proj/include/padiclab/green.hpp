#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "padiclab/summation.hpp"
#include "padiclab/vladimirov.hpp"

namespace padiclab {

/// The equation D^alpha h + h = delta has no L2 solution at or below the
/// threshold exponent.
class NotInL2Error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The diagonal value h_k(x_k) is a divergent series unless alpha > 1.
class DiagonalDivergenceError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct SeriesValue {
  double value;
  double bound;
};

namespace detail {

/// Truncation level M with (p-1) sum_{N > M} p^{-N} [..]^{-1} <= p^{-M} <= tol.
inline long truncation_level(std::uint64_t p, double tol, long at_least) {
  double need = std::log(1.0 / tol) / std::log(static_cast<double>(p));
  long M = static_cast<long>(std::ceil(need)) + 1;
  return std::max(M, at_least);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Radial and diagonal closed-form evaluators. The solution of
// D^alpha h + h = delta_{x_k} depends on x only through |x - x_k|_p = p^{g0}:
// resumming the coefficient series over each level, the nontrivial character
// sum over j contributes -1 at the boundary level N = g0 and p-1 above it.
// ---------------------------------------------------------------------------

/// Value of h_k at any x with |x - x_k|_p = p^{gamma0}: the level-g0 term
/// -p^{-g0} [p^{alpha(1-g0)}+1]^{-1} plus (p-1) sum_{N > g0} p^{-N}
/// [p^{alpha(1-N)}+1]^{-1}, truncated with a geometric tail below tol.
inline SeriesValue radial_green_value(std::uint64_t p, double alpha, long gamma0, double tol) {
  detail::require_prime(p);
  if (!(alpha > 0.5)) throw NotInL2Error("no L2 solution for alpha <= 1/2");
  if (!(tol > 0)) throw std::invalid_argument("tol must be positive");
  double pd = static_cast<double>(p);
  auto lambda_inv = [&](long N) {
    long double t = static_cast<long double>(alpha) * static_cast<long double>(1 - N);
    return static_cast<double>(1.0L / (powl(static_cast<long double>(p), t) + 1.0L));
  };
  long M = detail::truncation_level(p, tol, gamma0 + 2);
  KahanAccumulator<double> acc;
  acc.add(-std::pow(pd, -static_cast<double>(gamma0)) * lambda_inv(gamma0));
  for (long N = gamma0 + 1; N <= M; ++N)
    acc.add((pd - 1.0) * std::pow(pd, -static_cast<double>(N)) * lambda_inv(N));
  double tail = std::pow(pd, -static_cast<double>(M));
  return {acc.value(), tail};
}

/// The k-independent diagonal value h_k(x_k) = (p-1) sum_{N in Z} p^{-N}
/// [p^{alpha(1-N)}+1]^{-1}, finite only for alpha > 1; both tails geometric.
inline SeriesValue green_diagonal_value(std::uint64_t p, double alpha, double tol) {
  detail::require_prime(p);
  if (!(alpha > 0.5)) throw NotInL2Error("no L2 solution for alpha <= 1/2");
  if (!(alpha > 1.0))
    throw DiagonalDivergenceError("diagonal series diverges for alpha <= 1");
  if (!(tol > 0)) throw std::invalid_argument("tol must be positive");
  double pd = static_cast<double>(p);
  auto lambda_inv = [&](long N) {
    long double t = static_cast<long double>(alpha) * static_cast<long double>(1 - N);
    return static_cast<double>(1.0L / (powl(static_cast<long double>(p), t) + 1.0L));
  };
  // upper tail: terms <= (p-1) p^{-N}; lower tail: terms <= (p-1) p^{-alpha}
  // p^{(alpha-1)N}
  long M_up = detail::truncation_level(p, tol / 2, 2);
  double ratio = std::pow(pd, -(alpha - 1.0));
  long M_down = 0;
  // tail below level M: sum_{N <= M} (p-1) p^{-alpha} p^{(alpha-1)N}
  double down_tail = (pd - 1.0) * std::pow(pd, -alpha) / (1.0 - ratio);
  while (down_tail > tol / 2) {
    --M_down;
    down_tail *= ratio;
  }
  KahanAccumulator<double> acc;
  for (long N = M_up; N >= M_down; --N)
    acc.add((pd - 1.0) * std::pow(pd, -static_cast<double>(N)) * lambda_inv(N));
  double tail = std::pow(pd, -static_cast<double>(M_up)) + down_tail * ratio;
  return {acc.value(), tail};
}

// ---------------------------------------------------------------------------
// GreenFunction: the unique L2 solution h_k of D^alpha h + h = delta_{x_k},
// held through its exact wavelet coefficient law.
// ---------------------------------------------------------------------------

class GreenFunction {
 public:
  GreenFunction(std::uint64_t p, double alpha, PadicRational anchor)
      : p_(p), alpha_(alpha), anchor_(std::move(anchor)) {
    detail::require_prime(p_);
    if (anchor_.prime() != p_) throw std::invalid_argument("mismatched primes");
    if (!(alpha_ > 0)) throw std::invalid_argument("alpha must be positive");
    if (!(alpha_ > 0.5)) throw NotInL2Error("no L2 solution for alpha <= 1/2");
  }

  std::uint64_t prime() const { return p_; }
  double alpha() const { return alpha_; }
  const PadicRational& anchor() const { return anchor_; }

  /// The coset {p^N x_k}_p carrying the only nonzero coefficient at level N.
  Rational level_coset(long N) const { return WaveletIndex::coset_of(p_, N, anchor_); }

  /// Exact coefficient: p^{-N/2} chi(-p^{N-1} j x_k) [p^{alpha(1-N)}+1]^{-1}
  /// at eps = {p^N x_k}_p, zero at every other coset.
  Complex coefficient(const WaveletIndex& idx) const {
    if (idx.prime() != p_) throw std::invalid_argument("mismatched primes");
    if (idx.coset() != level_coset(idx.level())) return {0.0, 0.0};
    long N = idx.level();
    UnitPhase ph =
        (-(anchor_.scale_by_power(N - 1)) * PadicRational(p_, idx.rotation())).character();
    return idx.scale() * lambda_inv(N) * ph.to_complex();
  }

  /// [p^{alpha(1-N)}+1]^{-1}.
  double lambda_inv(long N) const {
    long double t = static_cast<long double>(alpha_) * static_cast<long double>(1 - N);
    return static_cast<double>(1.0L / (powl(static_cast<long double>(p_), t) + 1.0L));
  }

  /// Direct series evaluation at x (exact characters per term, truncated with
  /// a rigorous geometric tail). Only levels N >= gamma0 = log_p |x-x_k|
  /// contribute. At x = x_k the series is the diagonal one.
  SeriesValue eval(const PadicRational& x, double tol) const {
    if (x.prime() != p_) throw std::invalid_argument("mismatched primes");
    PadicRational d = x - anchor_;
    if (d.is_zero()) {
      if (alpha_ > 1.0) return green_diagonal_value(p_, alpha_, tol);
      throw DiagonalDivergenceError("diagonal series diverges for alpha <= 1");
    }
    long gamma0 = -*d.valuation();
    long M = detail::truncation_level(p_, tol, gamma0 + 2);
    double pd = static_cast<double>(p_);
    KahanAccumulator<double> re, im;
    for (long N = gamma0; N <= M; ++N) {
      double scale = std::pow(pd, -static_cast<double>(N)) * lambda_inv(N);
      for (long j = 1; static_cast<std::uint64_t>(j) < p_; ++j) {
        // chi(-p^{N-1} j x_k) chi(p^{N-1} j x) = chi(p^{N-1} j (x - x_k))
        UnitPhase ph = (d.scale_by_power(N - 1) * PadicRational(p_, j)).character();
        Complex z = ph.to_complex();
        re.add(scale * z.real());
        im.add(scale * z.imag());
      }
    }
    double tail = std::pow(pd, -static_cast<double>(M));
    double budget = tail + 64.0 * std::numeric_limits<double>::epsilon() *
                               static_cast<double>(M - gamma0 + 1);
    if (std::abs(im.value()) > 1e-12 + budget)
      throw std::logic_error("green function value has a non-real part");
    return {re.value(), budget};
  }

  /// Radial closed form at distance p^{gamma0}.
  SeriesValue radial(long gamma0, double tol) const {
    return radial_green_value(p_, alpha_, gamma0, tol);
  }

 private:
  std::uint64_t p_;
  double alpha_;
  PadicRational anchor_;
};

// ---------------------------------------------------------------------------
// DeltaFunctional: pairing of delta_{x_k} with finite expansions through the
// coefficient selection rule; equals the point value at x_k.
// ---------------------------------------------------------------------------

struct DeltaFunctional {
  std::uint64_t p;
  PadicRational point;

  DeltaFunctional(std::uint64_t prime, PadicRational x) : p(prime), point(std::move(x)) {
    detail::require_prime(p);
    if (point.prime() != p) throw std::invalid_argument("mismatched primes");
  }

  Complex pair(const WaveletExpansion& e) const {
    if (e.prime() != p) throw std::invalid_argument("mismatched primes");
    if (!e.is_finite()) throw std::invalid_argument("pairing requires a finite expansion");
    Complex acc{0.0, 0.0};
    for (const auto& [idx, c] : e.coeffs()) {
      if (idx.coset() != WaveletIndex::coset_of(p, idx.level(), point)) continue;
      UnitPhase ph =
          (point.scale_by_power(idx.level() - 1) * PadicRational(p, idx.rotation())).character();
      acc += c * idx.scale() * ph.to_complex();
    }
    return acc;
  }
};

// ---------------------------------------------------------------------------
// Weak residual |<h_k, (D^alpha + I) phi> - phi(x_k)|. For finite expansions
// the coefficient products telescope exactly; for ball combinations the
// expansion window is chosen from the requested tolerance.
// ---------------------------------------------------------------------------

struct WeakResidual {
  double residual;
  double bound;
};

/// Exact route: phi given by a finite expansion.
inline WeakResidual weak_residual(const GreenFunction& g, const WaveletExpansion& e) {
  if (e.prime() != g.prime()) throw std::invalid_argument("mismatched primes");
  if (!e.is_finite()) throw std::invalid_argument("finite expansion required");
  std::uint64_t p = g.prime();
  SpectralMultiplier op(g.alpha(), 1.0);
  Complex pairing{0.0, 0.0};
  for (const auto& [idx, c] : e.coeffs()) {
    Complex gc = g.coefficient(idx);
    if (gc == Complex{0.0, 0.0}) continue;
    pairing += op.eigenvalue(p, idx.level()) * c * std::conj(gc);
  }
  Complex direct = e.point_eval(PadicRational(p, g.anchor().value())).value;
  double budget =
      1e-13 * (1.0 + std::abs(pairing)) * static_cast<double>(e.coeffs().size() + 1);
  return {std::abs(pairing - direct), budget};
}

/// Ball-combination route: phi is expanded over a window wide enough that the
/// omitted closed-form levels contribute less than tol/2.
inline WeakResidual weak_residual(const GreenFunction& g, const TestFunction& phi, double tol) {
  if (phi.prime() != g.prime()) throw std::invalid_argument("mismatched primes");
  if (!(tol > 0)) throw std::invalid_argument("tol must be positive");
  std::uint64_t p = g.prime();
  TestFunction f = phi.is_canonical() ? phi : phi.canonicalize();
  if (f.is_zero()) return {0.0, 0.0};
  double mass = std::abs(f.integrate());
  long M = detail::truncation_level(p, tol / (2.0 * (mass + 1.0)), 4);
  long l = *f.constancy_exponent();
  WaveletExpansion e = expand_test_function(f, l + 1, M);

  SpectralMultiplier op(g.alpha(), 1.0);
  Complex pairing{0.0, 0.0};
  for (const auto& [idx, c] : e.coeffs()) {
    Complex gc = g.coefficient(idx);
    if (gc == Complex{0.0, 0.0}) continue;
    pairing += op.eigenvalue(p, idx.level()) * c * std::conj(gc);
  }
  Complex direct = f.evaluate(PadicRational(p, g.anchor().value()));
  // omitted levels: lambda * conj(green coeff) * coeff sums to at most
  // (p-1) p^{-N} |mass| per level
  double omitted = mass * std::pow(static_cast<double>(p), -static_cast<double>(M));
  double budget = omitted + 1e-12 * (1.0 + std::abs(pairing));
  return {std::abs(pairing - direct), budget};
}

// ---------------------------------------------------------------------------
// Membership of h_k in the domain of the half-power operator: partial sums of
// ||D^{alpha/2} h_k||^2 = sum (p-1) p^{-N} p^{alpha(1-N)} [p^{alpha(1-N)}+1]^{-2},
// split into the always-convergent upper side (N >= 1) and the dichotomy side
// (N <= 0, down to n_floor).
// ---------------------------------------------------------------------------

struct MembershipSums {
  std::vector<double> upper;  // partial sums over N = 1, 2, ...
  std::vector<double> lower;  // partial sums over N = 0, -1, ..., n_floor
};

inline MembershipSums half_power_membership(const GreenFunction& g, long n_floor) {
  std::uint64_t p = g.prime();
  double pd = static_cast<double>(p);
  auto level_term = [&](long N) {
    double li = g.lambda_inv(N);
    double lam = std::pow(pd, g.alpha() * (1.0 - static_cast<double>(N)));
    return (pd - 1.0) * std::pow(pd, -static_cast<double>(N)) * lam * li * li;
  };
  MembershipSums out;
  double acc = 0;
  for (long N = 1; N <= 80; ++N) {
    acc += level_term(N);
    out.upper.push_back(acc);
  }
  acc = 0;
  for (long N = 0; N >= n_floor; --N) {
    acc += level_term(N);
    out.lower.push_back(acc);
  }
  return out;
}

/// Partial sums of the squared coefficient norm of the solution law
/// (p-1) p^{-N} [p^{alpha(1-N)}+1]^{-2} over N = 0, -1, ..., n_floor plus the
/// convergent upper side, evaluated directly from the law so the divergent
/// regime alpha <= 1/2 can be probed without constructing a solution.
inline std::vector<double> green_norm_sq_partial(std::uint64_t p, double alpha, long n_floor) {
  detail::require_prime(p);
  if (!(alpha > 0)) throw std::invalid_argument("alpha must be positive");
  double pd = static_cast<double>(p);
  auto lambda_inv = [&](long N) {
    long double t = static_cast<long double>(alpha) * static_cast<long double>(1 - N);
    return static_cast<double>(1.0L / (powl(static_cast<long double>(p), t) + 1.0L));
  };
  double acc = 0;
  for (long N = 1; N <= 80; ++N) {
    double li = lambda_inv(N);
    acc += (pd - 1.0) * std::pow(pd, -static_cast<double>(N)) * li * li;
  }
  std::vector<double> out;
  for (long N = 0; N >= n_floor; --N) {
    double li = lambda_inv(N);
    acc += (pd - 1.0) * std::pow(pd, -static_cast<double>(N)) * li * li;
    out.push_back(acc);
  }
  return out;
}

}  // namespace padiclab
