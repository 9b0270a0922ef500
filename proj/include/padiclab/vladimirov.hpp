#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "padiclab/wavelets.hpp"

namespace padiclab {

// ---------------------------------------------------------------------------
// SpectralMultiplier: the diagonal action psi_{N j eps} -> (p^{alpha(1-N)} +
// shift) psi_{N j eps}; shift = 0 is the fractional differentiation operator
// itself, shift = 1 the operator plus identity.
// ---------------------------------------------------------------------------

struct SpectralMultiplier {
  double alpha;
  double shift = 0.0;

  SpectralMultiplier(double a, double s = 0.0) : alpha(a), shift(s) {
    if (!(alpha > 0)) throw std::invalid_argument("alpha must be positive");
    if (shift < 0) throw std::invalid_argument("shift must be nonnegative");
  }

  /// p^{alpha(1-N)} + shift, evaluated in extended precision.
  double eigenvalue(std::uint64_t p, long N) const {
    long double t = static_cast<long double>(alpha) * static_cast<long double>(1 - N);
    return static_cast<double>(powl(static_cast<long double>(p), t) +
                               static_cast<long double>(shift));
  }
};

/// Coefficientwise action on an expansion. Tails are rescaled by the supremum
/// of the multiplier over the omitted levels, which exists only when the
/// expansion records a floor below which nothing was omitted.
inline WaveletExpansion apply_spectral(const SpectralMultiplier& m, const WaveletExpansion& e) {
  std::uint64_t p = e.prime();
  WaveletExpansion out(p);
  for (const auto& [idx, c] : e.coeffs()) out.add(idx, c * m.eigenvalue(p, idx.level()));
  if (!e.is_finite()) {
    if (!e.tail_floor()) throw std::domain_error("multiplier unbounded on tail");
    double sup = m.eigenvalue(p, *e.tail_floor());
    out.set_tails(e.l2_tail() * sup, e.sup_tail() * sup, e.tail_floor());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Point oracle through the Fourier definition:
//   (D^alpha f)(x) = int |xi|^alpha F[f](xi) chi(-xi x) d xi.
// F[f] is a finite ball combination; over each ball the integral splits into
// spheres where |xi|^alpha is constant, and the inner geometric series is
// summed in closed form. Fully independent of the wavelet route.
// ---------------------------------------------------------------------------

namespace detail {

/// int_{B_gamma(c)} |xi|^alpha chi(t xi) d xi for a canonical ball.
inline Complex power_character_ball_integral(const Ball& ball, double alpha,
                                             const PadicRational& t) {
  std::uint64_t p = ball.prime();
  double pd = static_cast<double>(p);
  long gamma = ball.radius_exp();
  auto pow_p = [&](double e) { return std::pow(pd, e); };

  if (!ball.center().is_zero()) {
    // |xi| is constant on the ball; the character integrates to zero unless
    // it is constant as well
    if (!t.is_zero() && *t.valuation() < gamma) return {0.0, 0.0};
    double scale = std::pow(ball.center().norm().get_d(), alpha);
    UnitPhase ph = t.is_zero() ? UnitPhase() : (t * ball.center()).character();
    return scale * pow_p(static_cast<double>(gamma)) * ph.to_complex();
  }

  // ball centered at zero: sum over spheres S_m, m <= gamma
  // closed form of sum_{m <= M} p^{(alpha+1)m}
  auto geometric_to = [&](long M) {
    return pow_p((alpha + 1.0) * static_cast<double>(M)) / (1.0 - pow_p(-(alpha + 1.0)));
  };
  if (t.is_zero()) return {(1.0 - 1.0 / pd) * geometric_to(gamma), 0.0};
  long vt = *t.valuation();
  double acc = (1.0 - 1.0 / pd) * geometric_to(std::min(gamma, vt));
  if (vt + 1 <= gamma)
    acc -= pow_p(alpha * static_cast<double>(vt + 1)) * pow_p(static_cast<double>(vt));
  return {acc, 0.0};
}

}  // namespace detail

inline Complex dalpha_point_oracle(const TestFunction& phi, double alpha,
                                   const PadicRational& x) {
  if (!(alpha > 0)) throw std::invalid_argument("alpha must be positive");
  if (phi.prime() != x.prime()) throw std::invalid_argument("mismatched primes");
  TestFunction transform = phi.fourier();
  PadicRational t = -x;
  Complex acc{0.0, 0.0};
  for (const auto& term : transform.terms())
    acc += term.coeff * detail::power_character_ball_integral(term.ball, alpha, t);
  return acc;
}

/// Monotone partial sums of sum |c|^2 p^{2 alpha (1-N)} over the represented
/// indices with N >= n_floor, from the top level downward. Boundedness of the
/// sequence witnesses membership in the operator domain.
inline std::vector<double> domain_membership_partial(const WaveletExpansion& e, double alpha,
                                                     long n_floor) {
  std::uint64_t p = e.prime();
  std::vector<std::pair<long, double>> weights;
  for (const auto& [idx, c] : e.coeffs()) {
    if (idx.level() < n_floor) continue;
    weights.emplace_back(idx.level(), std::norm(c));
  }
  std::sort(weights.begin(), weights.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  std::vector<double> partial;
  partial.reserve(weights.size());
  double acc = 0;
  for (const auto& [N, w] : weights) {
    acc += w * std::pow(static_cast<double>(p), 2.0 * alpha * (1.0 - static_cast<double>(N)));
    partial.push_back(acc);
  }
  return partial;
}

// ---------------------------------------------------------------------------
// The continuity counterexample: the function with coefficients
// (1/|N|) p^{(N-1)/2} at indices (N, 1, 0), N <= -1, lies in the domain of
// D^alpha exactly for alpha <= 1/2 yet is unbounded near zero.
// ---------------------------------------------------------------------------

struct ContinuityCounterexample {
  std::uint64_t p;

  explicit ContinuityCounterexample(std::uint64_t prime) : p(prime) {
    detail::require_prime(p);
  }

  /// Coefficient at (N, 1, 0), N <= -1.
  double coefficient(long N) const {
    if (N > -1) throw std::invalid_argument("coefficients live at N <= -1");
    return std::pow(static_cast<double>(p), 0.5 * static_cast<double>(N - 1)) /
           static_cast<double>(-N);
  }

  /// Increment of ||f||^2 at level N: p^{N-1} / N^2.
  double norm_sq_increment(long N) const {
    return std::pow(static_cast<double>(p), static_cast<double>(N - 1)) /
           (static_cast<double>(N) * static_cast<double>(N));
  }

  /// Partial sums of ||f||^2 from N = -1 down to n_floor.
  std::vector<double> norm_partial(long n_floor) const {
    std::vector<double> out;
    double acc = 0;
    for (long N = -1; N >= n_floor; --N) {
      acc += norm_sq_increment(N);
      out.push_back(acc);
    }
    return out;
  }

  /// Partial sums of the domain-membership series sum |c|^2 p^{2 alpha(1-N)}
  /// from N = -1 down to n_floor.
  std::vector<double> membership_partial(double alpha, long n_floor) const {
    std::vector<double> out;
    double acc = 0;
    for (long N = -1; N >= n_floor; --N) {
      acc += norm_sq_increment(N) *
             std::pow(static_cast<double>(p), 2.0 * alpha * (1.0 - static_cast<double>(N)));
      out.push_back(acc);
    }
    return out;
  }

  /// Closed value at x = p^n: p^{-1/2} [chi(p^{-1})/n + sum_{k=1}^{n-1} 1/k].
  Complex closed_value(long n) const {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    Complex chi = PadicRational(p, Rational(1, static_cast<long>(p))).character().to_complex();
    double harmonic = 0;
    for (long k = n - 1; k >= 1; --k) harmonic += 1.0 / static_cast<double>(k);
    return std::pow(static_cast<double>(p), -0.5) *
           (chi / static_cast<double>(n) + Complex{harmonic, 0.0});
  }

  /// Direct series value at x = p^n through the wavelet machinery; the
  /// support condition cuts the series to finitely many terms.
  Complex series_value(long n) const {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    PadicRational x(p, rational_pow(p, n));
    Complex acc{0.0, 0.0};
    for (long N = -n - 3; N <= -1; ++N)
      acc += coefficient(N) * wavelet_eval(WaveletIndex(p, N, 1, Rational(0)), x);
    return acc;
  }
};

}  // namespace padiclab
