#pragma once

#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "padiclab/test_function.hpp"

namespace padiclab {

// ---------------------------------------------------------------------------
// WaveletIndex (N, j, eps): psi_{N j eps}(x) = p^{-N/2} chi(p^{N-1} j x)
// Omega(|p^N x - eps|_p), an orthonormal eigenbasis of the fractional
// differentiation operator.
// ---------------------------------------------------------------------------

class WaveletIndex {
 public:
  WaveletIndex(std::uint64_t p, long N, long j, Rational eps)
      : p_(p), n_(N), j_(j), eps_(std::move(eps)) {
    detail::require_prime(p_);
    if (j_ < 1 || static_cast<std::uint64_t>(j_) >= p_)
      throw std::invalid_argument("j must lie in [1, p-1]");
    if (eps_ != PadicRational(p_, eps_).fractional_part())
      throw std::invalid_argument("eps must be a canonical coset representative k/p^m in [0,1)");
  }

  std::uint64_t prime() const { return p_; }
  long level() const { return n_; }
  long rotation() const { return j_; }
  const Rational& coset() const { return eps_; }

  /// The coset representative {p^N x}_p that x's level-N wavelet ball carries.
  static Rational coset_of(std::uint64_t p, long N, const PadicRational& x) {
    if (x.prime() != p) throw std::invalid_argument("mismatched primes");
    return x.scale_by_power(N).fractional_part();
  }

  /// Support ball B_N(p^{-N} eps).
  Ball support() const { return Ball(p_, eps_ * rational_pow(p_, -n_), n_); }

  /// p^{-N/2}.
  double scale() const { return std::pow(static_cast<double>(p_), -0.5 * static_cast<double>(n_)); }

  std::strong_ordering operator<=>(const WaveletIndex& o) const {
    if (auto c = n_ <=> o.n_; c != 0) return c;
    if (auto c = j_ <=> o.j_; c != 0) return c;
    int c = cmp(eps_, o.eps_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  bool operator==(const WaveletIndex& o) const {
    return n_ == o.n_ && j_ == o.j_ && eps_ == o.eps_;
  }

 private:
  std::uint64_t p_;
  long n_;
  long j_;
  Rational eps_;
};

/// Exact phase of psi at x, when x lies in the support; the full value is
/// p^{-N/2} e^{2 pi i phase}.
inline std::optional<UnitPhase> wavelet_phase(const WaveletIndex& idx, const PadicRational& x) {
  if (idx.prime() != x.prime()) throw std::invalid_argument("mismatched primes");
  if (!idx.support().contains(x)) return std::nullopt;
  PadicRational arg(idx.prime(), x.value() * Rational(idx.rotation()));
  return arg.scale_by_power(idx.level() - 1).character();
}

inline Complex wavelet_eval(const WaveletIndex& idx, const PadicRational& x) {
  auto ph = wavelet_phase(idx, x);
  if (!ph) return {0.0, 0.0};
  return idx.scale() * ph->to_complex();
}

/// The unscaled profile chi(p^{N-1} j x) restricted to the support ball, as a
/// canonical indicator combination: the support splits into its p children, on
/// each of which the character is constant.
template <class Coeff>
BasicTestFunction<Coeff> wavelet_profile(const WaveletIndex& idx) {
  using Ops = CoeffOps<Coeff>;
  std::uint64_t p = idx.prime();
  BasicTestFunction<Coeff> f(p);
  for (const Ball& child : idx.support().children()) {
    UnitPhase ph = *wavelet_phase(idx, child.center());
    f.add_term(child, Ops::times_phase(Ops::one(p), ph));
  }
  return f.canonicalize();
}

/// psi as a double-precision test function (includes the p^{-N/2} factor).
inline TestFunction wavelet_test_function(const WaveletIndex& idx) {
  return wavelet_profile<Complex>(idx).scaled(Complex{idx.scale(), 0.0});
}

/// Exact integral of the unscaled profile over one ball: the ball is split
/// into pieces on which the character is constant and the measures are summed
/// as an exact phase combination.
inline PhaseSum profile_integral_over_ball(const WaveletIndex& idx, const Ball& domain) {
  std::uint64_t p = idx.prime();
  PhaseSum acc(p);
  Ball support = idx.support();
  BallRelation rel = ball_relation(support, domain);
  if (rel == BallRelation::Disjoint) return acc;
  const Ball& region = (rel == BallRelation::FirstInsideSecond) ? support : domain;
  // chi(p^{N-1} j x) is constant on balls of radius p^{N-1}
  long constancy = idx.level() - 1;
  if (region.radius_exp() <= constancy) {
    acc.add(*wavelet_phase(idx, region.center()), region.measure());
    return acc;
  }
  long depth = region.radius_exp() - constancy;
  mpz_class count = integer_pow(p, static_cast<unsigned long>(depth));
  Rational step = rational_pow(p, -region.radius_exp());
  Rational piece_measure = rational_pow(p, constancy);
  for (mpz_class k(0); k < count; ++k) {
    PadicRational c(p, region.center().value() + Rational(k) * step);
    acc.add(*wavelet_phase(idx, c), piece_measure);
  }
  return acc;
}

/// (psi_idx, phi) = int psi conj(phi), exact: per canonical term of phi the
/// character-times-indicator integral is accumulated as an exact phase sum
/// (so structurally zero coefficients are detected exactly), then scaled.
inline Complex wavelet_inner_test(const WaveletIndex& idx, const TestFunction& phi) {
  if (idx.prime() != phi.prime()) throw std::invalid_argument("mismatched primes");
  TestFunction f = phi.is_canonical() ? phi : phi.canonicalize();
  Complex acc{0.0, 0.0};
  for (const auto& term : f.terms()) {
    PhaseSum s = profile_integral_over_ball(idx, term.ball);
    if (s.is_zero()) continue;
    acc += std::conj(term.coeff) * s.to_complex();
  }
  return idx.scale() * acc;
}

/// Expansion coefficient (phi, psi_idx).
inline Complex wavelet_coefficient(const TestFunction& phi, const WaveletIndex& idx) {
  return std::conj(wavelet_inner_test(idx, phi));
}

/// Exact inner product of two unscaled profiles. The full wavelet inner
/// product is p^{-(N1+N2)/2} times this, so orthonormality is equivalent to
/// this value being p^{N} on the diagonal and zero elsewhere.
inline PhaseSum wavelet_pair_inner_unscaled(const WaveletIndex& a, const WaveletIndex& b) {
  if (a.prime() != b.prime()) throw std::invalid_argument("mismatched primes");
  std::uint64_t p = a.prime();
  PhaseSum acc(p);
  Ball sa = a.support(), sb = b.support();
  BallRelation rel = ball_relation(sa, sb);
  if (rel == BallRelation::Disjoint) return acc;
  const Ball& region = (rel == BallRelation::FirstInsideSecond || rel == BallRelation::Equal)
                           ? sa
                           : sb;
  // combined frequency f = p^{N1-1} j1 - p^{N2-1} j2; chi(f x) is constant on
  // balls of radius p^{v(f)}
  Rational freq = Rational(a.rotation()) * rational_pow(p, a.level() - 1) -
                  Rational(b.rotation()) * rational_pow(p, b.level() - 1);
  PadicRational fr(p, freq);
  auto vf = fr.valuation();
  if (!vf || *vf >= region.radius_exp()) {
    acc.add((fr * region.center()).character(), region.measure());
    return acc;
  }
  long depth = region.radius_exp() - *vf;
  mpz_class count = integer_pow(p, static_cast<unsigned long>(depth));
  Rational step = rational_pow(p, -region.radius_exp());
  Rational piece_measure = rational_pow(p, *vf);
  for (mpz_class k(0); k < count; ++k) {
    Rational c = region.center().value() + Rational(k) * step;
    acc.add((fr * PadicRational(p, c)).character(), piece_measure);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// WaveletExpansion: finite sparse coefficient map plus rigorous tail bounds.
// ---------------------------------------------------------------------------

struct PointValue {
  Complex value;
  double bound;
};

class WaveletExpansion {
 public:
  explicit WaveletExpansion(std::uint64_t p) : p_(p) { detail::require_prime(p); }

  std::uint64_t prime() const { return p_; }
  const std::map<WaveletIndex, Complex>& coeffs() const { return coeffs_; }
  bool empty() const { return coeffs_.empty(); }

  double l2_tail() const { return l2_tail_; }
  double sup_tail() const { return sup_tail_; }
  std::optional<long> tail_floor() const { return tail_floor_; }
  bool is_finite() const { return l2_tail_ == 0.0 && sup_tail_ == 0.0; }

  void add(const WaveletIndex& idx, Complex c) {
    if (idx.prime() != p_) throw std::invalid_argument("mismatched primes");
    if (c == Complex{0.0, 0.0}) return;
    auto [it, inserted] = coeffs_.emplace(idx, c);
    if (!inserted) {
      it->second += c;
      if (it->second == Complex{0.0, 0.0}) coeffs_.erase(it);
    }
  }

  void set_tails(double l2, double sup, std::optional<long> floor) {
    if (l2 < 0 || sup < 0) throw std::invalid_argument("tail bounds must be nonnegative");
    l2_tail_ = l2;
    sup_tail_ = sup;
    tail_floor_ = floor;
  }

  /// Sum of |c|^2 over represented indices.
  double norm_sq() const {
    double s = 0;
    for (const auto& [idx, c] : coeffs_) s += std::norm(c);
    return s;
  }

  /// Value of the represented partial sum at x plus the sup-norm bound on the
  /// omitted part. Checks the per-(N,j) single-coset property along the way.
  PointValue point_eval(const PadicRational& x) const {
    Complex acc{0.0, 0.0};
    std::map<std::pair<long, long>, int> hits;
    for (const auto& [idx, c] : coeffs_) {
      auto ph = wavelet_phase(idx, x);
      if (!ph) continue;
      if (++hits[{idx.level(), idx.rotation()}] > 1)
        throw std::logic_error("two cosets contribute at one point");
      acc += c * idx.scale() * ph->to_complex();
    }
    return {acc, sup_tail_};
  }

 private:
  std::uint64_t p_;
  std::map<WaveletIndex, Complex> coeffs_;
  double l2_tail_ = 0.0;
  double sup_tail_ = 0.0;
  std::optional<long> tail_floor_;
};

/// Inner product of the represented (finite) parts.
inline Complex expansion_inner(const WaveletExpansion& a, const WaveletExpansion& b) {
  if (a.prime() != b.prime()) throw std::invalid_argument("mismatched primes");
  const auto& small = a.coeffs().size() <= b.coeffs().size() ? a : b;
  const auto& big = a.coeffs().size() <= b.coeffs().size() ? b : a;
  Complex acc{0.0, 0.0};
  for (const auto& [idx, c] : small.coeffs()) {
    auto it = big.coeffs().find(idx);
    if (it == big.coeffs().end()) continue;
    acc += (&small == &a) ? c * std::conj(it->second) : it->second * std::conj(c);
  }
  return acc;
}

/// Wavelet expansion of a canonical test function over levels [n_min, n_max].
///
/// Below the parameter of constancy every coefficient vanishes, so with
/// n_min <= l(phi)+1 the represented part misses only the levels above n_max,
/// where the coefficients follow the closed form c_{N j eps0} = p^{-N/2} *
/// integral(phi). The L2 tail is the exact Parseval complement and the sup
/// tail is the geometric bound on the omitted levels.
inline WaveletExpansion expand_test_function(const TestFunction& phi, long n_min, long n_max) {
  std::uint64_t p = phi.prime();
  TestFunction f = phi.is_canonical() ? phi : phi.canonicalize();
  WaveletExpansion e(p);
  if (f.is_zero()) return e;
  if (n_min > n_max) throw std::invalid_argument("empty level window");

  for (long N = n_min; N <= n_max; ++N) {
    std::set<Rational> cosets;
    for (const auto& term : f.terms()) {
      long gamma = term.ball.radius_exp();
      const PadicRational& c = term.ball.center();
      if (gamma <= N) {
        cosets.insert(WaveletIndex::coset_of(p, N, c));
      } else {
        mpz_class count = integer_pow(p, static_cast<unsigned long>(gamma - N));
        Rational step = rational_pow(p, -gamma);
        for (mpz_class k(0); k < count; ++k) {
          PadicRational y(p, c.value() + Rational(k) * step);
          cosets.insert(WaveletIndex::coset_of(p, N, y));
        }
      }
    }
    for (const Rational& eps : cosets) {
      for (long j = 1; static_cast<std::uint64_t>(j) < p; ++j) {
        WaveletIndex idx(p, N, j, eps);
        e.add(idx, wavelet_coefficient(f, idx));
      }
    }
  }

  long l = *f.constancy_exponent();
  double mass = std::abs(CoeffOps<Complex>::to_complex(f.integrate()));
  double pd = static_cast<double>(p);

  // sup-norm bound on the omitted levels
  double sup = mass * std::pow(pd, -static_cast<double>(n_max));  // levels above n_max
  if (n_min > l + 1) {
    // omitted low levels, bounded by the per-level estimate (p-1) p^{-N/2} ||phi||
    double norm = std::sqrt(std::abs(f.inner_product(f).real()));
    for (long N = l + 1; N < n_min; ++N)
      sup += (pd - 1.0) * std::pow(pd, -0.5 * static_cast<double>(N)) * norm;
  }

  double total = f.inner_product(f).real();
  double radicand = total - e.norm_sq();
  if (radicand < -1e-12) throw std::logic_error("Parseval defect: represented mass exceeds norm");
  e.set_tails(std::sqrt(std::max(0.0, radicand)), sup,
              (n_min <= l + 1) ? std::optional<long>(n_max + 1) : std::optional<long>(l + 1));
  return e;
}

}  // namespace padiclab
