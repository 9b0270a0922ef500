#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace padiclab {

using Rational = mpq_class;
using Complex = std::complex<double>;

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// ---------------------------------------------------------------------------
// Rational helpers
// ---------------------------------------------------------------------------

/// Serializes as "num/den", "/den" omitted when the value is an integer.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational parse_rational(const std::string& s) {
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0)
    throw std::invalid_argument("not a rational: '" + s + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

inline mpz_class integer_pow(std::uint64_t base, unsigned long exp) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), exp);
  return r;
}

/// p^e as an exact rational, e of either sign.
inline Rational rational_pow(std::uint64_t p, long e) {
  if (e >= 0) return Rational(integer_pow(p, static_cast<unsigned long>(e)));
  Rational r(1, integer_pow(p, static_cast<unsigned long>(-e)));
  r.canonicalize();
  return r;
}

namespace detail {

/// Deterministic Miller-Rabin, valid for all n < 2^64 with this witness set.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  mpz_class nz;
  mpz_import(nz.get_mpz_t(), 1, 1, sizeof(n), 0, 0, &n);
  mpz_class d = nz - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    mpz_class az(static_cast<unsigned long>(a));
    mpz_class x;
    mpz_powm(x.get_mpz_t(), az.get_mpz_t(), d.get_mpz_t(), nz.get_mpz_t());
    if (x == 1 || x == nz - 1) continue;
    bool witness = true;
    for (unsigned long r = 1; r < s; ++r) {
      mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, nz.get_mpz_t());
      if (x == nz - 1) { witness = false; break; }
    }
    if (witness) return false;
  }
  return true;
}

inline void require_prime(std::uint64_t p) {
  if (!is_prime_u64(p)) throw std::invalid_argument("p must be prime, got " + std::to_string(p));
}

/// Multiplicity of p in z (z != 0).
inline long remove_factor(mpz_class& z, std::uint64_t p) {
  mpz_class pz(static_cast<unsigned long>(p));
  return static_cast<long>(mpz_remove(z.get_mpz_t(), z.get_mpz_t(), pz.get_mpz_t()));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// UnitPhase: e^{2 pi i q} with exact rational q in [0,1)
// ---------------------------------------------------------------------------

class UnitPhase {
 public:
  UnitPhase() : q_(0) {}
  explicit UnitPhase(Rational q) : q_(std::move(q)) { normalize(); }

  const Rational& phase() const { return q_; }
  bool is_trivial() const { return q_ == 0; }

  /// Phases add mod 1 exactly.
  UnitPhase operator*(const UnitPhase& o) const { return UnitPhase(q_ + o.q_); }
  UnitPhase conj() const { return UnitPhase(-q_); }

  UnitPhase pow(long k) const { return UnitPhase(q_ * k); }

  bool operator==(const UnitPhase& o) const { return q_ == o.q_; }

  /// Exact on quarter phases; elsewhere the usual libm rounding applies.
  Complex to_complex() const {
    if (q_ == 0) return {1.0, 0.0};
    if (q_.get_den() == 2) return {-1.0, 0.0};
    if (q_.get_den() == 4) return (q_.get_num() == 1) ? Complex{0.0, 1.0} : Complex{0.0, -1.0};
    double t = kTwoPi * q_.get_d();
    return {std::cos(t), std::sin(t)};
  }

  std::string str() const { return to_string(q_); }

 private:
  void normalize() {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), q_.get_num().get_mpz_t(), q_.get_den().get_mpz_t());
    q_ -= Rational(fl);
  }
  Rational q_;
};

// ---------------------------------------------------------------------------
// PadicRational: an exact rational viewed inside Q_p
// ---------------------------------------------------------------------------

class PadicRational {
 public:
  PadicRational(std::uint64_t p, Rational value) : p_(p), v_(std::move(value)) {
    detail::require_prime(p_);
    v_.canonicalize();
  }
  PadicRational(std::uint64_t p, long num, long den = 1) : PadicRational(p, Rational(num, den)) {}

  static PadicRational parse(std::uint64_t p, const std::string& s) {
    return PadicRational(p, parse_rational(s));
  }

  std::uint64_t prime() const { return p_; }
  const Rational& value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  /// gamma with x = p^gamma * (m/n), p coprime to m and n; nullopt (=+inf) at 0.
  std::optional<long> valuation() const {
    if (is_zero()) return std::nullopt;
    mpz_class num = v_.get_num(), den = v_.get_den();
    return detail::remove_factor(num, p_) - detail::remove_factor(den, p_);
  }

  /// |x|_p = p^{-valuation}, exactly; 0 at x = 0.
  Rational norm() const {
    auto g = valuation();
    if (!g) return Rational(0);
    return rational_pow(p_, -*g);
  }

  /// Canonical representative of x mod p^m Z_p: the digits of x at exponents
  /// below m, a rational in [0, p^m) whose denominator is a power of p.
  Rational reduce_mod(long m) const {
    if (is_zero()) return Rational(0);
    long v = *valuation();
    if (v >= m) return Rational(0);
    // x = p^v * a/b with p coprime to a, b; digits below m are those of
    // a*b^{-1} mod p^{m-v}, shifted by p^v.
    mpz_class a = v_.get_num(), b = v_.get_den();
    detail::remove_factor(a, p_);
    detail::remove_factor(b, p_);
    mpz_class modulus = integer_pow(p_, static_cast<unsigned long>(m - v));
    mpz_class binv;
    if (mpz_invert(binv.get_mpz_t(), b.get_mpz_t(), modulus.get_mpz_t()) == 0)
      throw std::logic_error("denominator not invertible mod p^k");
    mpz_class k = a * binv;
    mpz_mod(k.get_mpz_t(), k.get_mpz_t(), modulus.get_mpz_t());
    Rational r = Rational(k) * rational_pow(p_, v);
    r.canonicalize();
    return r;
  }

  /// {x}_p: 0 when x = 0 or valuation >= 0, else the finite tail of negative-
  /// power digits. Result lies in [0,1) with denominator exactly p^{-valuation}.
  Rational fractional_part() const { return reduce_mod(0); }

  /// chi_p(x) = e^{2 pi i {x}_p}.
  UnitPhase character() const { return UnitPhase(fractional_part()); }

  PadicRational operator+(const PadicRational& o) const { return bin(o, v_ + o.v_); }
  PadicRational operator-(const PadicRational& o) const { return bin(o, v_ - o.v_); }
  PadicRational operator*(const PadicRational& o) const { return bin(o, v_ * o.v_); }
  PadicRational operator-() const { return PadicRational(p_, -v_); }

  /// x * p^k.
  PadicRational scale_by_power(long k) const {
    return PadicRational(p_, v_ * rational_pow(p_, k));
  }

  bool operator==(const PadicRational& o) const { return p_ == o.p_ && v_ == o.v_; }

  std::string str() const { return to_string(v_); }

 private:
  PadicRational bin(const PadicRational& o, Rational r) const {
    require_same_prime(o);
    return PadicRational(p_, std::move(r));
  }
  void require_same_prime(const PadicRational& o) const {
    if (p_ != o.p_) throw std::invalid_argument("mismatched primes");
  }

  std::uint64_t p_;
  Rational v_;
};

// ---------------------------------------------------------------------------
// Ball B_gamma(a) = { x : |x-a|_p <= p^gamma }
// ---------------------------------------------------------------------------

enum class BallRelation { Disjoint, Equal, FirstInsideSecond, SecondInsideFirst };

class Ball {
 public:
  /// The stored center is the canonical representative: any center a' with
  /// |a-a'|_p <= p^gamma yields the identical Ball.
  Ball(const PadicRational& center, long radius_exp)
      : p_(center.prime()),
        center_(center.prime(), center.reduce_mod(-radius_exp)),
        gamma_(radius_exp) {}

  Ball(std::uint64_t p, const Rational& center, long radius_exp)
      : Ball(PadicRational(p, center), radius_exp) {}

  std::uint64_t prime() const { return p_; }
  const PadicRational& center() const { return center_; }
  long radius_exp() const { return gamma_; }

  /// Haar measure: p^gamma exactly.
  Rational measure() const { return rational_pow(p_, gamma_); }

  bool contains(const PadicRational& x) const {
    auto v = (x - center_).valuation();
    return !v || *v >= -gamma_;
  }

  /// The p disjoint sub-balls of radius p^{gamma-1} partitioning this ball.
  std::vector<Ball> children() const {
    std::vector<Ball> out;
    out.reserve(p_);
    Rational step = rational_pow(p_, -gamma_);
    Rational c = center_.value();
    for (std::uint64_t t = 0; t < p_; ++t) {
      out.emplace_back(p_, c + Rational(static_cast<unsigned long>(t)) * step, gamma_ - 1);
    }
    return out;
  }

  bool operator==(const Ball& o) const {
    return p_ == o.p_ && gamma_ == o.gamma_ && center_ == o.center_;
  }

 private:
  std::uint64_t p_;
  PadicRational center_;
  long gamma_;
};

/// Exact ultrametric classification; partial overlap cannot occur.
inline BallRelation ball_relation(const Ball& a, const Ball& b) {
  if (a.prime() != b.prime()) throw std::invalid_argument("mismatched primes");
  const Ball& small = (a.radius_exp() <= b.radius_exp()) ? a : b;
  const Ball& big = (a.radius_exp() <= b.radius_exp()) ? b : a;
  auto v = (small.center() - big.center()).valuation();
  bool nested = !v || *v >= -big.radius_exp();
  if (!nested) return BallRelation::Disjoint;
  if (a.radius_exp() == b.radius_exp()) return BallRelation::Equal;
  return (a.radius_exp() < b.radius_exp()) ? BallRelation::FirstInsideSecond
                                           : BallRelation::SecondInsideFirst;
}

inline Rational haar_measure(const Ball& b) { return b.measure(); }

}  // namespace padiclab
