#pragma once

#include <map>
#include <stdexcept>
#include <utility>

#include "padiclab/padic.hpp"

namespace padiclab {

/// Exact complex number of the form sum_k c_k * e^{2 pi i q_k} with rational
/// coefficients c_k and rational phases q_k whose denominators are powers of a
/// fixed prime p. Closed under +, -, *, conjugation; zero is decidable by
/// reduction in the cyclotomic field Q(zeta_{p^M}).
class PhaseSum {
 public:
  explicit PhaseSum(std::uint64_t p) : p_(p) { detail::require_prime(p_); }

  static PhaseSum from_rational(std::uint64_t p, const Rational& c) {
    PhaseSum s(p);
    s.add(UnitPhase(), c);
    return s;
  }

  std::uint64_t prime() const { return p_; }
  bool empty() const { return terms_.empty(); }
  const std::map<Rational, Rational>& terms() const { return terms_; }

  void add(const UnitPhase& phase, const Rational& coeff) {
    if (coeff == 0) return;
    check_phase(phase.phase());
    auto [it, inserted] = terms_.emplace(phase.phase(), coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  PhaseSum& operator+=(const PhaseSum& o) {
    require_same(o);
    for (const auto& [q, c] : o.terms_) add(UnitPhase(q), c);
    return *this;
  }
  PhaseSum& operator-=(const PhaseSum& o) {
    require_same(o);
    for (const auto& [q, c] : o.terms_) add(UnitPhase(q), -c);
    return *this;
  }
  PhaseSum operator+(const PhaseSum& o) const { PhaseSum r = *this; r += o; return r; }
  PhaseSum operator-(const PhaseSum& o) const { PhaseSum r = *this; r -= o; return r; }

  PhaseSum operator*(const PhaseSum& o) const {
    require_same(o);
    PhaseSum r(p_);
    for (const auto& [qa, ca] : terms_)
      for (const auto& [qb, cb] : o.terms_) r.add(UnitPhase(qa + qb), ca * cb);
    return r;
  }

  PhaseSum times_phase(const UnitPhase& ph) const {
    PhaseSum r(p_);
    for (const auto& [q, c] : terms_) r.add(UnitPhase(q) * ph, c);
    return r;
  }

  PhaseSum times_rational(const Rational& s) const {
    PhaseSum r(p_);
    for (const auto& [q, c] : terms_) r.add(UnitPhase(q), c * s);
    return r;
  }

  PhaseSum conj() const {
    PhaseSum r(p_);
    for (const auto& [q, c] : terms_) r.add(UnitPhase(-q), c);
    return r;
  }

  PhaseSum operator-() const { return times_rational(Rational(-1)); }

  /// Exact zero test. Phases are lifted to the common conductor p^M and the
  /// exponent vector is reduced against the relation
  ///   sum_{k=0}^{p-1} zeta^{b + k p^{M-1}} = 0
  /// which rewrites every exponent with top digit p-1 onto the power basis of
  /// Q(zeta_{p^M}).
  bool is_zero() const {
    if (terms_.empty()) return true;
    unsigned long M = 0;
    for (const auto& [q, c] : terms_) M = std::max(M, p_power_exponent(q.get_den()));
    if (M == 0) {
      Rational total(0);
      for (const auto& [q, c] : terms_) total += c;
      return total == 0;
    }
    mpz_class P1 = integer_pow(p_, M - 1);
    std::map<mpz_class, Rational> acc;
    auto bump = [&](const mpz_class& e, const Rational& c) {
      auto [it, inserted] = acc.emplace(e, c);
      if (!inserted) it->second += c;
    };
    for (const auto& [q, c] : terms_) {
      // e = q * p^M, an integer in [0, p^M)
      mpz_class e = q.get_num() * integer_pow(p_, M - p_power_exponent(q.get_den()));
      mpz_class hi, lo;
      mpz_fdiv_qr(hi.get_mpz_t(), lo.get_mpz_t(), e.get_mpz_t(), P1.get_mpz_t());
      if (hi == static_cast<unsigned long>(p_ - 1)) {
        for (std::uint64_t k = 0; k + 1 < p_; ++k)
          bump(lo + mpz_class(static_cast<unsigned long>(k)) * P1, -c);
      } else {
        bump(e, c);
      }
    }
    for (const auto& [e, c] : acc)
      if (c != 0) return false;
    return true;
  }

  bool operator==(const PhaseSum& o) const { return (*this - o).is_zero(); }

  Complex to_complex() const {
    Complex z{0.0, 0.0};
    for (const auto& [q, c] : terms_) z += c.get_d() * UnitPhase(q).to_complex();
    return z;
  }

 private:
  void require_same(const PhaseSum& o) const {
    if (p_ != o.p_) throw std::invalid_argument("mismatched primes");
  }
  void check_phase(const Rational& q) const {
    p_power_exponent(q.get_den());  // throws unless a power of p
  }
  unsigned long p_power_exponent(const mpz_class& den) const {
    mpz_class d = den;
    unsigned long m = 0;
    while (d > 1) {
      if (!mpz_divisible_ui_p(d.get_mpz_t(), static_cast<unsigned long>(p_)))
        throw std::invalid_argument("phase denominator is not a power of p");
      mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(p_));
      ++m;
    }
    return m;
  }

  std::uint64_t p_;
  std::map<Rational, Rational> terms_;
};

}  // namespace padiclab
