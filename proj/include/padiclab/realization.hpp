#pragma once

#include <optional>
#include <string>
#include <vector>

#include "padiclab/green.hpp"
#include "padiclab/matrix.hpp"

namespace padiclab {

/// Requested boundary data outside the range of the coupling matrix.
class BoundaryRangeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// ---------------------------------------------------------------------------
// InteractionConfig: exponent, interaction points, coupling matrix B, the
// diagonal regularization r (meaningful for 1/2 < alpha <= 1) and optionally
// the matrix Y describing the action of the symmetry eta on the defect space.
// ---------------------------------------------------------------------------

class InteractionConfig {
 public:
  InteractionConfig(std::uint64_t p, double alpha, std::vector<PadicRational> points,
                    ComplexMatrix coupling, double diagonal_regularization = 0.0,
                    std::optional<ComplexMatrix> eta_matrix = std::nullopt)
      : p_(p),
        alpha_(alpha),
        points_(std::move(points)),
        coupling_(std::move(coupling)),
        r_(diagonal_regularization),
        eta_(std::move(eta_matrix)) {
    detail::require_prime(p_);
    if (!(alpha_ > 0.5)) throw NotInL2Error("no defect elements in L2 for alpha <= 1/2");
    std::size_t n = points_.size();
    if (n == 0) throw std::invalid_argument("at least one interaction point required");
    if (n > 64) throw std::invalid_argument("at most 64 interaction points supported");
    for (const auto& x : points_)
      if (x.prime() != p_) throw std::invalid_argument("mismatched primes");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if ((points_[i] - points_[j]).is_zero())
          throw std::invalid_argument("interaction points must be pairwise distinct");
    if (coupling_.rows() != n || coupling_.cols() != n)
      throw std::invalid_argument("coupling matrix must be n x n");
    if (eta_ && (eta_->rows() != n || eta_->cols() != n))
      throw std::invalid_argument("eta matrix must be n x n");
  }

  std::uint64_t prime() const { return p_; }
  double alpha() const { return alpha_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<PadicRational>& points() const { return points_; }
  const ComplexMatrix& coupling() const { return coupling_; }
  double diagonal_regularization() const { return r_; }
  const std::optional<ComplexMatrix>& eta_matrix() const { return eta_; }
  bool low_regime() const { return alpha_ <= 1.0; }

  /// The defect-space basis h_1, ..., h_n.
  std::vector<GreenFunction> defect_basis() const {
    std::vector<GreenFunction> out;
    out.reserve(points_.size());
    for (const auto& x : points_) out.emplace_back(p_, alpha_, x);
    return out;
  }

 private:
  std::uint64_t p_;
  double alpha_;
  std::vector<PadicRational> points_;
  ComplexMatrix coupling_;
  double r_;
  std::optional<ComplexMatrix> eta_;
};

/// f = u + sum_j c_j h_j with finite regular part u.
struct DomainElement {
  WaveletExpansion regular;
  std::vector<Complex> defect;
};

struct BoundaryData {
  std::vector<Complex> gamma0;
  std::vector<Complex> gamma1;
};

enum class REntryProvenance { Computed, Regularized };

struct RMatrix {
  ComplexMatrix values;
  std::vector<REntryProvenance> provenance;  // row-major, n*n entries
  double entry_bound;                        // evaluation bound shared by computed entries
};

// ---------------------------------------------------------------------------
// The R matrix of delta-against-solution pairings: off-diagonal entries are
// the genuine values h_j(x_k); the diagonal is the convergent series value for
// alpha > 1 and the user regularization r otherwise.
// ---------------------------------------------------------------------------

inline RMatrix build_r_matrix(const InteractionConfig& cfg, double tol = 1e-12) {
  std::size_t n = cfg.size();
  RMatrix R{ComplexMatrix(n, n), std::vector<REntryProvenance>(n * n, REntryProvenance::Computed),
            0.0};
  double diag;
  if (cfg.low_regime()) {
    diag = cfg.diagonal_regularization();
    for (std::size_t k = 0; k < n; ++k)
      R.provenance[k * n + k] = REntryProvenance::Regularized;
  } else {
    SeriesValue d = green_diagonal_value(cfg.prime(), cfg.alpha(), tol);
    diag = d.value;
    R.entry_bound = std::max(R.entry_bound, d.bound);
  }
  for (std::size_t k = 0; k < n; ++k) R.values(k, k) = {diag, 0.0};
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = k + 1; j < n; ++j) {
      long gamma0 = -*(cfg.points()[k] - cfg.points()[j]).valuation();
      SeriesValue v = radial_green_value(cfg.prime(), cfg.alpha(), gamma0, tol);
      R.values(k, j) = {v.value, 0.0};
      R.values(j, k) = {v.value, 0.0};
      R.entry_bound = std::max(R.entry_bound, v.bound);
    }
  }
  if (R.values.hermitian_defect() > 1e-10)
    throw std::logic_error("R matrix lost Hermitian symmetry");
  return R;
}

// ---------------------------------------------------------------------------
// Boundary maps: Gamma_0 f collects the extended delta values
// u(x_k) + sum_j c_j r_kj, Gamma_1 f = -c.
// ---------------------------------------------------------------------------

inline BoundaryData gamma_maps(const DomainElement& f, const InteractionConfig& cfg,
                               const RMatrix& R) {
  std::size_t n = cfg.size();
  if (f.defect.size() != n) throw std::invalid_argument("dimension mismatch");
  if (!f.regular.is_finite())
    throw std::invalid_argument("regular part must be a finite expansion");
  BoundaryData out;
  std::vector<Complex> rc = R.values * f.defect;
  out.gamma0.resize(n);
  out.gamma1.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.gamma0[k] = f.regular.point_eval(cfg.points()[k]).value + rc[k];
    out.gamma1[k] = -f.defect[k];
  }
  return out;
}

/// Action of the adjoint of the symmetric restriction: (u, c) -> (D^alpha u, -c).
inline DomainElement adjoint_apply(const DomainElement& f, const InteractionConfig& cfg) {
  DomainElement out{apply_spectral(SpectralMultiplier(cfg.alpha()), f.regular), f.defect};
  for (auto& z : out.defect) z = -z;
  return out;
}

namespace detail {

/// (e, h_k) for a finite expansion: the exact finite sum of coefficient
/// products.
inline Complex pair_with_solution(const WaveletExpansion& e, const GreenFunction& g) {
  Complex acc{0.0, 0.0};
  for (const auto& [idx, c] : e.coeffs()) {
    Complex gc = g.coefficient(idx);
    if (gc == Complex{0.0, 0.0}) continue;
    acc += c * std::conj(gc);
  }
  return acc;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// The abstract Green identity: (A*f, g) - (f, A*g) = (G1 f, G0 g) - (G0 f,
// G1 g). Both sides are computed independently; the defect-defect cross terms
// cancel between the two adjoint pairings and never need the (divergent-free
// but infinite) h-h inner products.
// ---------------------------------------------------------------------------

inline double green_identity_defect(const DomainElement& f, const DomainElement& g,
                                    const InteractionConfig& cfg, const RMatrix& R) {
  std::size_t n = cfg.size();
  if (f.defect.size() != n || g.defect.size() != n)
    throw std::invalid_argument("dimension mismatch");
  auto basis = cfg.defect_basis();
  SpectralMultiplier op(cfg.alpha());
  WaveletExpansion duf = apply_spectral(op, f.regular);
  WaveletExpansion dug = apply_spectral(op, g.regular);

  Complex lhs = expansion_inner(duf, g.regular) - expansion_inner(f.regular, dug);
  for (std::size_t k = 0; k < n; ++k) {
    Complex dk = g.defect[k];
    Complex cj = f.defect[k];
    lhs += std::conj(dk) * (detail::pair_with_solution(duf, basis[k]) +
                            detail::pair_with_solution(f.regular, basis[k]));
    lhs -= cj * std::conj(detail::pair_with_solution(g.regular, basis[k]) +
                          detail::pair_with_solution(dug, basis[k]));
  }

  BoundaryData bf = gamma_maps(f, cfg, R);
  BoundaryData bg = gamma_maps(g, cfg, R);
  Complex rhs{0.0, 0.0};
  for (std::size_t k = 0; k < n; ++k) {
    rhs += bf.gamma1[k] * std::conj(bg.gamma0[k]);
    rhs -= bf.gamma0[k] * std::conj(bg.gamma1[k]);
  }
  return std::abs(lhs - rhs);
}

/// Membership in the realization domain: B Gamma_0 f = Gamma_1 f within tol.
inline bool realization_domain_check(const DomainElement& f, const InteractionConfig& cfg,
                                     const RMatrix& R, double tol) {
  BoundaryData b = gamma_maps(f, cfg, R);
  std::vector<Complex> lhs = cfg.coupling() * b.gamma0;
  for (std::size_t k = 0; k < lhs.size(); ++k) lhs[k] -= b.gamma1[k];
  return vec_inf_norm(lhs) <= tol;
}

// ---------------------------------------------------------------------------
// Surjectivity of the boundary maps, constructively: any target pair
// (gamma0, gamma1) is realized by c = -gamma1 together with a regular part
// built from n wavelets whose supports isolate the interaction points.
// ---------------------------------------------------------------------------

inline DomainElement element_with_boundary(const std::vector<Complex>& gamma0_target,
                                           const std::vector<Complex>& gamma1_target,
                                           const InteractionConfig& cfg, const RMatrix& R) {
  std::size_t n = cfg.size();
  if (gamma0_target.size() != n || gamma1_target.size() != n)
    throw std::invalid_argument("dimension mismatch");
  std::vector<Complex> c(n);
  for (std::size_t k = 0; k < n; ++k) c[k] = -gamma1_target[k];

  // scale low enough that each support ball holds exactly one point
  long n0 = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      long gap = -*(cfg.points()[i] - cfg.points()[j]).valuation();
      n0 = std::min(n0, gap - 1);
    }

  std::vector<Complex> rc = R.values * c;
  WaveletExpansion u(cfg.prime());
  for (std::size_t i = 0; i < n; ++i) {
    WaveletIndex idx(cfg.prime(), n0, 1,
                     WaveletIndex::coset_of(cfg.prime(), n0, cfg.points()[i]));
    Complex at_point = wavelet_eval(idx, cfg.points()[i]);
    Complex target = gamma0_target[i] - rc[i];
    u.add(idx, target / at_point);
  }
  return DomainElement{std::move(u), std::move(c)};
}

/// Member of the realization domain with prescribed defect coefficients: the
/// boundary condition demands B v = -c for the extended values v; infeasible
/// targets are rejected, singular couplings resolve by the least-norm choice.
inline DomainElement construct_domain_element(const std::vector<Complex>& c,
                                              const InteractionConfig& cfg, const RMatrix& R) {
  std::size_t n = cfg.size();
  if (c.size() != n) throw std::invalid_argument("dimension mismatch");
  std::vector<Complex> rhs(n);
  for (std::size_t k = 0; k < n; ++k) rhs[k] = -c[k];
  auto v = solve_least_norm(cfg.coupling(), rhs);
  if (!v) throw BoundaryRangeError("requested defect data is outside the coupling range");
  std::vector<Complex> gamma1(n);
  for (std::size_t k = 0; k < n; ++k) gamma1[k] = -c[k];
  return element_with_boundary(*v, gamma1, cfg, R);
}

// ---------------------------------------------------------------------------
// Classification: the realization is self-adjoint iff B is Hermitian; it is
// eta-self-adjoint iff Y B is Hermitian, with the extra requirement that R Y
// be Hermitian in the low regime.
// ---------------------------------------------------------------------------

inline bool is_self_adjoint(const InteractionConfig& cfg, double tol = 1e-12) {
  return cfg.coupling().hermitian_defect() <= tol;
}

struct EtaTransformReport {
  double gamma0_identity_defect;  // max over probes of |R(Yc) - adj(Y)(Rc)|
  double gamma1_identity_defect;  // always zero by construction, reported anyway
  double ry_commutation_defect;   // max entry of RY - adj(Y) R
  bool ry_commutes;
  bool identities_hold;
};

/// Verifies the boundary-map transformation law of the symmetry on the defect
/// space. Probing the canonical basis vectors (and their sum) is complete:
/// the identity is linear in c.
inline EtaTransformReport eta_transform_check(const InteractionConfig& cfg, const RMatrix& R,
                                              double tol = 1e-10) {
  if (!cfg.eta_matrix()) throw std::invalid_argument("config carries no eta matrix");
  std::size_t n = cfg.size();
  const ComplexMatrix& Y = *cfg.eta_matrix();
  ComplexMatrix Yadj = Y.adjoint();
  EtaTransformReport rep{0.0, 0.0, 0.0, false, false};

  std::vector<std::vector<Complex>> probes;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Complex> e(n, Complex{0.0, 0.0});
    e[i] = {1.0, 0.0};
    probes.push_back(std::move(e));
  }
  probes.emplace_back(n, Complex{1.0, 0.5});

  for (const auto& c : probes) {
    std::vector<Complex> lhs = R.values * (Y * c);
    std::vector<Complex> rhs = Yadj * (R.values * c);
    for (std::size_t k = 0; k < n; ++k)
      rep.gamma0_identity_defect = std::max(rep.gamma0_identity_defect, std::abs(lhs[k] - rhs[k]));
    // Gamma_1(eta f) = -(Y c) against Y Gamma_1 f = Y (-c)
    std::vector<Complex> g1_eta = Y * c;
    for (auto& z : g1_eta) z = -z;
    std::vector<Complex> minus_c(n);
    for (std::size_t k = 0; k < n; ++k) minus_c[k] = -c[k];
    std::vector<Complex> y_g1 = Y * minus_c;
    for (std::size_t k = 0; k < n; ++k)
      rep.gamma1_identity_defect =
          std::max(rep.gamma1_identity_defect, std::abs(g1_eta[k] - y_g1[k]));
  }
  ComplexMatrix comm = R.values * Y - Yadj * R.values;
  rep.ry_commutation_defect = comm.max_abs();
  rep.ry_commutes = rep.ry_commutation_defect <= tol;
  rep.identities_hold = rep.gamma0_identity_defect <= tol && rep.gamma1_identity_defect <= tol;
  return rep;
}

struct EtaClassification {
  bool eta_self_adjoint;
  bool yb_hermitian;
  double yb_defect;
  bool ry_condition_required;
  std::optional<bool> ry_hermitian;
  double ry_defect;
  std::string failure;
};

inline EtaClassification is_eta_self_adjoint(const InteractionConfig& cfg, const RMatrix& R,
                                             double tol = 1e-12) {
  if (!cfg.eta_matrix()) throw std::invalid_argument("config carries no eta matrix");
  const ComplexMatrix& Y = *cfg.eta_matrix();
  inverse(Y);  // throws SingularMatrixError when eta is not invertible
  EtaClassification out{false, false, 0.0, cfg.low_regime(), std::nullopt, 0.0, ""};
  ComplexMatrix YB = Y * cfg.coupling();
  out.yb_defect = YB.hermitian_defect();
  out.yb_hermitian = out.yb_defect <= tol;
  if (cfg.low_regime()) {
    ComplexMatrix RY = R.values * Y;
    out.ry_defect = RY.hermitian_defect();
    out.ry_hermitian = out.ry_defect <= tol;
  }
  if (!out.yb_hermitian) out.failure = "YB is not Hermitian";
  if (cfg.low_regime() && !*out.ry_hermitian)
    out.failure = out.failure.empty() ? "RY is not Hermitian" : out.failure + "; RY is not Hermitian";
  out.eta_self_adjoint = out.yb_hermitian && (!cfg.low_regime() || *out.ry_hermitian);
  return out;
}

// ---------------------------------------------------------------------------
// Friedrichs extension membership: for 1/2 < alpha <= 1 the Friedrichs domain
// is the unperturbed one (c = 0); above one it is cut out by the vanishing of
// the extended values at the interaction points.
// ---------------------------------------------------------------------------

inline bool friedrichs_domain_check(const DomainElement& f, const InteractionConfig& cfg,
                                    const RMatrix& R, double tol) {
  if (cfg.low_regime()) return vec_inf_norm(f.defect) <= tol;
  BoundaryData b = gamma_maps(f, cfg, R);
  return vec_inf_norm(b.gamma0) <= tol;
}

}  // namespace padiclab
