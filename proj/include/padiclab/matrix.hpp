#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <vector>

namespace padiclab {

class SingularMatrixError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Dense complex matrix sized for interaction configurations (n <= 64).
class ComplexMatrix {
 public:
  ComplexMatrix() : rows_(0), cols_(0) {}
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, std::complex<double>{0.0, 0.0}) {}

  static ComplexMatrix identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = {1.0, 0.0};
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::complex<double>& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const std::complex<double>& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  ComplexMatrix adjoint() const {
    ComplexMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
    return m;
  }

  ComplexMatrix operator*(const ComplexMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("dimension mismatch");
    ComplexMatrix m(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        std::complex<double> a = (*this)(i, k);
        if (a == std::complex<double>{0.0, 0.0}) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) m(i, j) += a * o(k, j);
      }
    return m;
  }

  ComplexMatrix operator-(const ComplexMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("dimension mismatch");
    ComplexMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] - o.data_[i];
    return m;
  }

  std::vector<std::complex<double>> operator*(const std::vector<std::complex<double>>& v) const {
    if (cols_ != v.size()) throw std::invalid_argument("dimension mismatch");
    std::vector<std::complex<double>> out(rows_, {0.0, 0.0});
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  double max_abs() const {
    double m = 0;
    for (const auto& z : data_) m = std::max(m, std::abs(z));
    return m;
  }

  /// max_{ij} |A_ij - conj(A_ji)|; zero exactly for Hermitian matrices.
  double hermitian_defect() const {
    if (rows_ != cols_) throw std::invalid_argument("square matrix required");
    double d = 0;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return d;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<std::complex<double>> data_;
};

inline double vec_inf_norm(const std::vector<std::complex<double>>& v) {
  double m = 0;
  for (const auto& z : v) m = std::max(m, std::abs(z));
  return m;
}

/// Solves A x = b when consistent, returning the least-norm solution (free
/// directions projected out); nullopt when b is outside the range of A.
inline std::optional<std::vector<std::complex<double>>> solve_least_norm(
    const ComplexMatrix& A, const std::vector<std::complex<double>>& b, double tol = 1e-10) {
  using C = std::complex<double>;
  std::size_t n = A.rows(), m = A.cols();
  if (b.size() != n) throw std::invalid_argument("dimension mismatch");
  ComplexMatrix w = A;
  std::vector<C> rhs = b;
  std::vector<std::size_t> col_of(m);
  for (std::size_t j = 0; j < m; ++j) col_of[j] = j;
  double scale = std::max(1.0, A.max_abs());
  double threshold = tol * scale;

  // full-pivot elimination
  std::size_t rank = 0;
  for (; rank < std::min(n, m); ++rank) {
    std::size_t pi = rank, pj = rank;
    double best = 0;
    for (std::size_t i = rank; i < n; ++i)
      for (std::size_t j = rank; j < m; ++j)
        if (std::abs(w(i, j)) > best) { best = std::abs(w(i, j)); pi = i; pj = j; }
    if (best <= threshold) break;
    // swap rows rank<->pi and columns rank<->pj
    for (std::size_t j = 0; j < m; ++j) std::swap(w(rank, j), w(pi, j));
    std::swap(rhs[rank], rhs[pi]);
    for (std::size_t i = 0; i < n; ++i) std::swap(w(i, rank), w(i, pj));
    std::swap(col_of[rank], col_of[pj]);
    for (std::size_t i = rank + 1; i < n; ++i) {
      C f = w(i, rank) / w(rank, rank);
      if (f == C{0.0, 0.0}) continue;
      w(i, rank) = {0.0, 0.0};
      for (std::size_t j = rank + 1; j < m; ++j) w(i, j) -= f * w(rank, j);
      rhs[i] -= f * rhs[rank];
    }
  }
  // consistency of the eliminated rows
  for (std::size_t i = rank; i < n; ++i)
    if (std::abs(rhs[i]) > threshold * 10 + tol) return std::nullopt;

  // particular solution with free variables zero (permuted coordinates)
  std::vector<C> xp(m, C{0.0, 0.0});
  for (std::size_t ii = rank; ii-- > 0;) {
    C acc = rhs[ii];
    for (std::size_t j = ii + 1; j < m; ++j) acc -= w(ii, j) * xp[j];
    xp[ii] = acc / w(ii, ii);
  }

  // nullspace basis: one vector per free column
  std::vector<std::vector<C>> nullspace;
  for (std::size_t f = rank; f < m; ++f) {
    std::vector<C> v(m, C{0.0, 0.0});
    v[f] = {1.0, 0.0};
    for (std::size_t ii = rank; ii-- > 0;) {
      C acc = -w(ii, f);
      for (std::size_t j = ii + 1; j < rank; ++j) acc -= w(ii, j) * v[j];
      v[ii] = acc / w(ii, ii);
    }
    nullspace.push_back(std::move(v));
  }
  // modified Gram-Schmidt, then project the particular solution
  std::vector<std::vector<C>> ortho;
  for (auto& v : nullspace) {
    for (const auto& q : ortho) {
      C dot{0.0, 0.0};
      for (std::size_t i = 0; i < m; ++i) dot += std::conj(q[i]) * v[i];
      for (std::size_t i = 0; i < m; ++i) v[i] -= dot * q[i];
    }
    double nrm = 0;
    for (const auto& z : v) nrm += std::norm(z);
    nrm = std::sqrt(nrm);
    if (nrm > 1e-14) {
      for (auto& z : v) z /= nrm;
      ortho.push_back(std::move(v));
    }
  }
  for (const auto& q : ortho) {
    C dot{0.0, 0.0};
    for (std::size_t i = 0; i < m; ++i) dot += std::conj(q[i]) * xp[i];
    for (std::size_t i = 0; i < m; ++i) xp[i] -= dot * q[i];
  }

  // undo the column permutation
  std::vector<C> x(m, C{0.0, 0.0});
  for (std::size_t j = 0; j < m; ++j) x[col_of[j]] = xp[j];
  return x;
}

/// Inverse by elimination with partial pivoting; throws on singular input.
inline ComplexMatrix inverse(const ComplexMatrix& A, double tol = 1e-12) {
  using C = std::complex<double>;
  if (A.rows() != A.cols()) throw std::invalid_argument("square matrix required");
  std::size_t n = A.rows();
  ComplexMatrix w = A;
  ComplexMatrix inv = ComplexMatrix::identity(n);
  double threshold = tol * std::max(1.0, A.max_abs());
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(w(i, k)) > std::abs(w(pivot, k))) pivot = i;
    if (std::abs(w(pivot, k)) <= threshold) throw SingularMatrixError("matrix is singular");
    if (pivot != k)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(w(k, j), w(pivot, j));
        std::swap(inv(k, j), inv(pivot, j));
      }
    C d = w(k, k);
    for (std::size_t j = 0; j < n; ++j) { w(k, j) /= d; inv(k, j) /= d; }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      C f = w(i, k);
      if (f == C{0.0, 0.0}) continue;
      for (std::size_t j = 0; j < n; ++j) {
        w(i, j) -= f * w(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

}  // namespace padiclab
