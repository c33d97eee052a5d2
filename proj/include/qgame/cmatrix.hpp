#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "qgame/errors.hpp"

namespace qgame {

using Complex = std::complex<double>;

// Dense row-major complex matrix. Sizes here are tiny (2x2 .. 16x16), so
// everything is value-semantic and unoptimized on purpose.
class CMatrix {
 public:
  CMatrix() : rows_(0), cols_(0) {}

  CMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Complex{0.0, 0.0}) {
    if (rows == 0 || cols == 0) throw DimensionError("CMatrix: zero dimension");
  }

  CMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    if (rows_ == 0) throw DimensionError("CMatrix: empty initializer");
    cols_ = rows.begin()->size();
    if (cols_ == 0) throw DimensionError("CMatrix: empty row");
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DimensionError("CMatrix: ragged initializer");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static CMatrix identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  static CMatrix column(const std::vector<Complex>& v) {
    CMatrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool all_finite() const {
    for (const auto& z : data_)
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
  }

  friend CMatrix operator+(const CMatrix& a, const CMatrix& b) {
    require_same_shape(a, b, "operator+");
    CMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
    return out;
  }

  friend CMatrix operator-(const CMatrix& a, const CMatrix& b) {
    require_same_shape(a, b, "operator-");
    CMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
    return out;
  }

  friend CMatrix operator*(const Complex& s, const CMatrix& a) {
    CMatrix out = a;
    for (auto& z : out.data_) z *= s;
    return out;
  }

  friend CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("operator*: inner dimensions differ");
    CMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Complex aik = a(i, k);
        if (aik == Complex{0.0, 0.0}) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

 private:
  static void require_same_shape(const CMatrix& a, const CMatrix& b, const char* op) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw DimensionError(std::string(op) + ": shapes differ");
  }

  std::size_t rows_, cols_;
  std::vector<Complex> data_;
};

// Kronecker product; block (i,j) of the result equals a(i,j) * b.
inline CMatrix tensor_product(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ia = 0; ia < a.rows(); ++ia)
    for (std::size_t ja = 0; ja < a.cols(); ++ja) {
      const Complex f = a(ia, ja);
      if (f == Complex{0.0, 0.0}) continue;
      for (std::size_t ib = 0; ib < b.rows(); ++ib)
        for (std::size_t jb = 0; jb < b.cols(); ++jb)
          out(ia * b.rows() + ib, ja * b.cols() + jb) = f * b(ib, jb);
    }
  return out;
}

inline CMatrix adjoint(const CMatrix& a) {
  CMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = std::conj(a(i, j));
  return out;
}

inline Complex trace(const CMatrix& a) {
  if (!a.is_square()) throw DimensionError("trace: matrix not square");
  Complex t{0.0, 0.0};
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

inline double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("max_abs_diff: shapes differ");
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

// max entrywise |a - a^dagger|; a passes the Hermiticity check iff <= tol.
inline bool is_hermitian(const CMatrix& a, double tol = 1e-10) {
  if (!a.is_square()) return false;
  return max_abs_diff(a, adjoint(a)) <= tol;
}

// Eigenvalues of a (near-)Hermitian matrix by cyclic complex Jacobi rotations.
// The input is symmetrized first; returns eigenvalues sorted ascending.
inline std::vector<double> hermitian_eigenvalues(const CMatrix& a) {
  if (!a.is_square()) throw DimensionError("hermitian_eigenvalues: matrix not square");
  const std::size_t n = a.rows();
  CMatrix h = Complex{0.5, 0.0} * (a + adjoint(a));

  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, std::abs(h(i, j)));
  const double stop = 1e-15 * std::max(scale, 1.0);

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off = std::max(off, std::abs(h(p, q)));
    if (off <= stop) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex hpq = h(p, q);
        const double r = std::abs(hpq);
        if (r <= stop) continue;
        // Unitary G: G[p][p]=c, G[p][q]=s*e^{i phi}, G[q][p]=-s*e^{-i phi},
        // G[q][q]=c, chosen so (G^dagger h G)[p][q] = 0.
        const double phi = std::arg(hpq);
        const double app = h(p, p).real(), aqq = h(q, q).real();
        const double t = 0.5 * std::atan2(-2.0 * r, app - aqq);
        const double c = std::cos(t), s = std::sin(t);
        const Complex eip = std::polar(1.0, phi);

        for (std::size_t k = 0; k < n; ++k) {  // h <- h G on columns p,q
          const Complex hkp = h(k, p), hkq = h(k, q);
          h(k, p) = c * hkp - s * std::conj(eip) * hkq;
          h(k, q) = s * eip * hkp + c * hkq;
        }
        for (std::size_t k = 0; k < n; ++k) {  // h <- G^dagger h on rows p,q
          const Complex hpk = h(p, k), hqk = h(q, k);
          h(p, k) = c * hpk - s * eip * hqk;
          h(q, k) = s * std::conj(eip) * hpk + c * hqk;
        }
      }
    }
  }

  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = h(i, i).real();
  std::sort(ev.begin(), ev.end());
  return ev;
}

// PSD check: smallest eigenvalue >= -tol.
inline bool is_positive_semidefinite(const CMatrix& a, double tol = 1e-10) {
  const auto ev = hermitian_eigenvalues(a);
  return ev.front() >= -tol;
}

inline const CMatrix& pauli_z() {
  static const CMatrix sz{{Complex{1.0, 0.0}, Complex{0.0, 0.0}},
                          {Complex{0.0, 0.0}, Complex{-1.0, 0.0}}};
  return sz;
}

}  // namespace qgame
