#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "qgame/cmatrix.hpp"
#include "qgame/density.hpp"
#include "qgame/errors.hpp"

namespace qgame {

inline constexpr double kKrausCompletenessTol = 1e-12;
inline constexpr std::size_t kMaxChannelQubits = 4;

// One channel traversal: dephasing probability p and degree of memory mu,
// both in [0, 1].
struct DephasingParams {
  DephasingParams(double p_, double mu_) : p(p_), mu(mu_) {
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("DephasingParams: p outside [0,1]");
    if (!(mu >= 0.0 && mu <= 1.0)) throw DomainError("DephasingParams: mu outside [0,1]");
  }
  double p;
  double mu;
};

// An operator-sum channel {A_k}. All operators square, same dimension, and
// sum_k A_k^dagger A_k = I to 1e-12 (checked on construction).
class KrausSet {
 public:
  explicit KrausSet(std::vector<CMatrix> ops) : ops_(std::move(ops)) {
    if (ops_.empty()) throw DomainError("KrausSet: no operators");
    dim_ = ops_.front().rows();
    CMatrix sum(dim_, dim_);
    for (const auto& a : ops_) {
      if (!a.is_square() || a.rows() != dim_)
        throw DimensionError("KrausSet: operators must be square and same size");
      sum = sum + adjoint(a) * a;
    }
    if (max_abs_diff(sum, CMatrix::identity(dim_)) > kKrausCompletenessTol)
      throw DomainError("KrausSet: completeness sum A^dagger A != I");
  }

  std::size_t size() const { return ops_.size(); }
  std::size_t dim() const { return dim_; }
  const CMatrix& operator[](std::size_t k) const { return ops_[k]; }
  auto begin() const { return ops_.begin(); }
  auto end() const { return ops_.end(); }

 private:
  std::vector<CMatrix> ops_;
  std::size_t dim_;
};

// p = 1 - e^{-lambda}, mapping the integrated phase-kick rate to the
// per-traversal dephasing probability.
inline double lambda_to_p(double lambda) {
  if (lambda < 0.0) throw DomainError("lambda_to_p: lambda must be >= 0");
  return -std::expm1(-lambda);
}

// Single-qubit dephasing: A0 = sqrt(1-p/2) I, A1 = sqrt(p/2) sigma_z.
// Off-diagonal elements of a qubit state decay by (1-p) per traversal.
inline KrausSet single_qubit_dephasing_kraus(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("dephasing: p outside [0,1]");
  std::vector<CMatrix> ops;
  ops.push_back(Complex{std::sqrt(1.0 - p / 2.0), 0.0} * CMatrix::identity(2));
  ops.push_back(Complex{std::sqrt(p / 2.0), 0.0} * pauli_z());
  return KrausSet(std::move(ops));
}

// Uncorrelated dephasing on n qubits: the 2^n tensor products of the
// single-qubit operators (leftmost factor = highest index bit).
inline KrausSet n_qubit_product_kraus(double p, std::size_t n) {
  if (n < 1) throw DomainError("n_qubit_product_kraus: n must be >= 1");
  if (n > kMaxChannelQubits) throw ResourceError("n_qubit_product_kraus: n > 4");
  const KrausSet single = single_qubit_dephasing_kraus(p);
  std::vector<CMatrix> ops;
  ops.reserve(std::size_t{1} << n);
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    CMatrix op = single[(mask >> (n - 1)) & 1];
    for (std::size_t bit = n - 1; bit-- > 0;) op = tensor_product(op, single[(mask >> bit) & 1]);
    ops.push_back(std::move(op));
  }
  return KrausSet(std::move(ops));
}

// Two-qubit dephasing correlated with memory of degree mu:
//   A_ij = sqrt(q_i [(1-mu) q_j + mu delta_ij]) sigma_i x sigma_j,
// i,j in {0,z}, with q_0 = 1-p/2, q_1 = p/2 (the single-qubit weights).
// mu = 0 reproduces the two-qubit product channel; mu = 1 leaves only the
// same-Pauli pair. Zero-weight operators are kept as zero matrices so the
// set always has four entries in (0,0),(0,z),(z,0),(z,z) order.
inline KrausSet correlated_dephasing_kraus(const DephasingParams& params) {
  const double q[2] = {1.0 - params.p / 2.0, params.p / 2.0};
  const CMatrix* sigma[2] = {nullptr, nullptr};
  const CMatrix id2 = CMatrix::identity(2);
  sigma[0] = &id2;
  sigma[1] = &pauli_z();
  std::vector<CMatrix> ops;
  ops.reserve(4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const double w = q[i] * ((1.0 - params.mu) * q[j] + (i == j ? params.mu : 0.0));
      ops.push_back(Complex{std::sqrt(w), 0.0} * tensor_product(*sigma[i], *sigma[j]));
    }
  return KrausSet(std::move(ops));
}

// rho -> sum_k A_k rho A_k^dagger. Trace, Hermiticity and positivity are
// re-validated by the DensityMatrix constructor.
inline DensityMatrix apply_channel(const DensityMatrix& rho, const KrausSet& k) {
  if (rho.dim() != k.dim()) throw DimensionError("apply_channel: dimension mismatch");
  CMatrix out(rho.dim(), rho.dim());
  for (const auto& a : k) out = out + a * rho.mat() * adjoint(a);
  return DensityMatrix(std::move(out));
}

// Per-traversal scaling of double-flip coherences (e.g. |00><11|):
// (1-mu)(1-p)^2 + mu. Single-flip coherences scale by (1-p) instead.
inline double coherence_decay_factor(const DephasingParams& params) {
  const double one_minus_p = 1.0 - params.p;
  return (1.0 - params.mu) * one_minus_p * one_minus_p + params.mu;
}

}  // namespace qgame
