#pragma once

#include <cmath>
#include <utility>

#include "qgame/cmatrix.hpp"
#include "qgame/errors.hpp"

namespace qgame {

// Validation tolerances for quantum states.
inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kPsdTol = 1e-8;

// A density matrix: square, Hermitian (1e-10), unit trace (1e-12), PSD
// (eigenvalues >= -1e-8). Validated on construction, immutable afterwards.
class DensityMatrix {
 public:
  explicit DensityMatrix(CMatrix m) : mat_(std::move(m)) {
    if (!mat_.is_square()) throw DimensionError("DensityMatrix: not square");
    if (!mat_.all_finite()) throw DomainError("DensityMatrix: non-finite entry");
    if (!is_hermitian(mat_, kHermitianTol))
      throw DomainError("DensityMatrix: not Hermitian");
    if (std::abs(trace(mat_) - Complex{1.0, 0.0}) > kTraceTol)
      throw DomainError("DensityMatrix: trace != 1");
    if (!is_positive_semidefinite(mat_, kPsdTol))
      throw DomainError("DensityMatrix: negative eigenvalue");
  }

  const CMatrix& mat() const { return mat_; }
  std::size_t dim() const { return mat_.rows(); }

 private:
  CMatrix mat_;
};

}  // namespace qgame
