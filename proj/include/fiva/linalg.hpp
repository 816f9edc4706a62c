// Complex matrix kernels for small (dim <= 16) Hermitian problems:
// eigendecomposition, inverse matrix square root, inverse, norms. All
// summations run in a fixed index order so repeated calls are bit-identical.
#pragma once

#include <utility>
#include <vector>

#include "fiva/common.hpp"

namespace fiva {

// Dense square complex matrix, row-major.
struct CMat {
  int n = 0;
  std::vector<cplx> a;

  CMat() = default;
  explicit CMat(int dim) : n(dim), a(static_cast<std::size_t>(dim) * dim) {}

  static CMat identity(int dim);

  cplx& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  const cplx& operator()(int i, int j) const {
    return a[static_cast<std::size_t>(i) * n + j];
  }
};

CMat matmul(const CMat& lhs, const CMat& rhs);
CMat adjoint(const CMat& m);
CVec matvec(const CMat& m, const CVec& x);
double frob_norm(const CMat& m);
double frob_dist(const CMat& lhs, const CMat& rhs);
bool all_finite(const CMat& m);

// Validated Hermitian matrix. Construction checks symmetry within 1e-12
// relative tolerance, then enforces it exactly (off-diagonal averaging,
// diagonal imaginary parts zeroed).
class HermitianMatrix {
 public:
  static HermitianMatrix from(const CMat& m);

  int dim() const { return mat_.n; }
  const CMat& mat() const { return mat_; }

 private:
  explicit HermitianMatrix(CMat m) : mat_(std::move(m)) {}
  CMat mat_;
};

// Full decomposition; eigenvalues ascending, column i of `eigenvectors`
// paired with eigenvalue i. Every eigenvector is unit norm with its
// largest-modulus component made real and non-negative.
struct EigenDecomposition {
  std::vector<double> eigenvalues;
  CMat eigenvectors;
};

EigenDecomposition eigh(const HermitianMatrix& m);

std::pair<double, CVec> smallest_eigvec(const HermitianMatrix& m);

// U diag(max(eig, eig_floor_ratio * eig_max))^{-1/2} U^H. Hermitian result.
CMat inv_sqrt(const HermitianMatrix& m, double eig_floor_ratio = 1e-10);
CMat inv_sqrt_from_eig(const EigenDecomposition& eig, double eig_floor_ratio);

CMat inverse(const CMat& m);

// Solves m x = b by LU with partial pivoting.
CVec solve(const CMat& m, const CVec& b);

// log|det m|; returns -infinity for a numerically singular matrix.
double log_abs_det(const CMat& m);

}  // namespace fiva
