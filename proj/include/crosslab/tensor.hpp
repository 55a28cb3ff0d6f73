// Dense complex tensor algebra: Kronecker products, the tensor flip,
// Hermitian spectral calculus, Hilbert-Schmidt inner products and
// real-linear nullspaces.
//
// Index convention, fixed globally: the product basis of C^n (x) C^m is
// ordered e_i (x) e_j  ->  i*m + j (0-based, row-major). All modules rely
// on this ordering.

#pragma once

#include "crosslab/types.hpp"

#include <functional>
#include <vector>

namespace crosslab {

// Kronecker product with (a (x) b)(v (x) w) = av (x) bw under the global
// index convention.
Matrix kron(const Matrix& a, const Matrix& b);

// Tensor flip F on C^n (x) C^n: F(v (x) w) = w (x) v. F^2 = 1, F* = F.
Matrix flip(Index n);

// V diag(lambda^z) V* for Hermitian positive definite h = V diag(lambda) V*,
// with lambda^z = exp(z ln lambda) on the principal branch.
// Throws NotHermitian / NotPositiveDefinite.
Matrix herm_power(const Matrix& h, Complex z, const Tolerances& tol = {});

// Eigendecomposition of a Hermitian positive definite matrix, reusable for
// repeated fractional powers of the same operator.
struct HermEig {
  RealVector eigenvalues;
  Matrix eigenvectors;

  Matrix power(Complex z) const;
};
HermEig herm_eig(const Matrix& h, const Tolerances& tol = {});

// Tr(a* b). Throws ShapeMismatch.
Complex hs_inner(const Matrix& a, const Matrix& b);

inline double hs_norm(const Matrix& a) { return a.norm(); }

// v (x) w under the global index convention.
Vector tensor_product(const Vector& v, const Vector& w);

// Row-major vectorization, inverse of devectorize.
Vector vectorize(const Matrix& m);
Matrix devectorize(const Vector& v, Index rows, Index cols);

// Realification C^m ~ R^{2m}: z -> (Re z ; Im z).
RealVector realify(const Vector& z);
Vector unrealify(const RealVector& x);

// A real-linear map on the space of rows x cols complex matrices
// (conjugation allowed), evaluated entrywise.
using RealLinearMap = std::function<Matrix(const Matrix&)>;

// The 2*out_rows*out_cols x 2*rows*cols real matrix of a real-linear map,
// built by applying it to the realified standard basis.
RealMatrix real_matrix_of(const RealLinearMap& map, Index rows, Index cols);

// Real-orthonormal basis of the kernel of a real-linear map on rows x cols
// complex matrices; rank decided by singular values below
// rank_scale * sigma_max.
std::vector<Matrix> real_nullspace(const RealLinearMap& map, Index rows, Index cols,
                                   const Tolerances& tol = {});
std::vector<Matrix> real_nullspace(const RealMatrix& map, Index rows, Index cols,
                                   const Tolerances& tol = {});

}  // namespace crosslab
