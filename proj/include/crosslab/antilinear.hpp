// Antilinear operators on C^n, stored as the matrix M of x -> M conj(x) in
// the computational basis.
//
// Composition rules (derived from the storage convention and unit-tested):
//   antilinear * antilinear = linear, with matrix M1 conj(M2)
//   antilinear * linear     = antilinear, with matrix M1 conj(L)
//   linear     * antilinear = antilinear, with matrix L M2
//   adjoint of antilinear   = antilinear with matrix M^T
// where the adjoint satisfies <x, A y> = <y, A* x>.

#pragma once

#include "crosslab/types.hpp"

namespace crosslab {

class AntilinearOp {
 public:
  explicit AntilinearOp(Matrix m) : mat_(std::move(m)) { require_square(mat_, "AntilinearOp"); }

  // Plain entrywise conjugation.
  static AntilinearOp conjugation(Index n) { return AntilinearOp(Matrix::Identity(n, n)); }

  const Matrix& matrix() const { return mat_; }
  Index dim() const { return mat_.rows(); }

  Vector operator()(const Vector& x) const { return mat_ * x.conjugate(); }
  Matrix apply_columns(const Matrix& x) const { return mat_ * x.conjugate(); }

  AntilinearOp adjoint() const { return AntilinearOp(mat_.transpose()); }

  // A1 A2 as a linear map.
  friend Matrix operator*(const AntilinearOp& a, const AntilinearOp& b) {
    return a.mat_ * b.mat_.conjugate();
  }
  friend AntilinearOp operator*(const AntilinearOp& a, const Matrix& l) {
    return AntilinearOp(a.mat_ * l.conjugate());
  }
  friend AntilinearOp operator*(const Matrix& l, const AntilinearOp& a) {
    return AntilinearOp(l * a.mat_);
  }

  // A (x) A on C^n (x) C^n, still antilinear.
  friend AntilinearOp tensor(const AntilinearOp& a, const AntilinearOp& b);

  // ||A^2 - 1|| and the unitarity defect of M, used by validation code.
  double involution_defect() const {
    return (mat_ * mat_.conjugate() - Matrix::Identity(dim(), dim())).norm();
  }
  double unitarity_defect() const {
    return (mat_.adjoint() * mat_ - Matrix::Identity(dim(), dim())).norm();
  }

 private:
  Matrix mat_;
};

}  // namespace crosslab
