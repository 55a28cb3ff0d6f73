// Antilinear involutions S = J Delta^{1/2}, their polar decomposition,
// standard subspaces H = ker(S - 1), the vector xi_S with its rank-one
// operator P_S, and endomorphism membership tests for E(H).

#pragma once

#include "crosslab/antilinear.hpp"
#include "crosslab/tensor.hpp"
#include "crosslab/types.hpp"

namespace crosslab {

// Validated antilinear involution with cached polar parts (J, Delta), the
// eigendecomposition of Delta, and a J-fixed orthonormal basis.
//
// Validated invariants: S^2 = 1, J antiunitary involution, Delta positive
// definite, J Delta J = Delta^{-1}, S = J Delta^{1/2}.
class Involution {
 public:
  static Involution from_parts(const AntilinearOp& j, const Matrix& delta,
                               const Tolerances& tol = {});
  static Involution from_matrix(const AntilinearOp& s, const Tolerances& tol = {});

  // Plain conjugation: S = J = conj, Delta = 1.
  static Involution conjugation(Index n, const Tolerances& tol = {}) {
    return from_parts(AntilinearOp::conjugation(n), Matrix::Identity(n, n), tol);
  }

  Index dim() const { return s_.dim(); }
  const AntilinearOp& s() const { return s_; }
  AntilinearOp s_star() const { return s_.adjoint(); }
  const AntilinearOp& j() const { return j_; }
  const Matrix& delta() const { return delta_; }

  // Delta^z through the cached spectral decomposition.
  Matrix delta_power(Complex z) const { return delta_eig_.power(z); }

  // Columns form an orthonormal basis {f_n} with J f_n = f_n.
  const Matrix& j_basis() const { return j_basis_; }

  bool antiunitary(double tol = 1e-10) const {
    return (delta_ - Matrix::Identity(dim(), dim())).norm() <= tol * dim();
  }

 private:
  Involution(AntilinearOp s, AntilinearOp j, Matrix delta, HermEig delta_eig, Matrix j_basis)
      : s_(std::move(s)),
        j_(std::move(j)),
        delta_(std::move(delta)),
        delta_eig_(std::move(delta_eig)),
        j_basis_(std::move(j_basis)) {}

  AntilinearOp s_;
  AntilinearOp j_;
  Matrix delta_;
  HermEig delta_eig_;
  Matrix j_basis_;
};

// Orthonormal basis (w.r.t. Re<.,.>) of a J-fixed real subspace, built by the
// averaging trick v -> v + Jv (or i(v - Jv)) followed by Gram-Schmidt over R.
Matrix j_fixed_basis(const AntilinearOp& j, const Tolerances& tol = {});

// Real subspace H = ker(S - 1) with a real-orthonormal basis as columns.
class StandardSubspace {
 public:
  static StandardSubspace of(const Involution& s, const Tolerances& tol = {});

  Index dim() const { return basis_.rows(); }
  const Matrix& real_basis() const { return basis_; }

  // Orthogonal projection onto H w.r.t. the real inner product Re<.,.>.
  Vector project(const Vector& v) const;
  double distance(const Vector& v) const { return (v - project(v)).norm(); }

  // Rebuild the Tomita operator S(h1 + i h2) = h1 - i h2 from the basis.
  // Conditioning of the real basis matrix is monitored; a nearly singular
  // basis throws DimensionMismatch.
  AntilinearOp tomita(const Tolerances& tol = {}) const;

 private:
  explicit StandardSubspace(Matrix basis) : basis_(std::move(basis)) {}
  Matrix basis_;  // N columns in C^N
};

// xi_S = sum_n e_n (x) S e_n; basis independent; ||xi_S||^2 = Tr(Delta).
Vector xi_vector(const Involution& s);

// P_S = |xi_S><xi_S|, acting as P_S(v (x) w) = <Sv, w> xi_S.
Matrix rank_one_ps(const Involution& s);

// Endomorphism test for V in E(H) = {V : VH subset H}. Runs both the
// geometric test (projection residuals of V h onto H) and the algebraic one
// (||SVS - V||); the two must agree.
struct EndoCheck {
  bool member = false;
  double geometric_residual = 0.0;
  double algebraic_residual = 0.0;
};
EndoCheck is_endomorphism(const Matrix& v, const StandardSubspace& h, const Involution& s,
                          const Tolerances& tol = {});

}  // namespace crosslab
