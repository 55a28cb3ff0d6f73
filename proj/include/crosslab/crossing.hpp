// The crossing map Cross_S on operators of H (x) H, its inverse, the
// operator-space modular objects S^, J^, Delta^, crossing-symmetry tests and
// the KMS boundary-condition verifier.
//
// Matrix-element conventions: T^{jl}_{ik} = <e_j (x) e_l, T(e_i (x) e_k)>,
// and the crossed version is fixed by
//   <a (x) b, Cross_S(T)(c (x) d)> = <b (x) S* e_d, T(S e_a (x) e_c)>.

#pragma once

#include "crosslab/modular.hpp"
#include "crosslab/report.hpp"
#include "crosslab/types.hpp"

#include <array>
#include <vector>

namespace crosslab {

// Reference implementation: every matrix element evaluated from the defining
// quadratic form. The single source of truth for all crossing computations.
Matrix cross_oracle(const Involution& s, const Matrix& t);

// Structural implementation: rotate indices in a J-fixed basis, then dress
// with the modular operator, Cross_S(T) = (Delta^{1/2} (x) 1) Cross_J(T)
// (1 (x) Delta^{-1/2}). Must agree with cross_oracle.
Matrix cross_fast(const Involution& s, const Matrix& t);

// Cross_S^{-1}(T) = Cross_S(T*)*.
Matrix cross_inverse(const Involution& s, const Matrix& t);

struct SymmetryResidual {
  bool symmetric = false;
  double residual = 0.0;
};

// Residual of Cross_S(T) - T* relative to max(1, ||T||_F).
SymmetryResidual is_crossing_symmetric(const Involution& s, const Matrix& t,
                                       const Tolerances& tol = {});

// Operator-space modular objects: S^(T) = Cross_S(T)*, J^(T) = Cross_J(T)*,
// Delta^_alpha(T) = (1 (x) Delta^alpha) T (Delta^{-alpha} (x) 1). S^ and J^
// are antilinear involutions with S^ = J^ o Delta^_{1/2} = Delta^_{-1/2} o J^.
Matrix hat_s(const Involution& s, const Matrix& t);
Matrix hat_j(const Involution& s, const Matrix& t);
Matrix hat_delta(const Involution& s, const Matrix& t, double alpha);

// Twisted conjugations entering the exchange relations.
Matrix delta_in(const Involution& s, const Matrix& t, double alpha);   // (1 (x) D^a) T (D^-a (x) 1)
Matrix delta_out(const Involution& s, const Matrix& t, double alpha);  // (D^a (x) 1) T (1 (x) D^-a)

// Symmetrize into the crossing-symmetric real subspace: (T + S^(T)) / 2.
Matrix symmetrize_crossing(const Involution& s, const Matrix& t);

// Verifies the power and exchange structure of the crossing map:
// Cross^4(T) = (D (x) D) T (D^-1 (x) D^-1), the Cross^2 formula,
// the inverse relation, and the in/out exchange relations at the given alpha.
VerificationReport cross_power_checks(const Involution& s, const Matrix& t,
                                      const std::vector<double>& alphas = {0.5, -0.3},
                                      const Tolerances& tol = {});

// KMS boundary condition: the analytic continuation of
//   t -> <psi1 (x) psi2, (1 (x) D^-it) T (D^it (x) 1) psi3 (x) psi4>
// at t + i/2 equals the crossed-side expression. Both sides are evaluated
// independently through complex powers of Delta.
VerificationReport kms_boundary_check(const Involution& s, const Matrix& t,
                                      const std::vector<double>& ts,
                                      const std::array<Vector, 4>& psi,
                                      const Tolerances& tol = {});

// Both boundary values as a pair, for direct inspection.
std::pair<Complex, Complex> kms_boundary_values(const Involution& s, const Matrix& t, double time,
                                                const std::array<Vector, 4>& psi);

// The antilinear map S^ realized as a matrix on vectorized operator space
// (vec(S^(T)) = M conj(vec T)); its transpose is the Hilbert-Schmidt adjoint.
Matrix hat_s_big_matrix(const Involution& s);

}  // namespace crosslab
