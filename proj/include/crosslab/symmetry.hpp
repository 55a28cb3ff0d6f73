// Group-invariant crossing-symmetric operators: brute-force solution spaces
// {T : Cross_S(T) = T*, [T, U (x) U] = 0}, the invariance exchange lemmas,
// and the O(N) classification cases.

#pragma once

#include "crosslab/crossing.hpp"
#include "crosslab/modular.hpp"
#include "crosslab/report.hpp"
#include "crosslab/types.hpp"

#include <vector>

namespace crosslab {

struct SymmetryConstraint {
  std::vector<Matrix> generators;  // unitary N x N
  Involution involution;
};

// Real-orthonormal basis of the space of crossing-symmetric operators
// commuting with U (x) U for every generator, via the stacked real-linear
// nullspace of T -> (Cross_S(T) - T*, [T, U_k (x) U_k]).
std::vector<Matrix> invariant_crossing_space(const SymmetryConstraint& c,
                                             const Tolerances& tol = {});

// O(N) involution in the Delta-eigenbasis realization: Delta is diagonal
// with the given spectrum (eigenvalues come in pairs lambda, 1/lambda plus
// ones), and J swaps paired eigenvectors with conjugation. Spectrum entries
// must be inversion-symmetric as a multiset.
Involution o_n_involution(Index n, const std::vector<double>& spectrum,
                          const Tolerances& tol = {});

// Generators of the J-orthogonal group O(N) = {U unitary : [U, J] = 0}:
// the defining real representation in the J-fixed basis, realized as
// rotations by irrational angles plus one reflection.
std::vector<Matrix> o_n_generators(const Involution& s);

// The classification target: expected real dimension and a spanning set of
// the invariant space, by case (Delta = 1; Delta != 1 and N = 2;
// Delta != 1 and N > 2).
struct InvariantSpaceCase {
  Index expected_dim = 0;
  std::vector<Matrix> spanning;
};
InvariantSpaceCase o_n_expected(Index n, bool delta_trivial, const Involution& s);

// The 4 x 4 matrix of i (P_J - 1) for N = 2 in the Delta-eigenbasis; crossing
// symmetric for S = J Delta^{1/2} with Delta = diag(lambda, 1/lambda) and a
// Yang-Baxter solution.
Matrix klr_matrix();

// Mutual span residuals: each lhs element projected onto span_R(rhs) and
// vice versa; returns the largest projection defect.
double mutual_span_residual(const std::vector<Matrix>& lhs, const std::vector<Matrix>& rhs);

// Exchange lemmas for [T, U (x) U] = 0:
//  (a) (S*US* (x) U) Cross_S(T) (U* (x) S*U*S*) = Cross_S(T)
//  (b) for crossing-symmetric T: T = (1 (x) SUSU*) T (USU*S (x) 1)
//  (d) for Cross_S(T) = T and [T, Delta (x) Delta] = 0:
//      F (J (x) J) T (J (x) J) F = T
// plus [V_psi(T), U] = 0 for eigenvectors psi of U.
// Throws PreconditionFailed if [T, U (x) U] != 0.
VerificationReport exchange_lemma_checks(const Involution& s, const Matrix& t, const Matrix& u,
                                         const Tolerances& tol = {});

}  // namespace crosslab
