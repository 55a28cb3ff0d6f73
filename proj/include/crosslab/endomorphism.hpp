// Correspondence between crossing-symmetric operators and standard-subspace
// endomorphisms: extraction V_{psi1,psi2}(T), reconstruction of T from an
// endomorphism family, and the spectral-sum twist constructor.

#pragma once

#include "crosslab/modular.hpp"
#include "crosslab/types.hpp"

#include <functional>
#include <vector>

namespace crosslab {

// Left annihilator a_L(psi): H (x) H -> H, psi1 (x) psi2 -> <psi, psi1> psi2,
// as the N x N^2 matrix (psi* (x) 1).
Matrix a_left(const Vector& psi);

// Right creator a_R*(psi): H -> H (x) H, phi -> phi (x) psi, as (1 (x) psi).
Matrix a_right_star(const Vector& psi);

// V_{psi1,psi2}(T) = (a_L(psi1) T a_R*(psi2) + a_L(psi2) T a_R*(psi1)) / 2.
// For crossing-symmetric T the value is an endomorphism of H_S.
Matrix extract_v(const Matrix& t, const Vector& psi1, const Vector& psi2);

// R-bilinear symmetric endomorphism-valued map on a basis grid. The real
// basis of C^N used for the grid is {e_0..e_{N-1}, i e_0..i e_{N-1}}.
class EndoFamily {
 public:
  using Assign = std::function<Matrix(const Vector&, const Vector&)>;

  static EndoFamily from_operator(const Matrix& t);
  static EndoFamily from_function(Index n, const Assign& assign);

  Index base_dim() const { return n_; }

  // Grid accessor; x, y in [0, 2N).
  const Matrix& value(Index x, Index y) const;

  // R-bilinear extension to arbitrary vectors.
  Matrix at(const Vector& psi1, const Vector& psi2) const;

  // Grid realization of the real basis vector with index x.
  Vector basis_vector(Index x) const;

  // Checks R-bilinearity consistency V(i psi1, psi2) = -V(psi1, i psi2),
  // symmetry, and (when given modular data) endomorphism membership of every
  // grid value. Throws InvariantViolation on failure.
  void validate(const Tolerances& tol = {}, const StandardSubspace* h = nullptr,
                const Involution* s = nullptr) const;

 private:
  EndoFamily(Index n, std::vector<Matrix> grid) : n_(n), grid_(std::move(grid)) {}
  Index n_ = 0;
  std::vector<Matrix> grid_;  // (2N)^2 entries, index x * 2N + y
};

// Assembles T from the family via the sesquilinear form
//   <psi1 (x) xi, T(eta (x) psi2)> = <xi, (V(psi1,psi2) + i V(i psi1, psi2)) eta>.
// Round trip contract: extract_v(reconstruct_t(fam), f_a, f_b) = fam(f_a, f_b).
Matrix reconstruct_t(const EndoFamily& fam);

// T = (sum_k P_k (x) V_k) F for an orthogonal resolution {P_k} of the
// identity and endomorphisms V_k of H_S; the result is S-crossing symmetric.
// Throws NotAResolution / NotEndomorphism.
Matrix spectral_sum_twist(const std::vector<Matrix>& projections,
                          const std::vector<Matrix>& endomorphisms, const Involution& s,
                          const Tolerances& tol = {});

// The polarization test set {e_a} U {e_a + e_b} U {e_a + i e_b}: if V_psi(T)
// is an endomorphism for every psi in the set, T is crossing symmetric.
std::vector<Vector> endomorphism_test_set(Index n);

}  // namespace crosslab
