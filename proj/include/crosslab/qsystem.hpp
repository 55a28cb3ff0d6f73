// Q-systems (C*-Frobenius algebras) in finite-dimensional Hilbert spaces:
// validation, constructors from finite groups and multi-matrix C*-algebras
// via GNS, derived evaluation/coevaluation and Tomita operator, the twist
// T = m*m, and its crossing / Yang-Baxter / modular-invariance certificates.

#pragma once

#include "crosslab/modular.hpp"
#include "crosslab/report.hpp"
#include "crosslab/types.hpp"

#include <optional>
#include <vector>

namespace crosslab {

// Algebra object: dim N, multiplication m (N x N^2) and unit iota (N).
struct QSystem {
  Index dim = 0;
  Matrix m;
  Vector iota;
};

struct QSystemFlags {
  double d = 0.0;          // scalar of mm* when special
  bool special = false;    // mm* = d 1
  bool normalized = false; // iota* iota = 1
  bool irreducible = false;
  Index center_dim = 0;
};

// Per-axiom residuals for associativity, unitality, Frobenius, specialness
// and normalization; flags derived quantities.
VerificationReport validate(const QSystem& q, const Tolerances& tol = {});
QSystemFlags qsystem_flags(const QSystem& q, const Tolerances& tol = {});

struct DerivedData {
  Matrix ev;    // 1 x N^2, iota* m
  Matrix coev;  // N^2 x 1, ev*
  Involution s; // from the bilinear form ev(v (x) w) = <S v, w>
  Matrix twist; // m* m
};

// Throws InvolutionFailure when ev does not define an involution (signals a
// non-Frobenius input).
DerivedData derived_data(const QSystem& q, const Tolerances& tol = {});

// Certificates for T = m*m: crossing symmetry Cross_S(T) = T* = T, the
// exchange identity (T (x) 1)(1 (x) T) = (1 (x) T)(T (x) 1), Yang-Baxter,
// [T, Delta (x) Delta] = 0, and the involution law S m = m F (S (x) S).
VerificationReport twist_certificates(const QSystem& q, const Tolerances& tol = {});

// Jones projection E = d^{-1} coev ev of a special Q-system; E = E* = E^2 and
// Cross_S(1) = d E. Throws NotSpecial.
Matrix jones_projection(const QSystem& q, const Tolerances& tol = {});

// Rescale a C*-Frobenius algebra (associative, unital, Frobenius; mm* not
// necessarily scalar, iota not necessarily normalized) into a special
// normalized Q-system: with z = mm* (central, positive) and w = iota* z iota,
//   m  ->  w^{1/2} z^{-1/2} m,    iota  ->  w^{-1/2} z^{1/2} iota.
// The z factors cancel in ev = iota* m, so the derived involution is
// unchanged by the rescaling.
QSystem rescale_to_qsystem(const QSystem& q, const Tolerances& tol = {});

// Finite group as a validated Cayley table.
struct FiniteGroup {
  Index order = 0;
  std::vector<std::vector<int>> cayley;
  int identity = 0;
  std::vector<int> inverse;

  static FiniteGroup from_table(std::vector<std::vector<int>> table);
  static FiniteGroup cyclic(int n);
  static FiniteGroup symmetric(int n);  // S_n for small n

  int mul(int g, int h) const { return cayley[static_cast<size_t>(g)][static_cast<size_t>(h)]; }
  int inv(int g) const { return inverse[static_cast<size_t>(g)]; }
};

// C(G): pointwise multiplication w.r.t. the normalized L^2 inner product.
// The computational orthonormal basis is {|G|^{1/2} delta_g}.
QSystem functions_on_group(const FiniteGroup& g);

// L^1(G): convolution algebra with the non-normalized L^2 inner product;
// basis {delta_g}, unit delta_e.
QSystem group_algebra(const FiniteGroup& g);

// Twist action of C(G) in the delta basis: delta_g (x) delta_h ->
// |G| delta_g(h) delta_g (x) delta_g, exposed through explicit rescaling of
// the orthonormal-basis twist.
Matrix functions_twist_delta_basis(const FiniteGroup& g);

// Multi-matrix C*-algebra A = (+)_alpha M_{n_alpha} with a faithful state
// omega = Tr(rho .), rho = (+)_alpha rho_alpha.
struct MultiMatrixAlgebra {
  std::vector<Index> blocks;
  std::vector<Matrix> rho;
};

void validate_algebra(const MultiMatrixAlgebra& a, const Tolerances& tol = {});

// GNS construction over omega: Hilbert space (+)_alpha C^{n_alpha} (x)
// C^{n_alpha}, multiplication transported from block matrix products, unit
// the class of 1_A. The derived S implements the GNS Tomita operator
// S(x Omega) = x^dagger Omega.
QSystem from_cstar(const MultiMatrixAlgebra& a, const Tolerances& tol = {});

// Closed form of the twist without the GNS detour: x_a (x) y_b ->
// delta_{ab} (x_a y_b (x) rho_b^{-1}) F_a; equals m*m of from_cstar.
Matrix twist_of_multimatrix(const MultiMatrixAlgebra& a, const Tolerances& tol = {});

// Tr(rho_alpha^{-1}) per block; specialness holds iff constant.
std::vector<double> block_inverse_traces(const MultiMatrixAlgebra& a, const Tolerances& tol = {});

// GNS coordinates of an algebra element (basis e_{alpha,i,j} in block-major,
// row-major order, built on the eigenbasis of each rho_alpha).
Vector gns_coordinates(const MultiMatrixAlgebra& a, const std::vector<Matrix>& x,
                       const Tolerances& tol = {});

}  // namespace crosslab
