#include "crosslab/modular.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <vector>

namespace crosslab {

namespace {

Matrix sqrt_of(const HermEig& eig) { return eig.power(0.5); }

void check_modular_relation(const AntilinearOp& j, const Matrix& delta, const HermEig& eig,
                            double tol) {
  // J Delta J as a linear map: M_J conj(Delta) conj(M_J).
  const Matrix jdj = j.matrix() * delta.conjugate() * j.matrix().conjugate();
  const Matrix inv = eig.power(-1.0);
  if ((jdj - inv).norm() > tol * std::max(1.0, inv.norm())) {
    throw InvalidModularRelation("J Delta J != Delta^{-1}");
  }
}

}  // namespace

Matrix j_fixed_basis(const AntilinearOp& j, const Tolerances& tol) {
  const Index n = j.dim();
  // Averaging trick: v + Jv and i(v - Jv) over the computational basis span
  // the J-fixed real subspace.
  std::vector<Vector> candidates;
  candidates.reserve(static_cast<size_t>(2 * n));
  for (Index k = 0; k < n; ++k) {
    Vector e = Vector::Zero(n);
    e(k) = 1.0;
    candidates.push_back(e + j(e));
    candidates.push_back(Complex(0, 1) * (e - j(e)));
  }
  // Pivoted Gram-Schmidt over R: pick the candidate with the largest
  // residual each round.
  std::vector<Vector> accepted;
  auto residual_of = [&](const Vector& g) {
    Vector r = g;
    for (const Vector& f : accepted) {
      r -= f * Complex(f.dot(r).real(), 0.0);
    }
    return r;
  };
  for (Index round = 0; round < n; ++round) {
    Vector best;
    double best_norm = -1.0;
    for (const Vector& g : candidates) {
      Vector r = residual_of(g);
      if (r.norm() > best_norm) {
        best_norm = r.norm();
        best = std::move(r);
      }
    }
    if (best_norm < 1e-8) {
      throw NotAntiunitary("j_fixed_basis: fixed space has wrong real dimension");
    }
    best = residual_of(best);  // second pass for orthogonality
    accepted.push_back(best / best.norm());
  }
  Matrix basis(n, n);
  for (Index k = 0; k < n; ++k) basis.col(k) = accepted[static_cast<size_t>(k)];
  // The fixed vectors of an antiunitary involution have real mutual inner
  // products, so real orthonormality already gives a complex ONB.
  const double defect = (basis.adjoint() * basis - Matrix::Identity(n, n)).norm();
  double fixed_defect = 0.0;
  for (Index k = 0; k < n; ++k) {
    fixed_defect = std::max(fixed_defect, (j(basis.col(k)) - basis.col(k)).norm());
  }
  if (defect > tol.identity_tol(n) * 1e3 || fixed_defect > tol.identity_tol(n) * 1e3) {
    throw NotAntiunitary("j_fixed_basis: construction failed, J is not an antiunitary involution");
  }
  return basis;
}

Involution Involution::from_parts(const AntilinearOp& j, const Matrix& delta,
                                  const Tolerances& tol) {
  const Index n = j.dim();
  require_same_shape(j.matrix(), delta, "involution_from_parts");
  const double tol_id = tol.identity_tol(n);
  if (j.unitarity_defect() > tol_id) {
    throw NotAntiunitary("J is not antiunitary");
  }
  if (j.involution_defect() > tol_id) {
    throw NotInvolution("J^2 != 1");
  }
  HermEig delta_eig = herm_eig(delta, tol);  // throws if not Hermitian positive definite
  check_modular_relation(j, delta, delta_eig, tol_id);
  AntilinearOp s = j * sqrt_of(delta_eig);
  if (s.involution_defect() > tol_id * std::max(1.0, delta_eig.eigenvalues.maxCoeff())) {
    throw NotInvolution("S = J Delta^{1/2} fails S^2 = 1");
  }
  Matrix basis = j_fixed_basis(j, tol);
  return Involution(std::move(s), j, delta, std::move(delta_eig), std::move(basis));
}

Involution Involution::from_matrix(const AntilinearOp& s, const Tolerances& tol) {
  const Index n = s.dim();
  const double scale = std::max(1.0, s.matrix().norm());
  if (s.involution_defect() > tol.identity_tol(n) * scale) {
    throw NotInvolution("S^2 != 1");
  }
  // Delta = S* S, a linear map with matrix M_S^T conj(M_S).
  const Matrix delta = s.adjoint() * s;
  HermEig delta_eig = herm_eig(delta, tol);  // throws NotPositiveDefinite if degenerate
  // J = S Delta^{-1/2}.
  AntilinearOp j = s * delta_eig.power(-0.5);
  Involution out = from_parts(j, delta, tol);
  // Round trip: the reassembled involution must match the input.
  const double residual = (out.s().matrix() - s.matrix()).norm();
  if (residual > tol.identity_tol(n) * scale) {
    throw NotInvolution("polar decomposition round trip failed");
  }
  return out;
}

StandardSubspace StandardSubspace::of(const Involution& s, const Tolerances& tol) {
  const Index n = s.dim();
  // Realified kernel of S - 1 on C^N ~ R^{2N}.
  const Matrix& m = s.s().matrix();
  RealMatrix real_op(2 * n, 2 * n);
  real_op.topLeftCorner(n, n) = m.real();
  real_op.topRightCorner(n, n) = m.imag();
  real_op.bottomLeftCorner(n, n) = m.imag();
  real_op.bottomRightCorner(n, n) = -m.real();
  real_op -= RealMatrix::Identity(2 * n, 2 * n);

  Eigen::BDCSVD<RealMatrix> svd(real_op, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cut = tol.rank_scale * std::max(1.0, sv(0));
  std::vector<Index> kernel_cols;
  for (Index k = 0; k < 2 * n; ++k) {
    if ((k < sv.size() ? sv(k) : 0.0) <= cut) kernel_cols.push_back(k);
  }
  if (static_cast<Index>(kernel_cols.size()) != n) {
    throw DimensionMismatch("standard_subspace: ker(S-1) has real dimension " +
                            std::to_string(kernel_cols.size()) + ", expected " +
                            std::to_string(n));
  }
  Matrix basis(n, n);
  for (Index k = 0; k < n; ++k) {
    basis.col(k) = unrealify(svd.matrixV().col(kernel_cols[static_cast<size_t>(k)]));
  }
  return StandardSubspace(std::move(basis));
}

Vector StandardSubspace::project(const Vector& v) const {
  Vector out = Vector::Zero(v.size());
  for (Index k = 0; k < basis_.cols(); ++k) {
    out += basis_.col(k) * Complex(basis_.col(k).dot(v).real(), 0.0);
  }
  return out;
}

AntilinearOp StandardSubspace::tomita(const Tolerances& tol) const {
  const Index n = basis_.rows();
  // Solve v = sum_k (a_k + i b_k) h_k in realified coordinates, then apply
  // S v = sum_k (a_k - i b_k) h_k.
  RealMatrix coords(2 * n, 2 * n);
  for (Index k = 0; k < n; ++k) {
    coords.col(k) = realify(basis_.col(k));
    coords.col(n + k) = realify(Vector(Complex(0, 1) * basis_.col(k)));
  }
  Eigen::BDCSVD<RealMatrix> svd(coords, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const double smin = svd.singularValues()(2 * n - 1);
  if (smin < 1e3 * tol.rank_scale) {
    throw DimensionMismatch("tomita: real basis is numerically degenerate");
  }
  Matrix s_mat(n, n);
  for (Index col = 0; col < n; ++col) {
    Vector e = Vector::Zero(n);
    e(col) = 1.0;
    RealVector ab = svd.solve(realify(e));
    Vector image = Vector::Zero(n);
    for (Index k = 0; k < n; ++k) {
      image += (ab(k) - Complex(0, 1) * ab(n + k)) * basis_.col(k);
    }
    // S e_col = M conj(e_col) = M e_col, so the image is the col-th column.
    s_mat.col(col) = image;
  }
  return AntilinearOp(std::move(s_mat));
}

Vector xi_vector(const Involution& s) {
  const Index n = s.dim();
  const Matrix& m = s.s().matrix();
  Vector xi(n * n);
  for (Index i = 0; i < n; ++i) {
    xi.segment(i * n, n) = m.col(i);  // e_i (x) S e_i
  }
  return xi;
}

Matrix rank_one_ps(const Involution& s) {
  const Vector xi = xi_vector(s);
  return xi * xi.adjoint();
}

EndoCheck is_endomorphism(const Matrix& v, const StandardSubspace& h, const Involution& s,
                          const Tolerances& tol) {
  require_square(v, "is_endomorphism");
  if (v.rows() != s.dim()) {
    throw ShapeMismatch("is_endomorphism: operator dimension does not match involution");
  }
  const double scale = std::max(1.0, v.norm());
  EndoCheck out;
  for (Index k = 0; k < h.real_basis().cols(); ++k) {
    const Vector image = v * h.real_basis().col(k);
    out.geometric_residual = std::max(out.geometric_residual, h.distance(image) / scale);
  }
  // S V S as a linear map.
  const Matrix svs = s.s().matrix() * v.conjugate() * s.s().matrix().conjugate();
  out.algebraic_residual = (svs - v).norm() / scale;
  const double cut = tol.identity_tol(s.dim());
  const bool geo = out.geometric_residual <= cut;
  const bool alg = out.algebraic_residual <= cut * 10.0;
  // The geometric test is the membership criterion; the algebraic one guards
  // against conditioning artifacts and must not contradict it.
  out.member = geo && alg;
  return out;
}

}  // namespace crosslab
