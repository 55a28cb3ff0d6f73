#include "crosslab/symmetry.hpp"

#include "crosslab/endomorphism.hpp"
#include "crosslab/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace crosslab {

std::vector<Matrix> invariant_crossing_space(const SymmetryConstraint& c, const Tolerances& tol) {
  const Involution& s = c.involution;
  const Index n = s.dim();
  for (const Matrix& u : c.generators) {
    require_square(u, "invariant_crossing_space generator");
    if (u.rows() != n) throw ShapeMismatch("invariant_crossing_space: generator dimension");
    if ((u.adjoint() * u - Matrix::Identity(n, n)).norm() > tol.identity_tol(n)) {
      throw InvalidState("invariant_crossing_space: generator is not unitary");
    }
  }
  std::vector<Matrix> u2;
  for (const Matrix& u : c.generators) u2.push_back(kron(u, u));

  const RealLinearMap constraints = [&](const Matrix& t) -> Matrix {
    Matrix stacked(n * n * static_cast<Index>(1 + u2.size()), n * n);
    stacked.topRows(n * n) = cross_fast(s, t) - t.adjoint();
    for (size_t k = 0; k < u2.size(); ++k) {
      stacked.middleRows(n * n * static_cast<Index>(k + 1), n * n) = t * u2[k] - u2[k] * t;
    }
    return stacked;
  };
  return real_nullspace(constraints, n * n, n * n, tol);
}

Involution o_n_involution(Index n, const std::vector<double>& spectrum, const Tolerances& tol) {
  if (static_cast<Index>(spectrum.size()) != n) {
    throw InvalidState("o_n_involution: spectrum length must equal the dimension");
  }
  // Pair eigenvalues with their inverses; unpaired entries must be 1.
  std::vector<int> partner(spectrum.size(), -1);
  for (size_t i = 0; i < spectrum.size(); ++i) {
    if (spectrum[i] <= 0.0) throw InvalidState("o_n_involution: spectrum must be positive");
    if (partner[i] >= 0) continue;
    if (std::abs(spectrum[i] - 1.0) < 1e-12) {
      partner[i] = static_cast<int>(i);
      continue;
    }
    bool found = false;
    for (size_t j = i + 1; j < spectrum.size() && !found; ++j) {
      if (partner[j] < 0 && std::abs(spectrum[i] * spectrum[j] - 1.0) < 1e-9) {
        partner[i] = static_cast<int>(j);
        partner[j] = static_cast<int>(i);
        found = true;
      }
    }
    if (!found) {
      throw InvalidState("o_n_involution: spectrum is not symmetric under inversion");
    }
  }
  Matrix delta = Matrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) delta(i, i) = spectrum[static_cast<size_t>(i)];
  // J permutes each lambda-eigenvector with its 1/lambda partner, with
  // conjugation; fixed directions on the lambda = 1 part.
  Matrix j = Matrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) j(partner[static_cast<size_t>(i)], i) = 1.0;
  return Involution::from_parts(AntilinearOp(std::move(j)), delta, tol);
}

std::vector<Matrix> o_n_generators(const Involution& s) {
  const Index n = s.dim();
  const Matrix& w = s.j_basis();  // O(N) is real orthogonal in this basis
  std::vector<Matrix> gens;
  auto push_real = [&](const RealMatrix& r) { gens.push_back(w * r.cast<Complex>() * w.adjoint()); };
  // Plane rotations by irrational angles generate a dense subgroup of SO(N).
  const double angles[] = {std::sqrt(2.0), std::sqrt(3.0), std::sqrt(5.0)};
  int which = 0;
  for (Index p = 0; p + 1 < n; ++p) {
    RealMatrix r = RealMatrix::Identity(n, n);
    const double a = angles[which++ % 3];
    r(p, p) = std::cos(a);
    r(p + 1, p + 1) = std::cos(a);
    r(p, p + 1) = -std::sin(a);
    r(p + 1, p) = std::sin(a);
    push_real(r);
  }
  RealMatrix refl = RealMatrix::Identity(n, n);
  refl(n - 1, n - 1) = -1.0;
  push_real(refl);
  return gens;
}

InvariantSpaceCase o_n_expected(Index n, bool delta_trivial, const Involution& s) {
  const Involution j_only =
      Involution::from_parts(s.j(), Matrix::Identity(s.dim(), s.dim()));
  const Matrix pj = rank_one_ps(j_only);
  const Matrix id = Matrix::Identity(n * n, n * n);
  InvariantSpaceCase out;
  if (delta_trivial) {
    // {z 1 + conj(z) P_J + x F} = span_R{1 + P_J, i(1 - P_J), F}
    out.expected_dim = 3;
    out.spanning = {id + pj, Complex(0, 1) * (id - pj), flip(n)};
  } else if (n == 2) {
    // {x F + i y (1 - P_J)}
    out.expected_dim = 2;
    out.spanning = {flip(n), Complex(0, 1) * (id - pj)};
  } else {
    out.expected_dim = 1;
    out.spanning = {flip(n)};
  }
  return out;
}

Matrix klr_matrix() {
  Matrix t = Matrix::Zero(4, 4);
  t(0, 0) = -1.0;
  t(1, 2) = 1.0;
  t(2, 1) = 1.0;
  t(3, 3) = -1.0;
  return Complex(0, 1) * t;
}

double mutual_span_residual(const std::vector<Matrix>& lhs, const std::vector<Matrix>& rhs) {
  // Project onto span_R via real-orthonormalization of the realified family.
  auto orthonormalize = [](const std::vector<Matrix>& fam) {
    std::vector<Vector> basis;
    for (const Matrix& m : fam) {
      Vector v = vectorize(m);
      for (const Vector& b : basis) v -= b * Complex(b.dot(v).real(), 0.0);
      if (v.norm() > 1e-12) basis.push_back(v / v.norm());
    }
    return basis;
  };
  auto defect = [&](const std::vector<Matrix>& from, const std::vector<Matrix>& onto) {
    const auto basis = orthonormalize(onto);
    double worst = 0.0;
    for (const Matrix& m : from) {
      Vector v = vectorize(m);
      const double scale = std::max(1.0, v.norm());
      for (const Vector& b : basis) v -= b * Complex(b.dot(v).real(), 0.0);
      worst = std::max(worst, v.norm() / scale);
    }
    return worst;
  };
  return std::max(defect(lhs, rhs), defect(rhs, lhs));
}

VerificationReport exchange_lemma_checks(const Involution& s, const Matrix& t, const Matrix& u,
                                         const Tolerances& tol) {
  const Index n = s.dim();
  require_square(u, "exchange_lemma_checks");
  if (u.rows() != n || t.rows() != n * n) {
    throw ShapeMismatch("exchange_lemma_checks: dimension mismatch");
  }
  const Matrix u2 = kron(u, u);
  const double scale = std::max(1.0, t.norm());
  const double comm = (t * u2 - u2 * t).norm() / scale;
  const double cut = tol.identity_tol(n * n);
  if (comm > cut) {
    throw PreconditionFailed("exchange_lemma_checks: [T, U (x) U] != 0 (residual " +
                             std::to_string(comm) + ")");
  }
  VerificationReport report("exchange-lemma");
  const Matrix cross = cross_fast(s, t);
  const Matrix id = Matrix::Identity(n, n);
  const AntilinearOp s_star = s.s_star();

  // (a) (S*US* (x) U) Cross_S(T) (U* (x) S*U*S*) = Cross_S(T)
  const Matrix sus = (s_star * u * s_star);        // linear: antilinear twice
  const Matrix sustar = (s_star * u.adjoint() * s_star);
  const Matrix lhs_a = kron(sus, u) * cross * kron(u.adjoint(), sustar);
  report.add("twisted-invariance", (lhs_a - cross).norm() / std::max(1.0, cross.norm()), cut);

  // (b) for crossing-symmetric T: T = (1 (x) SUSU*) T (USU*S (x) 1)
  const bool symmetric = is_crossing_symmetric(s, t, tol).symmetric;
  if (symmetric) {
    const AntilinearOp s_op = s.s();
    const Matrix susu = (s_op * u * s_op) * u.adjoint();
    const Matrix usus = u * (s_op * u.adjoint() * s_op);
    const Matrix rhs_b = kron(id, susu) * t * kron(usus, id);
    report.add("modular-transport", (t - rhs_b).norm() / scale, cut);
  }

  // (d) for Cross_S(T) = T and [T, Delta (x) Delta] = 0:
  //     F (J (x) J) T (J (x) J) F = T
  const Matrix dd = kron(s.delta(), s.delta());
  const bool fixed_point = (cross - t).norm() / scale <= cut;
  const bool dd_commutes = (t * dd - dd * t).norm() / (scale * std::max(1.0, dd.norm())) <= cut;
  if (fixed_point && dd_commutes) {
    const Matrix jj = kron(s.j().matrix(), s.j().matrix());
    const Matrix f = flip(n);
    const Matrix wrapped = f * jj * t.conjugate() * jj.conjugate() * f;
    report.add("flip-conjugation", (wrapped - t).norm() / scale, cut);
  }

  // [V_psi(T), U] = 0 for eigenvectors psi of U
  Eigen::ComplexEigenSolver<Matrix> es(u);
  for (Index k = 0; k < n; ++k) {
    const Vector psi = es.eigenvectors().col(k);
    const Matrix v = extract_v(t, psi, psi);
    report.add("endomorphism-commutant", (v * u - u * v).norm() / std::max(1.0, v.norm()), cut,
               "{\"eigenvector\":" + std::to_string(k) + "}");
  }
  return report;
}

}  // namespace crosslab
