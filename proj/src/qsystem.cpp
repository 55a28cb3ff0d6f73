#include "crosslab/qsystem.hpp"

#include "crosslab/crossing.hpp"
#include "crosslab/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace crosslab {

namespace {

void check_qsystem_shapes(const QSystem& q) {
  if (q.m.rows() != q.dim || q.m.cols() != q.dim * q.dim || q.iota.size() != q.dim) {
    throw ShapeMismatch("QSystem: m must be N x N^2 and iota length N");
  }
}

double scale_of(const QSystem& q) { return std::max(1.0, q.m.norm()); }

}  // namespace

VerificationReport validate(const QSystem& q, const Tolerances& tol) {
  check_qsystem_shapes(q);
  const Index n = q.dim;
  const Matrix id = Matrix::Identity(n, n);
  const double scale = scale_of(q);
  VerificationReport report("qsystem-axioms");

  // associativity m(m (x) 1) = m(1 (x) m)
  report.add("associativity", (q.m * kron(q.m, id) - q.m * kron(id, q.m)).norm() / (scale * scale),
             tol.identity_tol(n));
  // unitality m(iota (x) 1) = 1 = m(1 (x) iota)
  const Matrix iota_mat = q.iota;
  report.add("unitality-left", (q.m * kron(iota_mat, id) - id).norm() / scale,
             tol.identity_tol(n));
  report.add("unitality-right", (q.m * kron(id, iota_mat) - id).norm() / scale,
             tol.identity_tol(n));
  // Frobenius (m (x) 1)(1 (x) m*) = m*m = (1 (x) m)(m* (x) 1)
  const Matrix mstar = q.m.adjoint();
  const Matrix t = mstar * q.m;
  report.add("frobenius-left", (kron(q.m, id) * kron(id, mstar) - t).norm() / (scale * scale),
             tol.identity_tol(n));
  report.add("frobenius-right", (kron(id, q.m) * kron(mstar, id) - t).norm() / (scale * scale),
             tol.identity_tol(n));
  // specialness mm* = d 1 with d = Tr(mm*)/N
  const Matrix mm = q.m * mstar;
  const double d = mm.trace().real() / static_cast<double>(n);
  report.add("specialness", (mm - d * id).norm() / std::max(1.0, d), tol.identity_tol(n),
             "{\"d\":" + std::to_string(d) + "}");
  // normalization iota* iota = 1
  report.add("normalization", std::abs(q.iota.squaredNorm() - 1.0), tol.identity_tol(n));
  return report;
}

QSystemFlags qsystem_flags(const QSystem& q, const Tolerances& tol) {
  check_qsystem_shapes(q);
  const Index n = q.dim;
  const Matrix id = Matrix::Identity(n, n);
  QSystemFlags flags;
  const Matrix mm = q.m * q.m.adjoint();
  flags.d = mm.trace().real() / static_cast<double>(n);
  flags.special = (mm - flags.d * id).norm() <= tol.identity_tol(n) * std::max(1.0, flags.d);
  flags.normalized = std::abs(q.iota.squaredNorm() - 1.0) <= tol.identity_tol(n);
  // Irreducibility is read off the unit-centralizer: the space of c with
  // m(c (x) v) = m(v (x) c) for all v (the commutative center of the
  // algebra). dim = 1 means the center is C iota only.
  const RealLinearMap center_map = [&](const Matrix& c_mat) -> Matrix {
    const Matrix c = c_mat;  // N x 1
    Matrix rows(n, n);
    for (Index k = 0; k < n; ++k) {
      Vector e = Vector::Zero(n);
      e(k) = 1.0;
      rows.col(k) = q.m * tensor_product(Vector(c.col(0)), e) - q.m * tensor_product(e, Vector(c.col(0)));
    }
    return rows;
  };
  const auto kernel = real_nullspace(center_map, n, 1, tol);
  // complex center dimension = real kernel dimension / 2
  flags.center_dim = static_cast<Index>(kernel.size()) / 2;
  flags.irreducible = flags.center_dim == 1;
  return flags;
}

DerivedData derived_data(const QSystem& q, const Tolerances& tol) {
  check_qsystem_shapes(q);
  const Index n = q.dim;
  const Matrix ev = q.iota.adjoint() * q.m;  // 1 x N^2
  const Matrix coev = ev.adjoint();
  // (S v)_k = conj(ev(v (x) e_k)); on basis vectors S e_c = sum_k conj(ev_{(c,k)}) e_k.
  Matrix s_mat(n, n);
  for (Index c = 0; c < n; ++c) {
    for (Index k = 0; k < n; ++k) {
      s_mat(k, c) = std::conj(ev(0, c * n + k));
    }
  }
  AntilinearOp s_op(s_mat);
  if (s_op.involution_defect() > tol.identity_tol(n) * std::max(1.0, s_mat.squaredNorm())) {
    throw InvolutionFailure("derived_data: ev does not define an involution (S^2 != 1)");
  }
  Involution s = Involution::from_matrix(s_op, tol);
  Matrix twist = q.m.adjoint() * q.m;
  return DerivedData{ev, coev, std::move(s), std::move(twist)};
}

VerificationReport twist_certificates(const QSystem& q, const Tolerances& tol) {
  const Index n = q.dim;
  const DerivedData data = derived_data(q, tol);
  const Matrix& t = data.twist;
  const Matrix id = Matrix::Identity(n, n);
  const double scale = std::max(1.0, t.norm());
  VerificationReport report("twist-certificates");

  // (i) crossing symmetry Cross_S(T) = T* = T
  report.add("self-adjoint", (t - t.adjoint()).norm() / scale, tol.identity_tol(n * n));
  report.add("crossing-symmetry", is_crossing_symmetric(data.s, t, tol).residual,
             tol.identity_tol(n * n));
  report.add("crossing-fixed-point", (cross_fast(data.s, t) - t).norm() / scale,
             tol.identity_tol(n * n));

  // (ii) Yang-Baxter on H^(x)3
  const Matrix t1 = kron(t, id);
  const Matrix t2 = kron(id, t);
  report.add("yang-baxter", (t1 * t2 * t1 - t2 * t1 * t2).norm() / std::pow(scale, 3),
             tol.identity_tol(n * n * n));

  // (iv) exchange identity (T (x) 1)(1 (x) T) = (1 (x) T)(T (x) 1)
  report.add("exchange", (t1 * t2 - t2 * t1).norm() / (scale * scale),
             tol.identity_tol(n * n * n));

  // (iii) modular invariance [T, Delta (x) Delta] = 0
  const Matrix dd = kron(data.s.delta(), data.s.delta());
  report.add("modular-commutation", (t * dd - dd * t).norm() / (scale * std::max(1.0, dd.norm())),
             tol.identity_tol(n * n));

  // (v) algebra involution law S m = m F (S (x) S)
  const Matrix& ms = data.s.s().matrix();
  const Matrix lhs = ms * q.m.conjugate();
  const Matrix rhs = q.m * flip(n) * kron(ms, ms);
  report.add("involution-law", (lhs - rhs).norm() / std::max(1.0, q.m.norm()),
             tol.identity_tol(n));
  return report;
}

Matrix jones_projection(const QSystem& q, const Tolerances& tol) {
  const QSystemFlags flags = qsystem_flags(q, tol);
  if (!flags.special) {
    throw NotSpecial("jones_projection: mm* is not a scalar");
  }
  const DerivedData data = derived_data(q, tol);
  return (data.coev * data.ev) / flags.d;
}

QSystem rescale_to_qsystem(const QSystem& q, const Tolerances& tol) {
  check_qsystem_shapes(q);
  const Matrix z = q.m * q.m.adjoint();
  const HermEig z_eig = herm_eig(z, tol);
  const double w = q.iota.dot(z * q.iota).real();
  if (w <= 0.0) throw InvalidState("rescale_to_qsystem: state weight must be positive");
  QSystem out;
  out.dim = q.dim;
  out.m = std::sqrt(w) * z_eig.power(-0.5) * q.m;
  out.iota = (z_eig.power(0.5) * q.iota) / std::sqrt(w);
  return out;
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table) {
  FiniteGroup g;
  g.order = static_cast<Index>(table.size());
  const int n = static_cast<int>(g.order);
  if (n == 0) throw InvalidState("FiniteGroup: empty table");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw InvalidState("FiniteGroup: ragged Cayley table");
    for (int v : row) {
      if (v < 0 || v >= n) throw InvalidState("FiniteGroup: entry out of range");
    }
  }
  g.cayley = std::move(table);
  // identity: the unique e with e*x = x*e = x for all x
  g.identity = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      ok = g.mul(e, x) == x && g.mul(x, e) == x;
    }
    if (ok) {
      g.identity = e;
      break;
    }
  }
  if (g.identity < 0) throw InvalidState("FiniteGroup: no identity element");
  // inverses
  g.inverse.assign(static_cast<size_t>(n), -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (g.mul(x, y) == g.identity && g.mul(y, x) == g.identity) {
        g.inverse[static_cast<size_t>(x)] = y;
        break;
      }
    }
    if (g.inverse[static_cast<size_t>(x)] < 0) throw InvalidState("FiniteGroup: missing inverse");
  }
  // associativity over the full table
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) {
          throw InvalidState("FiniteGroup: table is not associative");
        }
      }
    }
  }
  return g;
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw InvalidState("cyclic: order must be positive");
  std::vector<std::vector<int>> table(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) table[static_cast<size_t>(a)][static_cast<size_t>(b)] = (a + b) % n;
  }
  return from_table(std::move(table));
}

FiniteGroup FiniteGroup::symmetric(int n) {
  if (n < 1 || n > 5) throw InvalidState("symmetric: supported for 1 <= n <= 5");
  // enumerate permutations of {0..n-1} in lexicographic order
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const int order = static_cast<int>(perms.size());
  auto index_of = [&perms](const std::vector<int>& q) {
    return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<std::vector<int>> table(static_cast<size_t>(order),
                                      std::vector<int>(static_cast<size_t>(order)));
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      // composition (a o b)(x) = a(b(x))
      std::vector<int> comp(static_cast<size_t>(n));
      for (int x = 0; x < n; ++x) {
        comp[static_cast<size_t>(x)] =
            perms[static_cast<size_t>(a)][static_cast<size_t>(perms[static_cast<size_t>(b)][static_cast<size_t>(x)])];
      }
      table[static_cast<size_t>(a)][static_cast<size_t>(b)] = index_of(comp);
    }
  }
  return from_table(std::move(table));
}

QSystem functions_on_group(const FiniteGroup& g) {
  const Index n = g.order;
  const double root = std::sqrt(static_cast<double>(n));
  QSystem q;
  q.dim = n;
  // In the orthonormal basis b_g = |G|^{1/2} delta_g:
  //   m(b_g (x) b_h) = |G|^{1/2} delta_{g,h} b_g,  iota = |G|^{-1/2} sum_g b_g.
  q.m = Matrix::Zero(n, n * n);
  for (Index a = 0; a < n; ++a) {
    q.m(a, a * n + a) = root;
  }
  q.iota = Vector::Constant(n, Complex(1.0 / root, 0.0));
  return q;
}

Matrix functions_twist_delta_basis(const FiniteGroup& g) {
  // delta_g = |G|^{-1/2} b_g is a pure rescaling, and the twist is diagonal
  // in the group-element pair index, so the matrix is unchanged by it:
  // T(delta_g (x) delta_h) = |G| delta_g(h) delta_g (x) delta_g.
  const QSystem q = functions_on_group(g);
  return q.m.adjoint() * q.m;
}

QSystem group_algebra(const FiniteGroup& g) {
  const Index n = g.order;
  QSystem q;
  q.dim = n;
  // m(delta_g (x) delta_h) = delta_{gh}, iota = delta_e.
  q.m = Matrix::Zero(n, n * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      q.m(g.mul(a, b), static_cast<Index>(a) * n + b) = 1.0;
    }
  }
  q.iota = Vector::Zero(n);
  q.iota(g.identity) = 1.0;
  return q;
}

void validate_algebra(const MultiMatrixAlgebra& a, const Tolerances& tol) {
  if (a.blocks.size() != a.rho.size() || a.blocks.empty()) {
    throw InvalidState("MultiMatrixAlgebra: blocks and rho must align");
  }
  double trace = 0.0;
  for (size_t k = 0; k < a.blocks.size(); ++k) {
    const Index nk = a.blocks[k];
    if (nk < 1 || a.rho[k].rows() != nk || a.rho[k].cols() != nk) {
      throw InvalidState("MultiMatrixAlgebra: rho block shape mismatch");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(a.rho[k]);
    if ((a.rho[k] - a.rho[k].adjoint()).norm() > 1e-10 * std::max(1.0, a.rho[k].norm()) ||
        es.eigenvalues().minCoeff() <= tol.pd_scale * std::max(1.0, a.rho[k].norm())) {
      throw InvalidState("MultiMatrixAlgebra: rho block is not positive definite");
    }
    trace += a.rho[k].trace().real();
  }
  if (std::abs(trace - 1.0) > 1e-9 * static_cast<double>(a.blocks.size())) {
    throw InvalidState("MultiMatrixAlgebra: state is not normalized, sum Tr(rho) != 1");
  }
}

namespace {

struct GnsLayout {
  std::vector<Index> offset;          // starting GNS index of each block
  std::vector<RealVector> lambda;     // eigenvalues of rho per block
  std::vector<Matrix> block_basis;    // eigenvectors of rho per block
  Index total = 0;

  Index index(size_t block, Index i, Index j, Index nk) const {
    return offset[block] + i * nk + j;
  }
};

GnsLayout layout_of(const MultiMatrixAlgebra& a, const Tolerances& tol) {
  validate_algebra(a, tol);
  GnsLayout layout;
  Index off = 0;
  for (size_t k = 0; k < a.blocks.size(); ++k) {
    layout.offset.push_back(off);
    Eigen::SelfAdjointEigenSolver<Matrix> es(a.rho[k]);
    layout.lambda.push_back(es.eigenvalues());
    layout.block_basis.push_back(es.eigenvectors());
    off += a.blocks[k] * a.blocks[k];
  }
  layout.total = off;
  return layout;
}

}  // namespace

QSystem from_cstar(const MultiMatrixAlgebra& a, const Tolerances& tol) {
  const GnsLayout layout = layout_of(a, tol);
  const Index n = layout.total;
  QSystem q;
  q.dim = n;
  q.m = Matrix::Zero(n, n * n);
  q.iota = Vector::Zero(n);
  for (size_t blk = 0; blk < a.blocks.size(); ++blk) {
    const Index nk = a.blocks[blk];
    const RealVector& lam = layout.lambda[blk];
    // m(e_{a,i,j} (x) e_{a,k,l}) = delta_{jk} lambda_j^{-1/2} e_{a,i,l}
    for (Index i = 0; i < nk; ++i) {
      for (Index j = 0; j < nk; ++j) {
        for (Index l = 0; l < nk; ++l) {
          const Index left = layout.index(blk, i, j, nk);
          const Index right = layout.index(blk, j, l, nk);
          const Index out = layout.index(blk, i, l, nk);
          q.m(out, left * n + right) = 1.0 / std::sqrt(lam(j));
        }
      }
    }
    // iota = class of 1_A: sum_i lambda_i^{1/2} e_{a,i,i}
    for (Index i = 0; i < nk; ++i) {
      q.iota(layout.index(blk, i, i, nk)) = std::sqrt(lam(i));
    }
  }
  return q;
}

std::vector<double> block_inverse_traces(const MultiMatrixAlgebra& a, const Tolerances& tol) {
  const GnsLayout layout = layout_of(a, tol);
  std::vector<double> traces;
  for (const RealVector& lam : layout.lambda) {
    traces.push_back(lam.cwiseInverse().sum());
  }
  return traces;
}

Matrix twist_of_multimatrix(const MultiMatrixAlgebra& a, const Tolerances& tol) {
  const GnsLayout layout = layout_of(a, tol);
  const Index n = layout.total;
  // T(x (x) y) = delta_{alpha,beta} sum_q (x y E_pq ...): on basis pairs,
  //   e_{a,i,j} (x) e_{a,k,l} -> delta_{jk} lambda_j^{-1/2}
  //                              sum_q lambda_q^{-1/2} e_{a,i,q} (x) e_{a,q,l},
  // the matrix of x_a (x) y_b -> delta_{ab} (x_a y_b (x) rho_b^{-1}) F_a.
  Matrix t = Matrix::Zero(n * n, n * n);
  for (size_t blk = 0; blk < a.blocks.size(); ++blk) {
    const Index nk = a.blocks[blk];
    const RealVector& lam = layout.lambda[blk];
    for (Index i = 0; i < nk; ++i) {
      for (Index j = 0; j < nk; ++j) {
        for (Index l = 0; l < nk; ++l) {
          const Index in_left = layout.index(blk, i, j, nk);
          const Index in_right = layout.index(blk, j, l, nk);
          for (Index qq = 0; qq < nk; ++qq) {
            const Index out_left = layout.index(blk, i, qq, nk);
            const Index out_right = layout.index(blk, qq, l, nk);
            t(out_left * n + out_right, in_left * n + in_right) =
                1.0 / std::sqrt(lam(j) * lam(qq));
          }
        }
      }
    }
  }
  return t;
}

Vector gns_coordinates(const MultiMatrixAlgebra& a, const std::vector<Matrix>& x,
                       const Tolerances& tol) {
  const GnsLayout layout = layout_of(a, tol);
  if (x.size() != a.blocks.size()) {
    throw ShapeMismatch("gns_coordinates: block count mismatch");
  }
  Vector out = Vector::Zero(layout.total);
  for (size_t blk = 0; blk < a.blocks.size(); ++blk) {
    const Index nk = a.blocks[blk];
    if (x[blk].rows() != nk || x[blk].cols() != nk) {
      throw ShapeMismatch("gns_coordinates: block shape mismatch");
    }
    // coefficients in the rho eigenbasis; x Omega = sum_ij c_ij lambda_j^{1/2} e_{a,i,j}
    const Matrix c = layout.block_basis[blk].adjoint() * x[blk] * layout.block_basis[blk];
    for (Index i = 0; i < nk; ++i) {
      for (Index j = 0; j < nk; ++j) {
        out(layout.index(blk, i, j, nk)) = c(i, j) * std::sqrt(layout.lambda[blk](j));
      }
    }
  }
  return out;
}

}  // namespace crosslab
