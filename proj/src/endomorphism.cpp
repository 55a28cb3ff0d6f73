#include "crosslab/endomorphism.hpp"

#include "crosslab/tensor.hpp"

#include <cmath>

namespace crosslab {

Matrix a_left(const Vector& psi) {
  const Index n = psi.size();
  Matrix bra(1, n);
  bra = psi.adjoint();
  return kron(bra, Matrix::Identity(n, n));
}

Matrix a_right_star(const Vector& psi) {
  const Index n = psi.size();
  Matrix ket(n, 1);
  ket = psi;
  return kron(Matrix::Identity(n, n), ket);
}

Matrix extract_v(const Matrix& t, const Vector& psi1, const Vector& psi2) {
  const Index n = bipartite_base_dim(t, "extract_v");
  if (psi1.size() != n || psi2.size() != n) {
    throw ShapeMismatch("extract_v: vector dimension does not match operator");
  }
  return 0.5 * (a_left(psi1) * t * a_right_star(psi2) + a_left(psi2) * t * a_right_star(psi1));
}

Vector EndoFamily::basis_vector(Index x) const {
  Vector v = Vector::Zero(n_);
  if (x < n_) {
    v(x) = 1.0;
  } else {
    v(x - n_) = Complex(0.0, 1.0);
  }
  return v;
}

EndoFamily EndoFamily::from_function(Index n, const Assign& assign) {
  EndoFamily out(n, {});
  out.grid_.resize(static_cast<size_t>(4 * n * n));
  for (Index x = 0; x < 2 * n; ++x) {
    for (Index y = 0; y < 2 * n; ++y) {
      out.grid_[static_cast<size_t>(x * 2 * n + y)] =
          assign(out.basis_vector(x), out.basis_vector(y));
    }
  }
  return out;
}

EndoFamily EndoFamily::from_operator(const Matrix& t) {
  const Index n = bipartite_base_dim(t, "EndoFamily::from_operator");
  return from_function(
      n, [&t](const Vector& p1, const Vector& p2) { return extract_v(t, p1, p2); });
}

const Matrix& EndoFamily::value(Index x, Index y) const {
  return grid_[static_cast<size_t>(x * 2 * n_ + y)];
}

Matrix EndoFamily::at(const Vector& psi1, const Vector& psi2) const {
  if (psi1.size() != n_ || psi2.size() != n_) {
    throw ShapeMismatch("EndoFamily::at: vector dimension mismatch");
  }
  // Real coordinates of psi in the grid basis: (Re psi_a, Im psi_a).
  Matrix out = Matrix::Zero(n_, n_);
  for (Index x = 0; x < 2 * n_; ++x) {
    const double c1 = x < n_ ? psi1(x).real() : psi1(x - n_).imag();
    if (c1 == 0.0) continue;
    for (Index y = 0; y < 2 * n_; ++y) {
      const double c2 = y < n_ ? psi2(y).real() : psi2(y - n_).imag();
      if (c2 == 0.0) continue;
      out += (c1 * c2) * value(x, y);
    }
  }
  return out;
}

void EndoFamily::validate(const Tolerances& tol, const StandardSubspace* h,
                          const Involution* s) const {
  double scale = 1.0;
  for (const Matrix& v : grid_) scale = std::max(scale, v.norm());
  const double cut = tol.identity_tol(n_) * scale;
  for (Index x = 0; x < 2 * n_; ++x) {
    for (Index y = 0; y < 2 * n_; ++y) {
      if ((value(x, y) - value(y, x)).norm() > cut) {
        throw InvariantViolation("EndoFamily: symmetry V(a,b) = V(b,a) fails");
      }
    }
  }
  // V(i e_a, e_b) = -V(e_a, i e_b)
  for (Index a = 0; a < n_; ++a) {
    for (Index b = 0; b < n_; ++b) {
      if ((value(n_ + a, b) + value(a, n_ + b)).norm() > cut) {
        throw InvariantViolation("EndoFamily: V(i psi1, psi2) = -V(psi1, i psi2) fails");
      }
      // i(i e_a) = -e_a forces V(ia, ib) = V(a, b).
      if ((value(n_ + a, n_ + b) - value(a, b)).norm() > cut) {
        throw InvariantViolation("EndoFamily: V(i psi1, i psi2) = V(psi1, psi2) fails");
      }
    }
  }
  if (h != nullptr && s != nullptr) {
    for (Index x = 0; x < 2 * n_; ++x) {
      for (Index y = 0; y < 2 * n_; ++y) {
        if (!is_endomorphism(value(x, y), *h, *s, tol).member) {
          throw InvariantViolation("EndoFamily: grid value is not an endomorphism");
        }
      }
    }
  }
}

Matrix reconstruct_t(const EndoFamily& fam) {
  const Index n = fam.base_dim();
  Matrix t(n * n, n * n);
  // T[(a,b),(c,d)] = <e_b, (V(e_a, e_d) + i V(i e_a, e_d)) e_c>
  for (Index a = 0; a < n; ++a) {
    for (Index d = 0; d < n; ++d) {
      const Matrix block = fam.value(a, d) + Complex(0.0, 1.0) * fam.value(n + a, d);
      for (Index b = 0; b < n; ++b) {
        for (Index c = 0; c < n; ++c) {
          t(a * n + b, c * n + d) = block(b, c);
        }
      }
    }
  }
  return t;
}

Matrix spectral_sum_twist(const std::vector<Matrix>& projections,
                          const std::vector<Matrix>& endomorphisms, const Involution& s,
                          const Tolerances& tol) {
  const Index n = s.dim();
  if (projections.size() != endomorphisms.size() || projections.empty()) {
    throw NotAResolution("spectral_sum_twist: projection/endomorphism count mismatch");
  }
  const double cut = tol.identity_tol(n);
  Matrix sum = Matrix::Zero(n, n);
  for (const Matrix& p : projections) {
    require_square(p, "spectral_sum_twist projection");
    if (p.rows() != n) throw ShapeMismatch("spectral_sum_twist: projection dimension");
    if ((p - p.adjoint()).norm() > cut || (p * p - p).norm() > cut) {
      throw NotAResolution("spectral_sum_twist: not an orthogonal projection");
    }
    sum += p;
  }
  if ((sum - Matrix::Identity(n, n)).norm() > cut) {
    throw NotAResolution("spectral_sum_twist: projections do not sum to 1");
  }
  for (size_t i = 0; i < projections.size(); ++i) {
    for (size_t k = i + 1; k < projections.size(); ++k) {
      if ((projections[i] * projections[k]).norm() > cut) {
        throw NotAResolution("spectral_sum_twist: projections are not mutually orthogonal");
      }
    }
  }
  const StandardSubspace h = StandardSubspace::of(s, tol);
  Matrix op = Matrix::Zero(n * n, n * n);
  for (size_t k = 0; k < projections.size(); ++k) {
    if (!is_endomorphism(endomorphisms[k], h, s, tol).member) {
      throw NotEndomorphism("spectral_sum_twist: V_" + std::to_string(k) +
                            " is not an endomorphism of H");
    }
    op += kron(projections[k], endomorphisms[k]);
  }
  return op * flip(n);
}

std::vector<Vector> endomorphism_test_set(Index n) {
  std::vector<Vector> set;
  auto basis = [n](Index k) {
    Vector e = Vector::Zero(n);
    e(k) = 1.0;
    return e;
  };
  for (Index a = 0; a < n; ++a) set.push_back(basis(a));
  for (Index a = 0; a < n; ++a) {
    for (Index b = a + 1; b < n; ++b) {
      set.push_back(basis(a) + basis(b));
      set.push_back(basis(a) + Complex(0.0, 1.0) * basis(b));
    }
  }
  return set;
}

}  // namespace crosslab
