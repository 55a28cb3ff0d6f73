#include "crosslab/crossing.hpp"

#include "crosslab/tensor.hpp"

#include <cmath>
#include <sstream>

namespace crosslab {

namespace {

void check_dims(const Involution& s, const Matrix& t, const char* where) {
  const Index n = bipartite_base_dim(t, where);
  if (n != s.dim()) {
    throw ShapeMismatch(std::string(where) + ": operator base dimension " + std::to_string(n) +
                        " does not match involution dimension " + std::to_string(s.dim()));
  }
}

std::string param(const char* key, double value) {
  std::ostringstream os;
  os << "{\"" << key << "\":" << value << "}";
  return os.str();
}

// Relative Frobenius distance with a floor at 1.
double rel(const Matrix& a, const Matrix& b) {
  return (a - b).norm() / std::max({1.0, a.norm(), b.norm()});
}

}  // namespace

Matrix cross_oracle(const Involution& s, const Matrix& t) {
  check_dims(s, t, "cross_oracle");
  const Index n = s.dim();
  const Matrix& ms = s.s().matrix();       // columns are S e_a
  const Matrix mss = s.s_star().matrix();  // columns are S* e_d
  // Columns T(S e_a (x) e_c), assembled once.
  Matrix images(n * n, n * n);
  Vector v(n * n);
  for (Index a = 0; a < n; ++a) {
    for (Index c = 0; c < n; ++c) {
      v.setZero();
      for (Index i = 0; i < n; ++i) {
        v(i * n + c) = ms(i, a);
      }
      images.col(a * n + c) = t * v;
    }
  }
  Matrix out(n * n, n * n);
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      for (Index c = 0; c < n; ++c) {
        for (Index d = 0; d < n; ++d) {
          // <e_b (x) S* e_d, T(S e_a (x) e_c)>
          Complex val = 0.0;
          for (Index k = 0; k < n; ++k) {
            val += std::conj(mss(k, d)) * images(b * n + k, a * n + c);
          }
          out(a * n + b, c * n + d) = val;
        }
      }
    }
  }
  return out;
}

Matrix cross_fast(const Involution& s, const Matrix& t) {
  check_dims(s, t, "cross_fast");
  const Index n = s.dim();
  const Matrix& w = s.j_basis();
  const Matrix w2 = kron(w, w);
  // (i) change to the J-fixed basis
  const Matrix tf = w2.adjoint() * t * w2;
  // (ii) index rotation Cross_J(T)^{ij}_{kl} = T^{jl}_{ik}
  Matrix cf(n * n, n * n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      for (Index k = 0; k < n; ++k) {
        for (Index l = 0; l < n; ++l) {
          cf(i * n + j, k * n + l) = tf(j * n + l, i * n + k);
        }
      }
    }
  }
  // (iii) change back
  const Matrix cross_j = w2 * cf * w2.adjoint();
  // (iv) modular dressing
  const Matrix id = Matrix::Identity(n, n);
  return kron(s.delta_power(0.5), id) * cross_j * kron(id, s.delta_power(-0.5));
}

Matrix cross_inverse(const Involution& s, const Matrix& t) {
  check_dims(s, t, "cross_inverse");
  return cross_fast(s, t.adjoint()).adjoint();
}

SymmetryResidual is_crossing_symmetric(const Involution& s, const Matrix& t,
                                       const Tolerances& tol) {
  check_dims(s, t, "is_crossing_symmetric");
  SymmetryResidual out;
  out.residual = (cross_fast(s, t) - t.adjoint()).norm() / std::max(1.0, t.norm());
  out.symmetric = out.residual <= tol.identity_tol(t.rows());
  return out;
}

Matrix hat_s(const Involution& s, const Matrix& t) { return cross_fast(s, t).adjoint(); }

Matrix hat_j(const Involution& s, const Matrix& t) {
  const Involution j_only = Involution::from_parts(s.j(), Matrix::Identity(s.dim(), s.dim()));
  return cross_fast(j_only, t).adjoint();
}

Matrix hat_delta(const Involution& s, const Matrix& t, double alpha) {
  return delta_in(s, t, alpha);
}

Matrix delta_in(const Involution& s, const Matrix& t, double alpha) {
  check_dims(s, t, "delta_in");
  const Matrix id = Matrix::Identity(s.dim(), s.dim());
  return kron(id, s.delta_power(alpha)) * t * kron(s.delta_power(-alpha), id);
}

Matrix delta_out(const Involution& s, const Matrix& t, double alpha) {
  check_dims(s, t, "delta_out");
  const Matrix id = Matrix::Identity(s.dim(), s.dim());
  return kron(s.delta_power(alpha), id) * t * kron(id, s.delta_power(-alpha));
}

Matrix symmetrize_crossing(const Involution& s, const Matrix& t) {
  return 0.5 * (t + hat_s(s, t));
}

VerificationReport cross_power_checks(const Involution& s, const Matrix& t,
                                      const std::vector<double>& alphas, const Tolerances& tol) {
  check_dims(s, t, "cross_power_checks");
  const Index n = s.dim();
  const double cut = tol.identity_tol(n * n);
  VerificationReport report("crossing-powers");

  const Matrix c1 = cross_fast(s, t);
  const Matrix c2 = cross_fast(s, c1);
  const Matrix c4 = cross_fast(s, cross_fast(s, c2));

  // Cross^4(T) = (Delta (x) Delta) T (Delta^-1 (x) Delta^-1)
  const Matrix dd = kron(s.delta_power(1.0), s.delta_power(1.0));
  const Matrix dd_inv = kron(s.delta_power(-1.0), s.delta_power(-1.0));
  report.add("power4", rel(c4, dd * t * dd_inv), cut);

  // Cross^2(T) = F (S* (x) S*) T* (S* (x) S*) F
  const Matrix f = flip(n);
  const AntilinearOp ss2 = tensor(s.s_star(), s.s_star());
  const Matrix sandwich = ss2.matrix() * t.adjoint().conjugate() * ss2.matrix().conjugate();
  report.add("power2", rel(c2, f * sandwich * f), cut);

  // inverse round trip
  report.add("inverse-round-trip", rel(cross_inverse(s, c1), t), cut);

  // exchange relations Cross o Delta~^{in/out}_a = Delta~^{out/in}_a o Cross
  for (double alpha : alphas) {
    report.add("exchange-in", rel(cross_fast(s, delta_in(s, t, alpha)), delta_out(s, c1, alpha)),
               cut, param("alpha", alpha));
    report.add("exchange-out", rel(cross_fast(s, delta_out(s, t, alpha)), delta_in(s, c1, alpha)),
               cut, param("alpha", alpha));
  }
  return report;
}

std::pair<Complex, Complex> kms_boundary_values(const Involution& s, const Matrix& t, double time,
                                                const std::array<Vector, 4>& psi) {
  check_dims(s, t, "kms_boundary_values");
  const Index n = s.dim();
  for (const Vector& p : psi) {
    if (p.size() != n) throw ShapeMismatch("kms: vector dimension mismatch");
  }
  // Left side: analytic continuation at time + i/2,
  //   <psi1 (x) Delta^{1/2} Delta^{it} psi2, T (Delta^{-1/2} Delta^{it} psi3 (x) psi4)>.
  const Vector bra2 = s.delta_power(Complex(0.5, time)) * psi[1];
  const Vector ket3 = s.delta_power(Complex(-0.5, time)) * psi[2];
  const Vector bra = tensor_product(psi[0], bra2);
  const Vector ket = tensor_product(ket3, psi[3]);
  const Complex lhs = bra.dot(t * ket);

  // Right side:
  //   <J psi3 (x) psi1, (Delta^{-it} (x) 1) Cross_S(T) (1 (x) Delta^{it}) (psi4 (x) J psi2)>.
  const Matrix id = Matrix::Identity(n, n);
  const Matrix cross = cross_fast(s, t);
  const Vector rbra = tensor_product(s.j()(psi[2]), psi[0]);
  const Vector rket = tensor_product(psi[3], s.j()(psi[1]));
  const Matrix mid = kron(s.delta_power(Complex(0.0, -time)), id) * cross *
                     kron(id, s.delta_power(Complex(0.0, time)));
  const Complex rhs = rbra.dot(mid * rket);
  return {lhs, rhs};
}

VerificationReport kms_boundary_check(const Involution& s, const Matrix& t,
                                      const std::vector<double>& ts,
                                      const std::array<Vector, 4>& psi, const Tolerances& tol) {
  VerificationReport report("kms");
  for (double time : ts) {
    const auto [lhs, rhs] = kms_boundary_values(s, t, time, psi);
    const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
    report.add("bndcond", std::abs(lhs - rhs) / scale, tol.identity_tol(s.dim() * s.dim()),
               param("t", time));
  }
  return report;
}

Matrix hat_s_big_matrix(const Involution& s) {
  const Index n2 = s.dim() * s.dim();
  Matrix big(n2 * n2, n2 * n2);
  Matrix unit = Matrix::Zero(n2, n2);
  for (Index p = 0; p < n2; ++p) {
    for (Index q = 0; q < n2; ++q) {
      unit(p, q) = 1.0;
      // S^ is antilinear: columns of M are vec(S^(E_pq)) since conj(E_pq) = E_pq.
      big.col(p * n2 + q) = vectorize(hat_s(s, unit));
      unit(p, q) = 0.0;
    }
  }
  return big;
}

}  // namespace crosslab
