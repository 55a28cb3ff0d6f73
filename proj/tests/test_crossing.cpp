#include "crosslab/crossing.hpp"

#include "crosslab/random.hpp"
#include "crosslab/tensor.hpp"

#include "doctest.h"
#include "test_helpers.hpp"

using namespace crosslab;
using crosslab::testing::random_involution;
using crosslab::testing::rel_err;

TEST_CASE("flip is a fixed point of the crossing map") {
  Rng rng(101);
  for (Index n : {2, 3}) {
    const Involution s = random_involution(rng, n);
    CHECK(rel_err(cross_oracle(s, flip(n)), flip(n)) < 1e-10);
    CHECK(rel_err(cross_fast(s, flip(n)), flip(n)) < 1e-10);
  }
}

TEST_CASE("crossing the identity gives P_S and back") {
  Rng rng(103);
  for (Index n : {2, 3}) {
    const Involution s = random_involution(rng, n);
    const Matrix id = Matrix::Identity(n * n, n * n);
    const Matrix ps = rank_one_ps(s);
    CHECK(rel_err(cross_oracle(s, id), ps) < 1e-10);
    CHECK(rel_err(cross_oracle(s, ps), id) < 1e-10);
    CHECK(rel_err(cross_fast(s, id), ps) < 1e-10);
    CHECK(rel_err(cross_fast(s, ps), id) < 1e-10);
  }
}

TEST_CASE("cross_fast agrees with cross_oracle") {
  Rng rng(107);
  for (Index n : {2, 3, 4}) {
    for (int trial = 0; trial < 10; ++trial) {
      const Involution s = random_involution(rng, n);
      const Matrix t = rng.matrix(n * n, n * n);
      CHECK(rel_err(cross_fast(s, t), cross_oracle(s, t)) < 1e-9);
    }
    // antiunitary case: the map reduces to the bare index rotation
    const Involution j = random_involution(rng, n, 0.0);
    const Matrix t = rng.matrix(n * n, n * n);
    CHECK(rel_err(cross_fast(j, t), cross_oracle(j, t)) < 1e-9);
  }
}

TEST_CASE("product-times-flip formula") {
  Rng rng(109);
  for (Index n : {2, 3}) {
    const Involution s = random_involution(rng, n);
    const Matrix a = rng.matrix(n, n), b = rng.matrix(n, n);
    const Matrix t = kron(a, b) * flip(n);
    // Cross_S((A (x) B) F) = (S* B* S* (x) A) F
    const AntilinearOp s_star = s.s_star();
    const Matrix sbs = s_star * b.adjoint() * s_star;
    const Matrix expected = kron(sbs, a) * flip(n);
    CHECK(rel_err(cross_fast(s, t), expected) < 1e-9);
    CHECK(rel_err(cross_oracle(s, t), expected) < 1e-9);
  }
}

TEST_CASE("relation between crossing maps of two involutions") {
  Rng rng(113);
  for (Index n : {2, 3}) {
    const Involution s1 = random_involution(rng, n);
    const Involution s2 = random_involution(rng, n);
    const Matrix t = rng.matrix(n * n, n * n);
    // Cross_{S1}(T) = (S1* S2* (x) 1) Cross_{S2}(T) (1 (x) S2* S1*)
    const Matrix s1s2 = s1.s_star() * s2.s_star();
    const Matrix s2s1 = s2.s_star() * s1.s_star();
    const Matrix id = Matrix::Identity(n, n);
    const Matrix rhs = kron(s1s2, id) * cross_fast(s2, t) * kron(id, s2s1);
    CHECK(rel_err(cross_fast(s1, t), rhs) < 1e-9);
  }
}

TEST_CASE("inverse crossing map") {
  Rng rng(127);
  for (Index n : {2, 3}) {
    const Involution s = random_involution(rng, n);
    const Matrix t = rng.matrix(n * n, n * n);
    CHECK(rel_err(cross_inverse(s, cross_fast(s, t)), t) < 1e-9);
    CHECK(rel_err(cross_fast(s, cross_inverse(s, t)), t) < 1e-9);
    CHECK(rel_err(cross_inverse(s, flip(n)), flip(n)) < 1e-9);
    CHECK(rel_err(cross_inverse(s, rank_one_ps(s)), Matrix::Identity(n * n, n * n)) < 1e-9);

    // inverse crossing relation on random vectors:
    // <phi1 (x) psi1, Cross^{-1}(T)(phi2 (x) psi2)> = <S phi2 (x) phi1, T(psi2 (x) S* psi1)>
    const Matrix inv = cross_inverse(s, t);
    for (int trial = 0; trial < 5; ++trial) {
      const Vector phi1 = rng.vector(n), phi2 = rng.vector(n);
      const Vector psi1 = rng.vector(n), psi2 = rng.vector(n);
      const Complex lhs = tensor_product(phi1, psi1).dot(inv * tensor_product(phi2, psi2));
      const Complex rhs =
          tensor_product(s.s()(phi2), phi1).dot(t * tensor_product(psi2, s.s_star()(psi1)));
      CHECK(std::abs(lhs - rhs) < 1e-9 * std::max(1.0, std::abs(rhs)));
    }
  }
}

TEST_CASE("crossing symmetry detector") {
  Rng rng(131);
  const Index n = 2;
  const Involution s = random_involution(rng, n);
  CHECK(is_crossing_symmetric(s, flip(n)).symmetric);
  CHECK_FALSE(is_crossing_symmetric(s, Complex(0, 1) * flip(n)).symmetric);
  CHECK(is_crossing_symmetric(s, Complex(0, 1) * flip(n)).residual > 0.5);

  // antiunitary case: z 1 + conj(z) P_J + x F is crossing symmetric
  const Involution j = random_involution(rng, 3, 0.0);
  const Complex z(0.7, -0.3);
  const double x = 1.4;
  const Matrix t = z * Matrix::Identity(9, 9) + std::conj(z) * rank_one_ps(j) + x * flip(3);
  CHECK(is_crossing_symmetric(j, t).symmetric);
}

TEST_CASE("hat operators") {
  Rng rng(137);
  for (Index n : {2, 3}) {
    const Involution s = random_involution(rng, n);
    const Matrix t = rng.matrix(n * n, n * n);

    // S^ and J^ are involutions
    CHECK(rel_err(hat_s(s, hat_s(s, t)), t) < 1e-9);
    CHECK(rel_err(hat_j(s, hat_j(s, t)), t) < 1e-9);
    // S^(F) = F
    CHECK(rel_err(hat_s(s, flip(n)), flip(n)) < 1e-9);
    // S^ = J^ Delta^_{1/2} = Delta^_{-1/2} J^
    CHECK(rel_err(hat_s(s, t), hat_j(s, hat_delta(s, t, 0.5))) < 1e-9);
    CHECK(rel_err(hat_s(s, t), hat_delta(s, hat_j(s, t), -0.5)) < 1e-9);
  }
}

TEST_CASE("hat_s is antilinear and R-linear structure of H^") {
  Rng rng(139);
  const Index n = 3;
  const Involution s = random_involution(rng, n);
  const Matrix t1 = rng.matrix(n * n, n * n), t2 = rng.matrix(n * n, n * n);
  const Complex z = rng.cgauss();
  CHECK(rel_err(hat_s(s, t1 + z * t2), hat_s(s, t1) + std::conj(z) * hat_s(s, t2)) < 1e-9);

  // real combinations of crossing-symmetric operators stay crossing symmetric
  const Matrix a = symmetrize_crossing(s, t1);
  const Matrix b = symmetrize_crossing(s, t2);
  CHECK(is_crossing_symmetric(s, a).symmetric);
  CHECK(is_crossing_symmetric(s, b).symmetric);
  CHECK(is_crossing_symmetric(s, 0.3 * a + 1.7 * b).symmetric);
}

TEST_CASE("crossing map is C-linear and injective") {
  Rng rng(149);
  const Index n = 2;
  const Involution s = random_involution(rng, n);
  const Matrix t1 = rng.matrix(4, 4), t2 = rng.matrix(4, 4);
  const Complex z = rng.cgauss();
  CHECK(rel_err(cross_fast(s, t1 + z * t2), cross_fast(s, t1) + z * cross_fast(s, t2)) < 1e-9);
  // injectivity via the inverse
  const Matrix c1 = cross_fast(s, t1), c2 = cross_fast(s, t2);
  if (rel_err(c1, c2) < 1e-12) {
    CHECK(rel_err(t1, t2) < 1e-9);
  }
}

TEST_CASE("Hilbert-Schmidt isometry of the antiunitary crossing map") {
  Rng rng(151);
  for (Index n : {2, 3}) {
    const Involution j = random_involution(rng, n, 0.0);
    for (int trial = 0; trial < 5; ++trial) {
      const Matrix t = rng.matrix(n * n, n * n);
      CHECK(std::abs(cross_fast(j, t).norm() - t.norm()) < 1e-10 * t.norm());
    }
  }
}

TEST_CASE("adjoint matrix elements under crossing") {
  // (T*)^{jl}_{ik} = conj(T^{ik}_{jl}) in any orthonormal basis
  Rng rng(157);
  const Index n = 2;
  const Matrix t = rng.matrix(4, 4);
  const Matrix tstar = t.adjoint();
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      for (Index k = 0; k < n; ++k) {
        for (Index l = 0; l < n; ++l) {
          CHECK(std::abs(tstar(j * n + l, i * n + k) - std::conj(t(i * n + k, j * n + l))) <
                1e-14);
        }
      }
    }
  }
}

TEST_CASE("power and exchange checks") {
  Rng rng(163);
  // antiunitary: crossing map of order four
  const Involution j = random_involution(rng, 2, 0.0);
  const Matrix t = rng.matrix(4, 4);
  Matrix c = t;
  for (int k = 0; k < 4; ++k) c = cross_fast(j, c);
  CHECK(rel_err(c, t) < 1e-9);

  // Delta = diag(2, 1/2) with swap conjugation
  Matrix delta = Matrix::Zero(2, 2);
  delta(0, 0) = 2.0;
  delta(1, 1) = 0.5;
  Matrix swap(2, 2);
  swap << 0, 1, 1, 0;
  const Involution s = Involution::from_parts(AntilinearOp(swap), delta);
  const VerificationReport report = cross_power_checks(s, t);
  CHECK(report.all_passed());
  CHECK(report.max_residual() < 1e-9);

  // direct fourth-power conjugation oracle
  Matrix c4 = t;
  for (int k = 0; k < 4; ++k) c4 = cross_fast(s, c4);
  const Matrix dd = kron(delta, delta);
  const Matrix dd_inv = dd.inverse();
  CHECK(rel_err(c4, dd * t * dd_inv) < 1e-9);

  // flip stays fixed under the square
  CHECK(rel_err(cross_fast(s, cross_fast(s, flip(2))), flip(2)) < 1e-10);

  // random involutions
  for (int trial = 0; trial < 5; ++trial) {
    const Involution r = random_involution(rng, 3);
    const Matrix tt = rng.matrix(9, 9);
    const VerificationReport rep = cross_power_checks(r, tt);
    CHECK(rep.all_passed());
  }
}

TEST_CASE("KMS boundary condition") {
  Rng rng(167);
  const std::vector<double> ts{-1.0, 0.0, 0.5, 1.0};

  for (Index n : {2, 3}) {
    const Involution s = random_involution(rng, n);
    const std::array<Vector, 4> psi{rng.vector(n), rng.vector(n), rng.vector(n), rng.vector(n)};

    // T = F satisfies the boundary condition at every t
    CHECK(kms_boundary_check(s, flip(n), ts, psi).all_passed());

    // random T, t = 0
    const Matrix t = rng.matrix(n * n, n * n);
    CHECK(kms_boundary_check(s, t, {0.0}, psi).all_passed());
    // and along the whole list
    CHECK(kms_boundary_check(s, t, ts, psi).all_passed());
  }

  // Delta = 1: the boundary condition reduces to the J-crossing relation
  const Involution j = random_involution(rng, 2, 0.0);
  const Matrix t = rng.matrix(4, 4);
  const std::array<Vector, 4> psi{rng.vector(2), rng.vector(2), rng.vector(2), rng.vector(2)};
  for (double time : ts) {
    const auto [lhs, rhs] = kms_boundary_values(j, t, time, psi);
    // J-crossing relation evaluated directly
    const Matrix cross = cross_fast(j, t);
    const Complex direct = tensor_product(j.j()(psi[2]), psi[0])
                               .dot(cross * tensor_product(psi[3], j.j()(psi[1])));
    CHECK(std::abs(lhs - rhs) < 1e-9 * std::max(1.0, std::abs(lhs)));
    CHECK(std::abs(rhs - direct) < 1e-9 * std::max(1.0, std::abs(rhs)));
  }
}

TEST_CASE("numerical Hilbert-Schmidt adjoint gives S^* S^ = Delta^") {
  Rng rng(173);
  for (Index n : {2, 3}) {
    const Involution s = random_involution(rng, n);
    const Matrix big = hat_s_big_matrix(s);
    const Matrix t = rng.matrix(n * n, n * n);
    // S^* S^ (T) through the big antilinear matrices: M* = M^T
    const Vector image = big.transpose() * (big * vectorize(t).conjugate()).conjugate();
    const Matrix lhs = devectorize(image, n * n, n * n);
    CHECK(rel_err(lhs, hat_delta(s, t, 1.0)) < 1e-9);
  }
}
