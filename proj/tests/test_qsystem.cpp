#include "crosslab/qsystem.hpp"

#include "crosslab/crossing.hpp"
#include "crosslab/random.hpp"
#include "crosslab/tensor.hpp"

#include "doctest.h"
#include "test_helpers.hpp"

using namespace crosslab;
using crosslab::testing::rel_err;

namespace {

QSystem trivial_qsystem() {
  QSystem q;
  q.dim = 1;
  q.m = Matrix::Ones(1, 1);
  q.iota = Vector::Ones(1);
  return q;
}

MultiMatrixAlgebra two_points() {
  MultiMatrixAlgebra a;
  a.blocks = {1, 1};
  a.rho = {Matrix::Constant(1, 1, 0.5), Matrix::Constant(1, 1, 0.5)};
  return a;
}

MultiMatrixAlgebra m2(double p) {
  // M_2(C) with rho = diag(p, 1-p)
  MultiMatrixAlgebra a;
  a.blocks = {2};
  Matrix rho = Matrix::Zero(2, 2);
  rho(0, 0) = p;
  rho(1, 1) = 1.0 - p;
  a.rho = {rho};
  return a;
}

MultiMatrixAlgebra random_algebra(Rng& rng, const std::vector<Index>& blocks) {
  MultiMatrixAlgebra a;
  a.blocks = blocks;
  double total = 0.0;
  for (Index nk : blocks) {
    const Matrix g = rng.matrix(nk, nk);
    Matrix pos = g * g.adjoint() + 0.2 * Matrix::Identity(nk, nk);
    a.rho.push_back(pos);
    total += pos.trace().real();
  }
  for (Matrix& r : a.rho) r /= total;
  return a;
}

}  // namespace

TEST_CASE("validate the trivial Q-system") {
  const QSystem q = trivial_qsystem();
  const VerificationReport report = validate(q);
  CHECK(report.all_passed());
  const QSystemFlags flags = qsystem_flags(q);
  CHECK(flags.special);
  CHECK(flags.normalized);
  CHECK(flags.irreducible);
  CHECK(flags.d == doctest::Approx(1.0));
}

TEST_CASE("C(Z2) is special with d = |G|") {
  const QSystem q = functions_on_group(FiniteGroup::cyclic(2));
  CHECK(validate(q).all_passed());
  const QSystemFlags flags = qsystem_flags(q);
  CHECK(flags.special);
  CHECK(flags.d == doctest::Approx(2.0));
  CHECK(flags.normalized);
  CHECK_FALSE(flags.irreducible);  // commutative with two points
  CHECK(flags.center_dim == 2);
}

TEST_CASE("a perturbed multiplication reports the perturbation scale") {
  QSystem q = functions_on_group(FiniteGroup::cyclic(2));
  Rng rng(307);
  q.m += 1e-3 * rng.matrix(q.dim, q.dim * q.dim);
  const VerificationReport report = validate(q);
  CHECK_FALSE(report.all_passed());
  double assoc = 0.0;
  for (const Check& c : report.checks()) {
    if (c.name == "associativity") assoc = c.residual;
  }
  CHECK(assoc > 1e-4);
  CHECK(assoc < 1e-2);
}

TEST_CASE("derived data of the trivial Q-system") {
  const DerivedData data = derived_data(trivial_qsystem());
  CHECK(rel_err(data.s.s().matrix(), Matrix::Identity(1, 1)) < 1e-14);
  CHECK(rel_err(data.twist, Matrix::Identity(1, 1)) < 1e-14);
}

TEST_CASE("derived data of C(Z2): conjugation in the rescaled delta basis") {
  const QSystem q = functions_on_group(FiniteGroup::cyclic(2));
  const DerivedData data = derived_data(q);
  // direct computation of the bilinear form B = iota* m gives S = conj
  CHECK(rel_err(data.s.s().matrix(), Matrix::Identity(2, 2)) < 1e-12);
  CHECK(data.s.antiunitary());
}

TEST_CASE("conjugate equations and coev = xi_S") {
  Rng rng(311);
  const std::vector<MultiMatrixAlgebra> algebras = {
      two_points(), m2(0.5), m2(0.75), random_algebra(rng, {1, 2}), random_algebra(rng, {2, 1})};
  for (const auto& a : algebras) {
    const QSystem q = from_cstar(a);
    REQUIRE(validate(q).all_passed_except("specialness"));
    const DerivedData data = derived_data(q);
    const Index n = q.dim;
    const Matrix id = Matrix::Identity(n, n);
    // (1 (x) ev)(coev (x) 1) = 1 = (ev (x) 1)(1 (x) coev)
    CHECK(rel_err(kron(id, data.ev) * kron(data.coev, id), id) < 1e-10);
    CHECK(rel_err(kron(data.ev, id) * kron(id, data.coev), id) < 1e-10);
    // coev(1) = xi_S
    CHECK((Vector(data.coev.col(0)) - xi_vector(data.s)).norm() < 1e-10);
  }
}

TEST_CASE("twist certificates for group Q-systems") {
  for (int order : {2, 3, 4}) {
    const QSystem q = functions_on_group(FiniteGroup::cyclic(order));
    const VerificationReport report = twist_certificates(q);
    CHECK(report.all_passed());
    CHECK(report.max_residual() < 1e-10);
  }
  const QSystem s3 = group_algebra(FiniteGroup::symmetric(3));
  const VerificationReport report = twist_certificates(s3);
  CHECK(report.all_passed());
  CHECK(report.max_residual() < 1e-10);
}

TEST_CASE("twist certificates and specialness algebra for M2") {
  const QSystem q = from_cstar(m2(0.5));
  CHECK(validate(q).all_passed());
  const QSystemFlags flags = qsystem_flags(q);
  CHECK(flags.special);
  CHECK(flags.d == doctest::Approx(4.0));
  CHECK(flags.irreducible);
  const VerificationReport report = twist_certificates(q);
  CHECK(report.all_passed());

  const DerivedData data = derived_data(q);
  const Matrix& t = data.twist;
  CHECK(rel_err(t, t.adjoint()) < 1e-12);
  // specialness gives T^2 = d T
  CHECK(rel_err(t * t, flags.d * t) < 1e-10);
  // and ||T|| = d in operator norm
  Eigen::BDCSVD<Matrix> svd(t);
  CHECK(svd.singularValues()(0) == doctest::Approx(flags.d).epsilon(1e-9));
}

TEST_CASE("single-block M2 with skewed state is still special") {
  // one block: mm* = Tr(rho^{-1}) 1 is automatically scalar
  const QSystem q = from_cstar(m2(0.75));
  const QSystemFlags flags = qsystem_flags(q);
  CHECK(flags.special);
  CHECK(flags.d == doctest::Approx(4.0 / 3.0 + 4.0));
  CHECK(validate(q).all_passed());
  CHECK(twist_certificates(q).all_passed());
}

TEST_CASE("specialness iff constant block inverse traces") {
  Rng rng(313);
  // C + M2 tuned so the block values of Tr(rho_alpha^{-1}) differ
  MultiMatrixAlgebra bad;
  bad.blocks = {1, 2};
  bad.rho = {Matrix::Constant(1, 1, 0.5), 0.25 * Matrix::Identity(2, 2)};
  // Tr(rho_1^{-1}) = 2, Tr(rho_2^{-1}) = 8: not special
  {
    const auto traces = block_inverse_traces(bad);
    CHECK(traces[0] == doctest::Approx(2.0));
    CHECK(traces[1] == doctest::Approx(8.0));
    const QSystem q = from_cstar(bad);
    const QSystemFlags flags = qsystem_flags(q);
    CHECK_FALSE(flags.special);
    // mm* non-scalar shows up in the specialness residual
    const VerificationReport report = validate(q);
    bool specialness_failed = false;
    for (const Check& c : report.checks()) {
      if (c.name == "specialness") specialness_failed = !c.passed;
    }
    CHECK(specialness_failed);
    // every other axiom still holds
    CHECK(report.all_passed_except("specialness"));
  }
  // C + M2 tuned to be special: Tr(rho_1^{-1}) = Tr(rho_2^{-1})
  {
    // rho_1 = (c), rho_2 = diag(a, a) with 1/c = 2/a and c + 2a = 1
    const double a = 2.0 / 5.0, c = 1.0 / 5.0;
    MultiMatrixAlgebra good;
    good.blocks = {1, 2};
    good.rho = {Matrix::Constant(1, 1, c), a * Matrix::Identity(2, 2)};
    const auto traces = block_inverse_traces(good);
    CHECK(traces[0] == doctest::Approx(traces[1]));
    const QSystem q = from_cstar(good);
    CHECK(qsystem_flags(q).special);
    CHECK(validate(q).all_passed());
  }
  // randomized two-block inputs: specialness flag tracks the trace criterion
  for (int trial = 0; trial < 5; ++trial) {
    const MultiMatrixAlgebra a = random_algebra(rng, {1, 2});
    const auto traces = block_inverse_traces(a);
    const bool expect_special = std::abs(traces[0] - traces[1]) < 1e-9;
    CHECK(qsystem_flags(from_cstar(a)).special == expect_special);
  }
}

TEST_CASE("standardness criterion rho_alpha = n_alpha / sum n^2") {
  // M2 with rho = I/2: d = 4 = sum n_alpha^2, standard
  {
    const QSystem q = from_cstar(m2(0.5));
    CHECK(qsystem_flags(q).d == doctest::Approx(4.0));
  }
  // C + C with rho = 1/2, 1/2: d(X) = 2, d = 2, standard
  {
    const QSystem q = from_cstar(two_points());
    CHECK(qsystem_flags(q).d == doctest::Approx(2.0));
  }
  // M2 with skewed rho: special but d = 16/3 > 4 = d(X), not standard
  {
    const QSystem q = from_cstar(m2(0.75));
    CHECK(qsystem_flags(q).d > 4.0 + 1e-6);
  }
}

TEST_CASE("GNS Tomita property S(x Omega) = x^dagger Omega") {
  Rng rng(317);
  const std::vector<MultiMatrixAlgebra> algebras = {m2(0.6), random_algebra(rng, {1, 2}),
                                                    random_algebra(rng, {2, 2})};
  for (const auto& a : algebras) {
    const QSystem q = from_cstar(a);
    const DerivedData data = derived_data(q);
    for (int trial = 0; trial < 50 / 3 + 1; ++trial) {
      std::vector<Matrix> x, xdag;
      for (size_t blk = 0; blk < a.blocks.size(); ++blk) {
        const Matrix g = rng.matrix(a.blocks[blk], a.blocks[blk]);
        x.push_back(g);
        xdag.push_back(g.adjoint());
      }
      const Vector lhs = data.s.s()(gns_coordinates(a, x));
      const Vector rhs = gns_coordinates(a, xdag);
      CHECK((lhs - rhs).norm() < 1e-9 * std::max(1.0, rhs.norm()));
    }
  }
}

TEST_CASE("GNS multiplication represents the algebra product") {
  Rng rng(331);
  const MultiMatrixAlgebra a = random_algebra(rng, {2, 1});
  const QSystem q = from_cstar(a);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Matrix> x, y, xy;
    for (size_t blk = 0; blk < a.blocks.size(); ++blk) {
      const Matrix gx = rng.matrix(a.blocks[blk], a.blocks[blk]);
      const Matrix gy = rng.matrix(a.blocks[blk], a.blocks[blk]);
      x.push_back(gx);
      y.push_back(gy);
      xy.push_back(gx * gy);
    }
    const Vector lhs = q.m * tensor_product(gns_coordinates(a, x), gns_coordinates(a, y));
    CHECK((lhs - gns_coordinates(a, xy)).norm() < 1e-10);
  }
}

TEST_CASE("closed-form twist equals the GNS twist") {
  Rng rng(337);
  CHECK(rel_err(twist_of_multimatrix(m2(0.5)),
                from_cstar(m2(0.5)).m.adjoint() * from_cstar(m2(0.5)).m) < 1e-12);
  for (int trial = 0; trial < 5; ++trial) {
    const MultiMatrixAlgebra a =
        random_algebra(rng, trial % 2 == 0 ? std::vector<Index>{1, 2} : std::vector<Index>{2, 2});
    const QSystem q = from_cstar(a);
    CHECK(rel_err(twist_of_multimatrix(a), q.m.adjoint() * q.m) < 1e-9);
  }
}

TEST_CASE("abelian twist is diagonal with weights 1/rho") {
  const Matrix t = twist_of_multimatrix(two_points());
  Matrix expected = Matrix::Zero(4, 4);
  expected(0, 0) = 2.0;  // 1/rho_1 on block 1
  expected(3, 3) = 2.0;  // 1/rho_2 on block 2
  CHECK(rel_err(t, expected) < 1e-12);
  // cross-block pairs are annihilated
  Vector mixed = Vector::Zero(4);
  mixed(1) = 1.0;
  CHECK((t * mixed).norm() == 0.0);
}

TEST_CASE("C(G) twist in the delta basis") {
  const FiniteGroup z2 = FiniteGroup::cyclic(2);
  const Matrix t = functions_twist_delta_basis(z2);
  // T(delta_e (x) delta_e) = 2 delta_e (x) delta_e, cross terms vanish
  Vector ee = Vector::Zero(4), ea = Vector::Zero(4), aa = Vector::Zero(4);
  ee(0) = 1.0;
  ea(1) = 1.0;
  aa(3) = 1.0;
  CHECK((t * ee - 2.0 * ee).norm() < 1e-12);
  CHECK((t * ea).norm() < 1e-12);
  CHECK((t * aa - 2.0 * aa).norm() < 1e-12);
}

TEST_CASE("group Q-systems have d = |G|") {
  for (int order : {2, 3, 4}) {
    CHECK(qsystem_flags(functions_on_group(FiniteGroup::cyclic(order))).d ==
          doctest::Approx(order));
    CHECK(qsystem_flags(group_algebra(FiniteGroup::cyclic(order))).d == doctest::Approx(order));
  }
  const FiniteGroup s3 = FiniteGroup::symmetric(3);
  CHECK(qsystem_flags(functions_on_group(s3)).d == doctest::Approx(6.0));
  CHECK(qsystem_flags(group_algebra(s3)).d == doctest::Approx(6.0));
}

TEST_CASE("C(G) evaluation matches the standard solutions") {
  const QSystem q = functions_on_group(FiniteGroup::cyclic(3));
  const DerivedData data = derived_data(q);
  // S is plain conjugation in the orthonormal basis, Delta = 1
  CHECK(rel_err(data.s.s().matrix(), Matrix::Identity(3, 3)) < 1e-12);
  CHECK(data.s.antiunitary());
  // ev(b_g (x) b_h) = delta_{g,h}
  for (Index g = 0; g < 3; ++g) {
    for (Index h = 0; h < 3; ++h) {
      CHECK(std::abs(data.ev(0, g * 3 + h) - Complex(g == h ? 1.0 : 0.0)) < 1e-12);
    }
  }
}

TEST_CASE("L1(G) structure") {
  const FiniteGroup z2 = FiniteGroup::cyclic(2);
  const QSystem q = group_algebra(z2);
  CHECK(validate(q).all_passed());

  // T(delta_e (x) delta_e) = delta_e (x) delta_e + delta_a (x) delta_a
  const Matrix t = q.m.adjoint() * q.m;
  Vector ee = Vector::Zero(4), aa = Vector::Zero(4);
  ee(0) = 1.0;
  aa(3) = 1.0;
  CHECK((t * ee - (ee + aa)).norm() < 1e-12);

  // iota* iota = 1 and mm* = |G| 1 for Z4
  const QSystem z4 = group_algebra(FiniteGroup::cyclic(4));
  CHECK(std::abs(z4.iota.squaredNorm() - 1.0) < 1e-12);
  CHECK(rel_err(z4.m * z4.m.adjoint(), 4.0 * Matrix::Identity(4, 4)) < 1e-12);

  // derived J acts by (J psi)(g) = conj(psi(g^{-1}))
  const DerivedData data = derived_data(q);
  CHECK(data.s.antiunitary());
  const FiniteGroup z3 = FiniteGroup::cyclic(3);
  const DerivedData d3 = derived_data(group_algebra(z3));
  for (int g = 0; g < 3; ++g) {
    Vector delta = Vector::Zero(3);
    delta(g) = 1.0;
    Vector expected = Vector::Zero(3);
    expected(z3.inv(g)) = 1.0;
    CHECK((d3.s.j()(delta) - expected).norm() < 1e-12);
  }
}

TEST_CASE("S3 is nonabelian and its group algebra still certifies") {
  const FiniteGroup s3 = FiniteGroup::symmetric(3);
  REQUIRE(s3.order == 6);
  bool abelian = true;
  for (int a = 0; a < 6 && abelian; ++a) {
    for (int b = 0; b < 6 && abelian; ++b) abelian = s3.mul(a, b) == s3.mul(b, a);
  }
  CHECK_FALSE(abelian);
  const QSystem q = group_algebra(s3);
  CHECK(validate(q).all_passed());
  CHECK(twist_certificates(q).all_passed());
  // Yang-Baxter residual also certified through the report
}

TEST_CASE("jones projection") {
  // trivial Q-system: E = 1, crossing symmetric
  {
    const QSystem q = trivial_qsystem();
    const Matrix e = jones_projection(q);
    CHECK(rel_err(e, Matrix::Identity(1, 1)) < 1e-14);
    const DerivedData data = derived_data(q);
    CHECK(is_crossing_symmetric(data.s, e).symmetric);
  }
  // C(Z2): E = |xi><xi| / 2, idempotent self-adjoint, not crossing symmetric
  {
    const QSystem q = functions_on_group(FiniteGroup::cyclic(2));
    const Matrix e = jones_projection(q);
    const DerivedData data = derived_data(q);
    const Vector xi = xi_vector(data.s);
    CHECK(rel_err(e, Matrix(xi * xi.adjoint() / 2.0)) < 1e-12);
    CHECK(rel_err(e * e, e) < 1e-12);
    CHECK(rel_err(e, e.adjoint()) < 1e-12);
    const auto check = is_crossing_symmetric(data.s, e);
    CHECK_FALSE(check.symmetric);
    CHECK(check.residual > 0.1);
  }
  // Cross_S(1) = d E for L1(Z3)
  {
    const QSystem q = group_algebra(FiniteGroup::cyclic(3));
    const Matrix e = jones_projection(q);
    const DerivedData data = derived_data(q);
    const Matrix crossed = cross_oracle(data.s, Matrix::Identity(9, 9));
    CHECK(rel_err(crossed, 6.0 * e / 2.0) < 1e-10);  // d = 3: crossed = 3 E
    CHECK(rel_err(crossed, 3.0 * e) < 1e-10);
  }
  // non-special input refuses
  {
    MultiMatrixAlgebra bad;
    bad.blocks = {1, 2};
    bad.rho = {Matrix::Constant(1, 1, 0.5), 0.25 * Matrix::Identity(2, 2)};
    CHECK_THROWS_AS((void)jones_projection(from_cstar(bad)), NotSpecial);
  }
}

TEST_CASE("derived_data rejects non-Frobenius input") {
  QSystem broken = functions_on_group(FiniteGroup::cyclic(2));
  Rng rng(347);
  broken.m += 0.4 * rng.matrix(broken.dim, broken.dim * broken.dim);
  CHECK_THROWS_AS((void)derived_data(broken), InvolutionFailure);
}

TEST_CASE("finite group validation") {
  CHECK_THROWS_AS((void)FiniteGroup::from_table({{0, 1}, {1, 1}}), InvalidState);
  const FiniteGroup z3 = FiniteGroup::cyclic(3);
  CHECK(z3.identity == 0);
  CHECK(z3.inv(1) == 2);
  CHECK(z3.inv(2) == 1);
  // non-associative latin square on 5 elements
  std::vector<std::vector<int>> latin = {
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  CHECK_THROWS_AS((void)FiniteGroup::from_table(latin), InvalidState);
}

TEST_CASE("rescaling a non-special Frobenius algebra into a Q-system") {
  // C + M2 with mismatched block inverse traces: Frobenius but not special
  MultiMatrixAlgebra mixed;
  mixed.blocks = {1, 2};
  mixed.rho = {Matrix::Constant(1, 1, 0.5), 0.25 * Matrix::Identity(2, 2)};
  const QSystem raw = from_cstar(mixed);
  REQUIRE_FALSE(qsystem_flags(raw).special);

  const QSystem rescaled = rescale_to_qsystem(raw);
  const VerificationReport report = validate(rescaled);
  CHECK(report.all_passed());
  CHECK(qsystem_flags(rescaled).special);
  CHECK(qsystem_flags(rescaled).normalized);
  // all twist certificates hold for the rescaled system
  CHECK(twist_certificates(rescaled).all_passed());
  // ev = iota* m is invariant under the rescaling (the z factors cancel),
  // so the derived involution is unchanged even though z is not scalar
  const DerivedData before = derived_data(raw);
  const DerivedData after = derived_data(rescaled);
  CHECK((before.s.s().matrix() - after.s.s().matrix()).norm() < 1e-10);
  // ... while the twist does change
  CHECK(rel_err(before.twist, after.twist) > 1e-3);

  // rescaling a Q-system is the identity up to roundoff
  const QSystem q = functions_on_group(FiniteGroup::cyclic(3));
  const QSystem same = rescale_to_qsystem(q);
  CHECK(rel_err(same.m, q.m) < 1e-12);
  CHECK((same.iota - q.iota).norm() < 1e-12);
}
