#include "crosslab/random.hpp"

#include <Eigen/QR>

namespace crosslab {

Vector Rng::vector(Index n) {
  Vector v(n);
  for (Index i = 0; i < n; ++i) v(i) = cgauss();
  return v;
}

Matrix Rng::matrix(Index rows, Index cols) {
  Matrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) m(i, j) = cgauss();
  }
  return m;
}

Matrix Rng::hermitian(Index n) {
  Matrix m = matrix(n, n);
  return Matrix(0.5 * (m + m.adjoint()));
}

Matrix Rng::haar_unitary(Index n) {
  Matrix g = matrix(n, n);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  Vector phase(n);
  for (Index i = 0; i < n; ++i) {
    const Complex d = r(i, i);
    phase(i) = std::abs(d) > 0 ? d / std::abs(d) : Complex(1.0);
  }
  return q * phase.asDiagonal();
}

AntilinearOp Rng::antiunitary_involution(Index n) {
  const Matrix w = haar_unitary(n);
  return AntilinearOp(w * w.transpose());
}

Matrix Rng::modular_operator(const AntilinearOp& j, double spread) {
  const Index n = j.dim();
  Matrix x = hermitian(n);
  // J X J as a linear map, then antisymmetrize under it.
  const Matrix jxj = j.matrix() * x.conjugate() * j.matrix().conjugate();
  Matrix y = 0.5 * (x - jxj);
  const double norm = y.norm();
  if (norm > 0) y *= spread / norm;
  Eigen::SelfAdjointEigenSolver<Matrix> es(y);
  Vector expd(n);
  for (Index i = 0; i < n; ++i) expd(i) = std::exp(es.eigenvalues()(i));
  return es.eigenvectors() * expd.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace crosslab
