#include "crosslab/tensor.hpp"

#include <Eigen/SVD>

#include <cmath>

namespace crosslab {

Index bipartite_base_dim(const Matrix& t, const char* where) {
  require_square(t, where);
  const auto n = static_cast<Index>(std::llround(std::sqrt(static_cast<double>(t.rows()))));
  if (n * n != t.rows()) {
    throw ShapeMismatch(std::string(where) + ": size " + std::to_string(t.rows()) +
                        " is not a perfect square");
  }
  return n;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Matrix flip(Index n) {
  Matrix f = Matrix::Zero(n * n, n * n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      f(j * n + i, i * n + j) = 1.0;  // e_i (x) e_j -> e_j (x) e_i
    }
  }
  return f;
}

HermEig herm_eig(const Matrix& h, const Tolerances& tol) {
  require_square(h, "herm_eig");
  const double scale = h.norm();
  if ((h - h.adjoint()).norm() > 1e-10 * std::max(1.0, scale)) {
    throw NotHermitian("herm_eig: matrix is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("herm_eig: eigendecomposition failed");
  }
  if (solver.eigenvalues().minCoeff() <= tol.pd_scale * scale) {
    throw NotPositiveDefinite("herm_eig: matrix is not positive definite");
  }
  return HermEig{solver.eigenvalues(), solver.eigenvectors()};
}

Matrix HermEig::power(Complex z) const {
  const Index n = eigenvalues.size();
  Vector powered(n);
  for (Index k = 0; k < n; ++k) {
    powered(k) = std::exp(z * std::log(eigenvalues(k)));
  }
  return eigenvectors * powered.asDiagonal() * eigenvectors.adjoint();
}

Matrix herm_power(const Matrix& h, Complex z, const Tolerances& tol) {
  return herm_eig(h, tol).power(z);
}

Vector tensor_product(const Vector& v, const Vector& w) {
  Vector out(v.size() * w.size());
  for (Index i = 0; i < v.size(); ++i) {
    out.segment(i * w.size(), w.size()) = v(i) * w;
  }
  return out;
}

Complex hs_inner(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "hs_inner");
  return (a.adjoint() * b).trace();
}

Vector vectorize(const Matrix& m) {
  Vector v(m.size());
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      v(i * m.cols() + j) = m(i, j);
    }
  }
  return v;
}

Matrix devectorize(const Vector& v, Index rows, Index cols) {
  if (v.size() != rows * cols) {
    throw ShapeMismatch("devectorize: vector length does not match shape");
  }
  Matrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) {
      m(i, j) = v(i * cols + j);
    }
  }
  return m;
}

RealVector realify(const Vector& z) {
  RealVector x(2 * z.size());
  x.head(z.size()) = z.real();
  x.tail(z.size()) = z.imag();
  return x;
}

Vector unrealify(const RealVector& x) {
  const Index m = x.size() / 2;
  Vector z(m);
  z.real() = x.head(m);
  z.imag() = x.tail(m);
  return z;
}

RealMatrix real_matrix_of(const RealLinearMap& map, Index rows, Index cols) {
  const Index dim = rows * cols;
  Matrix probe = Matrix::Zero(rows, cols);
  // Probe with E_pq and i*E_pq; columns are realified images.
  Matrix first = map(probe);  // image of 0 fixes the output shape
  const Index out = first.size();
  RealMatrix big(2 * out, 2 * dim);
  for (Index p = 0; p < rows; ++p) {
    for (Index q = 0; q < cols; ++q) {
      const Index col = p * cols + q;
      probe(p, q) = 1.0;
      big.col(col) = realify(vectorize(map(probe)));
      probe(p, q) = Complex(0.0, 1.0);
      big.col(dim + col) = realify(vectorize(map(probe)));
      probe(p, q) = 0.0;
    }
  }
  return big;
}

std::vector<Matrix> real_nullspace(const RealMatrix& map, Index rows, Index cols,
                                   const Tolerances& tol) {
  if (map.cols() != 2 * rows * cols) {
    throw ShapeMismatch("real_nullspace: column count does not match realified shape");
  }
  Eigen::BDCSVD<RealMatrix> svd(map, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cut = sv.size() > 0 ? tol.rank_scale * sv(0) : 0.0;
  std::vector<Matrix> kernel;
  for (Index k = 0; k < map.cols(); ++k) {
    const double sigma = k < sv.size() ? sv(k) : 0.0;
    if (sigma <= cut) {
      kernel.push_back(devectorize(unrealify(svd.matrixV().col(k)), rows, cols));
    }
  }
  return kernel;
}

std::vector<Matrix> real_nullspace(const RealLinearMap& map, Index rows, Index cols,
                                   const Tolerances& tol) {
  return real_nullspace(real_matrix_of(map, rows, cols), rows, cols, tol);
}

}  // namespace crosslab
