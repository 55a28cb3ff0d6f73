// Core scalar/matrix aliases, tolerance configuration and error types shared
// by all crosslab modules.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace crosslab {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

// Tolerance knobs. The scale factors multiply a problem-dependent magnitude
// (norm, largest singular value, dimension) at the point of use.
struct Tolerances {
  double pd_scale = 1e-12;        // positive definiteness: min eig > pd_scale * ||h||
  double rank_scale = 1e-9;       // nullspace rank cut: sigma <= rank_scale * sigma_max
  double identity_scale = 1e-9;   // identity residuals: tol = identity_scale * dimension
  double check_tol = 1e-9;        // default tolerance for named verification checks

  double identity_tol(Index dim) const { return identity_scale * static_cast<double>(dim); }
};

struct ShapeMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotHermitian : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotPositiveDefinite : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotInvolution : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotAntiunitary : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct InvalidModularRelation : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct DimensionMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvolutionFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvariantViolation : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotAResolution : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotEndomorphism : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotSpecial : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct InvalidState : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct PreconditionFailed : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void require_same_shape(const Matrix& a, const Matrix& b, const char* where) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeMismatch(std::string(where) + ": shapes " + std::to_string(a.rows()) + "x" +
                        std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                        std::to_string(b.cols()));
  }
}

inline void require_square(const Matrix& a, const char* where) {
  if (a.rows() != a.cols()) {
    throw ShapeMismatch(std::string(where) + ": matrix is " + std::to_string(a.rows()) + "x" +
                        std::to_string(a.cols()) + ", expected square");
  }
}

// Base dimension N of an operator on H (x) H given as an N^2 x N^2 matrix.
Index bipartite_base_dim(const Matrix& t, const char* where = "bipartite operator");

}  // namespace crosslab
