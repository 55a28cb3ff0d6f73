// Seeded randomness for tests and the CLI: Gaussian matrices, Haar unitaries
// (QR with R-diagonal phase fix), random antiunitary involutions and random
// modular data compatible with J Delta J = Delta^{-1}.

#pragma once

#include "crosslab/antilinear.hpp"
#include "crosslab/types.hpp"

#include <cstdint>
#include <random>

namespace crosslab {

class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : eng_(seed) {}

  double gauss() { return normal_(eng_); }
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * std::uniform_real_distribution<double>(0.0, 1.0)(eng_);
  }
  Complex cgauss() { return Complex(gauss(), gauss()); }

  Vector vector(Index n);
  Matrix matrix(Index rows, Index cols);
  Matrix hermitian(Index n);

  // Haar-distributed unitary: QR of a complex Gaussian matrix with the
  // R diagonal normalized to positive reals.
  Matrix haar_unitary(Index n);

  // Random antiunitary involution J = W W^T conj for Haar W (every symmetric
  // unitary arises this way).
  AntilinearOp antiunitary_involution(Index n);

  // Random positive Delta with J Delta J = Delta^{-1}: Delta = exp(Y) with
  // Y Hermitian, J Y J = -Y, ||Y|| <= spread.
  Matrix modular_operator(const AntilinearOp& j, double spread = 1.2);

  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace crosslab
