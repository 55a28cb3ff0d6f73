#include "crosslab/antilinear.hpp"

#include "crosslab/tensor.hpp"

namespace crosslab {

AntilinearOp tensor(const AntilinearOp& a, const AntilinearOp& b) {
  return AntilinearOp(kron(a.matrix(), b.matrix()));
}

}  // namespace crosslab
