#include "gokit/error.hpp"

namespace gokit {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::DegenerateLagrangian: return "degenerate-lagrangian";
    case ErrorKind::NoEquilibrium: return "no-equilibrium";
    case ErrorKind::NoConvergence: return "no-convergence";
    case ErrorKind::InternalConsistency: return "internal-consistency";
    case ErrorKind::Divergence: return "divergence";
  }
  return "unknown";
}

}  // namespace gokit
