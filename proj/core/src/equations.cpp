#include "cuweno/equations.hpp"

#include <sstream>

namespace cuweno {

void throw_nonphysical(double rho, double p, long cell) {
  std::ostringstream os;
  os << "non-physical state at cell " << cell << " (rho=" << rho << ", P=" << p << ")";
  throw NonPhysicalState(os.str(), cell);
}

}  // namespace cuweno
