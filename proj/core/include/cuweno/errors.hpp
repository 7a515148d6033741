#pragma once

#include <stdexcept>

namespace cuweno {

/// Raised when a run produces non-finite values or otherwise cannot proceed.
/// The message names the stage, axis or cell where the failure was detected.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cuweno
