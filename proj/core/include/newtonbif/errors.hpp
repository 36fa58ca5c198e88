#pragma once

#include <stdexcept>

namespace nbif {

// Input is mathematically degenerate for the pipeline (nondegeneracy failure,
// Newton polyhedron not full-dimensional, ...).  CLI exit code 2.
struct DegenerateInputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A desk-scale guard tripped (ambient dimension > 8, ray explosion, ...).
// CLI exit code 3.
struct GuardLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Numeric answer too ambiguous to trust (root clusters closer than 10x the
// tolerance, unstable epsilon, ...).
struct PrecisionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace nbif
