#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace borderline {

// Exact rational scalar used throughout the library.
using Q = mpq_class;

inline std::string to_string(const Q& q) { return q.get_str(); }

// Error for malformed user input (bad descriptors, unparsable polynomials,
// violated preconditions the caller is responsible for).  The CLI maps this
// to exit code 1.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Error for computations that end without a conclusive answer (randomized
// procedures out of luck, hypothesis failures).  The CLI maps this to exit
// code 2 when it is not already handled as a verdict.
struct inconclusive_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace borderline
