#pragma once

#include <stdexcept>

namespace mcasim {

/// Bad caller input: out-of-range values, shape mismatches, violated preconditions.
struct argument_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// File or format problems: missing paths, bad magic numbers, truncated records.
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Numeric failures: non-convergent programming loops, calibration impossibilities.
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace mcasim
