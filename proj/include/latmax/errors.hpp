#ifndef LATMAX_ERRORS_HPP
#define LATMAX_ERRORS_HPP

#include <stdexcept>

namespace latmax {

/// Base class for all latmax errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed JSON or a schema violation in an instance/solution file.
struct ParseError : Error {
  using Error::Error;
};

/// A solver was invoked on an instance outside its contract.
struct PreconditionError : Error {
  using Error::Error;
};

/// No exact algorithm is available for the detected topology.
struct UnsupportedTopologyError : Error {
  using Error::Error;
};

/// Bad runtime argument (unknown seed id, negative alpha, ...).
struct InvalidArgumentError : Error {
  using Error::Error;
};

/// Instance exceeds a hard size guard (brute-force enumeration).
struct SizeGuardError : Error {
  using Error::Error;
};

/// File could not be read or written.
struct IoError : Error {
  using Error::Error;
};

}  // namespace latmax

#endif
