#pragma once

#include <stdexcept>
#include <string>

namespace steiner {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CoincidentPoints : Error {
  using Error::Error;
};

struct CollinearPoints : Error {
  using Error::Error;
};

struct CoincidentEndpoints : Error {
  using Error::Error;
};

struct KappaTooLarge : Error {
  using Error::Error;
};

struct InvalidTopology : Error {
  using Error::Error;
};

struct KTooLarge : Error {
  using Error::Error;
};

struct InvalidAngleTriple : Error {
  using Error::Error;
};

struct NotATerminal : Error {
  using Error::Error;
};

struct DegenerateEdge : Error {
  using Error::Error;
};

struct EpsOutOfRange : Error {
  using Error::Error;
};

struct CoincidentQuasiTerminals : Error {
  using Error::Error;
};

struct NoConvergence : Error {
  using Error::Error;
};

struct RangeViolation : Error {
  using Error::Error;
};

struct NoRootFound : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace steiner
