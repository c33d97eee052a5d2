#pragma once

#include <stdexcept>
#include <string>

namespace qgame {

// Dimensions of matrix operands do not conform.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A numeric parameter is outside its allowed range.
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A size cap was exceeded (e.g. qubit count).
struct ResourceError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An unknown name was requested from a registry.
struct LookupError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A scenario/config file could not be parsed.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qgame
