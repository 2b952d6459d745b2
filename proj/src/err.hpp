#ifndef EDIM_ERR_HPP
#define EDIM_ERR_HPP

#include <stdexcept>
#include <string>

namespace edim {

// Error taxonomy; the C API maps each type onto a status code.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Precondition violations: degree/field/rank mismatches, division by zero,
// out-of-range indices, unsupported shapes.
class InvalidArgument : public Error {
public:
  using Error::Error;
};

// Malformed input text: cycle notation, rationals, seed or matrix files.
class ParseError : public Error {
public:
  using Error::Error;
};

// A bound table derived lower > upper; carries the witnessing derivations.
class InconsistencyError : public Error {
public:
  using Error::Error;
};

class IoError : public Error {
public:
  using Error::Error;
};

}  // namespace edim

#endif
