#ifndef CARTDEC_ERROR_HPP
#define CARTDEC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cartdec {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad points, mismatched degrees, unparsable files.
class InputError : public Error {
public:
  using Error::Error;
};

/// A configured search or enumeration budget was exhausted.
class CapExceeded : public Error {
public:
  using Error::Error;
};

/// The input is well formed but violates a structural requirement
/// (e.g. a supplied subgroup family is not a Cartesian system).
class StructureError : public Error {
public:
  using Error::Error;
};

} // namespace cartdec

#endif
