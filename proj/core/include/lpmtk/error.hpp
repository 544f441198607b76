#pragma once

#include <stdexcept>
#include <string>

namespace lpmtk {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when input data violates a documented format or precondition.
class MalformedInputError : public Error {
 public:
  explicit MalformedInputError(const std::string& what) : Error(what) {}
};

/// Raised when contracting a loop or deleting a coloop; the rank convention
/// for such minors is deliberately left undefined for explicit basis sets.
class DegenerateMinorError : public Error {
 public:
  explicit DegenerateMinorError(const std::string& what) : Error(what) {}
};

/// Raised when two bounding lattice paths cross.
class InvalidBoundsError : public Error {
 public:
  explicit InvalidBoundsError(const std::string& what) : Error(what) {}
};

/// Raised when a candidate hyperplane does not define a split.
class NotASplitError : public Error {
 public:
  explicit NotASplitError(const std::string& what) : Error(what) {}
};

/// Raised when an operation only defined for certain ambient matroids is
/// invoked on an unsupported one.
class UnsupportedAmbientError : public Error {
 public:
  explicit UnsupportedAmbientError(const std::string& what) : Error(what) {}
};

}  // namespace lpmtk
