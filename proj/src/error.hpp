#pragma once

#include <stdexcept>
#include <string>

namespace ptscarf {

/// Failure classes surfaced through the C API as distinct status codes.
enum class ErrorKind {
  InvalidArgument,  // malformed parameters, grids, tags
  OutOfRange,       // quantum number outside the normalizable range
  BranchCut,        // principal branch of a complex power would be discontinuous
  Numerical,        // eigensolver or iteration failure
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorKind::InvalidArgument, what);
}

}  // namespace ptscarf
