#pragma once

#include <stdexcept>
#include <string>

namespace hookzeta {

/// Failure classes surfaced by the library. The CLI maps `InvalidInput`,
/// `Singular`, `ScaleExceeded` and `NotALattice` to exit code 2, everything
/// else to 1.
enum class ErrorKind {
  InvalidInput,
  Singular,
  NotSublattice,
  ScaleExceeded,
  NotEquivalent,
  NotALattice,
  Internal,
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

}  // namespace hookzeta
