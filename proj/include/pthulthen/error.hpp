#pragma once

#include <stdexcept>
#include <string>

namespace pth {

enum class ErrorKind {
  InvalidArgument,
  Pole,
  BranchCut,
  Invertibility,
  DegenerateState,
  InversionBranch,
  StepTooSmall,
  Consistency,
  EigensolverFailure,
};

const char* to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries one of the kinds above so the
// C layer can map it onto a status code without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace pth
