#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hcm {

enum class ErrorKind {
  Dimension,
  WrongSymmetry,
  DegenerateForm,
  NotInvertibleOverIntegers,
  NoPrimitivePart,
  IndexUndefined,
  MismatchedData,
  UnsupportedGluing,
  Precondition,
  SearchBudget,
  Unsupported,
  InsufficientInput,
  InternalConstruction,
  NontrivialNormalBundle,
  NotElementary,
  MalformedInput,
};

std::string_view error_kind_name(ErrorKind kind);

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

}  // namespace hcm
