#pragma once

#include <stdexcept>
#include <string>

namespace s4lie {

// Error categories surfaced through the C API as status codes.
enum class ErrorKind {
  format,
  context,
  shape,
  invalid_involution,
  invalid_form,
  missing_structure,
  axiom,
  construction,
  underdetermined,
  not_a_triple,
  containment,
  field_capability,
  action_structure,
  grading,
  unknown_name,
  precondition,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Mixed field contexts in one computation.
class ContextError : public Error {
 public:
  explicit ContextError(const std::string& what) : Error(ErrorKind::context, what) {}
};

class ShapeError : public Error {
 public:
  explicit ShapeError(const std::string& what) : Error(ErrorKind::shape, what) {}
};

class FormatError : public Error {
 public:
  explicit FormatError(const std::string& what) : Error(ErrorKind::format, what) {}
};

const char* error_kind_name(ErrorKind kind) noexcept;

}  // namespace s4lie
