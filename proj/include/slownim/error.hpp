#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace slownim {

enum class ErrorKind {
  invalid_input,
  illegal_move,
  unsupported_spec,
  out_of_box,
  no_moves,
  resource,
  corrupt_table,
  not_an_exception,
  not_in_catalog,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Single exception type for the library; `kind()` distinguishes the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace slownim
