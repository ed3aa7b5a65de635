#pragma once

#include <stdexcept>
#include <string>

namespace cdlab {

enum class ErrorKind {
  invalid_argument,
  rank_deficient,
  not_hermitian,
  symmetry_violation,
  unsupported_support,
  basis_mismatch,
  degenerate_series,
  parse_error,
};

const char* to_string(ErrorKind kind);

// Single exception type for the library; `kind()` lets callers dispatch
// (the CLI maps parse errors and numerical failures to distinct exit codes).
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

  // True for failures caused by the numerics rather than bad input.
  bool is_numerical() const noexcept;

private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace cdlab
