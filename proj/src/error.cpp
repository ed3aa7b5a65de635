#include "cdlab/error.hpp"

namespace cdlab {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::rank_deficient: return "rank-deficient";
    case ErrorKind::not_hermitian: return "not-hermitian";
    case ErrorKind::symmetry_violation: return "symmetry-violation";
    case ErrorKind::unsupported_support: return "unsupported-support";
    case ErrorKind::basis_mismatch: return "basis-mismatch";
    case ErrorKind::degenerate_series: return "degenerate-series";
    case ErrorKind::parse_error: return "parse-error";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what),
      kind_(kind) {}

bool Error::is_numerical() const noexcept {
  return kind_ == ErrorKind::rank_deficient ||
         kind_ == ErrorKind::not_hermitian ||
         kind_ == ErrorKind::degenerate_series;
}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace cdlab
