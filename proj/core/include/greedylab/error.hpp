#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace greedylab {

enum class ErrorCode {
  invalid_argument,
  out_of_layout,
  enumeration_cap,
  overflow,
  not_sparse,
  not_certified,
  parse,
  io,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries a machine-readable code so the
/// command line front end can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace greedylab
