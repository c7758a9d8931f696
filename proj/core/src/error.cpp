#include "greedylab/error.hpp"

namespace greedylab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::out_of_layout: return "out_of_layout";
    case ErrorCode::enumeration_cap: return "enumeration_cap";
    case ErrorCode::overflow: return "overflow";
    case ErrorCode::not_sparse: return "not_sparse";
    case ErrorCode::not_certified: return "not_certified";
    case ErrorCode::parse: return "parse";
    case ErrorCode::io: return "io";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace greedylab
