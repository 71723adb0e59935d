#include "ncg/error.hpp"

namespace ncg {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::tag_mismatch: return "tag_mismatch";
    case ErrorCode::dimension: return "dimension";
    case ErrorCode::arity: return "arity";
    case ErrorCode::domain: return "domain";
    case ErrorCode::lexer: return "lexer";
    case ErrorCode::parse: return "parse";
    case ErrorCode::literal_dimension: return "literal_dimension";
    case ErrorCode::numeric_overflow: return "numeric_overflow";
    case ErrorCode::invalid_argument: return "invalid_argument";
  }
  return "unknown";
}

}  // namespace ncg
