#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ncg {

enum class ErrorCode {
  tag_mismatch,
  dimension,
  arity,
  domain,
  lexer,
  parse,
  literal_dimension,
  numeric_overflow,
  invalid_argument,
};

const char* to_string(ErrorCode code) noexcept;

// Every failure raised by the library. Parser errors additionally carry the
// byte offset into the input text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::size_t position = npos)
      : std::runtime_error(message), code_(code), position_(position) {}

  ErrorCode code() const noexcept { return code_; }
  std::size_t position() const noexcept { return position_; }
  bool has_position() const noexcept { return position_ != npos; }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  ErrorCode code_;
  std::size_t position_;
};

}  // namespace ncg
