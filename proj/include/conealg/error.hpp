#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace conealg {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (bad vectors, unparsable text, arity mismatch).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Text input that failed to parse; `column` is 1-based.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t column)
      : InputError(what + " at column " + std::to_string(column)), message_(what), column_(column) {}

  std::size_t column() const noexcept { return column_; }
  /// The message without the column suffix.
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  std::size_t column_;
};

/// A fixed-width integer computation would have wrapped.
class OverflowError : public Error {
 public:
  OverflowError() : Error("integer overflow") {}
};

/// An ideal power or product would enumerate more candidates than allowed.
class CapExceededError : public Error {
 public:
  using Error::Error;
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError();
  return out;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out)) throw OverflowError();
  return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError();
  return out;
}

}  // namespace conealg
