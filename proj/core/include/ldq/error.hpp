#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ldq {

// Failure categories surfaced by the library. Budget exhaustion is a status,
// not an error, and never appears here.
enum class Errc {
  UnboundVariable,
  IllegalPosition,
  TooLarge,
  BadTerm,
  BlankNodeSharing,
  NonSurjective,
  DuplicateDoc,
  UnknownDocument,
  NotMaterializable,
  BudgetRequired,
  Unsupported,
  BadFile,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

// Syntax error with the byte offset of the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, std::string expected, std::string found)
      : std::runtime_error("parse error at offset " + std::to_string(position) +
                           ": expected " + expected + ", found " + found),
        position_(position),
        expected_(std::move(expected)),
        found_(std::move(found)) {}

  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  std::size_t position_;
  std::string expected_;
  std::string found_;
};

}  // namespace ldq
