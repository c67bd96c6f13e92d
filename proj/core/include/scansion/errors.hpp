#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace scansion {

// Base of every error raised by the library.
class ScansionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text (lexicon, rule config, corpus, amendments).
class ParseError : public ScansionError {
 public:
  ParseError(const std::string& what, std::size_t line)
      : ScansionError(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  // 1-based line number, 0 when not tied to a line.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Well-formed input that violates a domain invariant.
class ValidationError : public ScansionError {
 public:
  using ScansionError::ScansionError;
};

class UnknownWord : public ScansionError {
 public:
  explicit UnknownWord(std::string key)
      : ScansionError("unknown word: " + key), key_(std::move(key)) {}
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

class AmendmentMismatch : public ScansionError {
 public:
  using ScansionError::ScansionError;
};

}  // namespace scansion
