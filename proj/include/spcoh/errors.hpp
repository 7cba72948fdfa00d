#pragma once

#include <stdexcept>
#include <string>

namespace spcoh {

/// Base class of every error raised by the library. The CLI maps each
/// subclass to its own exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "Error"; }
};

class NonExactDivision : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "NonExactDivision"; }
};

class InvalidSymbol : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "InvalidSymbol"; }
};

class InvalidLabel : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "InvalidLabel"; }
};

class RankUnderflow : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "RankUnderflow"; }
};

class ScaleGuard : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "ScaleGuard"; }
};

/// Malformed text input (symbol strings, partitions, field parameters).
class ParseError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "ParseError"; }
};

}  // namespace spcoh
