#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace chromsym {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A graph operation would exceed the bitset capacity (64 vertices).
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A configured size guard (vertex count, edge count, Bell bound...) was exceeded.
class GuardError : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The input is not divisible by m~_1 under the odot product.
class DivisionError : public Error {
 public:
  using Error::Error;
};

class NotACograph : public Error {
 public:
  using Error::Error;
};

/// Syntax error with the byte offset and the set of tokens that would have
/// been accepted there.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::vector<std::string> expected,
             const std::string& detail = {});

  std::size_t position() const noexcept { return position_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

}  // namespace chromsym
