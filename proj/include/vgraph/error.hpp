#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vgraph {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed tree, skeleton or machine-formula text. `position()` is the
/// byte offset at which parsing stopped.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class OrderLimitError : public Error {
 public:
  using Error::Error;
};

class UnsupportedStyle : public Error {
 public:
  using Error::Error;
};

}  // namespace vgraph
