#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ntg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a term graph is built with bad arities or dangling edges.
class GraphError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& msg)
      : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// An operation was called on an input outside its domain, e.g. an rgs
// that is not an ntg, or a first-order graph outside the RG class.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class MissingDepthError : public Error {
 public:
  using Error::Error;
};

}  // namespace ntg
