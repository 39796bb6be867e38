#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "orient/types.hpp"

namespace orient {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class SelfLoopError : public Error {
 public:
  explicit SelfLoopError(VertexId v)
      : Error("self-loop at vertex " + std::to_string(v)) {}
};

class DuplicateEdgeError : public Error {
 public:
  DuplicateEdgeError(VertexId u, VertexId v)
      : Error("edge {" + std::to_string(u) + "," + std::to_string(v) +
              "} already present") {}
};

class MissingEdgeError : public Error {
 public:
  MissingEdgeError(VertexId u, VertexId v)
      : Error("edge {" + std::to_string(u) + "," + std::to_string(v) +
              "} not present") {}
};

class StalePathError : public Error {
 public:
  StalePathError(VertexId from, VertexId to)
      : Error("stale slot hint on arc (" + std::to_string(from) + "," +
              std::to_string(to) + ")") {}
};

// A single update spent more reorientations than its budget allows.
class BudgetExceededError : public Error {
 public:
  explicit BudgetExceededError(std::uint64_t spent)
      : Error("reorientation budget exceeded after " + std::to_string(spent) +
              " flips") {}
};

class TooLargeError : public Error {
 public:
  explicit TooLargeError(const std::string& what) : Error(what) {}
};

class TooDenseError : public Error {
 public:
  explicit TooDenseError(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& source, std::size_t line,
             const std::string& what)
      : Error(source + ":" + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class NegativeVertexError : public ParseError {
 public:
  NegativeVertexError(const std::string& source, std::size_t line)
      : ParseError(source, line, "negative vertex id") {}
};

class EmptyInputError : public Error {
 public:
  explicit EmptyInputError(const std::string& what) : Error(what) {}
};

// The benchmark matrix has a (algorithm, instance) cell without records.
class MissingCellError : public Error {
 public:
  MissingCellError(const std::string& algorithm, const std::string& instance)
      : Error("no record for algorithm '" + algorithm + "' on instance '" +
              instance + "'") {}
};

}  // namespace orient
