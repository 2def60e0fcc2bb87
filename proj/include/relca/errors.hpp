#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace relca {

// Domain failures. The CLI maps all of these to exit status 1.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidArgument : Error {
  using Error::Error;
};

struct IncompatibleContexts : Error {
  using Error::Error;
};

struct BudgetExceeded : Error {
  BudgetExceeded(std::size_t size, std::size_t budget)
      : Error("budget exceeded: " + std::to_string(size) + " candidates > budget " + std::to_string(budget)),
        size(size),
        budget(budget) {}
  std::size_t size;
  std::size_t budget;
};

struct ParseError : Error {
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what), line(line), column(column) {}
  std::size_t line;
  std::size_t column;
};

struct InternalError : Error {
  using Error::Error;
};

}  // namespace relca
