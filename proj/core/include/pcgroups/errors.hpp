#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pcgroups {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed presentation source; line and column are 1-based.
  class ParseError : public Error {
   public:
    ParseError(std::size_t line, std::size_t column, std::string const& msg)
        : Error("line " + std::to_string(line) + ", column "
                + std::to_string(column) + ": " + msg),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept {
      return line_;
    }
    std::size_t column() const noexcept {
      return column_;
    }

   private:
    std::size_t line_;
    std::size_t column_;
  };

  // Structurally invalid presentation or invalid constructor arguments.
  class PresentationError : public Error {
   public:
    using Error::Error;
  };

  // A collection step budget or element budget was exceeded.
  class ResourceLimit : public Error {
   public:
    using Error::Error;
  };

  // Operands belong to different groups, or a subgroup precondition failed.
  class DomainError : public Error {
   public:
    using Error::Error;
  };

}  // namespace pcgroups
