#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sepcodes {

// Base of every error the library throws.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Out-of-range ids, self-loops, parameters outside a family's domain.
struct InvalidInput : Error {
  using Error::Error;
};

// Set operation between sets over different universes.
struct UniverseMismatch : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// The hypergraph contains the empty set, so no cover exists.
struct EmptyHyperedge : Error {
  using Error::Error;
};

struct NotAdmissible : Error {
  using Error::Error;
};

}  // namespace sepcodes
