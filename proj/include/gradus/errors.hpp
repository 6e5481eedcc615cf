#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gradus {

/// Base class for all kernel errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text; `position` is a 0-based character offset into the
/// string being parsed.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, size_t position)
      : Error(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  size_t position() const { return position_; }

 private:
  size_t position_;
};

/// Ring construction or compatibility violation: duplicate variable names,
/// weight < 1, operands from different rings, odd variables where an
/// operation supports only commutative rings.
class RingError : public Error {
 public:
  using Error::Error;
};

/// Invalid rational-series operation (division by the zero series,
/// expansion of a denominator that vanishes at T = 0).
class SeriesError : public Error {
 public:
  using Error::Error;
};

/// Normal-form request on a kappa expression that still contains opaque
/// residual symbols after rewriting.
class UnreducedSymbolError : public Error {
 public:
  explicit UnreducedSymbolError(const std::string& symbol)
      : Error("expression contains unreduced symbol " + symbol), symbol_(symbol) {}

  const std::string& symbol() const { return symbol_; }

 private:
  std::string symbol_;
};

}  // namespace gradus
