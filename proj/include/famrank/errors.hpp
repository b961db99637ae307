#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace famrank {

/// Syntax error in sentence text; carries a 1-based source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A construct outside the monadic-with-constants fragment was requested
/// from an operation that only supports that fragment.
class UnsupportedFeature : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A symbol index exceeds what the signature declares, or a structure
/// does not interpret a symbol that a sentence uses.
class UnknownSymbol : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Point, region, or structure built for a different signature.
class SignatureMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured size cap (region count, cell count, size bound) was hit.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace famrank
