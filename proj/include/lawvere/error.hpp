#pragma once

#include <stdexcept>
#include <string>

namespace lawvere {

/// Base class for all errors raised by the library.
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Endpoints, dimensions, or semirings do not line up for composition.
class mismatch_error : public error {
public:
  using error::error;
};

/// An enumeration would exceed its configured budget.
class budget_error : public error {
public:
  using error::error;
};

/// A term references a variable outside its context.
class context_error : public error {
public:
  using error::error;
};

/// An operation requiring a normal-form procedure was called on a
/// presentation that has none.
class no_normalizer_error : public error {
public:
  using error::error;
};

/// Invalid configuration (duplicate names, malformed signatures, ...).
class config_error : public error {
public:
  using error::error;
};

/// A structural axiom failed; the message carries a witness.
class structure_error : public error {
public:
  using error::error;
};

/// Syntax error while parsing a theory file or group file.
class parse_error : public error {
public:
  parse_error(const std::string& msg, int line, int col)
      : error(msg), line(line), col(col) {}
  int line;
  int col;
};

/// Well-formed syntax with an invalid meaning (arity mismatch, undeclared
/// symbol, ...).
class semantic_error : public error {
public:
  semantic_error(const std::string& msg, int line, int col)
      : error(msg), line(line), col(col) {}
  int line;
  int col;
};

}  // namespace lawvere
