#ifndef SYMKULS_ERRORS_HPP
#define SYMKULS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace symkuls {

// Base for every library error. Each concrete error carries a stable code
// string so callers (and the CLI) can dispatch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

#define SYMKULS_DEFINE_ERROR(Name, Code)                        \
  class Name : public Error {                                   \
   public:                                                      \
    explicit Name(const std::string& what) : Error(Code, what) {} \
  }

SYMKULS_DEFINE_ERROR(DivisionByZero, "E_DIV_ZERO");
SYMKULS_DEFINE_ERROR(FieldMismatch, "E_FIELD_MISMATCH");
SYMKULS_DEFINE_ERROR(AmbientMismatch, "E_AMBIENT_MISMATCH");
SYMKULS_DEFINE_ERROR(DimensionMismatch, "E_DIM_MISMATCH");
SYMKULS_DEFINE_ERROR(DegenerateForm, "E_DEGENERATE_FORM");
SYMKULS_DEFINE_ERROR(NotSymmetricForm, "E_NOT_SYMMETRIC_FORM");
SYMKULS_DEFINE_ERROR(NotIdempotent, "E_NOT_IDEMPOTENT");
SYMKULS_DEFINE_ERROR(NotCentral, "E_NOT_CENTRAL");
SYMKULS_DEFINE_ERROR(TooLarge, "E_TOO_LARGE");
SYMKULS_DEFINE_ERROR(BadParameters, "E_BAD_PARAMETERS");
SYMKULS_DEFINE_ERROR(BadTree, "E_BAD_TREE");
SYMKULS_DEFINE_ERROR(InvalidTable, "E_INVALID_TABLE");
SYMKULS_DEFINE_ERROR(ValidationFailure, "E_VALIDATION");

#undef SYMKULS_DEFINE_ERROR

// Parser diagnostics carry a source position on top of the stable code.
class ParseError : public Error {
 public:
  ParseError(std::string code, size_t line, size_t column, const std::string& what)
      : Error(std::move(code),
              "line " + std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  size_t line() const { return line_; }
  size_t column() const { return column_; }

 private:
  size_t line_;
  size_t column_;
};

class SyntaxError : public ParseError {
 public:
  SyntaxError(size_t line, size_t column, const std::string& what)
      : ParseError("E_SYNTAX", line, column, what) {}
};

class SemanticError : public ParseError {
 public:
  SemanticError(std::string code, size_t line, size_t column, const std::string& what)
      : ParseError(std::move(code), line, column, what) {}
};

}  // namespace symkuls

#endif
