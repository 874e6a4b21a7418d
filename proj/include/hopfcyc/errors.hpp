#pragma once

#include <stdexcept>
#include <string>

namespace hopfcyc {

enum class ErrorKind {
  Usage,
  Lexical,
  Syntax,
  Semantic,
  Structural,
  NonTermination,
  Precondition,
  IO,
};

/// Process exit code for an error class. 0 is success, 1 a failed check.
int exit_code(ErrorKind kind);
const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

/// Error with a source position (1-based line/column).
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, const std::string& msg, int line, int column)
      : Error(kind, std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

[[noreturn]] inline void usage_error(const std::string& what) { throw Error(ErrorKind::Usage, what); }
[[noreturn]] inline void semantic_error(const std::string& what) { throw Error(ErrorKind::Semantic, what); }
[[noreturn]] inline void io_error(const std::string& what) { throw Error(ErrorKind::IO, what); }
[[noreturn]] inline void structural_error(const std::string& what) {
  throw Error(ErrorKind::Structural, what);
}
[[noreturn]] inline void precondition_error(const std::string& what) {
  throw Error(ErrorKind::Precondition, what);
}

}  // namespace hopfcyc
