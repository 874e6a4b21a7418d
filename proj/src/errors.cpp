#include "hopfcyc/errors.hpp"

namespace hopfcyc {

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Usage: return 2;
    case ErrorKind::Lexical: return 3;
    case ErrorKind::Syntax: return 4;
    case ErrorKind::Semantic: return 5;
    case ErrorKind::Structural: return 6;
    case ErrorKind::NonTermination: return 7;
    case ErrorKind::Precondition: return 8;
    case ErrorKind::IO: return 9;
  }
  return 10;
}

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Usage: return "usage";
    case ErrorKind::Lexical: return "lexical";
    case ErrorKind::Syntax: return "syntax";
    case ErrorKind::Semantic: return "semantic";
    case ErrorKind::Structural: return "structural";
    case ErrorKind::NonTermination: return "non-termination";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::IO: return "io";
  }
  return "unknown";
}

}  // namespace hopfcyc
