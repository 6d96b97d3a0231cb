#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "gkit/error.hpp"
#include "gkit/free_element.hpp"

namespace gkit {

enum class Command { Check, Build, Homology, Jacobi, Hochschild, XComplex, Koszul, Cyclic, Normalize, Extract };

const char* to_string(Command c);
/// Throws SyntaxError for unknown names.
Command command_from_string(const std::string& s);

/// Error raised while reading the DSL; line and column are 1-based.
class SpecError : public Error {
 public:
  SpecError(ErrorKind kind, int line, int column, const std::string& message)
      : Error(kind, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

struct JobSpec {
  /// The declared quiver, before doubling.
  QuiverPtr quiver;
  int d = 3;
  /// Over the Ginzburg quiver of (quiver, d) at the job truncation.
  CyclicElement potential;
  int truncation = 8;
  Command command = Command::Build;
  std::optional<std::pair<int, int>> window;
  std::optional<int> arity_max;
  /// Replacement differentials "d <gen> = expr", keyed by generator name.
  std::map<std::string, FreeElement> overrides;

  QuiverPtr ginzburg() const { return potential.quiver(); }
  bool operator==(const JobSpec& other) const;
};

JobSpec parse_spec(const std::string& text);
/// Canonical text; parse_spec(print_spec(s)) == s.
std::string print_spec(const JobSpec& s);

}  // namespace gkit
