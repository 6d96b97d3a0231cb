#include "gkit/rational.hpp"

#include <cctype>

#include "gkit/error.hpp"

namespace gkit {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorKind::EvenSelfPair: return "EvenSelfPair";
    case ErrorKind::AlreadyDoubled: return "AlreadyDoubled";
    case ErrorKind::AlreadyExtended: return "AlreadyExtended";
    case ErrorKind::InvalidQuiver: return "InvalidQuiver";
    case ErrorKind::QuiverMismatch: return "QuiverMismatch";
    case ErrorKind::UnknownArrow: return "UnknownArrow";
    case ErrorKind::NotInCommutatorSpace: return "NotInCommutatorSpace";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::MasterEquationFails: return "MasterEquationFails";
    case ErrorKind::NotCyclicallySymmetric: return "NotCyclicallySymmetric";
    case ErrorKind::RoundTripMismatch: return "RoundTripMismatch";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::NotCommutatorSum: return "NotCommutatorSum";
    case ErrorKind::NotACocycle: return "NotACocycle";
    case ErrorKind::WindowNotRepresentable: return "WindowNotRepresentable";
    case ErrorKind::WindowTooNarrow: return "WindowTooNarrow";
    case ErrorKind::NotMinimal: return "NotMinimal";
    case ErrorKind::StasheffFails: return "StasheffFails";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::NonCyclicTerm: return "NonCyclicTerm";
  }
  return "Unknown";
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  auto bad = [&] { return Error(ErrorKind::SyntaxError, "malformed rational '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+') ++i;
  std::size_t digits = 0, slash = std::string_view::npos;
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] == '/') {
      if (slash != std::string_view::npos || digits == 0) throw bad();
      slash = j;
      digits = 0;
    } else if (std::isdigit(static_cast<unsigned char>(text[j]))) {
      ++digits;
    } else {
      throw bad();
    }
  }
  if (digits == 0) throw bad();
  std::string s(text[0] == '+' ? text.substr(1) : text);
  Rational q;
  if (q.set_str(s, 10) != 0) throw bad();
  if (q.get_den() == 0) throw Error(ErrorKind::SyntaxError, "zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

}  // namespace gkit
