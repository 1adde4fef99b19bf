#include "scrolls/error.hpp"

namespace scrolls {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::Length: return "LENGTH";
    case Errc::Positivity: return "POSITIVITY";
    case Errc::DegreeMismatch: return "DEGREE_MISMATCH";
    case Errc::AllZero: return "ALL_ZERO";
    case Errc::NotDivisible: return "NOT_DIVISIBLE";
    case Errc::CharTooSmall: return "CHAR_TOO_SMALL";
    case Errc::InvalidPair: return "INVALID_PAIR";
    case Errc::InvalidTriple: return "INVALID_TRIPLE";
    case Errc::NondistinctLines: return "NONDISTINCT_LINES";
    case Errc::InvalidArgument: return "INVALID_ARGUMENT";
    case Errc::Parse: return "PARSE";
    case Errc::Io: return "IO";
    case Errc::Internal: return "INTERNAL";
  }
  return "UNKNOWN";
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace scrolls
