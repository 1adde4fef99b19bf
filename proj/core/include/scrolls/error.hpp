#ifndef SCROLLS_ERROR_HPP
#define SCROLLS_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace scrolls {

enum class Errc {
  Length,
  Positivity,
  DegreeMismatch,
  AllZero,
  NotDivisible,
  CharTooSmall,
  InvalidPair,
  InvalidTriple,
  NondistinctLines,
  InvalidArgument,
  Parse,
  Io,
  Internal,
};

/// Upper-case tag used in error messages and serialized output ("ALL_ZERO").
std::string_view to_string(Errc code) noexcept;

/// All library failures are reported through this exception. The code is
/// stable and machine-readable; what() carries a human-readable detail.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& detail);

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

}  // namespace scrolls

#endif  // SCROLLS_ERROR_HPP
