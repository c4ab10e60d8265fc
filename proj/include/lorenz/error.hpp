#pragma once

#include <stdexcept>
#include <string>

namespace lorenz {

enum class Errc {
  parse_error,
  empty_period,
  precondition,
  not_admissible_pair,
  not_critical_hole,
  iteration_cap_exceeded,
  degenerate_hole,
  non_periodic_bound,
  zero_entropy,
  empty_language,
  out_of_delta,
  internal,
};

const char* errc_name(Errc c);

/// Library error carrying a stable machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }
  const char* code_name() const { return errc_name(code_); }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace lorenz
