#pragma once

#include <stdexcept>
#include <string>

namespace nlheat {

enum class errc {
  ok = 0,
  invalid_argument,
  singular_point,
  degenerate_input,
  resource_guard,
  step_size,
  out_of_range,
  boundary_breach,
  positivity_loss,
  blowup,
  internal,
};

// All core routines report failure by throwing Error; the C layer maps the
// code to a status constant and keeps the message.
class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace nlheat
