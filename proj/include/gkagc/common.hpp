#pragma once

#include <stdexcept>
#include <string>

namespace gkagc {

// Thrown when a mathematical invariant that is supposed to be unconditionally
// true fails at runtime (e.g. a rank certificate). Distinct from
// std::invalid_argument, which signals bad input; the CLI maps the two to
// different exit codes.
class invariant_error : public std::runtime_error {
 public:
  explicit invariant_error(const std::string& what) : std::runtime_error(what) {}
};

enum class Orbit { O1, O2 };

inline const char* to_string(Orbit o) { return o == Orbit::O1 ? "O1" : "O2"; }

}  // namespace gkagc
