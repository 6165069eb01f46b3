#pragma once

#include <stdexcept>
#include <string>

namespace pcc {

// Bad caller input: malformed files, out-of-range indices, invalid parameters.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// A configurable cap (subset enumeration, class materialization) was exceeded.
struct ResourceError : std::runtime_error {
  explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

// A structural guarantee the code relies on was violated; always a bug.
struct InvariantError : std::logic_error {
  explicit InvariantError(const std::string& msg) : std::logic_error(msg) {}
};

inline void require_input(bool ok, const std::string& msg) {
  if (!ok) throw InputError(msg);
}

inline void require_invariant(bool ok, const std::string& msg) {
  if (!ok) throw InvariantError(msg);
}

}  // namespace pcc
