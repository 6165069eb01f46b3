#pragma once

#include <cstdlib>

namespace pcc {

// Enumeration caps. vc_cap bounds brute-force shattering subsets; set_cap
// bounds |U| for exact equivalence signatures and tau (cost 2^|U|).
struct Caps {
  int vc_cap = 20;
  int set_cap = 16;
};

// Defaults, overridable through PCC_VC_CAP / PCC_TAU_CAP.
inline Caps default_caps() {
  Caps c;
  if (const char* v = std::getenv("PCC_VC_CAP")) c.vc_cap = std::atoi(v);
  if (const char* v = std::getenv("PCC_TAU_CAP")) c.set_cap = std::atoi(v);
  return c;
}

}  // namespace pcc
