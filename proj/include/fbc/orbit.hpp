#pragma once

#include <string>

#include "fbc/automorphism.hpp"
#include "fbc/words.hpp"

namespace fbc {

/// Orbit conjugacy: is some automorphism-iterate of u conjugate to v, i.e.
/// does u phi^k fall into the conjugacy class of v for some integer k?
/// Exact on identity, inner, and finite-order automorphism classes; a bounded
/// two-sided scan with a growth cut-off elsewhere, where a miss is Unknown,
/// never No.

struct OrbitOptions {
  int range = 16;          // scan k = 0, 1, -1, ..., +-range
  int growth_factor = 4;   // stop a direction once iterates stay this many
  int growth_patience = 4; /// times longer than the inputs for this many steps
};

struct OrbitVerdict {
  enum class Kind { Yes, No, Unknown };
  Kind kind = Kind::Unknown;
  long long shift = 0;    // Yes: the k
  Word conjugator;        // Yes: c^-1 (u phi^k) c = v
  bool checked = false;   // Yes verdicts are re-verified by substitution
  std::string note;
};

OrbitVerdict orbit_decide(const FreeAutomorphism& phi, const Word& u,
                          const Word& v, const OrbitOptions& opt = {});

/// Power orbit conjugacy: are there exponents p >= 1 and q != 0 and a shift k
/// with (u^p) phi^k conjugate to v^q?  Works through the roots of u and v:
/// conjugate powers force conjugate roots with matching exponents, so only
/// the two root orientations and one exponent pair per orientation need
/// checking.  The returned q is negative when only the inverted orientation
/// matches.
struct PowerOrbitVerdict {
  enum class Kind { Yes, No, Unknown };
  Kind kind = Kind::Unknown;
  long long shift = 0;  // Yes: the k
  long long p = 0;      // Yes: exponent on u, always >= 1
  long long q = 0;      // Yes: exponent on v, nonzero, sign from orientation
  Word conjugator;      // Yes: c^-1 (u^p phi^k) c = v^q
  bool checked = false;
  std::string note;
};

PowerOrbitVerdict power_orbit_decide(const FreeAutomorphism& phi, const Word& u,
                                     const Word& v,
                                     const OrbitOptions& opt = {});

}  // namespace fbc
