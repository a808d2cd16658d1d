#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fbc/automorphism.hpp"
#include "fbc/orbit.hpp"
#include "fbc/twisted.hpp"
#include "fbc/words.hpp"

namespace fbc {

/// The ambient groups: G = < x_1..x_n, t | t^-1 x_i t = phi(x_i) > and,
/// optionally with a finite stable-letter order, the quotient shape
/// G = < x_1..x_n, t | t^-1 x_i t = phi(x_i), t^m = h > with h a word that
/// the added relation forces to be phi-fixed and to implement phi^m by
/// conjugation.  Every element has the unique normal form t^r u with u free;
/// r ranges over the integers, or over [0, m) in the finite case.

class InconsistentPresentation : public std::invalid_argument {
 public:
  explicit InconsistentPresentation(const std::string& what)
      : std::invalid_argument(what) {}
};

struct FbcPresentation {
  int rank = 0;
  FreeAutomorphism phi = FreeAutomorphism::identity(0);
  std::optional<long long> order;  // m in t^m = h; empty means infinite
  Word h;                          // only meaningful when order is set

  /// Validates the defining relations and returns the presentation; throws
  /// InconsistentPresentation naming the failing relation.
  static FbcPresentation make(FreeAutomorphism phi,
                              std::optional<long long> order = std::nullopt,
                              Word h = {});
};

/// Normal form t^t_exp * u.
struct GroupElement {
  long long t_exp = 0;
  Word u;
  bool operator==(const GroupElement&) const = default;
};

/// One symbol of a word in the group generators: a stable-letter step when
/// t_step is +-1, otherwise a free-group letter.
struct GroupLetter {
  int t_step = 0;
  Letter letter{1, 1};
};
using GroupWord = std::vector<GroupLetter>;

/// Canonical form of an arbitrary (t_exp, u) pair: in the finite case wraps
/// the stable-letter exponent into [0, m), inserting the matching power of h.
GroupElement canonical(const FbcPresentation& pres, const GroupElement& e);

GroupElement normalize(const FbcPresentation& pres, const GroupWord& w);
GroupElement multiply(const FbcPresentation& pres, const GroupElement& a,
                      const GroupElement& b);
GroupElement inverse(const FbcPresentation& pres, const GroupElement& a);
/// c^-1 a c.
GroupElement conjugate(const FbcPresentation& pres, const GroupElement& a,
                       const GroupElement& c);
GroupElement power(const FbcPresentation& pres, const GroupElement& a,
                   long long p);
bool is_torsion(const FbcPresentation& pres, const GroupElement& a);

struct DecideOptions {
  TwistedOptions twisted;
  OrbitOptions orbit;
};

struct GroupConjVerdict {
  enum class Kind { Yes, No, Unknown };
  Kind kind = Kind::Unknown;
  GroupElement conjugator;  // Yes: conjugate(x, c) = y
  bool checked = false;     // Yes verdicts re-verified by group arithmetic
  std::string note;
};

GroupConjVerdict conjugacy_decide(const FbcPresentation& pres,
                                  const GroupElement& x, const GroupElement& y,
                                  const DecideOptions& opt = {});

struct PowerConjVerdict {
  enum class Kind { Yes, No, Unknown };
  Kind kind = Kind::Unknown;
  long long p = 0;          // Yes: conjugate(x^p, c) = y^q, p >= 1, q != 0
  long long q = 0;
  GroupElement conjugator;
  bool checked = false;
  std::string note;
};

/// Power conjugacy: are nontrivial powers of x and y conjugate?  Rejects
/// trivial inputs.
PowerConjVerdict power_conjugacy_decide(const FbcPresentation& pres,
                                        const GroupElement& x,
                                        const GroupElement& y,
                                        const DecideOptions& opt = {});

}  // namespace fbc
