#pragma once

#include <optional>
#include <string>

#include "fbc/automorphism.hpp"
#include "fbc/fixed_points.hpp"
#include "fbc/words.hpp"

namespace fbc {

/// Twisted conjugacy: u and v are phi-twisted conjugate when some g satisfies
/// phi(g)^-1 u g = v.  Deciders return three-valued verdicts: Yes always
/// carries a conjugator that has been re-verified by substitution, No is only
/// ever returned on an exact argument, Unknown means the configured budgets
/// ran out.

struct TwistedOptions {
  /// Search length for the fixed-word route; defaults by alphabet size.
  std::optional<int> fix_length;
  /// Direct conjugator enumeration length (small ranks get 6, larger 4).
  std::optional<int> direct_length;
  /// Power variant: period-divisor scan budget.
  DivisorScan scan;
  /// Power variant: extra exponents tried one by one.
  int power_cap = 8;
};

struct TwistedVerdict {
  enum class Kind { Yes, No, Unknown };
  Kind kind = Kind::Unknown;
  Word conjugator;        // Yes: phi(g)^-1 u g = v
  bool checked = false;   // Yes verdicts are re-verified by substitution
  std::string note;       // which route decided, or what budget ran out
};

struct PowerTwistedVerdict {
  enum class Kind { Yes, No, Unknown };
  Kind kind = Kind::Unknown;
  long long exponent = 0;  // Yes: the power p >= 1
  Word conjugator;         // Yes: phi^p(g)^-1 u_{phi,p} g = v_{phi,p}
  bool checked = false;
  std::string note;
};

/// The reduced word phi(g)^-1 u g: the unique v that g carries u to, used for
/// certificate checking and for generating known-answer instances.
Word twisted_verify(const FreeAutomorphism& phi, const Word& u, const Word& g);

/// Shortest conjugator with |g| <= max_len, by increasing length then letter
/// order; nullopt when none exists in range.
std::optional<Word> twisted_bruteforce(const FreeAutomorphism& phi,
                                       const Word& u, const Word& v,
                                       int max_len);

/// True when already the abelianized equation (I - M_phi) x = [v] - [u] has
/// no integer solution, which certifies that u and v are not phi-twisted
/// conjugate.  False promises nothing.
bool abelianized_twisted_unsolvable(const FreeAutomorphism& phi, const Word& u,
                                    const Word& v);

TwistedVerdict twisted_decide(const FreeAutomorphism& phi, const Word& u,
                              const Word& v, const TwistedOptions& opt = {});

/// Decides whether some p >= 1 makes the twisted powers u_{phi,p} and
/// v_{phi,p} phi^p-twisted conjugate.
PowerTwistedVerdict power_twisted_decide(const FreeAutomorphism& phi,
                                         const Word& u, const Word& v,
                                         const TwistedOptions& opt = {});

}  // namespace fbc
