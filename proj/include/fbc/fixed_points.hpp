#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

#include "fbc/automorphism.hpp"
#include "fbc/stallings.hpp"

namespace fbc {

enum class AutoKind { Identity, Inner, LetterPermutation, FiniteOrder, General };

struct AutoClass {
  AutoKind kind;
  Word conjugator;  // Inner: the w with x phi = w^-1 x w
  int order = 0;    // LetterPermutation / FiniteOrder: minimal d, phi^d = id
};

AutoClass classify(const FreeAutomorphism& phi);

enum class Exactness { Exact, LowerBound };

/// Generators of a subgroup, with an honesty tag: Exact means the generators
/// generate the whole subgroup in question, LowerBound means they only
/// generate what a bounded search of the given length could see.
struct SubgroupBasis {
  std::vector<Word> generators;
  Exactness exactness = Exactness::Exact;
  int search_length = 0;
};

/// Default search length for the brute-force fixed-word enumeration, by
/// alphabet size.
int default_fix_length(int slots);

/// Folds every reduced word w with |w| <= max_len and phi(w) = w and returns
/// a spanning-tree basis of the folded graph.  Always a LowerBound.
SubgroupBasis fix_bruteforce(const FreeAutomorphism& phi, int max_len);

/// Fixed subgroup solver: exact on Identity/Inner/LetterPermutation classes,
/// brute-force lower bound elsewhere.
SubgroupBasis fix_solve(const FreeAutomorphism& phi,
                        std::optional<int> max_len = std::nullopt);

using BigInt = boost::multiprecision::cpp_int;

/// p0: every periodic element has period dividing this.  2 for rank <= 1,
/// (6n-6)! for rank n >= 2.
BigInt periodic_bound(int rank);

struct DivisorScan {
  long long value_cap = 5040;
  int count_cap = 8;
};

/// Ascending divisors of periodic_bound(rank), cut off by the scan budget.
std::vector<long long> periodic_divisors(int rank, const DivisorScan& scan);

struct PeriodicBasis {
  SubgroupBasis basis;
  std::optional<long long> period;  // certified minimal s when known
};

/// Periodic subgroup Per phi = Fix phi^{p0}: exact for Identity/Inner and the
/// finite-order classes, otherwise a divisor-scan union of fixed-word lower
/// bounds.
PeriodicBasis periodic_subgroup(const FreeAutomorphism& phi,
                                DivisorScan scan = {},
                                std::optional<int> max_len = std::nullopt);

}  // namespace fbc
