#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "fbc/group.hpp"
#include "fbc/words.hpp"

namespace fbc {

/// Parse failure; offset is the byte position of the offending character in
/// the original input (whitespace counted).
class SyntaxError : public std::invalid_argument {
 public:
  SyntaxError(const std::string& what, std::size_t offset)
      : std::invalid_argument(what + " (at byte " + std::to_string(offset) +
                              ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Free-group words.  Lowercase a..y name generators 1..25, matching
/// uppercase letters their inverses; the indexed form x3 / X3 covers any
/// rank.  The two generator syntaxes cannot be mixed in one word.  z and Z
/// belong to the reserved marker letter and are only accepted when allow_z
/// is set.  "1", the empty string, and all-whitespace denote the identity;
/// other whitespace is ignored.  The result is freely reduced.
Word parse_word(std::string_view text, int rank, bool allow_z = false);

/// Inverse of parse_word: letter syntax when every generator index is at
/// most 25, the indexed syntax otherwise; the marker letter is always z/Z;
/// the identity renders as "1".
std::string render_word(const Word& w);

/// Words over the group's generators: t and T step the stable letter, and
/// free-group generators use the letters a..s (1..19) or the indexed syntax
/// for any rank.  z/Z stays reserved.
GroupWord parse_group_word(std::string_view text, int rank);

/// Display form of a normal form, e.g. "t^2 ab", "t^-1", "ab", "1".
std::string render_group_element(const GroupElement& e);

}  // namespace fbc
