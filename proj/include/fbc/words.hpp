#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fbc {

/// One signed letter of a free group word.  Generator indices start at 1;
/// index 0 is reserved for the auxiliary letter z used by the twisted
/// conjugacy machinery, so extending the alphabet never renumbers existing
/// generators.  Encoded as (index << 1) | (sign < 0), which makes the natural
/// integer order the fixed letter order z < Z < a < A < b < B < ...
class Letter {
 public:
  constexpr Letter(int index, int sign)
      : code_(static_cast<std::int32_t>(index << 1) | (sign < 0 ? 1 : 0)) {}

  static constexpr Letter from_code(std::int32_t code) { return Letter(code); }

  constexpr int index() const { return code_ >> 1; }
  constexpr int sign() const { return (code_ & 1) ? -1 : 1; }
  constexpr std::int32_t code() const { return code_; }
  constexpr Letter inverse() const { return Letter(code_ ^ 1); }

  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr auto operator<=>(Letter a, Letter b) {
    return a.code_ <=> b.code_;
  }

 private:
  explicit constexpr Letter(std::int32_t code) : code_(code) {}
  std::int32_t code_;
};

constexpr Letter kZ{0, 1};

/// A freely reduced word.  The invariant (no adjacent x x^-1) is maintained
/// by every constructor and operation.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters);

  /// Free reduction of an arbitrary letter sequence.
  static Word reduce(const std::vector<Letter>& raw);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }
  const std::vector<Letter>& letters() const { return letters_; }

  Word inverse() const;
  Word pow(long long e) const;

  /// Largest generator index used; 0 for the empty word or a pure z-word.
  int max_index() const;
  bool involves(int index) const;

  /// Appends one letter with cancellation.  The building block for products.
  void push_cancel(Letter l);

  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;
  /// Shortlex under the fixed letter order; gives deterministic tie-breaks.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  std::vector<Letter> letters_;
};

Word concat(const std::vector<Word>& parts);

/// g^-1 w g, reduced.
Word conjugated(const Word& w, const Word& g);

/// Cyclic reduction: returns (core, c) with w = c^-1 * core * c, core
/// cyclically reduced, and c a suffix of w.
std::pair<Word, Word> cyclic_reduce(const Word& w);

/// A word up to cyclic rotation, stored as the lexicographically least
/// rotation of its cyclic reduction's letter sequence.
class CyclicWord {
 public:
  explicit CyclicWord(const Word& w);
  const Word& canonical() const { return canonical_; }
  std::size_t size() const { return canonical_.size(); }
  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;

 private:
  Word canonical_;
};

/// Least g with g^-1 u g = v when u and v are conjugate, else nullopt.
std::optional<Word> conjugacy(const Word& u, const Word& v);

/// Unique root: w = r^e with e maximal (e >= 1).  Rejects the empty word.
std::pair<Word, int> root(const Word& w);

/// Generator of the centralizer of w; nullopt for w empty (the centralizer is
/// then the whole group).
std::optional<Word> centralizer(const Word& w);

std::string debug_string(const Word& w);

}  // namespace fbc
