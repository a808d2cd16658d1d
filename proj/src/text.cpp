#include "fbc/text.hpp"

#include <cctype>
#include <vector>

namespace fbc {

namespace {

enum class GenMode { None, Letters, Indexed };

bool is_identity_spelling(std::string_view text) {
  std::string stripped;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) stripped += c;
  return stripped.empty() || stripped == "1";
}

void claim(GenMode& mode, GenMode wanted, std::size_t offset) {
  if (mode == GenMode::None) {
    mode = wanted;
  } else if (mode != wanted) {
    throw SyntaxError("mixed letter and indexed generator syntax", offset);
  }
}

/// Consumes the digits of an indexed generator token starting after x/X at
/// offset; returns the index and advances i past the digits.
int parse_index(std::string_view text, std::size_t offset, std::size_t& i,
                int rank) {
  long long idx = 0;
  while (i < text.size() &&
         std::isdigit(static_cast<unsigned char>(text[i]))) {
    idx = idx * 10 + (text[i] - '0');
    if (idx > 1'000'000)
      throw SyntaxError("generator index out of range", offset);
    ++i;
  }
  if (idx < 1)
    throw SyntaxError("generator index must be at least 1", offset);
  if (idx > rank)
    throw SyntaxError("generator index " + std::to_string(idx) +
                          " exceeds the rank " + std::to_string(rank),
                      offset);
  return static_cast<int>(idx);
}

bool starts_indexed(std::string_view text, std::size_t i) {
  return (text[i] == 'x' || text[i] == 'X') && i + 1 < text.size() &&
         std::isdigit(static_cast<unsigned char>(text[i + 1]));
}

}  // namespace

Word parse_word(std::string_view text, int rank, bool allow_z) {
  if (is_identity_spelling(text)) return {};
  std::vector<Letter> letters;
  GenMode mode = GenMode::None;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == 'z' || c == 'Z') {
      if (!allow_z)
        throw SyntaxError("the letter z is reserved for internal use", i);
      letters.emplace_back(0, c == 'z' ? 1 : -1);
      ++i;
      continue;
    }
    if (starts_indexed(text, i)) {
      std::size_t offset = i++;
      claim(mode, GenMode::Indexed, offset);
      int idx = parse_index(text, offset, i, rank);
      letters.emplace_back(idx, c == 'x' ? 1 : -1);
      continue;
    }
    if (c >= 'a' && c <= 'y') {
      claim(mode, GenMode::Letters, i);
      int idx = c - 'a' + 1;
      if (idx > rank)
        throw SyntaxError(std::string("generator '") + c +
                              "' exceeds the rank " + std::to_string(rank),
                          i);
      letters.emplace_back(idx, 1);
      ++i;
      continue;
    }
    if (c >= 'A' && c <= 'Y') {
      claim(mode, GenMode::Letters, i);
      int idx = c - 'A' + 1;
      if (idx > rank)
        throw SyntaxError(std::string("generator '") + c +
                              "' exceeds the rank " + std::to_string(rank),
                          i);
      letters.emplace_back(idx, -1);
      ++i;
      continue;
    }
    throw SyntaxError(std::string("unexpected character '") + c + "'", i);
  }
  return Word::reduce(letters);
}

std::string render_word(const Word& w) {
  if (w.empty()) return "1";
  bool letters_fit = true;
  for (Letter l : w.letters())
    if (l.index() > 25) letters_fit = false;
  std::string out;
  for (Letter l : w.letters()) {
    if (l.index() == 0) {
      out += l.sign() > 0 ? 'z' : 'Z';
    } else if (letters_fit) {
      out += static_cast<char>((l.sign() > 0 ? 'a' : 'A') + l.index() - 1);
    } else {
      out += l.sign() > 0 ? 'x' : 'X';
      out += std::to_string(l.index());
    }
  }
  return out;
}

GroupWord parse_group_word(std::string_view text, int rank) {
  if (is_identity_spelling(text)) return {};
  GroupWord out;
  GenMode mode = GenMode::None;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == 't' || c == 'T') {
      GroupLetter l;
      l.t_step = c == 't' ? 1 : -1;
      out.push_back(l);
      ++i;
      continue;
    }
    if (c == 'z' || c == 'Z')
      throw SyntaxError("the letter z is reserved for internal use", i);
    if (starts_indexed(text, i)) {
      std::size_t offset = i++;
      claim(mode, GenMode::Indexed, offset);
      int idx = parse_index(text, offset, i, rank);
      GroupLetter l;
      l.letter = Letter(idx, c == 'x' ? 1 : -1);
      out.push_back(l);
      continue;
    }
    if ((c >= 'a' && c <= 's') || (c >= 'A' && c <= 'S')) {
      claim(mode, GenMode::Letters, i);
      bool lower = c >= 'a';
      int idx = (lower ? c - 'a' : c - 'A') + 1;
      if (idx > rank)
        throw SyntaxError(std::string("generator '") + c +
                              "' exceeds the rank " + std::to_string(rank),
                          i);
      GroupLetter l;
      l.letter = Letter(idx, lower ? 1 : -1);
      out.push_back(l);
      ++i;
      continue;
    }
    if ((c >= 'u' && c <= 'y') || (c >= 'U' && c <= 'Y'))
      throw SyntaxError(
          "group words reserve t for the stable letter; use the indexed "
          "syntax for generators beyond 's'",
          i);
    throw SyntaxError(std::string("unexpected character '") + c + "'", i);
  }
  return out;
}

std::string render_group_element(const GroupElement& e) {
  std::string out;
  if (e.t_exp == 1)
    out = "t";
  else if (e.t_exp != 0)
    out = "t^" + std::to_string(e.t_exp);
  if (e.u.empty()) return out.empty() ? "1" : out;
  if (!out.empty()) out += ' ';
  return out + render_word(e.u);
}

}  // namespace fbc
