#include "fbc/words.hpp"

#include <algorithm>
#include <stdexcept>

#include "fbc/budget.hpp"

namespace fbc {

Word::Word(std::initializer_list<Letter> letters) {
  for (Letter l : letters) push_cancel(l);
}

Word Word::reduce(const std::vector<Letter>& raw) {
  Word w;
  w.letters_.reserve(raw.size());
  for (Letter l : raw) w.push_cancel(l);
  return w;
}

void Word::push_cancel(Letter l) {
  if (!letters_.empty() && letters_.back() == l.inverse()) {
    letters_.pop_back();
  } else {
    letters_.push_back(l);
    check_word_budget(letters_.size());
  }
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.letters_.push_back(it->inverse());
  return w;
}

Word Word::pow(long long e) const {
  const Word& base = e >= 0 ? *this : inverse();
  long long n = e >= 0 ? e : -e;
  Word out;
  for (long long i = 0; i < n; ++i) out = out * base;
  return out;
}

int Word::max_index() const {
  int m = 0;
  for (Letter l : letters_) m = std::max(m, l.index());
  return m;
}

bool Word::involves(int index) const {
  for (Letter l : letters_)
    if (l.index() == index) return true;
  return false;
}

Word operator*(const Word& a, const Word& b) {
  Word out = a;
  for (Letter l : b.letters_) out.push_cancel(l);
  return out;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i].code() <=> b[i].code();
  return std::strong_ordering::equal;
}

Word concat(const std::vector<Word>& parts) {
  Word out;
  for (const Word& p : parts)
    for (Letter l : p) out.push_cancel(l);
  return out;
}

Word conjugated(const Word& w, const Word& g) {
  return g.inverse() * w * g;
}

std::pair<Word, Word> cyclic_reduce(const Word& w) {
  std::size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && w[lo] == w[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  std::vector<Letter> core_letters, tail_letters;
  for (std::size_t i = lo; i < hi; ++i) core_letters.push_back(w[i]);
  for (std::size_t i = hi; i < w.size(); ++i) tail_letters.push_back(w[i]);
  return {Word::reduce(core_letters), Word::reduce(tail_letters)};
}

namespace {

Word rotation(const Word& w, std::size_t r) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    out.push_back(w[(i + r) % w.size()]);
  return Word::reduce(out);
}

}  // namespace

CyclicWord::CyclicWord(const Word& w) {
  Word core = cyclic_reduce(w).first;
  if (core.empty()) return;
  canonical_ = core;
  for (std::size_t r = 1; r < core.size(); ++r) {
    Word cand = rotation(core, r);
    if (cand < canonical_) canonical_ = cand;
  }
}

std::optional<Word> conjugacy(const Word& u, const Word& v) {
  auto [cu, tu] = cyclic_reduce(u);
  auto [cv, tv] = cyclic_reduce(v);
  if (cu.size() != cv.size()) return std::nullopt;
  if (cu.empty()) return Word{};
  for (std::size_t r = 0; r < cu.size(); ++r) {
    if (rotation(cu, r) == cv) {
      // cu = A B with |A| = r and B A = cv; A carries cu to cv.
      std::vector<Letter> head(cu.begin(), cu.begin() + r);
      Word g = tu.inverse() * Word::reduce(head) * tv;
      return g;
    }
  }
  return std::nullopt;
}

std::pair<Word, int> root(const Word& w) {
  if (w.empty()) throw std::invalid_argument("root of the empty word");
  auto [core, tail] = cyclic_reduce(w);
  std::size_t n = core.size();
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i)
      periodic = core[i] == core[i - d];
    if (periodic) {
      std::vector<Letter> head(core.begin(), core.begin() + d);
      Word r = tail.inverse() * Word::reduce(head) * tail;
      return {r, static_cast<int>(n / d)};
    }
  }
  return {w, 1};  // unreachable: d = n always matches
}

std::optional<Word> centralizer(const Word& w) {
  if (w.empty()) return std::nullopt;
  return root(w).first;
}

std::string debug_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (Letter l : w) {
    int i = l.index();
    char c;
    if (i == 0)
      c = 'z';
    else if (i <= 25)
      c = static_cast<char>('a' + i - 1);
    else {
      out += (l.sign() > 0 ? "x" : "X") + std::to_string(i);
      continue;
    }
    out += l.sign() > 0 ? c : static_cast<char>(c - 'a' + 'A');
  }
  return out;
}

}  // namespace fbc
