#include "fbc/fixed_points.hpp"

#include <algorithm>
#include <stdexcept>

#include "fbc/budget.hpp"

namespace fbc {

namespace {

std::vector<int> alphabet_indices(const FreeAutomorphism& phi) {
  std::vector<int> idx;
  if (phi.with_z()) idx.push_back(0);
  for (int i = 1; i <= phi.rank(); ++i) idx.push_back(i);
  return idx;
}

bool is_identity(const FreeAutomorphism& phi) {
  for (int i : alphabet_indices(phi))
    if (phi.image(i) != Word{Letter(i, 1)}) return false;
  return true;
}

std::size_t max_image_length(const FreeAutomorphism& phi) {
  std::size_t m = 0;
  for (int i : alphabet_indices(phi)) m = std::max(m, phi.image(i).size());
  return m;
}

/// Looks for w with x phi = w^-1 x w for every generator x.  Solutions of the
/// one-generator equation form the coset <x1> w0, and for alphabets with at
/// least two generators the conjugator is unique, so a bounded scan over the
/// coset is exact.
std::optional<Word> inner_conjugator(const FreeAutomorphism& phi) {
  auto idx = alphabet_indices(phi);
  if (idx.size() < 2) return std::nullopt;
  Word x0{Letter(idx[0], 1)};
  auto w0 = conjugacy(x0, phi.image(idx[0]));
  if (!w0) return std::nullopt;
  long long bound =
      static_cast<long long>(max_image_length(phi) + w0->size() + 2);
  auto matches_all = [&](const Word& w) {
    for (int i : idx)
      if (phi.image(i) != conjugated(Word{Letter(i, 1)}, w)) return false;
    return true;
  };
  for (long long a = 0; a <= 2 * bound; ++a) {
    long long j = (a % 2 == 0) ? a / 2 : -(a / 2 + 1);
    Word w = x0.pow(j) * *w0;
    if (matches_all(w)) return w;
  }
  return std::nullopt;
}

bool all_single_letters(const FreeAutomorphism& phi) {
  for (int i : alphabet_indices(phi))
    if (phi.image(i).size() != 1) return false;
  return true;
}

/// Minimal d >= 1 with phi^d = id, scanning d <= cap; 0 when none found.
/// With the divisor filter only exponents dividing the periodic bound for the
/// ambient rank are tested, since the order of a finite-order automorphism
/// always divides that bound.  Only the forward endomorphism is iterated
/// (identity of the forward map already proves the order), and the scan gives
/// up as soon as the images outgrow every plausible finite-order size; giving
/// up can only downgrade the classification towards General, which routes to
/// bounded search, so the early exit never costs soundness.
int finite_order(const FreeAutomorphism& phi, int cap,
                 bool divisor_filter = false) {
  BigInt p0 = divisor_filter ? periodic_bound(phi.slots()) : BigInt(0);
  auto indices = alphabet_indices(phi);
  auto endo_max_len = [&](const FreeEndomorphism& e) {
    std::size_t m = 0;
    for (int i : indices) m = std::max(m, e.image(i).size());
    return m;
  };
  auto endo_is_id = [&](const FreeEndomorphism& e) {
    for (int i : indices)
      if (e.image(i) != Word{Letter(i, 1)}) return false;
    return true;
  };
  const std::size_t len_cap =
      16 + 2 * static_cast<std::size_t>(cap) *
               std::max<std::size_t>(1, max_image_length(phi));
  try {
    FreeEndomorphism cur = phi.forward();
    for (int d = 1; d <= cap; ++d) {
      if (d > 1) cur = compose(cur, phi.forward());
      if (endo_max_len(cur) > len_cap) return 0;
      if (divisor_filter && p0 % d != 0) continue;
      if (endo_is_id(cur)) return d;
    }
  } catch (const BudgetExceeded&) {
    // Image growth rules out finite order within the cap.
  }
  return 0;
}

constexpr int kFiniteOrderCap = 24;

}  // namespace

AutoClass classify(const FreeAutomorphism& phi) {
  if (is_identity(phi)) return {AutoKind::Identity, Word{}, 1};
  if (auto w = inner_conjugator(phi)) return {AutoKind::Inner, *w, 0};
  if (all_single_letters(phi)) {
    int d = finite_order(phi, 2 * kFiniteOrderCap * kFiniteOrderCap);
    return {AutoKind::LetterPermutation, Word{}, d};
  }
  if (int d = finite_order(phi, kFiniteOrderCap, /*divisor_filter=*/true))
    return {AutoKind::FiniteOrder, Word{}, d};
  return {AutoKind::General, Word{}, 0};
}

int default_fix_length(int slots) {
  if (slots <= 3) return 8;
  if (slots == 4) return 6;
  return 4;
}

namespace {

/// Reduced word buffer with undo, for the incremental image of a DFS prefix.
/// Appending a reduced word to a reduced buffer first pops some tail, then
/// pushes; the undo record stores exactly that.
struct ReducedBuffer {
  std::vector<Letter> buf;

  struct Undo {
    std::vector<Letter> popped;
    std::size_t pushed = 0;
  };

  Undo append(const Word& img, bool inverted) {
    Undo u;
    auto feed = [&](Letter m) {
      if (u.pushed == 0 && !buf.empty() && buf.back() == m.inverse()) {
        u.popped.push_back(buf.back());
        buf.pop_back();
      } else {
        buf.push_back(m);
        ++u.pushed;
      }
    };
    if (!inverted) {
      for (Letter m : img) feed(m);
    } else {
      for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it)
        feed(it->inverse());
    }
    return u;
  }

  void revert(const Undo& u) {
    buf.erase(buf.end() - u.pushed, buf.end());
    for (auto it = u.popped.rbegin(); it != u.popped.rend(); ++it)
      buf.push_back(*it);
  }
};

}  // namespace

SubgroupBasis fix_bruteforce(const FreeAutomorphism& phi, int max_len) {
  if (max_len < 0) throw std::invalid_argument("negative search length");
  std::vector<Letter> letters;
  for (int i : alphabet_indices(phi)) {
    letters.emplace_back(i, 1);
    letters.emplace_back(i, -1);
  }
  std::sort(letters.begin(), letters.end());

  const long long maximg =
      static_cast<long long>(std::max<std::size_t>(1, max_image_length(phi)));

  std::vector<Word> found;
  CoreGraph graph = CoreGraph::build({});
  std::vector<Letter> word;
  ReducedBuffer image;

  auto record = [&](const Word& w) {
    if (graph.contains(w)) return;
    if (phi.apply(w) != w)
      throw std::logic_error("fix_bruteforce emitted a non-fixed word");
    found.push_back(w);
    graph = CoreGraph::build(found);
  };

  auto dfs = [&](auto&& self, int depth) -> void {
    if (!word.empty() && image.buf == word) record(Word::reduce(word));
    if (depth == max_len) return;
    long long remaining = max_len - depth;
    for (Letter l : letters) {
      if (!word.empty() && word.back() == l.inverse()) continue;
      const Word& img = phi.image(l.index());
      auto undo = image.append(img, l.sign() < 0);
      word.push_back(l);
      // Prune: letters of the image that can no longer cancel must agree
      // with the (already decided) prefix of the word being built.
      long long settle =
          static_cast<long long>(image.buf.size()) - (remaining - 1) * maximg;
      bool viable = settle <= static_cast<long long>(max_len);
      if (viable) {
        std::size_t frozen = std::min<std::size_t>(
            settle < 0 ? 0 : static_cast<std::size_t>(settle), word.size());
        for (std::size_t i = 0; i < frozen && viable; ++i)
          viable = image.buf[i] == word[i];
      }
      if (viable) self(self, depth + 1);
      word.pop_back();
      image.revert(undo);
    }
  };
  dfs(dfs, 0);

  SubgroupBasis out;
  out.generators = graph.basis();
  for (const Word& g : out.generators)
    if (phi.apply(g) != g)
      throw std::logic_error("fixed-word basis element is not fixed");
  out.exactness = Exactness::LowerBound;
  out.search_length = max_len;
  return out;
}

SubgroupBasis fix_solve(const FreeAutomorphism& phi,
                        std::optional<int> max_len) {
  AutoClass cls = classify(phi);
  SubgroupBasis out;
  switch (cls.kind) {
    case AutoKind::Identity:
      for (int i : alphabet_indices(phi))
        out.generators.push_back(Word{Letter(i, 1)});
      return out;
    case AutoKind::Inner:
      // Fix of conjugation by w is the centralizer of w.
      out.generators.push_back(root(cls.conjugator).first);
      return out;
    case AutoKind::LetterPermutation:
      // A signed letter permutation fixes a reduced word iff it fixes every
      // letter of it, so the fixed subgroup is generated by fixed letters.
      for (int i : alphabet_indices(phi)) {
        Word x{Letter(i, 1)};
        if (phi.image(i) == x) out.generators.push_back(x);
      }
      return out;
    case AutoKind::FiniteOrder:
    case AutoKind::General:
      return fix_bruteforce(phi,
                            max_len.value_or(default_fix_length(phi.slots())));
  }
  throw std::logic_error("unreachable");
}

BigInt periodic_bound(int rank) {
  if (rank <= 1) return 2;
  BigInt f = 1;
  for (int i = 2; i <= 6 * rank - 6; ++i) f *= i;
  return f;
}

std::vector<long long> periodic_divisors(int rank, const DivisorScan& scan) {
  BigInt p0 = periodic_bound(rank);
  std::vector<long long> out;
  for (long long d = 1; d <= scan.value_cap; ++d) {
    if (p0 % d != 0) continue;
    out.push_back(d);
    if (static_cast<int>(out.size()) >= scan.count_cap) break;
  }
  return out;
}

PeriodicBasis periodic_subgroup(const FreeAutomorphism& phi, DivisorScan scan,
                                std::optional<int> max_len) {
  AutoClass cls = classify(phi);
  PeriodicBasis out;
  switch (cls.kind) {
    case AutoKind::Identity:
      out.basis = fix_solve(phi);
      out.period = 1;
      return out;
    case AutoKind::Inner:
      // Fix of gamma_w^s is the centralizer of w^s = centralizer of w for
      // every s >= 1, so the periodic subgroup equals Fix itself.
      out.basis = fix_solve(phi);
      out.period = 1;
      return out;
    case AutoKind::LetterPermutation:
    case AutoKind::FiniteOrder: {
      // phi^order = id fixes everything.
      for (int i : alphabet_indices(phi))
        out.basis.generators.push_back(Word{Letter(i, 1)});
      out.basis.exactness = Exactness::Exact;
      if (cls.order > 0) out.period = cls.order;
      return out;
    }
    case AutoKind::General:
      break;
  }
  int length = 0;
  for (long long s : periodic_divisors(phi.slots(), scan)) {
    try {
      FreeAutomorphism ps = power(phi, s);
      SubgroupBasis b = fix_solve(ps, max_len);
      length = std::max(length, b.search_length);
      for (const Word& g : b.generators) {
        if (ps.apply(g) != g)
          throw std::logic_error("periodic generator not fixed by phi^s");
        if (std::find(out.basis.generators.begin(), out.basis.generators.end(),
                      g) == out.basis.generators.end())
          out.basis.generators.push_back(g);
      }
    } catch (const BudgetExceeded&) {
      break;  // image growth ended the scan; result stays a lower bound
    }
  }
  out.basis.exactness = Exactness::LowerBound;
  out.basis.search_length = length;
  return out;
}

}  // namespace fbc
