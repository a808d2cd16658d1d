// Shared helpers for the test binaries: deterministic random words and
// automorphisms, small named automorphisms, and brute-force oracles.
#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "fbc/automorphism.hpp"
#include "fbc/text.hpp"
#include "fbc/words.hpp"

namespace support {

inline std::mt19937 make_rng(unsigned seed) { return std::mt19937(seed); }

inline fbc::Word W(const std::string& text, int rank) {
  return fbc::parse_word(text, rank);
}

/// A uniformly random reduced word of exactly `len` letters (empty if the
/// rank is 0 or len is 0).
inline fbc::Word random_reduced(std::mt19937& rng, int rank, int len) {
  if (rank <= 0 || len <= 0) return {};
  std::uniform_int_distribution<int> first(0, 2 * rank - 1);
  std::uniform_int_distribution<int> next(0, 2 * rank - 2);
  std::vector<fbc::Letter> letters;
  letters.reserve(len);
  auto nth = [&](int n) {  // n in [0, 2*rank): the n-th signed letter
    return fbc::Letter(n / 2 + 1, n % 2 == 0 ? 1 : -1);
  };
  letters.push_back(nth(first(rng)));
  for (int i = 1; i < len; ++i) {
    fbc::Letter banned = letters.back().inverse();
    int n = next(rng);
    fbc::Letter candidate = nth(n);
    if (candidate == banned) candidate = nth(2 * rank - 1);
    letters.push_back(candidate);
  }
  fbc::Word w = fbc::Word::reduce(letters);
  return w;
}

/// Random reduced word of length uniformly drawn from [0, max_len].
inline fbc::Word random_word(std::mt19937& rng, int rank, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  return random_reduced(rng, rank, len(rng));
}

inline fbc::FreeAutomorphism auto_from(int rank,
                                       const std::vector<std::string>& images) {
  std::vector<fbc::Word> words;
  for (const auto& s : images) words.push_back(W(s, rank));
  return fbc::invert_and_validate(fbc::FreeEndomorphism(rank, words));
}

/// a <-> b on rank 2.
inline fbc::FreeAutomorphism swap_ab() { return auto_from(2, {"b", "a"}); }

/// a -> ab, b -> a: infinite order, irreducible ("Fibonacci-like").
inline fbc::FreeAutomorphism fib() { return auto_from(2, {"ab", "a"}); }

/// A random automorphism: a composition of up to `moves` elementary moves
/// (swap two generators, invert one, right-multiply one by another).
inline fbc::FreeAutomorphism random_auto(std::mt19937& rng, int rank,
                                         int moves) {
  fbc::FreeAutomorphism result = fbc::FreeAutomorphism::identity(rank);
  if (rank == 0 || moves <= 0) return result;
  std::uniform_int_distribution<int> kind(0, rank >= 2 ? 2 : 0);
  std::uniform_int_distribution<int> pick(1, rank);
  auto letter = [](int i, int sign) {
    return fbc::Word{fbc::Letter(i, sign)};
  };
  for (int step = 0; step < moves; ++step) {
    std::vector<fbc::Word> fwd, inv;
    for (int i = 1; i <= rank; ++i) {
      fwd.push_back(letter(i, 1));
      inv.push_back(letter(i, 1));
    }
    switch (rank >= 2 ? kind(rng) : 1) {
      case 0: {  // swap x_i and x_j
        int i = pick(rng), j = pick(rng);
        if (i == j) continue;
        std::swap(fwd[i - 1], fwd[j - 1]);
        std::swap(inv[i - 1], inv[j - 1]);
        break;
      }
      case 1: {  // invert x_i
        int i = pick(rng);
        fwd[i - 1] = letter(i, -1);
        inv[i - 1] = letter(i, -1);
        break;
      }
      default: {  // x_i -> x_i x_j
        int i = pick(rng), j = pick(rng);
        if (i == j) continue;
        fwd[i - 1] = letter(i, 1) * letter(j, 1);
        inv[i - 1] = letter(i, 1) * letter(j, -1);
        break;
      }
    }
    result = fbc::compose(result,
                          fbc::FreeAutomorphism(fbc::FreeEndomorphism(rank, fwd),
                                                fbc::FreeEndomorphism(rank, inv)));
  }
  return result;
}

/// All reduced words of length <= max_len (identity included), in length order.
inline std::vector<fbc::Word> all_reduced_words(int rank, int max_len) {
  std::vector<fbc::Word> out{fbc::Word{}};
  std::size_t level_begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (int g = 1; g <= rank; ++g) {
        for (int sign : {1, -1}) {
          fbc::Letter l(g, sign);
          if (!out[i].empty() && out[i].letters().back() == l.inverse())
            continue;
          fbc::Word w = out[i];
          w.push_cancel(l);
          out.push_back(std::move(w));
        }
      }
    }
    level_begin = level_end;
  }
  return out;
}

/// Brute-force conjugacy oracle: the first g with |g| <= max_len and
/// g^-1 u g = v, scanning in length order.
inline std::optional<fbc::Word> brute_conjugator(const fbc::Word& u,
                                                 const fbc::Word& v, int rank,
                                                 int max_len) {
  for (const fbc::Word& g : all_reduced_words(rank, max_len))
    if (fbc::conjugated(u, g) == v) return g;
  return std::nullopt;
}

}  // namespace support
