#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fbc/orbit.hpp"
#include "support.hpp"

using fbc::FreeAutomorphism;
using fbc::OrbitVerdict;
using fbc::PowerOrbitVerdict;
using fbc::Word;
using support::W;

namespace {
Word w2(const std::string& s) { return W(s, 2); }

Word orbit_image(const FreeAutomorphism& phi, const Word& u, long long k) {
  return fbc::power(phi, k).apply(u);
}
}  // namespace

TEST_CASE("orbit examples") {
  FreeAutomorphism id = FreeAutomorphism::identity(2);

  OrbitVerdict got = fbc::orbit_decide(id, w2("ab"), w2("ba"));
  REQUIRE(got.kind == OrbitVerdict::Kind::Yes);
  CHECK(got.shift == 0);
  CHECK(fbc::conjugated(w2("ab"), got.conjugator) == w2("ba"));

  got = fbc::orbit_decide(support::swap_ab(), w2("a"), w2("b"));
  REQUIRE(got.kind == OrbitVerdict::Kind::Yes);
  CHECK(got.shift == 1);
  CHECK(got.conjugator == Word{});

  got = fbc::orbit_decide(support::fib(), w2("a"), w2("ab"));
  REQUIRE(got.kind == OrbitVerdict::Kind::Yes);
  CHECK(fbc::conjugated(orbit_image(support::fib(), w2("a"), got.shift),
                        got.conjugator) == w2("ab"));

  // the backward direction is scanned too
  got = fbc::orbit_decide(support::fib(), w2("a"), w2("b"));
  REQUIRE(got.kind == OrbitVerdict::Kind::Yes);
  CHECK(got.shift == -1);
}

TEST_CASE("identity orbits are empty words and exact refusals") {
  FreeAutomorphism fib = support::fib();
  OrbitVerdict got = fbc::orbit_decide(fib, Word{}, Word{});
  REQUIRE(got.kind == OrbitVerdict::Kind::Yes);
  CHECK(got.shift == 0);

  CHECK(fbc::orbit_decide(fib, Word{}, w2("a")).kind ==
        OrbitVerdict::Kind::No);
  CHECK(fbc::orbit_decide(fib, w2("a"), Word{}).kind ==
        OrbitVerdict::Kind::No);
}

TEST_CASE("finite order classes give exact answers") {
  // the whole orbit is scanned, so a miss is a proof
  OrbitVerdict got = fbc::orbit_decide(support::swap_ab(), w2("a"), w2("ab"));
  CHECK(got.kind == OrbitVerdict::Kind::No);

  got = fbc::orbit_decide(support::swap_ab(), w2("ab"), w2("ab"));
  CHECK(got.kind == OrbitVerdict::Kind::Yes);

  // inner automorphisms never change the conjugacy class
  FreeAutomorphism by_ab = fbc::inner(w2("ab"), 2);
  CHECK(fbc::orbit_decide(by_ab, w2("a"), w2("b")).kind ==
        OrbitVerdict::Kind::No);
  got = fbc::orbit_decide(by_ab, w2("ab"), w2("ba"));
  CHECK(got.kind == OrbitVerdict::Kind::Yes);
}

TEST_CASE("growth cutoff yields unknown, never an unsound no") {
  OrbitVerdict got = fbc::orbit_decide(support::fib(), w2("a"), w2("bb"));
  CHECK(got.kind == OrbitVerdict::Kind::Unknown);
  CHECK(!got.note.empty());
}

TEST_CASE("random orbit instances are recognized") {
  auto rng = support::make_rng(601);
  for (int i = 0; i < 150; ++i) {
    FreeAutomorphism phi = support::random_auto(rng, 2, 5);
    Word u = support::random_word(rng, 2, 4);
    long long k = static_cast<long long>(rng() % 7) - 3;
    Word c = support::random_word(rng, 2, 2);
    Word v = fbc::conjugated(orbit_image(phi, u, k), c);
    OrbitVerdict got = fbc::orbit_decide(phi, u, v);
    REQUIRE(got.kind == OrbitVerdict::Kind::Yes);
    CHECK(fbc::conjugated(orbit_image(phi, u, got.shift), got.conjugator) == v);
    CHECK(got.checked);
  }
}

TEST_CASE("power orbit examples") {
  FreeAutomorphism id = FreeAutomorphism::identity(2);

  PowerOrbitVerdict got = fbc::power_orbit_decide(support::fib(), w2("ab"),
                                                  w2("ab"));
  REQUIRE(got.kind == PowerOrbitVerdict::Kind::Yes);
  CHECK(got.p == 1);
  CHECK(got.q == 1);
  CHECK(got.shift == 0);
  CHECK(got.conjugator == Word{});

  got = fbc::power_orbit_decide(id, w2("aa"), w2("aaa"));
  REQUIRE(got.kind == PowerOrbitVerdict::Kind::Yes);
  CHECK(got.p == 3);
  CHECK(got.q == 2);
  CHECK(got.shift == 0);
  CHECK(got.conjugator == Word{});

  got = fbc::power_orbit_decide(support::fib(), w2("a"), w2("abab"));
  REQUIRE(got.kind == PowerOrbitVerdict::Kind::Yes);
  CHECK(got.p == 2);
  CHECK(got.q == 1);
  CHECK(got.shift == 1);

  // opposite orientation comes back with a negative q
  got = fbc::power_orbit_decide(id, w2("a"), w2("A"));
  REQUIRE(got.kind == PowerOrbitVerdict::Kind::Yes);
  CHECK(got.p == 1);
  CHECK(got.q == -1);
}

TEST_CASE("power orbit verdicts verify against the definition") {
  auto rng = support::make_rng(602);
  int yes = 0;
  for (int i = 0; i < 120; ++i) {
    FreeAutomorphism phi = support::random_auto(rng, 2, 4);
    Word u = support::random_reduced(rng, 2, 1 + static_cast<int>(rng() % 3));
    Word v;
    if (i % 2 == 0) {
      // constructed: v = c^-1 phi^k(u^p) c, a power of which is hit
      long long k = static_cast<long long>(rng() % 5) - 2;
      int p = 1 + static_cast<int>(rng() % 3);
      Word c = support::random_word(rng, 2, 2);
      v = fbc::conjugated(orbit_image(phi, u.pow(p), k), c);
      if (v.empty()) continue;
    } else {
      v = support::random_reduced(rng, 2, 1 + static_cast<int>(rng() % 4));
    }
    PowerOrbitVerdict got = fbc::power_orbit_decide(phi, u, v);
    if (got.kind == PowerOrbitVerdict::Kind::Yes) {
      ++yes;
      CHECK(got.p >= 1);
      CHECK(got.q != 0);
      CHECK(fbc::conjugated(orbit_image(phi, u.pow(got.p), got.shift),
                            got.conjugator) == v.pow(got.q));
    }
  }
  CHECK(yes > 20);
}

TEST_CASE("powers of the input shift the answer consistently") {
  auto rng = support::make_rng(603);
  for (int i = 0; i < 60; ++i) {
    FreeAutomorphism phi = support::random_auto(rng, 2, 4);
    Word u = support::random_reduced(rng, 2, 1 + static_cast<int>(rng() % 3));
    PowerOrbitVerdict got = fbc::power_orbit_decide(phi, u, u.pow(2));
    REQUIRE(got.kind == PowerOrbitVerdict::Kind::Yes);
    CHECK(fbc::conjugated(orbit_image(phi, u.pow(got.p), got.shift),
                          got.conjugator) == u.pow(2 * got.q));
  }
}

TEST_CASE("power orbit against a small exhaustive oracle") {
  FreeAutomorphism fib = support::fib();
  Word u = w2("a"), v = w2("abab");
  // oracle: minimal p with any |k| <= 2, q <= 4, |c| <= 4 solution
  int best_p = 0, best_q = 0;
  for (int p = 1; p <= 4 && best_p == 0; ++p)
    for (int q = 1; q <= 4 && best_p == 0; ++q)
      for (long long k = -2; k <= 2 && best_p == 0; ++k)
        for (const Word& c : support::all_reduced_words(2, 4))
          if (fbc::conjugated(orbit_image(fib, u.pow(p), k), c) == v.pow(q)) {
            best_p = p;
            best_q = q;
            break;
          }
  CHECK(best_p == 2);
  CHECK(best_q == 1);
}
