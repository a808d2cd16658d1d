#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "fbc/io.hpp"
#include "fbc/text.hpp"
#include "support.hpp"

using fbc::GroupElement;
using fbc::Json;
using fbc::Letter;
using fbc::SyntaxError;
using fbc::Word;
using support::W;

namespace {
Word w2(const std::string& s) { return W(s, 2); }
}  // namespace

TEST_CASE("word parsing") {
  Word abA = fbc::parse_word("abA", 2);
  REQUIRE(abA.size() == 3);
  CHECK(abA[0].index() == 1);
  CHECK(abA[0].sign() == 1);
  CHECK(abA[1].index() == 2);
  CHECK(abA[2].index() == 1);
  CHECK(abA[2].sign() == -1);

  CHECK(fbc::parse_word("aA", 2).empty());
  CHECK(fbc::parse_word("1", 2).empty());
  CHECK(fbc::parse_word("", 2).empty());
  CHECK(fbc::parse_word("  \t ", 2).empty());
  CHECK(fbc::parse_word("a b  A", 2) == abA);  // whitespace is ignored
  CHECK(fbc::parse_word("abBA", 2).empty());   // input is freely reduced
}

TEST_CASE("word parsing rejects bad input with an offset") {
  try {
    fbc::parse_word("a?b", 2);
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.offset() == 1);
    CHECK(std::string(e.what()).find("at byte 1") != std::string::npos);
  }
  CHECK_THROWS_AS(fbc::parse_word("abc", 2), SyntaxError);  // rank exceeded
  CHECK_THROWS_AS(fbc::parse_word("C", 2), SyntaxError);
}

TEST_CASE("the marker letter is reserved") {
  CHECK_THROWS_AS(fbc::parse_word("az", 2), SyntaxError);
  CHECK_THROWS_AS(fbc::parse_word("Z", 2), SyntaxError);
  try {
    fbc::parse_word("aZ", 2);
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.offset() == 1);
  }

  Word azA = fbc::parse_word("azA", 2, true);
  REQUIRE(azA.size() == 3);
  CHECK(azA[1].index() == 0);
  CHECK(azA[1].sign() == 1);
  CHECK(fbc::render_word(azA) == "azA");
  CHECK(fbc::parse_word("zZ", 2, true).empty());
}

TEST_CASE("indexed generator syntax") {
  Word x3 = fbc::parse_word("x3", 3);
  REQUIRE(x3.size() == 1);
  CHECK(x3[0].index() == 3);
  CHECK(x3[0].sign() == 1);
  Word X3 = fbc::parse_word("X3", 3);
  CHECK(X3 == x3.inverse());

  // both syntaxes name the same generators
  CHECK(fbc::parse_word("x2", 2) == fbc::parse_word("b", 2));
  CHECK(fbc::parse_word("x1 X1", 2).empty());
  CHECK(fbc::parse_word("x26", 30)[0].index() == 26);

  // a bare x with no digits is the 24th letter, not an indexed token
  Word bare = fbc::parse_word("x", 24);
  CHECK(bare[0].index() == 24);

  CHECK_THROWS_AS(fbc::parse_word("x4", 3), SyntaxError);   // beyond the rank
  CHECK_THROWS_AS(fbc::parse_word("x0", 3), SyntaxError);   // indices start at 1
  CHECK_THROWS_AS(fbc::parse_word("x1000001", 3), SyntaxError);  // hard cap

  // the two syntaxes cannot be mixed in one word
  CHECK_THROWS_AS(fbc::parse_word("ax2", 2), SyntaxError);
  CHECK_THROWS_AS(fbc::parse_word("x2a", 2), SyntaxError);
}

TEST_CASE("word rendering") {
  CHECK(fbc::render_word(Word{}) == "1");
  CHECK(fbc::render_word(w2("abA")) == "abA");
  // letters up to index 25 render as letters, beyond that everything is
  // indexed
  CHECK(fbc::render_word(fbc::parse_word("y", 25)) == "y");
  Word big = fbc::parse_word("x1 x26", 30);
  CHECK(fbc::render_word(big) == "x1x26");
  CHECK(fbc::parse_word(fbc::render_word(big), 30) == big);
}

TEST_CASE("render and parse are inverse") {
  auto rng = support::make_rng(801);
  for (int i = 0; i < 120; ++i) {
    Word w = support::random_word(rng, 3, 8);
    CHECK(fbc::parse_word(fbc::render_word(w), 3) == w);
  }
  for (int i = 0; i < 120; ++i) {
    Word w = support::random_word(rng, 30, 6);
    CHECK(fbc::parse_word(fbc::render_word(w), 30) == w);
  }
}

TEST_CASE("group word parsing") {
  fbc::GroupWord gw = fbc::parse_group_word("T a t b", 2);
  REQUIRE(gw.size() == 4);
  CHECK(gw[0].t_step == -1);
  CHECK(gw[1].t_step == 0);
  CHECK(gw[1].letter.index() == 1);
  CHECK(gw[2].t_step == 1);
  CHECK(gw[3].letter.index() == 2);

  CHECK(fbc::parse_group_word("1", 2).empty());
  CHECK(fbc::parse_group_word("", 2).empty());

  // in plain free words t is just the 20th letter; group words reserve it
  CHECK(fbc::parse_word("t", 20)[0].index() == 20);
  CHECK(fbc::parse_group_word("t", 2)[0].t_step == 1);

  // letters beyond s need the indexed syntax in group words
  CHECK_THROWS_AS(fbc::parse_group_word("u", 21), SyntaxError);
  try {
    fbc::parse_group_word("u", 21);
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(std::string(e.what()).find("indexed") != std::string::npos);
  }
  CHECK(fbc::parse_group_word("x21", 21)[0].letter.index() == 21);

  CHECK_THROWS_AS(fbc::parse_group_word("z", 2), SyntaxError);
  CHECK_THROWS_AS(fbc::parse_group_word("a!b", 2), SyntaxError);
}

TEST_CASE("group element rendering") {
  CHECK(fbc::render_group_element(GroupElement{}) == "1");
  CHECK(fbc::render_group_element({0, w2("ab")}) == "ab");
  CHECK(fbc::render_group_element({1, Word{}}) == "t");
  CHECK(fbc::render_group_element({1, w2("ab")}) == "t ab");
  CHECK(fbc::render_group_element({2, w2("ab")}) == "t^2 ab");
  CHECK(fbc::render_group_element({-1, Word{}}) == "t^-1");
  CHECK(fbc::render_group_element({-3, w2("aB")}) == "t^-3 aB");
}

TEST_CASE("automorphism JSON") {
  fbc::FreeAutomorphism fib = support::fib();
  Json j = fbc::automorphism_to_json(fib);
  CHECK(j["rank"] == 2);
  CHECK(j["images"][0] == "ab");
  CHECK(j["images"][1] == "a");
  REQUIRE(j.contains("inverse_images"));

  fbc::FreeAutomorphism back = fbc::automorphism_from_json(j);
  for (int i = 1; i <= 2; ++i) {
    CHECK(back.forward().image(i) == fib.forward().image(i));
    CHECK(back.backward().image(i) == fib.backward().image(i));
  }

  // inverse images may be omitted; they are recovered
  Json bare{{"rank", 2}, {"images", {"ab", "a"}}};
  fbc::FreeAutomorphism recovered = fbc::automorphism_from_json(bare);
  CHECK(recovered.backward().image(1) == w2("b"));
  CHECK(recovered.backward().image(2) == w2("Ba"));
}

TEST_CASE("automorphism JSON rejects bad input") {
  // a wrong claimed inverse is checked, not believed
  Json lying{{"rank", 2},
             {"images", {"ab", "a"}},
             {"inverse_images", {"a", "b"}}};
  CHECK_THROWS_AS(fbc::automorphism_from_json(lying), fbc::NotAnAutomorphism);

  CHECK_THROWS_AS(
      fbc::automorphism_from_json(Json{{"rank", 2}, {"images", {"ab"}}}),
      std::invalid_argument);
  CHECK_THROWS_AS(fbc::automorphism_from_json(Json{{"images", {"a"}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      fbc::automorphism_from_json(Json{{"rank", -1}, {"images", Json::array()}}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      fbc::automorphism_from_json(Json{{"rank", "2"}, {"images", {"a", "b"}}}),
      std::invalid_argument);
  // non-bijective images
  CHECK_THROWS_AS(
      fbc::automorphism_from_json(Json{{"rank", 2}, {"images", {"aa", "b"}}}),
      std::invalid_argument);
  // the marker letter cannot be smuggled in through images
  CHECK_THROWS_AS(
      fbc::automorphism_from_json(Json{{"rank", 2}, {"images", {"az", "b"}}}),
      SyntaxError);
}

TEST_CASE("presentation JSON") {
  Json swap_json{{"rank", 2}, {"images", {"b", "a"}}};

  Json j{{"phi", swap_json}, {"m", 2}, {"h", "1"}};
  fbc::FbcPresentation pres = fbc::presentation_from_json(j);
  CHECK(pres.rank == 2);
  REQUIRE(pres.order.has_value());
  CHECK(*pres.order == 2);
  CHECK(pres.h.empty());

  // "inf", null, and absence all mean an infinite stable letter
  for (Json m : {Json("inf"), Json(nullptr)}) {
    Json inf_j{{"phi", swap_json}, {"m", m}};
    CHECK(!fbc::presentation_from_json(inf_j).order.has_value());
  }
  CHECK(!fbc::presentation_from_json(Json{{"phi", swap_json}}).order
             .has_value());

  // explicit rank must agree with the automorphism
  Json mismatched{{"rank", 3}, {"phi", swap_json}};
  CHECK_THROWS_AS(fbc::presentation_from_json(mismatched),
                  std::invalid_argument);

  // inconsistent relations are refused at the door
  Json fib_json{{"rank", 2}, {"images", {"ab", "a"}}};
  Json inconsistent{{"phi", fib_json}, {"m", 2}};
  CHECK_THROWS_AS(fbc::presentation_from_json(inconsistent),
                  fbc::InconsistentPresentation);

  CHECK_THROWS_AS(fbc::presentation_from_json(Json{{"m", 2}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      fbc::presentation_from_json(Json{{"phi", swap_json}, {"m", "two"}}),
      std::invalid_argument);

  // round trips
  Json round = fbc::presentation_to_json(pres);
  CHECK(round["m"] == 2);
  CHECK(round["h"] == "1");
  fbc::FbcPresentation again = fbc::presentation_from_json(round);
  CHECK(again.order == pres.order);
  CHECK(again.h == pres.h);

  fbc::FbcPresentation inf_pres =
      fbc::presentation_from_json(Json{{"phi", fib_json}});
  Json inf_round = fbc::presentation_to_json(inf_pres);
  CHECK(inf_round["m"] == "inf");
  CHECK(!fbc::presentation_from_json(inf_round).order.has_value());
}

TEST_CASE("group element JSON") {
  Json j = fbc::group_element_json({2, w2("ab")});
  CHECK(j["t"] == 2);
  CHECK(j["u"] == "ab");
  CHECK(j["display"] == "t^2 ab");

  CHECK(fbc::group_element_from_json(j, 2) == GroupElement{2, w2("ab")});
  CHECK(fbc::group_element_from_json(Json::object(), 2) == GroupElement{});
  CHECK(fbc::group_element_from_json(Json{{"u", "a"}}, 2) ==
        GroupElement{0, w2("a")});
}

TEST_CASE("verdict JSON carries certificates only on yes") {
  fbc::TwistedVerdict tv;
  tv.kind = fbc::TwistedVerdict::Kind::Yes;
  tv.conjugator = w2("aB");
  tv.checked = true;
  tv.note = "route";
  Json tj = fbc::verdict_json(tv);
  CHECK(tj["outcome"] == "yes");
  CHECK(tj["g"] == "aB");
  CHECK(tj["checked"] == true);
  CHECK(tj["note"] == "route");

  tv.kind = fbc::TwistedVerdict::Kind::No;
  Json tn = fbc::verdict_json(tv);
  CHECK(tn["outcome"] == "no");
  CHECK(!tn.contains("g"));
  CHECK(!tn.contains("checked"));

  tv.kind = fbc::TwistedVerdict::Kind::Unknown;
  CHECK(fbc::verdict_json(tv)["outcome"] == "unknown");

  fbc::PowerTwistedVerdict pt;
  pt.kind = fbc::PowerTwistedVerdict::Kind::Yes;
  pt.exponent = 3;
  pt.conjugator = w2("a");
  pt.checked = true;
  Json pj = fbc::verdict_json(pt);
  CHECK(pj["p"] == 3);
  CHECK(pj["g"] == "a");

  fbc::GroupConjVerdict gc;
  gc.kind = fbc::GroupConjVerdict::Kind::Yes;
  gc.conjugator = {1, w2("a")};
  gc.checked = true;
  Json gj = fbc::verdict_json(gc);
  CHECK(gj["outcome"] == "yes");
  CHECK(gj["certificate"]["t"] == 1);
  CHECK(gj["certificate"]["u"] == "a");
  CHECK(gj["certificate"]["display"] == "t a");
  CHECK(gj["verified"] == true);
  gc.kind = fbc::GroupConjVerdict::Kind::No;
  CHECK(!fbc::verdict_json(gc).contains("certificate"));

  fbc::PowerConjVerdict pc;
  pc.kind = fbc::PowerConjVerdict::Kind::Yes;
  pc.p = 2;
  pc.q = -3;
  pc.checked = true;
  Json pcj = fbc::verdict_json(pc);
  CHECK(pcj["p"] == 2);
  CHECK(pcj["q"] == -3);
  CHECK(pcj.contains("certificate"));

  fbc::OrbitVerdict ov;
  ov.kind = fbc::OrbitVerdict::Kind::Yes;
  ov.shift = -2;
  ov.conjugator = w2("b");
  ov.checked = true;
  Json oj = fbc::verdict_json(ov);
  CHECK(oj["k"] == -2);
  CHECK(oj["c"] == "b");
  CHECK(oj["verified"] == true);

  fbc::PowerOrbitVerdict po;
  po.kind = fbc::PowerOrbitVerdict::Kind::Yes;
  po.p = 2;
  po.q = 1;
  po.shift = 1;
  po.conjugator = Word{};
  po.checked = true;
  Json poj = fbc::verdict_json(po);
  CHECK(poj["p"] == 2);
  CHECK(poj["q"] == 1);
  CHECK(poj["k"] == 1);
  CHECK(poj["c"] == "1");
}

TEST_CASE("basis JSON reports exactness honestly") {
  fbc::SubgroupBasis exact;
  exact.generators = {w2("a"), w2("bab")};
  exact.exactness = fbc::Exactness::Exact;
  Json ej = fbc::basis_json(exact);
  CHECK(ej["generators"][0] == "a");
  CHECK(ej["generators"][1] == "bab");
  CHECK(ej["exactness"] == "exact");
  CHECK(!ej.contains("search_length"));

  fbc::SubgroupBasis bounded;
  bounded.generators = {w2("ba")};
  bounded.exactness = fbc::Exactness::LowerBound;
  bounded.search_length = 6;
  Json bj = fbc::basis_json(bounded);
  CHECK(bj["exactness"] == "lower-bound");
  CHECK(bj["search_length"] == 6);

  fbc::PeriodicBasis per;
  per.basis = exact;
  per.period = 3;
  Json pj = fbc::basis_json(per);
  CHECK(pj["period"] == 3);
  CHECK(pj["exactness"] == "exact");

  per.period.reset();
  CHECK(!fbc::basis_json(per).contains("period"));
}
