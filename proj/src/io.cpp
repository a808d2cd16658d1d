#include "fbc/io.hpp"

#include <stdexcept>
#include <vector>

#include "fbc/text.hpp"

namespace fbc {

namespace {

template <typename Kind>
const char* outcome_name(Kind k) {
  switch (k) {
    case Kind::Yes:
      return "yes";
    case Kind::No:
      return "no";
    default:
      return "unknown";
  }
}

std::vector<Word> parse_images(const Json& j, int rank, const char* key) {
  if (!j.contains(key) || !j[key].is_array())
    throw std::invalid_argument(std::string("automorphism JSON needs a \"") +
                                key + "\" array");
  if (static_cast<int>(j[key].size()) != rank)
    throw std::invalid_argument(
        std::string("automorphism \"") + key + "\" must list exactly " +
        std::to_string(rank) + " words");
  std::vector<Word> images;
  for (const auto& s : j[key])
    images.push_back(parse_word(s.get<std::string>(), rank));
  return images;
}

}  // namespace

FreeAutomorphism automorphism_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rank") ||
      !j["rank"].is_number_integer() || j["rank"].get<int>() < 0)
    throw std::invalid_argument(
        "automorphism JSON needs a non-negative integer \"rank\"");
  int rank = j["rank"].get<int>();
  FreeEndomorphism fwd(rank, parse_images(j, rank, "images"));
  if (j.contains("inverse_images")) {
    FreeEndomorphism inv(rank, parse_images(j, rank, "inverse_images"));
    return FreeAutomorphism(fwd, inv);  // the pair is verified, not trusted
  }
  return invert_and_validate(fwd);
}

Json automorphism_to_json(const FreeAutomorphism& phi) {
  Json images = Json::array(), inverses = Json::array();
  for (int i = 1; i <= phi.rank(); ++i) {
    images.push_back(render_word(phi.forward().image(i)));
    inverses.push_back(render_word(phi.backward().image(i)));
  }
  return Json{{"rank", phi.rank()},
              {"images", images},
              {"inverse_images", inverses}};
}

FbcPresentation presentation_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("phi"))
    throw std::invalid_argument("presentation JSON needs a \"phi\" object");
  FreeAutomorphism phi = automorphism_from_json(j["phi"]);
  if (j.contains("rank") &&
      (!j["rank"].is_number_integer() || j["rank"].get<int>() != phi.rank()))
    throw std::invalid_argument(
        "presentation \"rank\" disagrees with the automorphism's rank");
  std::optional<long long> order;
  if (j.contains("m") && !j["m"].is_null()) {
    if (j["m"].is_string()) {
      if (j["m"].get<std::string>() != "inf")
        throw std::invalid_argument(
            "presentation \"m\" must be an integer or \"inf\"");
    } else if (j["m"].is_number_integer()) {
      order = j["m"].get<long long>();
    } else {
      throw std::invalid_argument(
          "presentation \"m\" must be an integer or \"inf\"");
    }
  }
  Word h;
  if (j.contains("h") && !j["h"].is_null())
    h = parse_word(j["h"].get<std::string>(), phi.rank());
  return FbcPresentation::make(std::move(phi), order, std::move(h));
}

Json presentation_to_json(const FbcPresentation& pres) {
  Json out{{"rank", pres.rank}, {"phi", automorphism_to_json(pres.phi)}};
  if (pres.order) {
    out["m"] = *pres.order;
    out["h"] = render_word(pres.h);
  } else {
    out["m"] = "inf";
  }
  return out;
}

Json group_element_json(const GroupElement& e) {
  return Json{{"t", e.t_exp},
              {"u", render_word(e.u)},
              {"display", render_group_element(e)}};
}

GroupElement group_element_from_json(const Json& j, int rank) {
  GroupElement e;
  if (j.contains("t")) e.t_exp = j["t"].get<long long>();
  if (j.contains("u")) e.u = parse_word(j["u"].get<std::string>(), rank);
  return e;
}

Json verdict_json(const GroupConjVerdict& v) {
  Json out{{"outcome", outcome_name(v.kind)}, {"note", v.note}};
  if (v.kind == GroupConjVerdict::Kind::Yes) {
    out["certificate"] = group_element_json(v.conjugator);
    out["verified"] = v.checked;
  }
  return out;
}

Json verdict_json(const PowerConjVerdict& v) {
  Json out{{"outcome", outcome_name(v.kind)}, {"note", v.note}};
  if (v.kind == PowerConjVerdict::Kind::Yes) {
    out["p"] = v.p;
    out["q"] = v.q;
    out["certificate"] = group_element_json(v.conjugator);
    out["verified"] = v.checked;
  }
  return out;
}

Json verdict_json(const TwistedVerdict& v) {
  Json out{{"outcome", outcome_name(v.kind)}, {"note", v.note}};
  if (v.kind == TwistedVerdict::Kind::Yes) {
    out["g"] = render_word(v.conjugator);
    out["checked"] = v.checked;
  }
  return out;
}

Json verdict_json(const PowerTwistedVerdict& v) {
  Json out{{"outcome", outcome_name(v.kind)}, {"note", v.note}};
  if (v.kind == PowerTwistedVerdict::Kind::Yes) {
    out["p"] = v.exponent;
    out["g"] = render_word(v.conjugator);
    out["checked"] = v.checked;
  }
  return out;
}

Json verdict_json(const OrbitVerdict& v) {
  Json out{{"outcome", outcome_name(v.kind)}, {"note", v.note}};
  if (v.kind == OrbitVerdict::Kind::Yes) {
    out["k"] = v.shift;
    out["c"] = render_word(v.conjugator);
    out["verified"] = v.checked;
  }
  return out;
}

Json verdict_json(const PowerOrbitVerdict& v) {
  Json out{{"outcome", outcome_name(v.kind)}, {"note", v.note}};
  if (v.kind == PowerOrbitVerdict::Kind::Yes) {
    out["p"] = v.p;
    out["q"] = v.q;
    out["k"] = v.shift;
    out["c"] = render_word(v.conjugator);
    out["verified"] = v.checked;
  }
  return out;
}

Json basis_json(const SubgroupBasis& b) {
  Json gens = Json::array();
  for (const Word& g : b.generators) gens.push_back(render_word(g));
  Json out{{"generators", gens},
           {"exactness",
            b.exactness == Exactness::Exact ? "exact" : "lower-bound"}};
  if (b.exactness == Exactness::LowerBound)
    out["search_length"] = b.search_length;
  return out;
}

Json basis_json(const PeriodicBasis& b) {
  Json out = basis_json(b.basis);
  if (b.period) out["period"] = *b.period;
  return out;
}

}  // namespace fbc
