// fbc — decision procedures for [f.g. free]-by-cyclic groups.
//
// Subcommands operate either on a group presentation (--group FILE) or on a
// free-group automorphism (--phi FILE); words are positional arguments in the
// letter syntax (a..y, inverses A..Y, or indexed x1, X1, ...).  Verdicts are
// printed as JSON on standard output.
//
// Exit codes: 0 = yes / success, 1 = no, 2 = unknown, 3 = bad input,
// 4 = internal error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "fbc/automorphism.hpp"
#include "fbc/budget.hpp"
#include "fbc/fixed_points.hpp"
#include "fbc/group.hpp"
#include "fbc/io.hpp"
#include "fbc/orbit.hpp"
#include "fbc/stallings.hpp"
#include "fbc/text.hpp"
#include "fbc/twisted.hpp"
#include "fbc/words.hpp"

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitBadInput = 3;
constexpr int kExitInternal = 4;

struct Budgets {
  int fix_length = 0;     // 0 = automatic (8 for <=3 letters, 6 for 4, else 4)
  int direct_length = 0;  // 0 = automatic (6 for <=3 letters, 5 for 4, else 4)
  int orbit_range = 16;
  int growth_factor = 4;
  int power_cap = 8;
  long long divisor_value_cap = 5040;
  int divisor_count_cap = 8;
  std::size_t word_budget = 1'000'000;

  fbc::TwistedOptions twisted() const {
    fbc::TwistedOptions t;
    if (fix_length > 0) t.fix_length = fix_length;
    if (direct_length > 0) t.direct_length = direct_length;
    t.scan.value_cap = divisor_value_cap;
    t.scan.count_cap = divisor_count_cap;
    t.power_cap = power_cap;
    return t;
  }
  fbc::OrbitOptions orbit() const {
    fbc::OrbitOptions o;
    o.range = orbit_range;
    o.growth_factor = growth_factor;
    return o;
  }
  fbc::DecideOptions decide() const { return {twisted(), orbit()}; }
  std::optional<int> fix() const {
    return fix_length > 0 ? std::optional<int>(fix_length) : std::nullopt;
  }
};

void add_budget_flags(CLI::App* cmd, Budgets* b) {
  cmd->add_option("-L,--fix-length", b->fix_length,
                  "Fixed-subgroup search length; 0 picks the per-rank default "
                  "(8 for alphabets of up to 3 letters, 6 for 4, else 4)")
      ->capture_default_str();
  cmd->add_option("--direct-length", b->direct_length,
                  "Direct conjugator enumeration length; 0 picks the per-rank "
                  "default (6 for up to 3 letters, 5 for 4, else 4)")
      ->capture_default_str();
  cmd->add_option("-K,--orbit-range", b->orbit_range,
                  "Orbit scan radius: shifts k = 0, 1, -1, ..., +-K")
      ->capture_default_str();
  cmd->add_option("--growth-factor", b->growth_factor,
                  "Orbit scan gives up on a direction once iterates stay this "
                  "many times longer than the inputs")
      ->capture_default_str();
  cmd->add_option("-P,--power-cap", b->power_cap,
                  "Largest exponent tried one-by-one in power searches")
      ->capture_default_str();
  cmd->add_option("--divisor-value-cap", b->divisor_value_cap,
                  "Largest period divisor considered in power searches")
      ->capture_default_str();
  cmd->add_option("--divisor-count-cap", b->divisor_count_cap,
                  "Maximum number of period divisors considered")
      ->capture_default_str();
  cmd->add_option("--word-budget", b->word_budget,
                  "Global cap on intermediate word length, in letters")
      ->capture_default_str();
}

fbc::Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  fbc::Json j;
  try {
    in >> j;
  } catch (const fbc::Json::exception& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
  return j;
}

void emit(const fbc::Json& j) { std::cout << j.dump(2) << "\n"; }

template <typename Verdict>
int exit_code_for(const Verdict& v) {
  switch (v.kind) {
    case Verdict::Kind::Yes:
      return kExitYes;
    case Verdict::Kind::No:
      return kExitNo;
    default:
      return kExitUnknown;
  }
}

// Every Yes must carry a certificate that re-checked successfully.
template <typename Verdict>
void assert_verified(const Verdict& v) {
  if (v.kind == Verdict::Kind::Yes && !v.checked)
    throw std::logic_error("yes verdict without a re-checked certificate");
}

void write_graph(const std::string& path, const fbc::CoreGraph& graph) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open file: " + path);
  out << graph.to_dot();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Decision procedures for [finitely generated free]-by-cyclic groups: "
      "normal forms, conjugacy, power conjugacy, twisted conjugacy, orbit "
      "conjugacy, and fixed/periodic subgroups of free-group automorphisms."};
  app.require_subcommand(1);

  Budgets budgets;
  std::string group_path, phi_path, emit_graph;
  std::vector<std::string> words;

  auto* normalize = app.add_subcommand(
      "normalize", "Put a group word into the normal form t^k u");
  normalize->add_option("--group", group_path, "Presentation JSON file")
      ->required();
  normalize->add_option("word", words, "Group word over t and the generators")
      ->expected(1);

  auto* mul =
      app.add_subcommand("mul", "Multiply two group words, normal-form out");
  mul->add_option("--group", group_path, "Presentation JSON file")->required();
  mul->add_option("words", words, "Two group words")->expected(2);

  auto* conj = app.add_subcommand(
      "conj", "Decide whether two group elements are conjugate");
  conj->add_option("--group", group_path, "Presentation JSON file")->required();
  conj->add_option("words", words, "Two group words")->expected(2);
  add_budget_flags(conj, &budgets);

  auto* pconj = app.add_subcommand(
      "power-conj",
      "Decide whether some nontrivial powers of two group elements are "
      "conjugate");
  pconj->add_option("--group", group_path, "Presentation JSON file")
      ->required();
  pconj->add_option("words", words, "Two group words")->expected(2);
  add_budget_flags(pconj, &budgets);

  auto* tconj = app.add_subcommand(
      "twisted-conj",
      "Decide twisted conjugacy: is there g with (g phi)^-1 u g = v?");
  tconj->add_option("--phi", phi_path, "Automorphism JSON file")->required();
  tconj->add_option("words", words, "Two words u and v")->expected(2);
  tconj->add_option("--emit-graph", emit_graph,
                    "Write the fixed-subgroup core graph used by the decision "
                    "to this file in DOT format");
  add_budget_flags(tconj, &budgets);

  auto* oconj = app.add_subcommand(
      "orbit-conj",
      "Decide orbit conjugacy: is some phi^k(u) conjugate to v?");
  oconj->add_option("--phi", phi_path, "Automorphism JSON file")->required();
  oconj->add_option("words", words, "Two words u and v")->expected(2);
  add_budget_flags(oconj, &budgets);

  auto* porbit = app.add_subcommand(
      "power-orbit",
      "Decide power orbit conjugacy: is some phi^k(u^p) conjugate to v^q?");
  porbit->add_option("--phi", phi_path, "Automorphism JSON file")->required();
  porbit->add_option("words", words, "Two words u and v")->expected(2);
  add_budget_flags(porbit, &budgets);

  auto* fix = app.add_subcommand(
      "fix", "Compute a basis of the fixed subgroup of an automorphism");
  fix->add_option("--phi", phi_path, "Automorphism JSON file")->required();
  fix->add_option("--emit-graph", emit_graph,
                  "Write the basis core graph to this file in DOT format");
  add_budget_flags(fix, &budgets);

  auto* per = app.add_subcommand(
      "per",
      "Compute a basis of (part of) the periodic subgroup of an automorphism");
  per->add_option("--phi", phi_path, "Automorphism JSON file")->required();
  per->add_option("--emit-graph", emit_graph,
                  "Write the basis core graph to this file in DOT format");
  add_budget_flags(per, &budgets);

  CLI11_PARSE(app, argc, argv);

  try {
    fbc::set_word_length_cap(budgets.word_budget);

    if (*normalize || *mul) {
      fbc::FbcPresentation pres =
          fbc::presentation_from_json(read_json_file(group_path));
      fbc::GroupElement x =
          fbc::normalize(pres, fbc::parse_group_word(words[0], pres.rank));
      if (*mul) {
        fbc::GroupElement y =
            fbc::normalize(pres, fbc::parse_group_word(words[1], pres.rank));
        x = fbc::multiply(pres, x, y);
      }
      emit(fbc::group_element_json(x));
      return kExitYes;
    }

    if (*conj || *pconj) {
      fbc::FbcPresentation pres =
          fbc::presentation_from_json(read_json_file(group_path));
      fbc::GroupElement x =
          fbc::normalize(pres, fbc::parse_group_word(words[0], pres.rank));
      fbc::GroupElement y =
          fbc::normalize(pres, fbc::parse_group_word(words[1], pres.rank));
      fbc::DecideOptions opt = budgets.decide();
      if (*conj) {
        fbc::GroupConjVerdict v = fbc::conjugacy_decide(pres, x, y, opt);
        assert_verified(v);
        emit(fbc::verdict_json(v));
        return exit_code_for(v);
      }
      fbc::PowerConjVerdict v = fbc::power_conjugacy_decide(pres, x, y, opt);
      assert_verified(v);
      emit(fbc::verdict_json(v));
      return exit_code_for(v);
    }

    if (*tconj || *oconj || *porbit) {
      fbc::FreeAutomorphism phi =
          fbc::automorphism_from_json(read_json_file(phi_path));
      fbc::Word u = fbc::parse_word(words[0], phi.rank());
      fbc::Word v = fbc::parse_word(words[1], phi.rank());
      if (*tconj) {
        fbc::TwistedVerdict t =
            fbc::twisted_decide(phi, u, v, budgets.twisted());
        assert_verified(t);
        if (!emit_graph.empty()) {
          // Best effort: rebuild the stabilized automorphism whose fixed
          // subgroup drives the decision and export its core graph.
          try {
            fbc::FreeAutomorphism psi = fbc::compose(
                fbc::extend_with_z(phi, u), fbc::inner(v, phi.rank(), true));
            fbc::SubgroupBasis basis = fbc::fix_solve(psi, budgets.fix());
            write_graph(emit_graph, fbc::CoreGraph::build(basis.generators));
          } catch (const fbc::BudgetExceeded& e) {
            std::cerr << "warning: graph export skipped: " << e.what() << "\n";
          }
        }
        emit(fbc::verdict_json(t));
        return exit_code_for(t);
      }
      if (*oconj) {
        fbc::OrbitVerdict o = fbc::orbit_decide(phi, u, v, budgets.orbit());
        assert_verified(o);
        emit(fbc::verdict_json(o));
        return exit_code_for(o);
      }
      fbc::PowerOrbitVerdict o =
          fbc::power_orbit_decide(phi, u, v, budgets.orbit());
      assert_verified(o);
      emit(fbc::verdict_json(o));
      return exit_code_for(o);
    }

    if (*fix) {
      fbc::FreeAutomorphism phi =
          fbc::automorphism_from_json(read_json_file(phi_path));
      fbc::SubgroupBasis basis = fbc::fix_solve(phi, budgets.fix());
      if (!emit_graph.empty())
        write_graph(emit_graph, fbc::CoreGraph::build(basis.generators));
      emit(fbc::basis_json(basis));
      return kExitYes;
    }

    if (*per) {
      fbc::FreeAutomorphism phi =
          fbc::automorphism_from_json(read_json_file(phi_path));
      fbc::TwistedOptions t = budgets.twisted();
      fbc::PeriodicBasis basis =
          fbc::periodic_subgroup(phi, t.scan, budgets.fix());
      if (!emit_graph.empty())
        write_graph(emit_graph, fbc::CoreGraph::build(basis.basis.generators));
      emit(fbc::basis_json(basis));
      return kExitYes;
    }

    std::cerr << "error: no subcommand\n";
    return kExitBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const fbc::Json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const fbc::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
