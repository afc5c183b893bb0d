// treepoly: exact polynomial invariants of rooted trees, exhaustive
// collision search, and seeded Monte Carlo simulation of the random
// destruction models behind them.
//
// Exit codes: 0 success, 1 usage error, 2 input parse error,
// 3 verification or assertion failure.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "treepoly/analysis.hpp"
#include "treepoly/enumeration.hpp"
#include "treepoly/errors.hpp"
#include "treepoly/invariants.hpp"
#include "treepoly/multipoly.hpp"
#include "treepoly/percolation.hpp"
#include "treepoly/rooted_tree.hpp"
#include "treepoly/unirat_poly.hpp"

namespace {

using json = nlohmann::json;
using namespace treepoly;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitVerify = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct TreeInput {
  std::string text;       // inline encoding (or level sequence)
  std::string file;       // file path, newline-separated trees
  bool level_sequence = false;

  RootedForest load_forest() const {
    if (!file.empty()) {
      const std::string content = read_file(file);
      if (level_sequence) {
        std::vector<RootedTree> trees;
        std::istringstream lines(content);
        std::string line;
        while (std::getline(lines, line)) {
          if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
          trees.push_back(parse_level_sequence(line));
        }
        return RootedForest(std::move(trees));
      }
      return parse_forest(content);
    }
    if (text.empty()) throw DomainError("no tree given (positional or --file)");
    if (level_sequence) return RootedForest({parse_level_sequence(text)});
    return RootedForest({parse_tree(text)});
  }

  RootedTree load_tree() const {
    RootedForest f = load_forest();
    if (f.component_count() != 1) {
      throw DomainError("expected a single tree, got a forest with " +
                        std::to_string(f.component_count()) + " components");
    }
    return f.trees().front();
  }
};

void add_tree_input(CLI::App* cmd, TreeInput& input) {
  cmd->add_option("tree", input.text, "tree encoding, e.g. \"(()())\"");
  cmd->add_option("--file", input.file,
                  "read the tree (or a newline-separated forest) from a file");
  cmd->add_flag("--level-sequence", input.level_sequence,
                "interpret input as pre-order depths \"0 1 2 ...\"");
}

// ---------------------------------------------------------------- compute

int cmd_compute(const std::string& invariant, const TreeInput& input) {
  const auto kind = invariant_from_name(invariant);
  if (!kind) throw DomainError("unknown invariant: " + invariant);

  Invariants inv;
  const RootedForest forest = input.load_forest();
  std::string out;
  switch (*kind) {
    case InvariantKind::P: out = inv.P(forest).str(); break;
    case InvariantKind::S: out = inv.S(forest).str(); break;
    case InvariantKind::A: out = inv.A(forest).str(); break;
    case InvariantKind::p:
    case InvariantKind::M:
    case InvariantKind::pgf: {
      if (forest.component_count() != 1) {
        throw DomainError(std::string(invariant_name(*kind)) +
                          " is defined for trees only");
      }
      const RootedTree& t = forest.trees().front();
      if (*kind == InvariantKind::p) {
        out = inv.p(t).str();
      } else if (*kind == InvariantKind::M) {
        out = inv.M(t).str();
      } else {
        out = inv.pgf(t).str();
      }
      break;
    }
  }
  std::cout << out << "\n";
  return kExitOk;
}

// -------------------------------------------------------------- enumerate

int cmd_enumerate(int n, const std::string& format) {
  TreeStream stream(n);
  while (auto t = stream.next()) {
    if (format == "records") {
      std::cout << json{{"tree", t->encoding()}}.dump() << "\n";
    } else {
      std::cout << t->encoding() << "\n";
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------- collide

void print_collision_report(const CollisionReport& report,
                            const std::string& format) {
  if (format == "records") {
    for (const CollisionClass& cls : report.classes) {
      json record{{"invariant", std::string(invariant_name(report.invariant))},
                  {"n", report.n},
                  {"polynomial", cls.invariant_value},
                  {"trees", cls.members}};
      std::cout << record.dump() << "\n";
    }
    return;
  }
  std::cout << "invariant: " << invariant_name(report.invariant) << "\n"
            << "n: " << report.n
            << (report.forests ? " (forests)" : " (trees)") << "\n"
            << "population: " << report.population << "\n"
            << "collision classes: " << report.classes.size() << "\n";
  std::size_t index = 1;
  for (const CollisionClass& cls : report.classes) {
    std::cout << "class " << index++ << ": " << cls.invariant_value << "\n";
    for (const std::string& member : cls.members) {
      std::cout << "  " << member << "\n";
    }
  }
}

int cmd_collide(const std::string& invariant, int n, int n_max,
                const SearchOptions& opts, const std::string& format) {
  const auto kind = invariant_from_name(invariant);
  if (!kind) throw DomainError("unknown invariant: " + invariant);
  if (n_max > 0) {
    const auto rows = completeness_report(*kind, n_max, opts);
    for (const CompletenessRow& row : rows) {
      if (format == "records") {
        json record{{"invariant", invariant},
                    {"n", row.n},
                    {"population", row.population},
                    {"classes", row.collision_classes},
                    {"colliding", row.colliding_members}};
        std::cout << record.dump() << "\n";
      } else {
        std::cout << "n=" << row.n << " population=" << row.population
                  << " classes=" << row.collision_classes
                  << " colliding=" << row.colliding_members << "\n";
      }
    }
    return kExitOk;
  }
  print_collision_report(collision_search(*kind, n, opts), format);
  return kExitOk;
}

// ------------------------------------------------------------ reconstruct

int cmd_reconstruct(const std::string& invariant, const std::string& poly,
                    const std::string& format) {
  const auto kind = invariant_from_name(invariant);
  if (!kind) throw DomainError("unknown invariant: " + invariant);
  const MultiPoly target = MultiPoly::parse(poly);
  const auto matches = reconstruct_from_polynomial(*kind, target);
  for (const RootedTree& t : matches) {
    if (format == "records") {
      json record{{"invariant", invariant},
                  {"n", t.vertex_count()},
                  {"tree", t.encoding()}};
      std::cout << record.dump() << "\n";
    } else {
      std::cout << t.encoding() << "\n";
    }
  }
  return kExitOk;
}

// ----------------------------------------------------------------- verify

struct VerifyState {
  bool ok = true;

  void report(const std::string& name, bool pass,
              const std::string& witness = "") {
    std::cout << (pass ? "[ok]   " : "[FAIL] ") << name;
    if (!pass && !witness.empty()) std::cout << "  witness: " << witness;
    std::cout << "\n";
    ok = ok && pass;
  }
};

int cmd_verify(int n_max, bool inject_fault) {
  VerifyState state;
  Invariants inv;

  // enumeration counts against the arithmetic recurrence
  {
    bool pass = true;
    std::string witness;
    for (int n = 1; n <= n_max && pass; ++n) {
      TreeStream stream(n);
      BigInt count = 0;
      while (stream.next_level_sequence() != nullptr) ++count;
      if (count != count_rooted_trees(n)) {
        pass = false;
        witness = "n=" + std::to_string(n);
      }
    }
    state.report("enumeration count = recurrence count", pass, witness);
  }

  // canonical form round-trip and bijections
  {
    bool pass = true;
    std::string witness;
    for (int n = 1; n <= n_max && pass; ++n) {
      TreeStream stream(n);
      while (auto t = stream.next()) {
        if (parse_tree(t->encoding()) != *t || wedge(remove_root(*t)) != *t) {
          pass = false;
          witness = t->encoding();
          break;
        }
      }
    }
    state.report("round-trip and root bijection", pass, witness);
  }

  // oracle equivalences (definitional recomputation)
  {
    bool pass = true;
    std::string witness;
    bool first = true;
    const int brute_small = std::min(n_max, 8);
    for (int n = 1; n <= brute_small && pass; ++n) {
      TreeStream stream(n);
      while (auto t = stream.next()) {
        MultiPoly recursive = inv.P(*t);
        if (inject_fault && first) {
          recursive += MultiPoly::variable(Var::x);  // deliberate corruption
        }
        first = false;
        if (recursive != brute_P(*t) || inv.S(*t) != brute_S(*t) ||
            inv.A(*t) != brute_A(*t)) {
          pass = false;
          witness = t->encoding();
          break;
        }
      }
    }
    state.report("P, S, A match their definitions (n <= " +
                     std::to_string(brute_small) + ")",
                 pass, witness);
  }
  {
    bool pass = true;
    std::string witness;
    const int brute_m = std::min(n_max, 10);
    for (int n = 1; n <= brute_m && pass; ++n) {
      TreeStream stream(n);
      while (auto t = stream.next()) {
        if (inv.M(*t) != brute_M(*t)) {
          pass = false;
          witness = t->encoding();
          break;
        }
      }
    }
    state.report(
        "M matches its definition (n <= " + std::to_string(brute_m) + ")",
        pass, witness);
  }

  // both routes to p agree
  {
    bool pass = true;
    std::string witness;
    for (int n = 1; n <= n_max && pass; ++n) {
      TreeStream stream(n);
      while (auto t = stream.next()) {
        if (p_from_P(inv.P(*t)) != inv.p(*t)) {
          pass = false;
          witness = t->encoding();
          break;
        }
      }
    }
    state.report("p recursion = 1 - P(x,-1)", pass, witness);
  }

  // identity suite
  {
    bool pass = true;
    std::string witness;
    for (int n = 1; n <= n_max && pass; ++n) {
      TreeStream stream(n);
      while (auto t = stream.next()) {
        const IdentityReport report = check_identities(*t, inv);
        if (!report.all_pass()) {
          pass = false;
          for (const IdentityCheck& c : report.checks) {
            if (!c.pass) {
              witness = report.tree + " [" + c.name + "] lhs=" + c.lhs +
                        " rhs=" + c.rhs;
              break;
            }
          }
          break;
        }
      }
    }
    state.report("identity suite", pass, witness);
  }

  // stem formula over forests
  {
    bool pass = true;
    std::string witness;
    for (int n = 0; n <= n_max - 1 && pass; ++n) {
      ForestStream stream(n);
      while (auto f = stream.next()) {
        if (stem_from_P(inv.P(*f)) != tree_stats(*f).stem_length) {
          pass = false;
          witness = f->encoding();
          break;
        }
      }
    }
    state.report("stem from P = structural stem", pass, witness);
  }

  // pgf normalization
  {
    bool pass = true;
    std::string witness;
    const int pgf_max = std::min(n_max, 11);
    for (int n = 1; n <= pgf_max && pass; ++n) {
      TreeStream stream(n);
      while (auto t = stream.next()) {
        if (inv.pgf(*t).evaluate(1) != BigRat(1)) {
          pass = false;
          witness = t->encoding();
          break;
        }
      }
    }
    state.report(
        "pgf(1) = 1 (n <= " + std::to_string(pgf_max) + ")", pass, witness);
  }

  // Eisenstein shape: trees yes, multi-component forests no
  {
    bool pass = true;
    std::string witness;
    for (int n = 1; n <= n_max && pass; ++n) {
      TreeStream stream(n);
      while (auto t = stream.next()) {
        if (!eisenstein_check(*t)) {
          pass = false;
          witness = t->encoding();
          break;
        }
      }
    }
    for (int n = 2; n <= n_max - 1 && pass; ++n) {
      ForestStream stream(n);
      while (auto f = stream.next()) {
        if (f->component_count() >= 2 && eisenstein_check(*f)) {
          pass = false;
          witness = f->encoding();
          break;
        }
      }
    }
    state.report("Eisenstein shape of S", pass, witness);
  }

  std::cout << (state.ok ? "verify: all checks passed"
                         : "verify: FAILURES detected")
            << " (n_max=" << n_max << ")\n";
  return state.ok ? kExitOk : kExitVerify;
}

// --------------------------------------------------------------- simulate

int cmd_simulate(const std::string& mode, const TreeInput& input,
                 const std::string& q_text, std::uint64_t samples,
                 std::uint64_t seed, int jobs, const std::string& format) {
  const RootedTree tree = input.load_tree();
  Invariants inv;

  if (mode == "percolation") {
    const QFixed q = parse_q(q_text);
    const Estimate est = estimate_p(tree, q, samples, seed, jobs);
    const BigRat exact_rat =
        evaluate(inv.p(tree), q_to_rational(q), BigRat(0), BigRat(0));
    const double exact = static_cast<double>(exact_rat);
    const double diff = std::abs(est.value - exact);
    const double bound = 4.0 * est.std_error;
    const bool pass = diff <= bound;
    if (format == "records") {
      json record{{"mode", "percolation"},
                  {"tree", tree.encoding()},
                  {"n", tree.vertex_count()},
                  {"q", q_to_double(q)},
                  {"q_fixed", q},
                  {"samples", samples},
                  {"seed", seed},
                  {"estimate", est.value},
                  {"stderr", est.std_error},
                  {"exact", exact},
                  {"pass", pass}};
      std::cout << record.dump() << "\n";
    } else {
      std::cout << "mode: percolation\n"
                << "tree: " << tree.encoding() << "\n"
                << "n: " << tree.vertex_count() << "\n"
                << "q: " << q_to_double(q) << " = " << q << "/" << kQOne
                << "\n"
                << "samples: " << samples << "\n"
                << "seed: " << seed << "\n"
                << "estimate: " << est.value << "\n"
                << "stderr: " << est.std_error << "\n"
                << "exact p(q): " << numerator(exact_rat) << "/"
                << denominator(exact_rat) << " = " << exact << "\n"
                << "|diff|: " << diff << "\n"
                << "4*stderr: " << bound << "\n"
                << "result: " << (pass ? "PASS" : "FAIL") << "\n";
    }
    return pass ? kExitOk : kExitVerify;
  }

  if (mode != "cutting") {
    throw DomainError("unknown mode: " + mode +
                      " (expected percolation or cutting)");
  }

  const UniRatPoly pgf = inv.pgf(tree);
  const SeparationHistogram hist =
      estimate_separation_histogram(tree, samples, seed, jobs);
  bool pass = true;
  json sizes = json::array();
  std::ostringstream lines;
  for (int k = 0; k <= tree.vertex_count(); ++k) {
    const BigRat exact_rat = pgf.coeff(k);
    const double exact = static_cast<double>(exact_rat);
    const double freq = hist.frequency(k);
    if (exact_rat == 0 && hist.counts[k] == 0) continue;
    const double bound = 4.0 * hist.std_error(k);
    const bool size_pass = std::abs(freq - exact) <= bound;
    pass = pass && size_pass;
    if (format == "records") {
      sizes.push_back(json{{"size", k},
                           {"count", hist.counts[k]},
                           {"frequency", freq},
                           {"exact", exact},
                           {"pass", size_pass}});
    } else {
      lines << "size " << k << ": freq " << freq << " exact "
            << numerator(exact_rat) << "/" << denominator(exact_rat) << " = "
            << exact << " |diff| " << std::abs(freq - exact) << " 4*stderr "
            << bound << " " << (size_pass ? "PASS" : "FAIL") << "\n";
    }
  }
  if (format == "records") {
    json record{{"mode", "cutting"},
                {"tree", tree.encoding()},
                {"n", tree.vertex_count()},
                {"samples", samples},
                {"seed", seed},
                {"pgf", pgf.str()},
                {"sizes", sizes},
                {"pass", pass}};
    std::cout << record.dump() << "\n";
  } else {
    std::cout << "mode: cutting\n"
              << "tree: " << tree.encoding() << "\n"
              << "n: " << tree.vertex_count() << "\n"
              << "samples: " << samples << "\n"
              << "seed: " << seed << "\n"
              << "pgf: " << pgf.str() << "\n"
              << lines.str() << "result: " << (pass ? "PASS" : "FAIL") << "\n";
  }
  return pass ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "treepoly: exact polynomial invariants of rooted trees, with "
      "exhaustive verification and seeded Monte Carlo simulation"};
  app.require_subcommand(1);

  // compute
  std::string compute_invariant;
  TreeInput compute_input;
  CLI::App* compute =
      app.add_subcommand("compute", "print one invariant of one tree/forest");
  compute->add_option("invariant", compute_invariant, "P, p, S, A, M, or pgf")
      ->required();
  add_tree_input(compute, compute_input);

  // enumerate
  int enumerate_n = 0;
  std::string enumerate_format = "text";
  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "print every rooted tree on n vertices, one per line");
  enumerate->add_option("--n", enumerate_n, "vertex count")->required();
  enumerate->add_option("--format", enumerate_format, "text | records")
      ->check(CLI::IsMember({"text", "records"}));

  // collide
  std::string collide_invariant;
  int collide_n = 0;
  int collide_n_max = 0;
  SearchOptions collide_opts;
  std::string collide_format = "text";
  CLI::App* collide = app.add_subcommand(
      "collide", "group same-size trees (or forests) by exact invariant");
  collide->add_option("--invariant", collide_invariant, "P, p, S, A, M, or pgf")
      ->required();
  collide->add_option("--n", collide_n, "vertex count to sweep");
  collide->add_option("--n-max", collide_n_max,
                      "sweep all sizes up to n-max and print a summary row "
                      "per size");
  collide->add_flag("--forests", collide_opts.forests,
                    "sweep forests instead of trees (P and S only)");
  collide->add_option("--jobs", collide_opts.jobs, "worker threads");
  collide->add_flag("--deep", collide_opts.allow_deep,
                    "lift the desk-scale size bound");
  collide->add_option("--format", collide_format, "text | records")
      ->check(CLI::IsMember({"text", "records"}));

  // reconstruct
  std::string reconstruct_invariant, reconstruct_poly;
  std::string reconstruct_format = "text";
  CLI::App* reconstruct = app.add_subcommand(
      "reconstruct", "find all trees whose invariant equals a polynomial");
  reconstruct
      ->add_option("--invariant", reconstruct_invariant, "P, p, S, A, or M")
      ->required();
  reconstruct->add_option("--poly", reconstruct_poly, "target polynomial")
      ->required();
  reconstruct->add_option("--format", reconstruct_format, "text | records")
      ->check(CLI::IsMember({"text", "records"}));

  // verify
  int verify_n_max = 8;
  bool verify_inject_fault = false;
  CLI::App* verify = app.add_subcommand(
      "verify", "run the identity suite and definitional cross-checks");
  verify->add_option("--n-max", verify_n_max, "largest vertex count swept");
  verify
      ->add_flag("--inject-fault", verify_inject_fault,
                 "corrupt one comparison to prove failures are caught")
      ->group("");  // hidden; testing hook

  // simulate
  std::string simulate_mode;
  TreeInput simulate_input;
  std::string simulate_q = "0.5";
  std::uint64_t simulate_samples = 100000;
  std::uint64_t simulate_seed = 0;
  int simulate_jobs = 1;
  std::string simulate_format = "text";
  CLI::App* simulate = app.add_subcommand(
      "simulate",
      "Monte Carlo percolation / cutting runs checked against the exact "
      "polynomials");
  simulate->add_option("--mode", simulate_mode, "percolation | cutting")
      ->required()
      ->check(CLI::IsMember({"percolation", "cutting"}));
  add_tree_input(simulate, simulate_input);
  simulate->add_option("--q", simulate_q,
                       "retention probability (decimal; rounded to a "
                       "multiple of 1/65536)");
  simulate->add_option("--samples", simulate_samples, "sample count");
  simulate->add_option("--seed", simulate_seed, "RNG seed");
  simulate->add_option("--jobs", simulate_jobs, "worker threads");
  simulate->add_option("--format", simulate_format, "text | records")
      ->check(CLI::IsMember({"text", "records"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*compute) return cmd_compute(compute_invariant, compute_input);
    if (*enumerate) return cmd_enumerate(enumerate_n, enumerate_format);
    if (*collide) {
      if (collide_n <= 0 && collide_n_max <= 0) {
        throw DomainError("collide: pass --n or --n-max");
      }
      return cmd_collide(collide_invariant, collide_n, collide_n_max,
                         collide_opts, collide_format);
    }
    if (*reconstruct) {
      return cmd_reconstruct(reconstruct_invariant, reconstruct_poly,
                             reconstruct_format);
    }
    if (*verify) {
      if (verify_n_max < 1) throw DomainError("verify: --n-max must be >= 1");
      return cmd_verify(verify_n_max, verify_inject_fault);
    }
    if (*simulate) {
      return cmd_simulate(simulate_mode, simulate_input, simulate_q,
                          simulate_samples, simulate_seed, simulate_jobs,
                          simulate_format);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
