// freealg: exact operator calculus on free associative and free Lie algebras.
//
// Subcommands: apply (one operator to one expression), cohomology (betti
// tables with optional generators), verify (identity suites over word bases),
// bch (Baker-Campbell-Hausdorff series), oracle (randomized matrix checks).
// Exit codes: 0 = success/pass, 1 = identity violation, betti mismatch, or
// domain error, 2 = usage or syntax error.

#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "freealg/cohomology.hpp"
#include "freealg/detail/parallel.hpp"
#include "freealg/errors.hpp"
#include "freealg/lie.hpp"
#include "freealg/operators.hpp"
#include "freealg/oracle.hpp"
#include "freealg/series.hpp"
#include "freealg/text.hpp"

namespace {

using namespace freealg;

// ---------------------------------------------------------------- apply ----

struct ApplyArgs {
  std::string op;
  int n = 1;
  std::string expr;
  bool json = false;
};

NCPoly run_operator(const std::string& op, const NCPoly& f) {
  if (op == "delta") return delta(f);
  if (op == "deltaA") return delta_A(f);
  if (op == "s") return s_retract(f);
  if (op == "tau") return tau_defect(f);
  if (op == "R") return r_embed(f);
  if (op == "Rinv") return r_invert(f);
  if (op == "P") return p_project(f);
  if (op == "G") return g_homotopy(f);
  if (op == "GA") return g_a(f);
  if (op == "Ant") return ant(f);
  if (op == "dynkin") return dynkin_map(f);
  FREEALG_REQUIRE(false, "unknown operator: " + op);
  return f;
}

int cmd_apply(const ApplyArgs& args) {
  const NCPoly input = parse_expression(args.expr, args.n);
  const NCPoly result = run_operator(args.op, input);
  if (args.json) {
    nlohmann::json out;
    out["op"] = args.op;
    out["n"] = args.n;
    out["expr"] = format_expression(input);
    out["result"] = format_expression(result);
    out["result_arity"] = result.arity();
    std::cout << out.dump() << "\n";
  } else {
    std::cout << format_expression(result) << "\n";
  }
  return 0;
}

// ----------------------------------------------------------- cohomology ----

struct CohomologyArgs {
  std::string algebra = "assoc";
  int n_max = 1;
  int d_max = 1;
  std::string format = "table";
  bool generators = false;
  int threads = 1;
};

long long expected_betti(Algebra alg, int n, int d) {
  if (alg == Algebra::Assoc) return d == n ? 1 : 0;
  return (n == 1 && d == 1) || (n == 2 && d == 2) ? 1 : 0;
}

int cmd_cohomology(const CohomologyArgs& args) {
  const Algebra alg = args.algebra == "assoc" ? Algebra::Assoc : Algebra::Lie;
  const auto table =
      betti_table(alg, args.n_max, args.d_max, args.generators, args.threads);

  if (args.format == "json") {
    nlohmann::json out;
    out["algebra"] = args.algebra;
    out["entries"] = nlohmann::json::array();
    for (const auto& e : table) {
      nlohmann::json entry;
      entry["n"] = e.n;
      entry["d"] = e.d;
      entry["dim"] = e.dim;
      entry["rank_out"] = e.rank_out;
      entry["rank_in"] = e.rank_in;
      entry["betti"] = e.betti;
      entry["generators"] = nlohmann::json::array();
      for (const auto& g : e.generators) {
        entry["generators"].push_back(format_expression(g));
      }
      out["entries"].push_back(entry);
    }
    std::cout << out.dump(2) << "\n";
  } else if (args.format == "csv") {
    std::cout << "n,d,dim,rank_out,rank_in,betti,generators\n";
    for (const auto& e : table) {
      std::string gens;
      for (const auto& g : e.generators) {
        if (!gens.empty()) gens += "; ";
        gens += format_expression(g);
      }
      std::cout << e.n << "," << e.d << "," << e.dim << "," << e.rank_out
                << "," << e.rank_in << "," << e.betti << "," << gens << "\n";
    }
  } else {
    std::cout << "algebra=" << args.algebra << "\n";
    std::printf("%4s %4s %6s %9s %8s %6s\n", "n", "d", "dim", "rank_out",
                "rank_in", "betti");
    for (const auto& e : table) {
      std::printf("%4d %4d %6lld %9d %8d %6lld", e.n, e.d, e.dim, e.rank_out,
                  e.rank_in, e.betti);
      if (!e.generators.empty()) {
        std::string gens;
        for (const auto& g : e.generators) {
          if (!gens.empty()) gens += "; ";
          gens += format_expression(g);
        }
        std::printf("  generators: %s", gens.c_str());
      }
      std::printf("\n");
    }
  }

  bool matches = true;
  for (const auto& e : table) {
    matches = matches && e.betti == expected_betti(alg, e.n, e.d);
  }
  if (!matches) {
    std::cerr << "betti table deviates from the expected pattern\n";
    return 1;
  }
  return 0;
}

// --------------------------------------------------------------- verify ----

struct VerifyArgs {
  std::string suite;
  int n_max = 2;
  int d_max = 2;
  int threads = 1;
};

struct CheckResult {
  std::string name;
  int n = 0;
  int d = 0;
  long long checked = 0;
  long long failures = 0;
  std::string first_failure;

  void record(bool ok, const std::string& label) {
    ++checked;
    if (ok) return;
    ++failures;
    if (first_failure.empty()) first_failure = label;
  }
};

// one task per (n, d) cell; results are printed in cell order afterwards
std::vector<CheckResult> run_cells(
    int n_max, int d_max, int threads,
    const std::function<std::vector<CheckResult>(int, int)>& cell) {
  const int cells = n_max * d_max;
  std::vector<std::vector<CheckResult>> partial(
      static_cast<std::size_t>(cells));
  detail::parallel_for(cells, threads, [&](int i) {
    const int n = i / d_max + 1;
    const int d = i % d_max + 1;
    partial[static_cast<std::size_t>(i)] = cell(n, d);
  });
  std::vector<CheckResult> flat;
  for (auto& group : partial) {
    for (auto& r : group) flat.push_back(std::move(r));
  }
  return flat;
}

std::vector<CheckResult> simplicial_cell(int n, int d) {
  CheckResult retract{"s_delta_plus_delta_s_is_id", n, d};
  CheckResult dd{"delta_delta_is_zero", n, d};
  CheckResult dada{"deltaA_deltaA_is_zero", n, d};
  for (const Word& w : word_basis(n, d)) {
    const NCPoly f = NCPoly::monomial(n, w);
    retract.record(s_retract(delta(f)) + delta(s_retract(f)) == f,
                   word_name(w));
    dd.record(delta(delta(f)).is_zero(), word_name(w));
    dada.record(delta_A(delta_A(f)).is_zero(), word_name(w));
  }
  return {retract, dd, dada};
}

std::vector<CheckResult> projector_cell(int n, int d) {
  CheckResult commute{"delta_p_equals_p_delta", n, d};
  CheckResult idem{"p_is_idempotent", n, d};
  for (const Word& w : word_basis(n, d)) {
    const NCPoly f = NCPoly::monomial(n, w);
    const NCPoly pf = p_project(f);
    commute.record(delta(pf) == p_project(delta(f)), word_name(w));
    idem.record(p_project(pf) == pf, word_name(w));
  }
  return {commute, idem};
}

std::vector<CheckResult> homotopy_cell(int n, int d) {
  CheckResult hom{"g_delta_plus_delta_g_is_id_minus_p", n, d};
  for (const Word& w : word_basis(n, d)) {
    const NCPoly f = NCPoly::monomial(n, w);
    hom.record(g_homotopy(delta(f)) + delta(g_homotopy(f)) == f - p_project(f),
               word_name(w));
  }
  return {hom};
}

std::vector<CheckResult> invariant_cell(int m, int d) {
  CheckResult pr{"p_r_equals_r_ant", m, d};
  CheckResult hom{"ga_deltaA_plus_deltaA_ga_is_id_minus_ant", m, d};
  CheckResult shift{"tau_defect_of_r_image_is_zero", m, d};
  CheckResult section{"r_invert_undoes_r", m, d};
  CheckResult chain{"delta_r_equals_r_deltaA", m, d};
  for (const Word& w : word_basis(m, d)) {
    const NCPoly g = NCPoly::monomial(m, w);
    const NCPoly rg = r_embed(g);
    pr.record(p_project(rg) == r_embed(ant(g)), word_name(w));
    hom.record(g_a(delta_A(g)) + delta_A(g_a(g)) == g - ant(g), word_name(w));
    shift.record(tau_defect(rg).is_zero(), word_name(w));
    section.record(r_invert(rg) == g, word_name(w));
    chain.record(delta(rg) == r_embed(delta_A(g)), word_name(w));
  }
  return {pr, hom, shift, section, chain};
}

std::vector<CheckResult> lie_cell(int n, int d) {
  CheckResult count{"lyndon_basis_matches_witt_dimension", n, d};
  CheckResult membership{"lyndon_basis_elements_pass_is_lie", n, d};
  CheckResult scaling{"dynkin_scales_basis_by_degree", n, d};
  CheckResult round{"lie_coordinates_round_trip", n, d};
  CheckResult closure{"deltaA_preserves_lie", n, d};
  CheckResult ga_closure{"ga_preserves_lie", n, d};
  CheckResult ant_kills{"ant_vanishes_on_lie_arity_3_up", n, d};
  const LyndonBasis basis = lyndon_basis(n, d);
  count.record(static_cast<long long>(basis.words.size()) ==
                   witt_dimension(n, d),
               "count");
  for (std::size_t i = 0; i < basis.elements.size(); ++i) {
    const NCPoly& b = basis.elements[i];
    const std::string label = word_name(basis.words[i]);
    membership.record(is_lie(b), label);
    scaling.record(dynkin_map(b) == b * Scalar(d), label);
    std::vector<Scalar> unit(basis.elements.size(), Scalar(0));
    unit[i] = Scalar(1);
    round.record(lie_coordinates(from_lie_coordinates(unit, basis), basis) ==
                     unit,
                 label);
    closure.record(is_lie(delta_A(b)), label);
    ga_closure.record(is_lie(g_a(b)), label);
    if (n >= 3) ant_kills.record(ant(b).is_zero(), label);
  }
  std::vector<CheckResult> out = {count,   membership, scaling, round,
                                  closure, ga_closure};
  if (n >= 3) out.push_back(ant_kills);
  return out;
}

std::vector<CheckResult> closedform_cell(int n, int d) {
  if (n != 3) return {};
  CheckResult closed{"closed_g3_equals_inductive_g3", n, d};
  for (const Word& w : word_basis(3, d)) {
    const NCPoly f = NCPoly::monomial(3, w);
    closed.record(g_closed_form(3, f) == g_homotopy(f), word_name(w));
  }
  return {closed};
}

int cmd_verify(const VerifyArgs& args) {
  std::function<std::vector<CheckResult>(int, int)> cell;
  if (args.suite == "simplicial") {
    cell = simplicial_cell;
  } else if (args.suite == "projector") {
    cell = projector_cell;
  } else if (args.suite == "homotopy") {
    cell = homotopy_cell;
  } else if (args.suite == "invariant") {
    cell = invariant_cell;
  } else if (args.suite == "lie") {
    cell = lie_cell;
  } else {
    cell = closedform_cell;
  }

  const auto results = run_cells(args.n_max, args.d_max, args.threads, cell);
  long long failures = 0;
  for (const auto& r : results) {
    if (r.failures == 0) {
      std::printf("ok   %-42s n=%d d=%d (%lld checks)\n", r.name.c_str(), r.n,
                  r.d, r.checked);
    } else {
      std::printf("FAIL %-42s n=%d d=%d (%lld of %lld checks, first: %s)\n",
                  r.name.c_str(), r.n, r.d, r.failures, r.checked,
                  r.first_failure.c_str());
    }
    failures += r.failures;
  }
  if (args.suite == "closedform") {
    for (int d = 1; d <= args.d_max; ++d) {
      const G4Diagnostic diag = g4_diagnostic(d);
      std::printf(
          "note closed_g4_vs_inductive_g4 d=%d: %d of %d basis words match "
          "(diagnostic only)\n",
          d, diag.matching, diag.total);
    }
  }
  std::printf("suite %s: %s\n", args.suite.c_str(),
              failures == 0 ? "pass" : "fail");
  return failures == 0 ? 0 : 1;
}

// ------------------------------------------------------------------ bch ----

struct BchArgs {
  int deg = 2;
  bool check_lie = false;
  bool coords = false;
};

// bracketed name of a Lyndon word under its standard factorization
std::string bracket_name(const Word& w) {
  if (w.size() == 1) return letter_name(w[0]);
  std::size_t split = 1;
  for (std::size_t i = 2; i < w.size(); ++i) {
    if (std::lexicographical_compare(w.begin() + static_cast<std::ptrdiff_t>(i),
                                     w.end(),
                                     w.begin() + static_cast<std::ptrdiff_t>(split),
                                     w.end())) {
      split = i;
    }
  }
  const Word u(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(split));
  const Word v(w.begin() + static_cast<std::ptrdiff_t>(split), w.end());
  return "[" + bracket_name(u) + "," + bracket_name(v) + "]";
}

int cmd_bch(const BchArgs& args) {
  const NCPoly series = bch(args.deg);
  std::cout << format_expression(series) << "\n";
  int exit_code = 0;
  if (args.check_lie) {
    const bool ok = is_lie(series);
    std::cout << "is_lie: " << (ok ? "pass" : "fail") << "\n";
    if (!ok) exit_code = 1;
  }
  if (args.coords) {
    for (int d = 1; d <= args.deg; ++d) {
      const LyndonBasis basis = lyndon_basis(2, d);
      const auto coords =
          lie_coordinates(series.homogeneous_component(d), basis);
      std::string line;
      for (std::size_t i = 0; i < coords.size(); ++i) {
        if (sgn(coords[i]) == 0) continue;
        if (!line.empty()) line += " + ";
        line += scalar_to_string(coords[i]) + "*" + bracket_name(basis.words[i]);
      }
      std::cout << "deg " << d << ": " << (line.empty() ? "0" : line) << "\n";
    }
  }
  return exit_code;
}

// --------------------------------------------------------------- oracle ----

struct OracleArgs {
  std::string identity;
  int n = 2;
  int deg = 2;
  int trials = 20;
  int dim = 3;
  std::uint64_t seed = 1;
  bool fault_inject = false;
  int threads = 1;
};

int cmd_oracle(const OracleArgs& args) {
  OracleOptions options;
  options.trials = args.trials;
  options.matrix_size = args.dim;
  options.seed = args.seed;
  options.fault_inject = args.fault_inject;
  options.threads = args.threads;
  const OracleTaskReport report =
      check_identity(args.identity, args.n, args.deg, options);
  std::cout << report_text({report});
  return report.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "freealg: exact operator calculus on free associative and free Lie "
      "algebras"};
  app.footer(std::string("Conventions:\n") + conventions_text());
  app.require_subcommand(1);

  ApplyArgs apply_args;
  auto* apply_cmd =
      app.add_subcommand("apply", "apply one operator to one expression");
  apply_cmd
      ->add_option("--op", apply_args.op, "operator to apply")
      ->required()
      ->check(CLI::IsMember({"delta", "deltaA", "s", "tau", "R", "Rinv", "P",
                             "G", "GA", "Ant", "dynkin"}));
  apply_cmd->add_option("--n", apply_args.n, "arity of the input expression")
      ->required()
      ->check(CLI::Range(1, 1000000));
  apply_cmd->add_option("--expr", apply_args.expr, "input expression")
      ->required();
  apply_cmd->add_flag("--json", apply_args.json, "emit a JSON object");

  CohomologyArgs cohomology_args;
  auto* cohomology_cmd = app.add_subcommand(
      "cohomology", "betti table of the simplicial differential");
  cohomology_cmd
      ->add_option("--algebra", cohomology_args.algebra,
                   "associative words or Lie elements")
      ->required()
      ->check(CLI::IsMember({"assoc", "lie"}));
  cohomology_cmd->add_option("--n-max", cohomology_args.n_max, "largest arity")
      ->required()
      ->check(CLI::Range(1, 1000000));
  cohomology_cmd
      ->add_option("--deg-max", cohomology_args.d_max, "largest degree")
      ->required()
      ->check(CLI::Range(1, 1000000));
  cohomology_cmd
      ->add_option("--format", cohomology_args.format, "output format")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  cohomology_cmd->add_flag("--generators", cohomology_args.generators,
                           "emit cohomology generators");
  cohomology_cmd
      ->add_option("--threads", cohomology_args.threads,
                   "parallel bidegree cells")
      ->check(CLI::Range(1, 4096));

  VerifyArgs verify_args;
  auto* verify_cmd =
      app.add_subcommand("verify", "run one identity suite over word bases");
  verify_cmd->add_option("--suite", verify_args.suite, "suite to run")
      ->required()
      ->check(CLI::IsMember({"simplicial", "projector", "homotopy",
                             "invariant", "lie", "closedform"}));
  verify_cmd->add_option("--n-max", verify_args.n_max, "largest arity")
      ->required()
      ->check(CLI::Range(1, 1000000));
  verify_cmd->add_option("--deg-max", verify_args.d_max, "largest degree")
      ->required()
      ->check(CLI::Range(1, 1000000));
  verify_cmd->add_option("--threads", verify_args.threads, "parallel cells")
      ->check(CLI::Range(1, 4096));

  BchArgs bch_args;
  auto* bch_cmd = app.add_subcommand(
      "bch", "Baker-Campbell-Hausdorff series log(exp(x1)exp(x2))");
  bch_cmd->add_option("--deg", bch_args.deg, "truncation degree")
      ->required()
      ->check(CLI::Range(1, 64));
  bch_cmd->add_flag("--check-lie", bch_args.check_lie,
                    "verify every component is a Lie element");
  bch_cmd->add_flag("--coords", bch_args.coords,
                    "print Lyndon-basis coordinates per degree");

  OracleArgs oracle_args;
  auto* oracle_cmd = app.add_subcommand(
      "oracle", "randomized matrix check of one operator identity");
  std::string identity_help = "identity to check (";
  for (const auto& name : oracle_identity_names()) {
    if (identity_help.back() != '(') identity_help += ", ";
    identity_help += name;
  }
  identity_help += ")";
  oracle_cmd->add_option("--identity", oracle_args.identity, identity_help)
      ->required();
  oracle_cmd->add_option("--n", oracle_args.n, "arity of the drawn words")
      ->required()
      ->check(CLI::Range(1, 1000000));
  oracle_cmd->add_option("--deg", oracle_args.deg, "degree of the drawn words")
      ->required()
      ->check(CLI::Range(1, 1000000));
  oracle_cmd->add_option("--trials", oracle_args.trials, "number of trials")
      ->check(CLI::Range(0, 1000000));
  oracle_cmd->add_option("--dim", oracle_args.dim, "matrix size")
      ->check(CLI::Range(1, 64));
  oracle_cmd->add_option("--seed", oracle_args.seed, "random seed");
  oracle_cmd->add_flag("--fault-inject", oracle_args.fault_inject,
                       "double the projector term to demonstrate sensitivity");
  oracle_cmd->add_option("--threads", oracle_args.threads, "parallel trials")
      ->check(CLI::Range(1, 4096));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*apply_cmd) return cmd_apply(apply_args);
    if (*cohomology_cmd) return cmd_cohomology(cohomology_args);
    if (*verify_cmd) return cmd_verify(verify_args);
    if (*bch_cmd) return cmd_bch(bch_args);
    if (*oracle_cmd) return cmd_oracle(oracle_args);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
