// Command-line front end: evaluate scenarios, sweep parameters, search best
// responses, run the regime case studies, and cross-validate the two payoff
// paths. Exit codes: 0 success, 1 a validation/claim check failed, 2 bad
// arguments or configuration.

#include <fstream>
#include <iostream>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qgame/qgame.hpp"

namespace {

struct OutputTarget {
  std::unique_ptr<std::ofstream> file;
  std::ostream* stream = &std::cout;

  static OutputTarget open(const std::string& path) {
    OutputTarget t;
    if (!path.empty()) {
      t.file = std::make_unique<std::ofstream>(path);
      if (!*t.file) throw qgame::ParseError("cannot open output file: " + path);
      t.stream = t.file.get();
    }
    return t;
  }
  std::ostream& out() { return *stream; }
};

using qgame::format_double;

void emit_sweep(std::ostream& out, const std::vector<qgame::SweepRow>& rows,
                const std::string& format) {
  if (format == "json") {
    out << "[\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& r = rows[i];
      out << "  {\"param\": " << format_double(r.value)
          << ", \"payoff_alice\": " << format_double(r.payoff_alice)
          << ", \"payoff_bob\": " << format_double(r.payoff_bob)
          << ", \"advantage\": " << format_double(r.advantage) << '}'
          << (i + 1 < rows.size() ? ",\n" : "\n");
    }
    out << "]\n";
    return;
  }
  out << "param,payoff_alice,payoff_bob,advantage\n";
  for (const auto& r : rows)
    out << format_double(r.value) << ',' << format_double(r.payoff_alice) << ','
        << format_double(r.payoff_bob) << ',' << format_double(r.advantage) << '\n';
}

void emit_case_study(std::ostream& out, const qgame::CaseStudyReport& rep,
                     const std::string& format) {
  if (format == "json") {
    out << "{\"case\": \"" << rep.case_id << "\", \"game\": \"" << qgame::json_escape(rep.game)
        << "\", \"claims\": [\n";
    for (std::size_t i = 0; i < rep.claims.size(); ++i) {
      const auto& c = rep.claims[i];
      out << "  {\"claim\": \"" << c.label << "\", \"relation\": \"" << c.relation
          << "\", \"threshold\": " << format_double(c.threshold)
          << ", \"observed\": " << format_double(c.observed)
          << ", \"pass\": " << (c.pass ? "true" : "false") << '}'
          << (i + 1 < rep.claims.size() ? ",\n" : "\n");
    }
    out << "], \"all_pass\": " << (rep.all_pass() ? "true" : "false") << "}\n";
    return;
  }
  out << "case,game,claim,relation,threshold,observed,pass\n";
  for (const auto& c : rep.claims)
    out << rep.case_id << ',' << rep.game << ',' << c.label << ',' << c.relation << ','
        << format_double(c.threshold) << ',' << format_double(c.observed) << ','
        << (c.pass ? 1 : 0) << '\n';
}

void emit_validation(std::ostream& out, const qgame::EquivalenceReport& eq,
                     const std::vector<qgame::InvariantCheck>& checks, const std::string& format) {
  if (format == "json") {
    out << "{\"draws\": " << eq.draws << ", \"seed\": " << eq.seed
        << ", \"max_abs_dev\": " << format_double(eq.max_abs_dev)
        << ", \"mean_abs_dev\": " << format_double(eq.mean_abs_dev)
        << ", \"bound\": " << format_double(qgame::kEquivalenceBound)
        << ", \"pass\": " << (eq.pass ? "true" : "false") << ",\n \"worst_case\": {\"game\": \""
        << qgame::json_escape(eq.worst_game) << "\", \"player\": \"" << eq.worst_player << '"';
    const char* names[] = {"gamma", "delta", "p1", "mu1", "p2", "mu2", "theta1", "alpha1",
                           "beta1", "theta2", "alpha2", "beta2"};
    const double values[] = {eq.worst_gamma,  eq.worst_delta,  eq.worst_p1,    eq.worst_mu1,
                             eq.worst_p2,     eq.worst_mu2,    eq.worst_theta1, eq.worst_alpha1,
                             eq.worst_beta1,  eq.worst_theta2, eq.worst_alpha2, eq.worst_beta2};
    for (int i = 0; i < 12; ++i) out << ", \"" << names[i] << "\": " << format_double(values[i]);
    out << "},\n \"invariants\": [\n";
    for (std::size_t i = 0; i < checks.size(); ++i) {
      const auto& c = checks[i];
      out << "  {\"name\": \"" << c.name << "\", \"max_dev\": " << format_double(c.max_dev)
          << ", \"tol\": " << format_double(c.tol) << ", \"pass\": " << (c.pass ? "true" : "false")
          << '}' << (i + 1 < checks.size() ? ",\n" : "\n");
    }
    out << "]}\n";
    return;
  }
  out << "check,metric,value\n";
  out << "oracle_equivalence,draws," << eq.draws << '\n';
  out << "oracle_equivalence,seed," << eq.seed << '\n';
  out << "oracle_equivalence,max_abs_dev," << format_double(eq.max_abs_dev) << '\n';
  out << "oracle_equivalence,mean_abs_dev," << format_double(eq.mean_abs_dev) << '\n';
  out << "oracle_equivalence,bound," << format_double(qgame::kEquivalenceBound) << '\n';
  out << "oracle_equivalence,pass," << (eq.pass ? 1 : 0) << '\n';
  out << "worst_case,game," << eq.worst_game << '\n';
  out << "worst_case,player," << eq.worst_player << '\n';
  const char* names[] = {"gamma", "delta", "p1", "mu1", "p2", "mu2", "theta1", "alpha1",
                         "beta1", "theta2", "alpha2", "beta2"};
  const double values[] = {eq.worst_gamma,  eq.worst_delta,  eq.worst_p1,     eq.worst_mu1,
                           eq.worst_p2,     eq.worst_mu2,    eq.worst_theta1, eq.worst_alpha1,
                           eq.worst_beta1,  eq.worst_theta2, eq.worst_alpha2, eq.worst_beta2};
  for (int i = 0; i < 12; ++i) out << "worst_case," << names[i] << ',' << format_double(values[i]) << '\n';
  for (const auto& c : checks) {
    out << "invariant_" << c.name << ",max_dev," << format_double(c.max_dev) << '\n';
    out << "invariant_" << c.name << ",tol," << format_double(c.tol) << '\n';
    out << "invariant_" << c.name << ",pass," << (c.pass ? 1 : 0) << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-player quantum games over correlated dephasing channels"};
  app.require_subcommand(1);

  std::string scenario_path, out_path, format = "csv";
  bool degrees = false;
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", out_path, "write output to a file instead of stdout");
  app.add_flag("--degrees", degrees, "interpret scenario angles as degrees");

  auto* payoff_cmd = app.add_subcommand("payoff", "evaluate one scenario");
  payoff_cmd->add_option("--scenario", scenario_path, "scenario file")->required();

  auto* sweep_cmd = app.add_subcommand("sweep", "sweep one parameter");
  std::string sweep_param;
  int sweep_points = 101;
  sweep_cmd->add_option("--scenario", scenario_path, "scenario file")->required();
  sweep_cmd->add_option("--param", sweep_param, "parameter to sweep")
      ->check(CLI::IsMember({"p", "mu", "gamma", "delta"}))
      ->required();
  sweep_cmd->add_option("--points", sweep_points, "number of grid points");

  auto* br_cmd = app.add_subcommand("best-response", "grid-search a best response");
  std::string responder = "bob";
  bool classical = false;
  qgame::GridSpec grid;
  br_cmd->add_option("--scenario", scenario_path, "scenario file")->required();
  br_cmd->add_option("--responder", responder, "which player responds")
      ->check(CLI::IsMember({"alice", "bob"}));
  br_cmd->add_flag("--classical", classical, "restrict the responder to alpha = beta = 0");
  br_cmd->add_option("--theta-steps", grid.theta_steps, "theta grid points");
  br_cmd->add_option("--alpha-steps", grid.alpha_steps, "alpha grid points");
  br_cmd->add_option("--beta-steps", grid.beta_steps, "beta grid points");
  br_cmd->add_option("--refine-rounds", grid.refine_rounds, "refinement rounds");
  br_cmd->add_option("--refine-shrink", grid.refine_shrink, "window shrink per round");

  auto* case_cmd = app.add_subcommand("case-study", "run one regime's claim report");
  std::string case_id, case_game = "prisoners-dilemma";
  int curve_points = 101;
  std::uint64_t case_seed = 12345;
  case_cmd->add_option("--case", case_id, "regime: i, ii, iii or iv")
      ->check(CLI::IsMember({"i", "ii", "iii", "iv"}))
      ->required();
  case_cmd->add_option("--game", case_game, "game name");
  case_cmd->add_option("--points", curve_points, "points for the p-grids");
  case_cmd->add_option("--seed", case_seed, "seed for random probes");

  auto* validate_cmd = app.add_subcommand("validate", "closed form vs simulation + invariants");
  int draws = 1000;
  std::uint64_t seed = 42;
  validate_cmd->add_option("--draws", draws, "number of random draws");
  validate_cmd->add_option("--seed", seed, "rng seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }

  try {
    OutputTarget target = OutputTarget::open(out_path);
    std::ostream& out = target.out();

    if (payoff_cmd->parsed()) {
      const qgame::Scenario sc = qgame::load_scenario(scenario_path, degrees);
      const auto rec =
          qgame::ResultRecord::from(sc, qgame::closed_form_payoffs(sc.config, sc.s1, sc.s2));
      if (format == "json") out << rec.to_json() << '\n';
      else out << qgame::ResultRecord::csv_header() << '\n' << rec.to_csv() << '\n';
      return 0;
    }

    if (sweep_cmd->parsed()) {
      const qgame::Scenario sc = qgame::load_scenario(scenario_path, degrees);
      const auto rows = qgame::sweep(sc.config, sc.s1, sc.s2,
                                     qgame::sweep_param_from_name(sweep_param), sweep_points);
      emit_sweep(out, rows, format);
      return 0;
    }

    if (br_cmd->parsed()) {
      const qgame::Scenario sc = qgame::load_scenario(scenario_path, degrees);
      const bool bob = responder == "bob";
      const qgame::StrategyParams opponent = bob ? sc.s1 : sc.s2;
      const auto br = qgame::best_response(sc.config, opponent,
                                           bob ? qgame::Player::bob : qgame::Player::alice, grid,
                                           classical);
      const auto s1 = bob ? sc.s1 : br.strategy;
      const auto s2 = bob ? br.strategy : sc.s2;
      const auto pay = qgame::closed_form_payoffs(sc.config, s1, s2);
      if (format == "json") {
        out << "{\"responder\": \"" << responder
            << "\", \"theta\": " << format_double(br.strategy.theta)
            << ", \"alpha\": " << format_double(br.strategy.alpha)
            << ", \"beta\": " << format_double(br.strategy.beta)
            << ", \"payoff_alice\": " << format_double(pay.alice)
            << ", \"payoff_bob\": " << format_double(pay.bob)
            << ", \"advantage\": " << format_double(pay.bob - pay.alice) << "}\n";
      } else {
        out << "responder,theta,alpha,beta,payoff_alice,payoff_bob,advantage\n";
        out << responder << ',' << format_double(br.strategy.theta) << ','
            << format_double(br.strategy.alpha) << ',' << format_double(br.strategy.beta) << ','
            << format_double(pay.alice) << ',' << format_double(pay.bob) << ','
            << format_double(pay.bob - pay.alice) << '\n';
      }
      return 0;
    }

    if (case_cmd->parsed()) {
      const auto rep = qgame::case_study(case_id, qgame::builtin_game(case_game), qgame::GridSpec{},
                                         curve_points, case_seed);
      emit_case_study(out, rep, format);
      return rep.all_pass() ? 0 : 1;
    }

    if (validate_cmd->parsed()) {
      const auto eq = qgame::validate_equivalence(draws, seed);
      const auto checks = qgame::validate_invariants(std::max(50, draws / 10), seed);
      emit_validation(out, eq, checks, format);
      bool ok = eq.pass;
      for (const auto& c : checks) ok = ok && c.pass;
      return ok ? 0 : 1;
    }
  } catch (const qgame::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const qgame::LookupError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const qgame::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const qgame::DimensionError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
