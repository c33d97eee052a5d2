#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#ifndef QGAME_CLI_PATH
#error "QGAME_CLI_PATH must point at the built CLI binary"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run_cli(const std::string& args, const std::string& tag) {
  const std::string out_path = "cli_out_" + tag + ".txt";
  const std::string cmd =
      std::string(QGAME_CLI_PATH) + " " + args + " > " + out_path + " 2> cli_err.txt";
  const int status = std::system(cmd.c_str());
  const int code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return {code, slurp(out_path)};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::istringstream in(line);
  std::string field;
  while (std::getline(in, field, ',')) fields.push_back(field);
  return fields;
}

}  // namespace

TEST_CASE("cli payoff on the documented scenario") {
  write_file("cli_scn_pd2.cfg",
             "game = prisoners-dilemma\n"
             "gamma = 1.5707963267948966\n"
             "delta = 0\n"
             "p1 = 0.3\nmu1 = 1\np2 = 0.5\nmu2 = 0.2\n"
             "theta1 = 1.5707963267948966\ntheta2 = 1.5707963267948966\n"
             "alpha2 = 1.5707963267948966\nbeta2 = 0\n");
  const RunResult r = run_cli("payoff --scenario cli_scn_pd2.cfg", "payoff");
  REQUIRE(r.exit_code == 0);
  std::istringstream in(r.output);
  std::string header, row;
  REQUIRE(std::getline(in, header));
  REQUIRE(std::getline(in, row));
  CHECK(header.rfind("game,gamma,delta", 0) == 0);
  const auto fields = split_csv(row);
  REQUIRE(fields.size() == 16);
  CHECK(std::abs(std::stod(fields[13]) - 2.5) <= 1e-9);  // payoff_alice
  CHECK(std::abs(std::stod(fields[14]) - 2.5) <= 1e-9);  // payoff_bob
  CHECK(std::abs(std::stod(fields[15])) <= 1e-9);        // advantage
}

TEST_CASE("cli json output carries the same payoffs") {
  const RunResult r = run_cli("--format json payoff --scenario cli_scn_pd2.cfg", "payoff_json");
  REQUIRE(r.exit_code == 0);
  const auto pos = r.output.find("\"payoff_alice\": ");
  REQUIRE(pos != std::string::npos);
  CHECK(std::abs(std::stod(r.output.substr(pos + 16)) - 2.5) <= 1e-9);
}

TEST_CASE("cli sweep output layout and determinism") {
  const RunResult a = run_cli("sweep --scenario cli_scn_pd2.cfg --param mu --points 11", "sweep_a");
  const RunResult b = run_cli("sweep --scenario cli_scn_pd2.cfg --param mu --points 11", "sweep_b");
  REQUIRE(a.exit_code == 0);
  CHECK(a.output == b.output);  // byte-identical
  std::istringstream in(a.output);
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line == "param,payoff_alice,payoff_bob,advantage");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 11);
}

TEST_CASE("cli best-response recovers the delta=0 optimum") {
  const RunResult r = run_cli(
      "best-response --scenario cli_scn_pd2.cfg --responder bob --refine-rounds 2", "br");
  REQUIRE(r.exit_code == 0);
  std::istringstream in(r.output);
  std::string header, row;
  REQUIRE(std::getline(in, header));
  CHECK(header == "responder,theta,alpha,beta,payoff_alice,payoff_bob,advantage");
  REQUIRE(std::getline(in, row));
  std::istringstream fields(row);
  std::string who, theta, alpha, beta;
  std::getline(fields, who, ',');
  std::getline(fields, theta, ',');
  std::getline(fields, alpha, ',');
  std::getline(fields, beta, ',');
  CHECK(who == "bob");
  const double diff = std::stod(alpha) - std::stod(beta);
  const double wrapped = std::remainder(diff - 1.5707963267948966, 2.0 * 3.14159265358979323846);
  CHECK(std::abs(wrapped) <= 2e-2);
}

TEST_CASE("cli validate exits clean and deterministically") {
  const RunResult a = run_cli("validate --draws 60 --seed 7", "val_a");
  const RunResult b = run_cli("validate --draws 60 --seed 7", "val_b");
  REQUIRE(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(a.output.find("oracle_equivalence,pass,1") != std::string::npos);
  const RunResult c = run_cli("validate --draws 60 --seed 8", "val_c");
  CHECK(c.output != a.output);
  CHECK(c.exit_code == 0);
}

TEST_CASE("cli case-study exits by claim outcome") {
  const RunResult r =
      run_cli("case-study --case i --game prisoners-dilemma --points 11", "case_i");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("pure_nash_profiles_match") != std::string::npos);
}

TEST_CASE("cli exit code 2 on bad input") {
  write_file("cli_scn_bad.cfg", "game = chicken\nbogus_key = 1\n");
  CHECK(run_cli("payoff --scenario cli_scn_bad.cfg", "bad_key").exit_code == 2);

  write_file("cli_scn_range.cfg", "game = chicken\ngamma = 9\n");
  CHECK(run_cli("payoff --scenario cli_scn_range.cfg", "bad_range").exit_code == 2);

  CHECK(run_cli("payoff --scenario does_not_exist.cfg", "bad_file").exit_code == 2);
  CHECK(run_cli("frobnicate", "bad_cmd").exit_code == 2);
  CHECK(run_cli("sweep --scenario cli_scn_pd2.cfg --param q", "bad_param").exit_code == 2);
  CHECK(run_cli("payoff", "missing_required").exit_code == 2);
}

TEST_CASE("cli writes to --out") {
  const RunResult r =
      run_cli("--out cli_out_file.csv payoff --scenario cli_scn_pd2.cfg", "out_file");
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.empty());
  const std::string written = slurp("cli_out_file.csv");
  CHECK(written.rfind("game,gamma,delta", 0) == 0);
  CHECK(written.find("prisoners-dilemma,") != std::string::npos);
}
