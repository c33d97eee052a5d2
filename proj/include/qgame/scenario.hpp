#pragma once

#include <array>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "qgame/errors.hpp"
#include "qgame/game.hpp"
#include "qgame/protocol.hpp"

namespace qgame {

// %.17g: exact value round-trip, never fewer meaningful digits than the
// 12-significant-digit output contract asks for.
inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string json_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

// A parsed scenario: the full protocol configuration plus both strategies.
struct Scenario {
  GameConfig config;
  StrategyParams s1;
  StrategyParams s2;
};

namespace detail {

inline double parse_number(const std::string& key, const std::string& text) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &pos);
  } catch (const std::exception&) {
    throw ParseError("scenario: bad number for '" + key + "': " + text);
  }
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos != text.size())
    throw ParseError("scenario: trailing junk after number for '" + key + "': " + text);
  return v;
}

inline std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace detail

// Parses the flat `key = value` scenario format. `#` starts a comment,
// blank lines are skipped, keys may appear once. Angles are radians unless
// degrees is set. Recognized keys:
//   game, gamma, delta, p, mu, p1, mu1, p2, mu2,
//   theta1, alpha1, beta1, theta2, alpha2, beta2,
//   payoff_a_00..payoff_a_11, payoff_b_00..payoff_b_11  (custom game)
// `p`/`mu` set both trips and are mutually exclusive with `p1`/`p2`,
// `mu1`/`mu2`. A custom payoff block needs all eight entries and the game
// key may then be omitted or set to `custom`.
inline Scenario parse_scenario_text(const std::string& text, bool degrees = false) {
  static const char* const kNumericKeys[] = {
      "gamma", "delta", "p", "mu", "p1", "mu1", "p2", "mu2", "theta1", "alpha1", "beta1",
      "theta2", "alpha2", "beta2", "payoff_a_00", "payoff_a_01", "payoff_a_10", "payoff_a_11",
      "payoff_b_00", "payoff_b_01", "payoff_b_10", "payoff_b_11"};

  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string stripped = detail::trim(line);
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos)
      throw ParseError("scenario line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = detail::trim(stripped.substr(0, eq));
    const std::string value = detail::trim(stripped.substr(eq + 1));
    if (key.empty() || value.empty())
      throw ParseError("scenario line " + std::to_string(lineno) + ": empty key or value");
    if (!kv.emplace(key, value).second)
      throw ParseError("scenario: duplicate key '" + key + "'");
  }

  std::map<std::string, double> num;
  std::optional<std::string> game_name;
  for (const auto& [key, value] : kv) {
    if (key == "game") {
      game_name = value;
      continue;
    }
    bool known = false;
    for (const char* k : kNumericKeys) known = known || key == k;
    if (!known) throw ParseError("scenario: unknown key '" + key + "'");
    num[key] = detail::parse_number(key, value);
  }

  const auto get = [&](const char* key, double fallback) {
    const auto it = num.find(key);
    return it == num.end() ? fallback : it->second;
  };
  const auto has = [&](const char* key) { return num.count(key) != 0; };

  if (has("p") && (has("p1") || has("p2")))
    throw ParseError("scenario: 'p' conflicts with 'p1'/'p2'");
  if (has("mu") && (has("mu1") || has("mu2")))
    throw ParseError("scenario: 'mu' conflicts with 'mu1'/'mu2'");

  int payoff_keys = 0;
  for (const auto& [key, value] : num)
    if (key.rfind("payoff_", 0) == 0) ++payoff_keys;
  const bool custom = payoff_keys > 0;
  if (custom && payoff_keys != 8)
    throw ParseError("scenario: custom game needs all eight payoff_a_ij/payoff_b_ij keys");
  if (custom && game_name && *game_name != "custom")
    throw ParseError("scenario: payoff block conflicts with game = " + *game_name);
  if (!custom && !game_name) throw ParseError("scenario: missing 'game'");

  const double angle_scale = degrees ? kPi / 180.0 : 1.0;
  const auto angle = [&](const char* key, double fallback) {
    return get(key, fallback) * (has(key) ? angle_scale : 1.0);
  };

  Game2x2 game = custom
                     ? Game2x2("custom",
                               {{{num.at("payoff_a_00"), num.at("payoff_a_01")},
                                 {num.at("payoff_a_10"), num.at("payoff_a_11")}}},
                               {{{num.at("payoff_b_00"), num.at("payoff_b_01")},
                                 {num.at("payoff_b_10"), num.at("payoff_b_11")}}})
                     : builtin_game(*game_name);

  try {
    GameConfig config(angle("gamma", 0.0), angle("delta", 0.0),
                      DephasingParams(get("p1", get("p", 0.0)), get("mu1", get("mu", 0.0))),
                      DephasingParams(get("p2", get("p", 0.0)), get("mu2", get("mu", 0.0))),
                      std::move(game));
    StrategyParams s1(angle("theta1", 0.0), angle("alpha1", 0.0), angle("beta1", 0.0));
    StrategyParams s2(angle("theta2", 0.0), angle("alpha2", 0.0), angle("beta2", 0.0));
    return Scenario{std::move(config), s1, s2};
  } catch (const DomainError& e) {
    throw ParseError(std::string("scenario: ") + e.what());
  }
}

inline Scenario load_scenario(const std::string& path, bool degrees = false) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open scenario file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_scenario_text(ss.str(), degrees);
}

// One evaluated scenario: every input echoed, then the payoffs.
struct ResultRecord {
  std::string game;
  double gamma, delta, p1, mu1, p2, mu2;
  double theta1, alpha1, beta1, theta2, alpha2, beta2;
  double payoff_alice, payoff_bob, advantage;

  static ResultRecord from(const Scenario& sc, const PayoffPair& pay) {
    return {sc.config.game.name, sc.config.gamma,  sc.config.delta, sc.config.trip1.p,
            sc.config.trip1.mu,  sc.config.trip2.p, sc.config.trip2.mu,
            sc.s1.theta,         sc.s1.alpha,      sc.s1.beta,      sc.s2.theta,
            sc.s2.alpha,         sc.s2.beta,       pay.alice,       pay.bob,
            pay.bob - pay.alice};
  }

  static std::string csv_header() {
    return "game,gamma,delta,p1,mu1,p2,mu2,theta1,alpha1,beta1,theta2,alpha2,beta2,"
           "payoff_alice,payoff_bob,advantage";
  }

  std::string to_csv() const {
    std::ostringstream out;
    out << game;
    for (double v : {gamma, delta, p1, mu1, p2, mu2, theta1, alpha1, beta1, theta2, alpha2, beta2,
                     payoff_alice, payoff_bob, advantage})
      out << ',' << format_double(v);
    return out.str();
  }

  std::string to_json() const {
    std::ostringstream out;
    out << "{\"game\": \"" << json_escape(game) << '"';
    const char* names[] = {"gamma",  "delta",  "p1",     "mu1",    "p2",        "mu2",
                           "theta1", "alpha1", "beta1",  "theta2", "alpha2",    "beta2",
                           "payoff_alice", "payoff_bob", "advantage"};
    const double values[] = {gamma,  delta,  p1,    mu1,    p2,         mu2,
                             theta1, alpha1, beta1, theta2, alpha2,     beta2,
                             payoff_alice,   payoff_bob,   advantage};
    for (int i = 0; i < 15; ++i) out << ", \"" << names[i] << "\": " << format_double(values[i]);
    out << '}';
    return out.str();
  }
};

}  // namespace qgame
