#pragma once

#include <array>
#include <cmath>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qgame/cmatrix.hpp"
#include "qgame/errors.hpp"

namespace qgame {

inline constexpr double kPi = 3.14159265358979323846;

struct PayoffPair {
  double alice;
  double bob;
};

// A 2x2 bimatrix game. Row index = Alice's move, column index = Bob's move,
// first row/column = the first classical strategy (C or O).
struct Game2x2 {
  Game2x2(std::string name_, std::array<std::array<double, 2>, 2> a,
          std::array<std::array<double, 2>, 2> b)
      : name(std::move(name_)), payoff_a(a), payoff_b(b) {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        if (!std::isfinite(payoff_a[i][j]) || !std::isfinite(payoff_b[i][j]))
          throw DomainError("Game2x2: non-finite payoff entry");
  }
  std::string name;
  std::array<std::array<double, 2>, 2> payoff_a;
  std::array<std::array<double, 2>, 2> payoff_b;
};

// Builtin tables. Names are the ones accepted by the CLI.
inline Game2x2 builtin_game(std::string_view name) {
  if (name == "prisoners-dilemma")
    return Game2x2("prisoners-dilemma", {{{3, 0}, {5, 1}}}, {{{3, 5}, {0, 1}}});
  if (name == "chicken")
    return Game2x2("chicken", {{{3, 1}, {4, 0}}}, {{{3, 4}, {1, 0}}});
  if (name == "battle-of-sexes")
    return Game2x2("battle-of-sexes", {{{2, 0}, {0, 1}}}, {{{1, 0}, {0, 2}}});
  throw LookupError("unknown game: " + std::string(name));
}

// A player's move (theta, alpha, beta): theta in [0, pi] mixes the two
// classical strategies, alpha and beta in [-pi, pi] are the quantum phases.
// alpha = beta = 0 is the classical subset.
struct StrategyParams {
  StrategyParams(double theta_, double alpha_, double beta_)
      : theta(theta_), alpha(alpha_), beta(beta_) {
    if (!(theta >= 0.0 && theta <= kPi))
      throw DomainError("StrategyParams: theta outside [0,pi]");
    if (!(alpha >= -kPi && alpha <= kPi))
      throw DomainError("StrategyParams: alpha outside [-pi,pi]");
    if (!(beta >= -kPi && beta <= kPi))
      throw DomainError("StrategyParams: beta outside [-pi,pi]");
  }
  double theta;
  double alpha;
  double beta;
};

// The strategy unitary:
//   U|0> = cos(theta/2) e^{i alpha} |0> + i sin(theta/2) e^{-i beta} |1>
//   U|1> = i sin(theta/2) e^{i beta} |0> + cos(theta/2) e^{-i alpha} |1>
// theta = 0 plays the first classical strategy, theta = pi the second.
inline CMatrix strategy_unitary(const StrategyParams& s) {
  const double c = std::cos(s.theta / 2.0), sn = std::sin(s.theta / 2.0);
  const Complex i{0.0, 1.0};
  CMatrix u(2, 2);
  u(0, 0) = c * std::polar(1.0, s.alpha);
  u(1, 0) = i * sn * std::polar(1.0, -s.beta);
  u(0, 1) = i * sn * std::polar(1.0, s.beta);
  u(1, 1) = c * std::polar(1.0, -s.alpha);
  return u;
}

// Expected payoffs when Alice plays her first strategy with probability x
// and Bob with probability y.
inline PayoffPair classical_mixed_payoff(const Game2x2& g, double x, double y) {
  if (!(x >= 0.0 && x <= 1.0) || !(y >= 0.0 && y <= 1.0))
    throw DomainError("classical_mixed_payoff: probabilities outside [0,1]");
  const double pr[2][2] = {{x * y, x * (1.0 - y)}, {(1.0 - x) * y, (1.0 - x) * (1.0 - y)}};
  PayoffPair out{0.0, 0.0};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      out.alice += pr[i][j] * g.payoff_a[i][j];
      out.bob += pr[i][j] * g.payoff_b[i][j];
    }
  return out;
}

// All pure-strategy profiles (row, col) where neither player gains by a
// unilateral deviation (weak inequality, tie tolerance 1e-12).
inline std::vector<std::pair<int, int>> pure_nash_equilibria(const Game2x2& g) {
  constexpr double tol = 1e-12;
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const bool alice_ok = g.payoff_a[i][j] >= g.payoff_a[1 - i][j] - tol;
      const bool bob_ok = g.payoff_b[i][j] >= g.payoff_b[i][1 - j] - tol;
      if (alice_ok && bob_ok) out.emplace_back(i, j);
    }
  return out;
}

}  // namespace qgame
