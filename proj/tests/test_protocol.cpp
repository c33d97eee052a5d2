#include <doctest.h>

#include <cmath>

#include "qgame/protocol.hpp"
#include "qgame/rng.hpp"

using namespace qgame;

namespace {

GameConfig make_config(const char* game, double gamma, double delta, double p1, double mu1,
                       double p2, double mu2) {
  return GameConfig(gamma, delta, DephasingParams(p1, mu1), DephasingParams(p2, mu2),
                    builtin_game(game));
}

StrategyParams random_strategy(SeededRng& rng) {
  return StrategyParams(rng.uniform(0.0, kPi), rng.uniform(-kPi, kPi), rng.uniform(-kPi, kPi));
}

}  // namespace

TEST_CASE("initial state") {
  const DensityMatrix zero = initial_state(0.0);
  CMatrix expect(4, 4);
  expect(0, 0) = 1.0;
  CHECK(max_abs_diff(zero.mat(), expect) == 0.0);

  const DensityMatrix bell = initial_state(kPi / 2.0);
  CHECK(std::abs(bell.mat()(0, 0) - Complex{0.5, 0.0}) <= 1e-15);
  CHECK(std::abs(bell.mat()(3, 3) - Complex{0.5, 0.0}) <= 1e-15);
  CHECK(std::abs(bell.mat()(0, 3) - Complex{0.0, -0.5}) <= 1e-15);
  CHECK(std::abs(bell.mat()(3, 0) - Complex{0.0, 0.5}) <= 1e-15);

  const DensityMatrix third = initial_state(kPi / 3.0);
  CHECK(std::abs(third.mat()(0, 0) - Complex{0.75, 0.0}) <= 1e-15);
  CHECK(std::abs(third.mat()(3, 3) - Complex{0.25, 0.0}) <= 1e-15);
  CHECK(std::abs(third.mat()(0, 3) - Complex{0.0, -std::sqrt(3.0) / 4.0}) <= 1e-15);

  CHECK_THROWS_AS(initial_state(-0.1), DomainError);
  CHECK_THROWS_AS(initial_state(kPi / 2.0 + 0.1), DomainError);
}

TEST_CASE("measurement vectors") {
  const auto basis = measurement_vectors(0.0);
  for (int k = 0; k < 4; ++k)
    for (int r = 0; r < 4; ++r) {
      const int idx[] = {0, 1, 2, 3};
      CHECK(std::abs(basis[k](r, 0) - (r == idx[k] ? Complex{1.0, 0.0} : Complex{0.0, 0.0})) == 0.0);
    }

  SeededRng rng(41);
  for (int k = 0; k < 20; ++k) {
    const auto vs = measurement_vectors(rng.uniform(0.0, kPi / 2.0));
    CMatrix sum(4, 4);
    for (const auto& v : vs) {
      CHECK(std::abs(trace(adjoint(v) * v) - Complex{1.0, 0.0}) <= 1e-14);  // normalized
      sum = sum + v * adjoint(v);
    }
    CHECK(max_abs_diff(sum, CMatrix::identity(4)) <= 1e-12);
  }

  CHECK_THROWS_AS(measurement_vectors(-0.2), DomainError);
  CHECK_THROWS_AS(measurement_vectors(2.0), DomainError);
}

TEST_CASE("payoff operator") {
  const Game2x2 pd = builtin_game("prisoners-dilemma");
  const CMatrix basis_op = payoff_operator(pd, Player::alice, 0.0);
  CMatrix expect(4, 4);
  expect(0, 0) = 3.0;
  expect(1, 1) = 0.0;
  expect(2, 2) = 5.0;
  expect(3, 3) = 1.0;
  CHECK(max_abs_diff(basis_op, expect) <= 1e-15);

  // all payoffs equal -> k * identity regardless of delta
  const Game2x2 flat("flat", {{{2.5, 2.5}, {2.5, 2.5}}}, {{{2.5, 2.5}, {2.5, 2.5}}});
  CHECK(max_abs_diff(payoff_operator(flat, Player::bob, 1.2),
                     Complex{2.5, 0.0} * CMatrix::identity(4)) <= 1e-12);

  // maximally rotated basis for PD/Alice
  const CMatrix rotated = payoff_operator(pd, Player::alice, kPi / 2.0);
  CHECK(is_hermitian(rotated, 1e-14));
  CHECK(trace(rotated).real() == doctest::Approx(9.0).epsilon(1e-14));
  CHECK(std::abs(rotated(0, 0) - Complex{2.0, 0.0}) <= 1e-14);
  CHECK(std::abs(rotated(3, 3) - Complex{2.0, 0.0}) <= 1e-14);
  CHECK(std::abs(rotated(0, 3) - Complex{0.0, -1.0}) <= 1e-14);
  CHECK(std::abs(rotated(3, 0) - Complex{0.0, 1.0}) <= 1e-14);
  CHECK(std::abs(rotated(1, 1) - Complex{2.5, 0.0}) <= 1e-14);
  CHECK(std::abs(rotated(2, 2) - Complex{2.5, 0.0}) <= 1e-14);
  CHECK(std::abs(rotated(1, 2) - Complex{0.0, -2.5}) <= 1e-14);
  CHECK(std::abs(rotated(2, 1) - Complex{0.0, 2.5}) <= 1e-14);
}

TEST_CASE("protocol reproduces the classical outcomes at gamma = delta = 0") {
  const GameConfig cfg = make_config("prisoners-dilemma", 0.0, 0.0, 0.3, 0.4, 0.6, 0.1);
  const StrategyParams coop(0.0, 0.0, 0.0), defect(kPi, 0.0, 0.0);
  const PayoffPair cc = simulate_protocol(cfg, coop, coop);
  CHECK(cc.alice == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(cc.bob == doctest::Approx(3.0).epsilon(1e-14));
  const PayoffPair dd = simulate_protocol(cfg, defect, defect);
  CHECK(dd.alice == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(dd.bob == doctest::Approx(1.0).epsilon(1e-14));
  const PayoffPair cd = simulate_protocol(cfg, coop, defect);
  CHECK(cd.alice == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(cd.bob == doctest::Approx(5.0).epsilon(1e-14));
}

TEST_CASE("frozen full-noise draw") {
  // gamma = delta = pi/2, p = mu = 1/2 on both trips, Alice (pi/2,0,0),
  // Bob (pi/2,pi/2,0); values computed with the density-matrix oracle.
  const GameConfig cfg = make_config("prisoners-dilemma", kPi / 2.0, kPi / 2.0, 0.5, 0.5, 0.5, 0.5);
  const StrategyParams s1(kPi / 2.0, 0.0, 0.0), s2(kPi / 2.0, kPi / 2.0, 0.0);
  const PayoffPair sim = simulate_protocol(cfg, s1, s2);
  CHECK(sim.alice == doctest::Approx(3.79296875).epsilon(1e-12));
  CHECK(sim.bob == doctest::Approx(1.25390625).epsilon(1e-12));
  const PayoffPair closed = closed_form_payoffs(cfg, s1, s2);
  CHECK(std::abs(closed.alice - sim.alice) <= 1e-9);
  CHECK(std::abs(closed.bob - sim.bob) <= 1e-9);
}

TEST_CASE("closed form terms") {
  const StrategyParams s(1.0, 0.5, -0.5);
  const auto zero = closed_form_terms(make_config("chicken", 0.0, 0.0, 0.0, 0.0, 0.0, 0.0), s, s);
  CHECK(zero.eta == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(zero.chi == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(zero.xi == 0.0);

  const auto half =
      closed_form_terms(make_config("chicken", kPi / 2.0, kPi / 2.0, 0.0, 0.0, 0.0, 0.0), s, s);
  CHECK(half.eta == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(half.chi == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(half.xi == doctest::Approx(0.5).epsilon(1e-14));

  const auto dead =
      closed_form_terms(make_config("chicken", 0.3, 0.2, 1.0, 0.0, 0.4, 0.7), s, s);
  CHECK(dead.mup1 == 0.0);
  CHECK(dead.mup2 == doctest::Approx(0.3 * 0.36 + 0.7).epsilon(1e-14));

  SeededRng rng(42);
  for (int k = 0; k < 100; ++k) {
    const auto cfg = make_config("prisoners-dilemma", rng.uniform(0.0, kPi / 2.0),
                                 rng.uniform(0.0, kPi / 2.0), rng.uniform01(), rng.uniform01(),
                                 rng.uniform01(), rng.uniform01());
    const auto t = closed_form_terms(cfg, random_strategy(rng), random_strategy(rng));
    CHECK(std::abs(t.eta + t.chi - 1.0) <= 1e-12);
    CHECK(t.xi * t.xi <= t.eta * t.chi + 1e-12);
    CHECK(std::abs(t.c1 + t.s1 - 1.0) <= 1e-12);
    CHECK(std::abs(t.c2 + t.s2 - 1.0) <= 1e-12);
  }
}

TEST_CASE("closed form matches the density-matrix oracle") {
  static const char* const games[] = {"prisoners-dilemma", "chicken", "battle-of-sexes"};
  SeededRng rng(43);
  double worst = 0.0;
  for (int k = 0; k < 300; ++k) {
    const auto cfg = make_config(games[k % 3], rng.uniform(0.0, kPi / 2.0),
                                 rng.uniform(0.0, kPi / 2.0), rng.uniform01(), rng.uniform01(),
                                 rng.uniform01(), rng.uniform01());
    const auto s1 = random_strategy(rng), s2 = random_strategy(rng);
    const PayoffPair sim = simulate_protocol(cfg, s1, s2);
    const PayoffPair closed = closed_form_payoffs(cfg, s1, s2);
    worst = std::max({worst, std::abs(sim.alice - closed.alice), std::abs(sim.bob - closed.bob)});
  }
  CHECK(worst <= 1e-9);
}

TEST_CASE("case ii equal payoffs") {
  SeededRng rng(44);
  for (int k = 0; k < 10; ++k) {
    const double p1 = rng.uniform01(), mu1 = rng.uniform01();
    const auto cfg = make_config("prisoners-dilemma", kPi / 2.0, 0.0, p1, mu1, rng.uniform01(),
                                 rng.uniform01());
    const StrategyParams s1(kPi / 2.0, 0.0, 0.0), s2(kPi / 2.0, kPi / 2.0, 0.0);
    const double mp1 = coherence_decay_factor(cfg.trip1);
    const double expect = 9.0 / 4.0 + mp1 / 4.0;
    const PayoffPair pay = closed_form_payoffs(cfg, s1, s2);
    CHECK(pay.alice == doctest::Approx(expect).epsilon(1e-12));
    CHECK(pay.bob == doctest::Approx(expect).epsilon(1e-12));
  }
}

TEST_CASE("classical reduction holds for every phase and noise setting") {
  SeededRng rng(45);
  const auto base = make_config("battle-of-sexes", 0.0, 0.0, 0.0, 0.0, 0.0, 0.0);
  const StrategyParams s1(1.3, 0.0, 0.0), s2(0.4, 0.0, 0.0);
  const PayoffPair expect = classical_mixed_payoff(
      base.game, std::pow(std::cos(s1.theta / 2.0), 2), std::pow(std::cos(s2.theta / 2.0), 2));
  for (int k = 0; k < 100; ++k) {
    const auto cfg = make_config("battle-of-sexes", 0.0, 0.0, rng.uniform01(), rng.uniform01(),
                                 rng.uniform01(), rng.uniform01());
    const StrategyParams p1(s1.theta, rng.uniform(-kPi, kPi), rng.uniform(-kPi, kPi));
    const StrategyParams p2(s2.theta, rng.uniform(-kPi, kPi), rng.uniform(-kPi, kPi));
    const PayoffPair pay = closed_form_payoffs(cfg, p1, p2);
    CHECK(std::abs(pay.alice - expect.alice) <= 1e-12);
    CHECK(std::abs(pay.bob - expect.bob) <= 1e-12);
  }
}

TEST_CASE("maximum memory makes the payoffs noiseless") {
  SeededRng rng(46);
  for (int k = 0; k < 20; ++k) {
    const double gamma = rng.uniform(0.0, kPi / 2.0), delta = rng.uniform(0.0, kPi / 2.0);
    const auto s1 = random_strategy(rng), s2 = random_strategy(rng);
    const auto clean = make_config("chicken", gamma, delta, 0.0, 0.0, 0.0, 0.0);
    const PayoffPair base = closed_form_payoffs(clean, s1, s2);
    const auto noisy = GameConfig(gamma, delta, DephasingParams(rng.uniform01(), 1.0),
                                  DephasingParams(rng.uniform01(), 1.0), builtin_game("chicken"));
    const PayoffPair pay = closed_form_payoffs(noisy, s1, s2);
    CHECK(std::abs(pay.alice - base.alice) <= 1e-12);
    CHECK(std::abs(pay.bob - base.bob) <= 1e-12);
  }
}

TEST_CASE("memoryless full decoherence erases the phases") {
  SeededRng rng(47);
  const auto cfg = make_config("prisoners-dilemma", kPi / 2.0, kPi / 2.0, 1.0, 0.0, 1.0, 0.0);
  const StrategyParams s1(kPi / 2.0, 0.0, 0.0);
  const StrategyParams base(1.1, 0.0, 0.0);
  const double ref = closed_form_payoff(cfg, s1, base, Player::bob);
  for (int k = 0; k < 50; ++k) {
    const StrategyParams s2(1.1, rng.uniform(-kPi, kPi), rng.uniform(-kPi, kPi));
    CHECK(std::abs(closed_form_payoff(cfg, s1, s2, Player::bob) - ref) <= 1e-12);
    CHECK(std::abs(closed_form_payoff(cfg, s1, s2, Player::alice) -
                   closed_form_payoff(cfg, s1, base, Player::alice)) <= 1e-12);
  }
}

TEST_CASE("memory keeps the phases alive at maximum noise") {
  const auto cfg = make_config("prisoners-dilemma", kPi / 2.0, kPi / 2.0, 1.0, 0.5, 1.0, 0.5);
  const StrategyParams s1(kPi / 2.0, 0.0, 0.0);
  double lo = 1e300, hi = -1e300;
  for (int ka = 0; ka < 16; ++ka)
    for (int kb = 0; kb < 16; ++kb) {
      const StrategyParams s2(kPi / 2.0, -kPi + ka * 2.0 * kPi / 15.0, -kPi + kb * 2.0 * kPi / 15.0);
      const double v = closed_form_payoff(cfg, s1, s2, Player::bob);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  CHECK(hi - lo > 0.01);
}

TEST_CASE("case iii neutralization and residual value") {
  SeededRng rng(48);
  for (double theta1 : {0.0, kPi}) {
    const auto base = make_config("prisoners-dilemma", 0.0, kPi / 2.0, 0.0, 0.0, 0.0, 0.0);
    const StrategyParams s1(theta1, 0.0, 0.0), s2(0.8, 0.0, 0.0);
    const PayoffPair ref = closed_form_payoffs(base, s1, s2);
    for (int k = 0; k < 50; ++k) {
      const auto cfg = make_config("prisoners-dilemma", 0.0, kPi / 2.0, rng.uniform01(),
                                   rng.uniform01(), rng.uniform01(), rng.uniform01());
      const StrategyParams q2(0.8, rng.uniform(-kPi, kPi), rng.uniform(-kPi, kPi));
      const PayoffPair pay = closed_form_payoffs(cfg, s1, q2);
      CHECK(std::abs(pay.alice - ref.alice) <= 1e-12);
      CHECK(std::abs(pay.bob - ref.bob) <= 1e-12);
    }
  }

  // the neutralized game still differs from the classical one
  const auto cfg = make_config("prisoners-dilemma", 0.0, kPi / 2.0, 0.5, 0.3, 0.1, 0.9);
  const StrategyParams zero(0.0, 0.0, 0.0);
  CHECK(closed_form_payoff(cfg, zero, zero, Player::alice) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(simulate_protocol(cfg, zero, zero).alice == doctest::Approx(2.0).epsilon(1e-12));
}
