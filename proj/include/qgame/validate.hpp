#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "qgame/analysis.hpp"
#include "qgame/channels.hpp"
#include "qgame/errors.hpp"
#include "qgame/protocol.hpp"
#include "qgame/rng.hpp"

namespace qgame {

inline constexpr double kEquivalenceBound = 1e-9;

// Result of the closed-form vs density-matrix cross-validation.
struct EquivalenceReport {
  int draws = 0;
  std::uint64_t seed = 0;
  double max_abs_dev = 0.0;
  double mean_abs_dev = 0.0;
  // the draw that produced max_abs_dev
  std::string worst_game;
  double worst_gamma = 0.0, worst_delta = 0.0;
  double worst_p1 = 0.0, worst_mu1 = 0.0, worst_p2 = 0.0, worst_mu2 = 0.0;
  double worst_theta1 = 0.0, worst_alpha1 = 0.0, worst_beta1 = 0.0;
  double worst_theta2 = 0.0, worst_alpha2 = 0.0, worst_beta2 = 0.0;
  std::string worst_player;
  bool pass = false;
};

// Draws full-range random scenarios (seeded, deterministic) and evaluates
// both payoff paths per draw and per player.
inline EquivalenceReport validate_equivalence(int draws, std::uint64_t seed) {
  if (draws < 1) throw DomainError("validate_equivalence: draws must be >= 1");
  static const char* const games[] = {"prisoners-dilemma", "chicken", "battle-of-sexes"};
  SeededRng rng(seed);
  EquivalenceReport rep;
  rep.draws = draws;
  rep.seed = seed;
  double dev_sum = 0.0;
  for (int k = 0; k < draws; ++k) {
    const GameConfig cfg(rng.uniform(0.0, kPi / 2.0), rng.uniform(0.0, kPi / 2.0),
                         DephasingParams(rng.uniform01(), rng.uniform01()),
                         DephasingParams(rng.uniform01(), rng.uniform01()),
                         builtin_game(games[k % 3]));
    const StrategyParams s1(rng.uniform(0.0, kPi), rng.uniform(-kPi, kPi), rng.uniform(-kPi, kPi));
    const StrategyParams s2(rng.uniform(0.0, kPi), rng.uniform(-kPi, kPi), rng.uniform(-kPi, kPi));
    const PayoffPair sim = simulate_protocol(cfg, s1, s2);
    const PayoffPair closed = closed_form_payoffs(cfg, s1, s2);
    const double dev_a = std::abs(closed.alice - sim.alice);
    const double dev_b = std::abs(closed.bob - sim.bob);
    dev_sum += dev_a + dev_b;
    for (int side = 0; side < 2; ++side) {
      const double dev = side == 0 ? dev_a : dev_b;
      if (dev > rep.max_abs_dev) {
        rep.max_abs_dev = dev;
        rep.worst_game = cfg.game.name;
        rep.worst_gamma = cfg.gamma;
        rep.worst_delta = cfg.delta;
        rep.worst_p1 = cfg.trip1.p;
        rep.worst_mu1 = cfg.trip1.mu;
        rep.worst_p2 = cfg.trip2.p;
        rep.worst_mu2 = cfg.trip2.mu;
        rep.worst_theta1 = s1.theta;
        rep.worst_alpha1 = s1.alpha;
        rep.worst_beta1 = s1.beta;
        rep.worst_theta2 = s2.theta;
        rep.worst_alpha2 = s2.alpha;
        rep.worst_beta2 = s2.beta;
        rep.worst_player = side == 0 ? "alice" : "bob";
      }
    }
  }
  rep.mean_abs_dev = dev_sum / (2.0 * draws);
  rep.pass = rep.max_abs_dev <= kEquivalenceBound;
  return rep;
}

struct InvariantCheck {
  std::string name;
  double max_dev = 0.0;
  double tol = 0.0;
  bool pass = false;
};

namespace detail {

inline DensityMatrix random_density_matrix(SeededRng& rng, std::size_t dim) {
  CMatrix b(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      b(i, j) = Complex{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
  CMatrix rho = adjoint(b) * b;
  const double tr = trace(rho).real();
  return DensityMatrix(Complex{1.0 / tr, 0.0} * rho);
}

}  // namespace detail

// Structural invariants of the building blocks, each over `draws` seeded
// random inputs: strategy unitarity, Kraus completeness, channel
// trace/Hermiticity/positivity preservation, measurement completeness, and
// the two coherence scaling laws of the correlated channel.
inline std::vector<InvariantCheck> validate_invariants(int draws, std::uint64_t seed) {
  if (draws < 1) throw DomainError("validate_invariants: draws must be >= 1");
  SeededRng rng(seed);
  std::vector<InvariantCheck> checks;
  const auto add = [&](const std::string& name, double dev, double tol) {
    checks.push_back({name, dev, tol, dev <= tol});
  };

  {  // U^dagger U = I
    double dev = 0.0;
    for (int k = 0; k < draws; ++k) {
      const CMatrix u = strategy_unitary(
          StrategyParams(rng.uniform(0.0, kPi), rng.uniform(-kPi, kPi), rng.uniform(-kPi, kPi)));
      dev = std::max(dev, max_abs_diff(adjoint(u) * u, CMatrix::identity(2)));
    }
    add("strategy_unitarity", dev, 1e-12);
  }
  {  // sum A^dagger A = I for all three constructors
    double dev = 0.0;
    for (int k = 0; k < draws; ++k) {
      const double p = rng.uniform01(), mu = rng.uniform01();
      for (const KrausSet& ks :
           {single_qubit_dephasing_kraus(p), n_qubit_product_kraus(p, 2),
            correlated_dephasing_kraus(DephasingParams(p, mu))}) {
        CMatrix sum(ks.dim(), ks.dim());
        for (const auto& a : ks) sum = sum + adjoint(a) * a;
        dev = std::max(dev, max_abs_diff(sum, CMatrix::identity(ks.dim())));
      }
    }
    add("kraus_completeness", dev, 1e-12);
  }
  {  // channel output stays a valid state
    double trace_dev = 0.0, herm_dev = 0.0, min_eig = 0.0;
    for (int k = 0; k < draws; ++k) {
      const DensityMatrix rho = detail::random_density_matrix(rng, 4);
      const KrausSet ks = correlated_dephasing_kraus(DephasingParams(rng.uniform01(), rng.uniform01()));
      CMatrix out(4, 4);
      for (const auto& a : ks) out = out + a * rho.mat() * adjoint(a);
      trace_dev = std::max(trace_dev, std::abs(trace(out) - Complex{1.0, 0.0}));
      herm_dev = std::max(herm_dev, max_abs_diff(out, adjoint(out)));
      min_eig = std::min(min_eig, hermitian_eigenvalues(out).front());
    }
    add("channel_trace_preservation", trace_dev, 1e-12);
    add("channel_hermiticity_preservation", herm_dev, 1e-10);
    add("channel_positivity", -min_eig, 1e-8);
  }
  {  // sum of measurement projectors = identity
    double dev = 0.0;
    for (int k = 0; k < draws; ++k) {
      const auto vs = measurement_vectors(rng.uniform(0.0, kPi / 2.0));
      CMatrix sum(4, 4);
      for (const auto& v : vs) sum = sum + v * adjoint(v);
      dev = std::max(dev, max_abs_diff(sum, CMatrix::identity(4)));
    }
    add("measurement_completeness", dev, 1e-12);
  }
  {  // per-traversal coherence scaling: double flips by (1-mu)(1-p)^2 + mu,
     // single flips by (1-p)
    double dev_double = 0.0, dev_single = 0.0;
    for (int k = 0; k < draws; ++k) {
      const DephasingParams params(rng.uniform01(), rng.uniform01());
      const DensityMatrix rho = detail::random_density_matrix(rng, 4);
      const DensityMatrix out = apply_channel(rho, correlated_dephasing_kraus(params));
      const double factor = coherence_decay_factor(params);
      dev_double = std::max(
          dev_double, std::abs(out.mat()(0, 3) - Complex{factor, 0.0} * rho.mat()(0, 3)));
      dev_double = std::max(
          dev_double, std::abs(out.mat()(1, 2) - Complex{factor, 0.0} * rho.mat()(1, 2)));
      const double single = 1.0 - params.p;
      dev_single = std::max(
          dev_single, std::abs(out.mat()(0, 1) - Complex{single, 0.0} * rho.mat()(0, 1)));
      dev_single = std::max(
          dev_single, std::abs(out.mat()(0, 2) - Complex{single, 0.0} * rho.mat()(0, 2)));
      dev_single = std::max(
          dev_single, std::abs(out.mat()(1, 3) - Complex{single, 0.0} * rho.mat()(1, 3)));
    }
    add("double_flip_coherence_factor", dev_double, 1e-12);
    add("single_flip_coherence_factor", dev_single, 1e-12);
  }
  return checks;
}

}  // namespace qgame
