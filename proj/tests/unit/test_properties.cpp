// Randomized invariants over coins and initial states (hand-rolled generators,
// fixed seeds).

#include <doctest.h>

#include <cmath>

#include "qwalk/spectral.hpp"
#include "qwalk/walk.hpp"
#include "support/test_support.hpp"

using namespace qwalk;

TEST_CASE("norm is conserved for random coins") {
  auto rng = testing::make_rng(1001);
  for (int trial = 0; trial < 6; ++trial) {
    const CoinMatrix coin = build_general_coin(testing::random_coin_spec(rng));
    WalkState state = make_initial(testing::random_initial(rng));
    double worst = 0.0;
    for (int t = 1; t <= 1000; ++t) {
      state = step(state, coin);
      worst = std::max(worst, std::abs(state.norm_squared() - 1.0));
    }
    CHECK(worst < 1e-10);
  }
}

TEST_CASE("light cone and parity") {
  auto rng = testing::make_rng(1002);
  for (int trial = 0; trial < 6; ++trial) {
    const CoinMatrix coin = build_general_coin(testing::random_coin_spec(rng));
    WalkState state = make_initial(testing::random_initial(rng));
    for (TimeStep t = 1; t <= 150; ++t) {
      state = step(state, coin);
      CHECK(state.min_position() >= -t);
      CHECK(state.max_position() <= t);
      bool parity_ok = true;
      state.for_each_site([&](Position x, const Vector4& v) {
        if (((x - t) % 2 != 0) && !v.isZero(0.0)) parity_ok = false;
      });
      CHECK(parity_ok);
    }
  }
}

TEST_CASE("evolution is linear") {
  auto rng = testing::make_rng(1003);
  for (int trial = 0; trial < 10; ++trial) {
    const CoinMatrix coin = build_general_coin(testing::random_coin_spec(rng));
    const Vector4 u = testing::random_initial(rng).as_vector();
    const Vector4 v = testing::random_initial(rng).as_vector();
    const Complex a = testing::random_complex(rng);
    const Complex b = testing::random_complex(rng);
    const auto lhs = evolve(WalkState::from_sites(0, {{0, a * u + b * v}}), coin, 60);
    const auto eu = evolve(WalkState::from_sites(0, {{0, u}}), coin, 60);
    const auto ev = evolve(WalkState::from_sites(0, {{0, v}}), coin, 60);
    double worst = 0.0;
    for (Position x = -60; x <= 60; ++x) {
      const Vector4 combined = a * eu.amplitude(x) + b * ev.amplitude(x);
      worst = std::max(worst, (lhs.amplitude(x) - combined).cwiseAbs().maxCoeff());
    }
    CHECK(worst < 1e-12);
  }
}

TEST_CASE("grover walks recur with period 4 and stay within two sites") {
  auto rng = testing::make_rng(1004);
  const CoinMatrix grover = build_grover_coin();
  for (int trial = 0; trial < 10; ++trial) {
    const WalkState start = make_initial(testing::random_initial(rng));
    WalkState state = start;
    std::vector<WalkState> history{start};
    for (int t = 1; t <= 40; ++t) {
      state = step(state, grover);
      history.push_back(state);
      CHECK(state.min_position() >= -2);
      CHECK(state.max_position() <= 2);
      if (t >= 4) CHECK(state.max_difference(history[t - 4]) < 1e-12);
    }
  }
}

TEST_CASE("fourier ring and direct recursion agree for random coins") {
  auto rng = testing::make_rng(1005);
  for (int trial = 0; trial < 4; ++trial) {
    const CoinMatrix coin = build_general_coin(testing::random_coin_spec(rng));
    const InitialState init = testing::random_initial(rng);
    WalkState direct = make_initial(init);
    for (TimeStep t = 0; t <= 120; ++t) {
      if (t % 8 == 0 || t == 1 || t == 120) {
        const auto ring = fourier_propagate(coin, init, t, static_cast<std::size_t>(2 * t + 8));
        CHECK(ring.max_difference(direct) < 1e-10);
      }
      direct = step(direct, coin);
    }
  }
}

TEST_CASE("spectral completeness and residuals for random coins") {
  auto rng = testing::make_rng(1006);
  for (int trial = 0; trial < 10; ++trial) {
    const CoinMatrix coin = build_general_coin(testing::random_coin_spec(rng));
    const InitialState init = testing::random_initial(rng);
    for (double k : k_grid(64)) {
      const auto eig = eigensystem(build_momentum_operator(coin, k));
      CHECK(eig.max_residual < 1e-10);
      const auto w = overlap_density(eig, init);
      CHECK(std::abs(w[0] + w[1] + w[2] + w[3] - 1.0) < 1e-10);
    }
  }
}
