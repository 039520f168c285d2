#include <doctest.h>

#include <cmath>

#include "qwalk/error.hpp"
#include "qwalk/walk.hpp"
#include "support/test_support.hpp"

using namespace qwalk;

namespace {

const InitialState kBasis0{1.0, 0.0, 0.0, 0.0};
const InitialState kUniform{0.5, 0.5, 0.5, 0.5};

Vector4 basis(int i) {
  Vector4 v = Vector4::Zero();
  v(i) = 1.0;
  return v;
}

}  // namespace

TEST_CASE("make_initial") {
  const WalkState s = make_initial(kBasis0);
  CHECK(s.time() == 0);
  CHECK(s.min_position() == 0);
  CHECK(s.max_position() == 0);
  CHECK(s.amplitude(0) == basis(0));
  CHECK(s.amplitude(1).isZero(0.0));

  CHECK(make_initial(kUniform).norm_squared() == doctest::Approx(1.0).epsilon(1e-15));

  try {
    make_initial({1.0, 1.0, 0.0, 0.0});
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.defect() == doctest::Approx(1.0));
  }
}

TEST_CASE("one grover step from single chiralities") {
  const CoinMatrix grover = build_grover_coin();
  SUBCASE("chirality 0 -> x=-1, chirality 1") {
    const WalkState s = step(make_initial(kBasis0), grover);
    CHECK(s.time() == 1);
    CHECK(s.min_position() == -1);
    CHECK(s.max_position() == -1);
    CHECK(s.amplitude(-1) == basis(1));
  }
  SUBCASE("chirality 3 -> x=-1, chirality 0") {
    const WalkState s = step(make_initial({0.0, 0.0, 0.0, 1.0}), grover);
    CHECK(s.min_position() == -1);
    CHECK(s.max_position() == -1);
    CHECK(s.amplitude(-1) == basis(0));
  }
}

TEST_CASE("step matches the brute-force ring operator") {
  auto rng = testing::make_rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const CoinMatrix coin = build_general_coin(testing::random_coin_spec(rng));
    const InitialState init = testing::random_initial(rng);
    const testing::RingOracle ring(coin.u(), 64);
    const auto expected = ring.advance(ring.start(init), 20);
    const WalkState got = evolve(make_initial(init), coin, 20);
    double worst = 0.0;
    for (Position x = -25; x <= 25; ++x) {
      worst = std::max(worst, (got.amplitude(x) - ring.at(expected, x)).cwiseAbs().maxCoeff());
    }
    CHECK(worst < 1e-13);
  }
}

TEST_CASE("evolve") {
  const CoinMatrix grover = build_grover_coin();
  auto rng = testing::make_rng(5);
  SUBCASE("grover has period 4") {
    for (int trial = 0; trial < 5; ++trial) {
      const InitialState init = testing::random_initial(rng);
      const WalkState start = make_initial(init);
      CHECK(evolve(start, grover, 4).max_difference(start) < 1e-12);
    }
  }
  SUBCASE("zero steps is the identity") {
    const WalkState start = make_initial(kUniform);
    const WalkState same = evolve(start, grover, 0);
    CHECK(same.time() == 0);
    CHECK(same.max_difference(start) == 0.0);
  }
  SUBCASE("hadamard stays normalized inside the light cone") {
    const WalkState s = evolve(make_initial(kBasis0), build_hadamard_coin(), 100);
    CHECK(std::abs(s.norm_squared() - 1.0) < 1e-10);
    CHECK(s.min_position() >= -100);
    CHECK(s.max_position() <= 100);
  }
  CHECK_THROWS_AS(evolve(make_initial(kBasis0), grover, -1), PreconditionError);
}

TEST_CASE("zero regions stay zero") {
  auto rng = testing::make_rng(8);
  const CoinMatrix coin = build_general_coin(testing::random_coin_spec(rng));
  const WalkState s = evolve(make_initial(testing::random_initial(rng)), coin, 7);
  CHECK(s.amplitude(8).isZero(0.0));
  CHECK(s.amplitude(-8).isZero(0.0));
  CHECK(step(WalkState{}, coin).empty());
}

TEST_CASE("distribution") {
  const CoinMatrix grover = build_grover_coin();
  SUBCASE("t = 0 basis state") {
    const Distribution d = distribution(make_initial(kBasis0));
    CHECK(d.probabilities.size() == 1);
    CHECK(d.at(0) == 1.0);
  }
  SUBCASE("grover t = 1") {
    const Distribution d = distribution(step(make_initial(kBasis0), grover));
    CHECK(d.probabilities.size() == 1);
    CHECK(d.at(-1) == 1.0);
  }
  SUBCASE("grover t = 2 follows the chirality paths") {
    auto rng = testing::make_rng(21);
    for (int trial = 0; trial < 5; ++trial) {
      const InitialState init = testing::random_initial(rng);
      const Distribution d = distribution(evolve(make_initial(init), grover, 2));
      CHECK(d.time == 2);
      CHECK(d.at(0) == doctest::Approx(std::norm(init.alpha) + std::norm(init.gamma)).epsilon(1e-14));
      CHECK(d.at(2) == doctest::Approx(std::norm(init.beta)).epsilon(1e-14));
      CHECK(d.at(-2) == doctest::Approx(std::norm(init.mu)).epsilon(1e-14));
      CHECK(d.total() == doctest::Approx(1.0).epsilon(1e-14));
    }
  }
}

TEST_CASE("moments") {
  CHECK(moment(distribution(make_initial(kUniform)), 0) == 1.0);
  Distribution left;
  left.probabilities = {{-1, 1.0}};
  CHECK(moment(left, 1) == -1.0);
  const Distribution d = distribution(evolve(make_initial(kUniform), build_grover_coin(), 2));
  CHECK(moment(d, 2) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(moment(d, 0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(moment(d, -1), PreconditionError);
}

TEST_CASE("origin probability sequences") {
  const CoinMatrix grover = build_grover_coin();
  SUBCASE("chirality 0 returns every second step") {
    const OriginSequence seq = origin_probability_sequence(grover, kBasis0, 0, 16);
    REQUIRE(seq.probabilities.size() == 17);
    for (std::size_t t = 0; t <= 16; ++t) {
      CHECK(seq.probabilities[t] == (t % 2 == 0 ? 1.0 : 0.0));
    }
    REQUIRE(seq.period);
    CHECK(seq.period->period == 2);
  }
  SUBCASE("chirality 1 returns every fourth step") {
    const OriginSequence seq = origin_probability_sequence(grover, {0.0, 1.0, 0.0, 0.0}, 0, 16);
    for (std::size_t t = 0; t <= 16; ++t) {
      CHECK(seq.probabilities[t] == (t % 4 == 0 ? 1.0 : 0.0));
    }
    REQUIRE(seq.period);
    CHECK(seq.period->period == 4);
  }
  SUBCASE("outside the light cone") {
    const OriginSequence seq =
        origin_probability_sequence(build_hadamard_coin(), kUniform, 40, 30);
    for (double p : seq.probabilities) {
      CHECK(p == 0.0);
    }
  }
  CHECK_THROWS_AS(origin_probability_sequence(grover, kBasis0, 0, 0), PreconditionError);
}

TEST_CASE("walk state mapping view round-trips") {
  std::map<Position, Vector4> sites{{-3, basis(1)}, {2, basis(2)}};
  const WalkState s = WalkState::from_sites(5, sites);
  CHECK(s.time() == 5);
  CHECK(s.min_position() == -3);
  CHECK(s.max_position() == 2);
  const auto view = s.sites();
  CHECK(view.size() == 6);
  CHECK(view.at(-3) == basis(1));
  CHECK(view.at(0).isZero(0.0));
}
