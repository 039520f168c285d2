#include <doctest.h>

#include <cmath>

#include <Eigen/Dense>

#include "qwalk/coin.hpp"
#include "qwalk/error.hpp"
#include "support/test_support.hpp"

using namespace qwalk;

namespace {

int nonzero_count(const Matrix4& m) {
  int n = 0;
  for (Eigen::Index i = 0; i < 16; ++i) {
    n += m(i) != Complex{0.0};
  }
  return n;
}

}  // namespace

TEST_CASE("general coin places a, b, c, d in the 4x4 pattern") {
  const CoinSpec spec{{0.6, 0.0}, {0.0, 0.8}, {0.0, 0.8}, {0.6, 0.0}};
  const CoinMatrix coin = build_general_coin(spec);
  const Matrix4& u = coin.u();
  CHECK(u(0, 2) == spec.a);
  CHECK(u(0, 3) == spec.c);
  CHECK(u(1, 0) == spec.b);
  CHECK(u(1, 1) == spec.d);
  CHECK(u(2, 0) == spec.a);
  CHECK(u(2, 1) == spec.c);
  CHECK(u(3, 2) == spec.b);
  CHECK(u(3, 3) == spec.d);
  CHECK(nonzero_count(u) == 8);
  CHECK(coin.unitarity_defect() < 1e-12);
}

TEST_CASE("P and R split U by rows exactly") {
  auto rng = testing::make_rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    const CoinMatrix coin = build_general_coin(testing::random_coin_spec(rng));
    CHECK((coin.p() + coin.r()) == coin.u());
    CHECK(coin.p().bottomRows<2>().isZero(0.0));
    CHECK(coin.r().topRows<2>().isZero(0.0));
    CHECK(coin.unitarity_defect() < kCoinTolerance);
  }
}

TEST_CASE("grover coin is the 4-cycle permutation") {
  const CoinMatrix coin = build_grover_coin();
  Matrix4 expected = Matrix4::Zero();
  expected(0, 3) = 1.0;
  expected(1, 0) = 1.0;
  expected(2, 1) = 1.0;
  expected(3, 2) = 1.0;
  CHECK(coin.u() == expected);

  const Matrix4 fourth = coin.u() * coin.u() * coin.u() * coin.u();
  CHECK((fourth - Matrix4::Identity()).cwiseAbs().maxCoeff() <= 1e-15);

  CHECK(nonzero_count(coin.p()) == 2);
  CHECK(nonzero_count(coin.r()) == 2);
}

TEST_CASE("identity 2x2 coin routes 0<->2 and keeps 1, 3") {
  const CoinMatrix coin = build_general_coin({1.0, 0.0, 0.0, 1.0});
  CHECK(coin.u()(0, 2) == Complex{1.0});
  CHECK(coin.u()(2, 0) == Complex{1.0});
  CHECK(coin.u()(1, 1) == Complex{1.0});
  CHECK(coin.u()(3, 3) == Complex{1.0});
  CHECK(coin.unitarity_defect() == 0.0);
}

TEST_CASE("hadamard-embedded coin is unitary") {
  const CoinMatrix coin = build_hadamard_coin();
  CHECK(coin.unitarity_defect() < 1e-15);
}

TEST_CASE("non-unitary coin is rejected with its defect") {
  try {
    build_general_coin({1.0, 1.0, 0.0, 1.0});
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    // |a|^2 + |b|^2 - 1 = 1 dominates.
    CHECK(e.defect() == doctest::Approx(1.0));
  }
  CHECK_THROWS_AS(build_general_coin({0.0, 0.0, 0.0, 0.0}), ValidationError);
  CHECK_THROWS_AS(build_general_coin({1.0 + 1e-9, 0.0, 0.0, 1.0}), ValidationError);
}

TEST_CASE("grover diffusion matrices") {
  SUBCASE("dim 2 is the NOT gate") {
    const Eigen::MatrixXcd g = grover_diffusion(2);
    Eigen::Matrix2cd expected;
    expected << 0.0, 1.0, 1.0, 0.0;
    CHECK((g - expected).cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("dim 4") {
    const Eigen::MatrixXcd g = grover_diffusion(4);
    Eigen::Matrix4cd expected;
    expected << -1, 1, 1, 1, 1, -1, 1, 1, 1, 1, -1, 1, 1, 1, 1, -1;
    CHECK((g - 0.5 * expected).cwiseAbs().maxCoeff() < 1e-15);
  }
  SUBCASE("dim 1") {
    const Eigen::MatrixXcd g = grover_diffusion(1);
    CHECK(g.rows() == 1);
    CHECK(g(0, 0) == Complex{1.0});
  }
  SUBCASE("symmetric and unitary") {
    for (std::size_t d : {1u, 2u, 3u, 4u, 8u}) {
      const Eigen::MatrixXcd g = grover_diffusion(d);
      const auto n = static_cast<Eigen::Index>(d);
      CHECK((g - g.transpose()).cwiseAbs().maxCoeff() == 0.0);
      CHECK((g.adjoint() * g - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-14);
    }
  }
  CHECK_THROWS_AS(grover_diffusion(0), PreconditionError);
}

TEST_CASE("grover coin spec matches the 2x2 diffusion") {
  const Eigen::MatrixXcd g = grover_diffusion(2);
  const CoinSpec spec = build_grover_coin().spec();
  CHECK(spec.a == g(0, 0));
  CHECK(spec.c == g(0, 1));
  CHECK(spec.b == g(1, 0));
  CHECK(spec.d == g(1, 1));
}

TEST_CASE("chirality index") {
  CHECK(chirality_from_index(0) == Chirality::kRightToLeft);
  CHECK(chirality_from_index(3) == Chirality::kRightToRight);
  CHECK(is_left_mover(Chirality::kLeftToLeft));
  CHECK_FALSE(is_left_mover(Chirality::kLeftToRight));
  CHECK_THROWS_AS(chirality_from_index(4), PreconditionError);
  CHECK_THROWS_AS(chirality_from_index(-1), PreconditionError);
}
