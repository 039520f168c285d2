#pragma once

#include <cstddef>

#include <Eigen/Core>

#include "qwalk/types.hpp"

namespace qwalk {

/// Unitarity tolerance applied to coin parameters and the assembled 4x4 coin.
inline constexpr double kCoinTolerance = 1e-12;

/// The embedded 2x2 coin [[a, c], [b, d]].
struct CoinSpec {
  Complex a;
  Complex b;
  Complex c;
  Complex d;

  /// Largest deviation of [[a, c], [b, d]] from unitarity (column norms and
  /// column orthogonality).
  double unitarity_defect() const;
};

/// Internal coin state. 0 and 1 move left, 2 and 3 move right.
enum class Chirality : int {
  kRightToLeft = 0,
  kLeftToLeft = 1,
  kLeftToRight = 2,
  kRightToRight = 3,
};

/// Throws PreconditionError unless 0 <= index <= 3.
Chirality chirality_from_index(int index);

constexpr bool is_left_mover(Chirality c) {
  return c == Chirality::kRightToLeft || c == Chirality::kLeftToLeft;
}

/// One-step 4x4 coin together with its left/right row split U = P + R.
/// Instances are immutable and only produced by the builders below.
class CoinMatrix {
 public:
  const Matrix4& u() const { return u_; }
  /// Rows 0 and 1 of U (left movers); rows 2 and 3 are zero.
  const Matrix4& p() const { return p_; }
  /// Rows 2 and 3 of U (right movers); rows 0 and 1 are zero.
  const Matrix4& r() const { return r_; }
  const CoinSpec& spec() const { return spec_; }

  /// max |(U^dagger U - I)_ij|
  double unitarity_defect() const;

 private:
  friend CoinMatrix build_general_coin(const CoinSpec& spec);

  explicit CoinMatrix(const CoinSpec& spec);

  CoinSpec spec_;
  Matrix4 u_;
  Matrix4 p_;
  Matrix4 r_;
};

/// Embeds the 2x2 coin into the 4x4 pattern
///
///   [0 0 a c]
///   [b d 0 0]
///   [a c 0 0]
///   [0 0 b d]
///
/// Throws ValidationError (carrying the defect) if the 2x2 coin is not
/// unitary within kCoinTolerance.
CoinMatrix build_general_coin(const CoinSpec& spec);

/// (a, b, c, d) = (0, 1, 1, 0): U is the 4-cycle permutation 0->1->2->3->0.
CoinMatrix build_grover_coin();

/// (a, b, c, d) = (1, 1, 1, -1) / sqrt(2).
CoinMatrix build_hadamard_coin();

/// The dim x dim Grover diffusion matrix, entries 2/dim - delta_ij.
/// For dim = 2 this is [[0, 1], [1, 0]], the 2x2 matrix behind the Grover
/// coin spec (0, 1, 1, 0); note it is a NOT gate rather than a reflection
/// about a non-trivial subspace.
Eigen::MatrixXcd grover_diffusion(std::size_t dim);

}  // namespace qwalk
