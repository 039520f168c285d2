#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/types.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

inline constexpr double kEigenResidualTolerance = 1e-10;
inline constexpr double kDefaultVelocityStep = 1e-4;
inline constexpr std::size_t kDefaultGridSize = 256;

/// U(k) = R(k) U with R(k) = diag(e^{ik}, e^{ik}, e^{-ik}, e^{-ik}).
struct MomentumOperator {
  double k = 0.0;
  Matrix4 uk;
  /// Diagonal of R(k).
  Vector4 phases;
};

MomentumOperator build_momentum_operator(const CoinMatrix& coin, double k);

struct EigenPair {
  Complex value;
  /// Unit norm; the largest-magnitude component is real and positive.
  Vector4 vector;
};

/// Four eigenpairs sorted by arg(value) in [-pi, pi), ties broken by the
/// lexicographic order of the eigenvector components.
struct Eigensystem {
  std::array<EigenPair, 4> pairs;
  double max_residual = 0.0;
};

/// Throws EigenSolveError if any residual ||U(k)v - lambda v|| reaches 1e-10,
/// which only happens for non-unitary input.
Eigensystem eigensystem(const MomentumOperator& op);

/// Principal argument mapped into [-pi, pi).
double principal_arg(Complex z);

/// h_j(k) = Re[D lambda_j / lambda_j] with D = i d/dk, i.e. -d arg(lambda_j)/dk,
/// by a central difference on the branch tracked from k to k +- dk.
struct GroupVelocity {
  double value = 0.0;
  /// Imaginary part of the difference quotient before it was discarded.
  double imaginary_residue = 0.0;
};

/// `branch` indexes eigensystem(build_momentum_operator(coin, k)).pairs.
/// Throws BranchTrackingError at eigenvalue collisions or ambiguous matches.
GroupVelocity group_velocity(const CoinMatrix& coin, std::size_t branch, double k,
                             double dk = kDefaultVelocityStep);

/// |<v_j(k)|psi0>|^2 for the four eigenvectors; psi0 is the (k-independent)
/// Fourier transform of an origin-localized initial state.
std::array<double, 4> overlap_density(const Eigensystem& eig, const Vector4& psi0);
std::array<double, 4> overlap_density(const Eigensystem& eig, const InitialState& init);

/// Uniform grid k_m = -pi + 2 pi m / n, m = 0..n-1.
std::vector<double> k_grid(std::size_t n);

struct SpectralSample {
  double k = 0.0;
  Eigensystem eig;
  std::array<double, 4> overlaps{};
  /// Empty where branch tracking failed at this k; see `warning`.
  std::optional<std::array<double, 4>> group_velocities;
  std::string warning;
};

/// Per-k spectral data on k_grid(grid_size). The k points are evaluated in
/// parallel and returned in grid order.
std::vector<SpectralSample> sample_spectrum(const CoinMatrix& coin, const InitialState& init,
                                            std::size_t grid_size,
                                            double dk = kDefaultVelocityStep);

/// Time-t state obtained by applying U(k_m)^t on the ring wavenumbers
/// k_m = 2 pi m / N - pi and transforming back. Requires an even N >= 2t + 3
/// so the light cone does not wrap.
WalkState fourier_propagate(const CoinMatrix& coin, const InitialState& init, TimeStep t,
                            std::size_t ring_size);

}  // namespace qwalk
