#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/sequence.hpp"
#include "qwalk/types.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

/// Closed-form stationary values claimed for the 4-state Grover walk:
///   even:    |mu|^2 + (|gamma|^2 + |beta|^2 + |alpha|^2) / 4
///   odd:     1/4 + Im(conj(alpha) mu) + Im(conj(gamma) beta) + |mu|^2 + |beta|^2
///   offsite: 0 for every x != 0
/// The odd value is not bounded by 1 (e.g. 1.25 for (0, 0, 0, 1)).
struct Theorem1Prediction {
  double even_limit = 0.0;
  double odd_limit = 0.0;
  double offsite_limit = 0.0;
};

Theorem1Prediction theorem1_predict(const InitialState& init);

/// P(X_{2t} = x) and P(X_{2t+1} = x) from exact evolution up to max_t.
struct ParitySequences {
  std::vector<double> even;
  std::vector<double> odd;
  std::optional<PeriodInfo> even_period;
  std::optional<PeriodInfo> odd_period;
};

ParitySequences oracle_stationary(const CoinMatrix& coin, const InitialState& init, Position x,
                                  TimeStep max_t);

enum class BranchSelection {
  /// The two branches with eigenvalue -1 and +1.
  kLocalizedPair,
  kAll,
};

/// Trapezoidal k-average of sum_j |<v_j(k)|psi0>|^2 over the selected
/// branches, with unit-norm eigenvectors. Real and in [0, 1].
///
/// For the Grover coin the localized pair gives exactly 1/2 + Re(conj(alpha) gamma):
/// the alpha/gamma cross term has a k-independent phase on those branches.
double delta_mass_quadrature(const CoinMatrix& coin, const InitialState& init,
                             std::size_t grid_size,
                             BranchSelection selection = BranchSelection::kLocalizedPair);

/// The two closed forms printed for the delta mass: alpha mu i / 2 from the
/// derivation and mu i / 2 from the theorem statement. Both are generally
/// non-real.
struct DeltaClosedForms {
  Complex derivation;
  Complex theorem;
};

DeltaClosedForms delta_paper_value(const InitialState& init);

/// f_K(x) = 1 / (pi (1 - x^2) sqrt(1 - 2 x^2)) on (0, 1/sqrt 2), 0 outside
/// (0, 1). Throws DomainError on [1/sqrt 2, 1) where the radicand is negative.
double konno_density(double x);

/// Limit measure Delta delta_0(x) + (c0 + c1 x + c2 x^2) f_K(x). The density
/// weights have no defining formula and stay unset.
struct LimitMeasure {
  Complex delta_mass;
  std::optional<std::array<double, 3>> density_weights;

  static double density_kernel(double x) { return konno_density(x); }
};

/// delta_mass is the localized-pair quadrature value.
LimitMeasure limit_measure(const CoinMatrix& coin, const InitialState& init,
                           std::size_t grid_size);

/// M_r = k-average of sum_j h_j(k)^r |<v_j(k)|psi0>|^2 for r = 1..r_max.
/// Throws BranchTrackingError when any grid point cannot be tracked.
std::vector<double> limit_moments_spectral(const CoinMatrix& coin, const InitialState& init,
                                           int r_max, std::size_t grid_size);

/// E[(X_t / t)^r] for r = 1..r_max from the exact time-t distribution.
std::vector<double> empirical_rescaled_moments(const CoinMatrix& coin, const InitialState& init,
                                               TimeStep t, int r_max);

}  // namespace qwalk
