#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace qwalk {

inline constexpr double kSequenceTolerance = 1e-9;

/// Eventual period of a sampled sequence.
struct PeriodInfo {
  std::size_t period = 0;
  /// First index from which the repetition holds.
  std::size_t onset = 0;
  /// values[onset .. onset + period)
  std::vector<double> cycle;
};

/// Smallest p such that |s[t+p] - s[t]| <= tol for every t >= t0, for some
/// t0 <= (size-1)/2, with at least two full cycles after t0. Constant tails
/// report period 1.
std::optional<PeriodInfo> detect_period(std::span<const double> values,
                                        double tol = kSequenceTolerance);

enum class LimitKind { kConvergent, kPeriodic, kUndetermined };

/// What a finite oracle sequence says about its t -> infinity behaviour.
struct LimitBehavior {
  LimitKind kind = LimitKind::kUndetermined;
  /// Convergent: the final value. Periodic: one cycle. Undetermined: the
  /// last quarter of the samples.
  std::vector<double> values;
  std::size_t period = 0;
};

/// Convergent when the last quarter spreads less than tol, otherwise
/// periodic when detect_period succeeds, otherwise undetermined.
LimitBehavior classify_limit(std::span<const double> values, double tol = kSequenceTolerance);

}  // namespace qwalk
