#include "qwalk/sequence.hpp"

#include <algorithm>
#include <cmath>

namespace qwalk {

std::optional<PeriodInfo> detect_period(std::span<const double> values, double tol) {
  const std::size_t n = values.size();
  if (n < 2) {
    return std::nullopt;
  }
  const std::size_t latest_onset = (n - 1) / 2;
  for (std::size_t p = 1; 2 * p <= n; ++p) {
    // The repetition must hold on [onset, n); find the last violation.
    std::size_t onset = 0;
    for (std::size_t t = n - p; t-- > 0;) {
      if (!(std::abs(values[t + p] - values[t]) <= tol)) {
        onset = t + 1;
        break;
      }
    }
    if (onset > latest_onset || n - onset < 2 * p) {
      continue;
    }
    PeriodInfo info;
    info.period = p;
    info.onset = onset;
    info.cycle.assign(values.begin() + static_cast<std::ptrdiff_t>(onset),
                      values.begin() + static_cast<std::ptrdiff_t>(onset + p));
    return info;
  }
  return std::nullopt;
}

LimitBehavior classify_limit(std::span<const double> values, double tol) {
  LimitBehavior behavior;
  if (values.empty()) {
    return behavior;
  }
  const std::size_t n = values.size();
  const std::size_t tail = std::max<std::size_t>(n / 4, 1);
  const auto last_quarter = values.subspan(n - tail);
  const auto [lo, hi] = std::minmax_element(last_quarter.begin(), last_quarter.end());
  if (*hi - *lo < tol) {
    behavior.kind = LimitKind::kConvergent;
    behavior.values = {values.back()};
    behavior.period = 1;
    return behavior;
  }
  if (auto period = detect_period(values, tol)) {
    behavior.kind = LimitKind::kPeriodic;
    behavior.values = std::move(period->cycle);
    behavior.period = period->period;
    return behavior;
  }
  behavior.values.assign(last_quarter.begin(), last_quarter.end());
  return behavior;
}

}  // namespace qwalk
