#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/types.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

enum class Verdict { kConfirmed, kRefuted, kInconclusive };

std::string_view to_string(Verdict verdict);

/// A claimed or measured value: absent (not evaluable), real, complex, or a
/// sequence (periodic cycle, moment vector, ...).
using ClaimValue = std::variant<std::monostate, double, Complex, std::vector<double>>;

struct ClaimReport {
  std::string claim_id;
  ClaimValue predicted;
  ClaimValue observed;
  double tolerance = 0.0;
  Verdict verdict = Verdict::kInconclusive;
  std::string notes;
};

/// CONFIRMED iff every |predicted - observed| <= tolerance (element-wise; a
/// scalar prediction is compared against every observed element). Otherwise
/// REFUTED when the observation is settled (convergent or exactly periodic)
/// and INCONCLUSIVE when it is not, or when either side is absent.
Verdict judge(const ClaimValue& predicted, const ClaimValue& observed, double tolerance,
              bool observation_settled);

inline constexpr double kFormulaTolerance = 1e-6;
inline constexpr double kQuadratureTolerance = 1e-10;

struct AuditConfig {
  /// Oracle horizon; parity sequences need at least 8.
  TimeStep horizon = 64;
  std::size_t k_grid = 256;
  std::vector<Position> offsite_positions{-2, -1, 1, 2};
  int r_max = 4;
};

/// Claim ids, in report order:
///   theorem1.even, theorem1.odd, theorem1.offsite.x=<x> (per position),
///   localization, delta.derivation, delta.theorem, delta.completeness,
///   theorem2.moments, theorem2.density
std::vector<ClaimReport> audit_claims(const CoinMatrix& coin, const InitialState& init,
                                      const AuditConfig& config);

}  // namespace qwalk
