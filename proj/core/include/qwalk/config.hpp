#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "qwalk/claims.hpp"
#include "qwalk/coin.hpp"
#include "qwalk/types.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

enum class CoinKind { kGrover, kHadamard, kCustom };

std::string_view to_string(CoinKind kind);
/// Accepts "grover", "hadamard", "custom"; throws ConfigError otherwise.
CoinKind coin_kind_from_string(std::string_view name);

/// Everything needed to reproduce a run. Serialized as JSON with complex
/// numbers written as {"re": x, "im": y}:
///
///   {
///     "coin": "grover" | "hadamard" | "custom",
///     "custom_coin": {"a": {...}, "b": {...}, "c": {...}, "d": {...}},
///     "initial": {"alpha": {...}, "beta": {...}, "gamma": {...}, "mu": {...}},
///     "horizon": 64, "k_grid": 256, "output_dir": "out", "seed": 0,
///     "stride": 1, "offsite_positions": [-2, -1, 1, 2], "r_max": 4,
///     "hist_bins": 40
///   }
///
/// Keys missing from a file keep the defaults below.
struct RunConfig {
  CoinKind coin = CoinKind::kGrover;
  CoinSpec custom_coin{Complex{0.0}, Complex{1.0}, Complex{1.0}, Complex{0.0}};
  InitialState initial{Complex{1.0}, Complex{0.0}, Complex{0.0}, Complex{0.0}};
  TimeStep horizon = 64;
  std::size_t k_grid = 256;
  std::filesystem::path output_dir = "out";
  /// Reserved for randomized tooling; the walk itself is deterministic.
  std::uint64_t seed = 0;
  /// Time stride of distribution.csv (the horizon is always written).
  TimeStep stride = 1;
  std::vector<Position> offsite_positions{-2, -1, 1, 2};
  int r_max = 4;
  std::size_t hist_bins = 40;
};

RunConfig parse_config(std::string_view json_text);
RunConfig load_config(const std::filesystem::path& path);
std::string serialize_config(const RunConfig& config);
void save_config(const RunConfig& config, const std::filesystem::path& path);

inline constexpr double kConfigNormTolerance = 1e-9;
inline constexpr double kConfigRenormalizeTolerance = 1e-6;

/// Checks the run invariants (horizon >= 1, k_grid a power of two >= 64,
/// stride/r_max/hist_bins >= 1) and the initial-state norm. A norm defect up
/// to 1e-6 is repaired in place by renormalization; anything beyond 1e-9
/// produces a warning. Throws ConfigError on violations.
std::vector<std::string> validate_config(RunConfig& config);

/// Throws ConfigError (with the unitarity defect) for a non-unitary custom coin.
CoinMatrix make_coin(const RunConfig& config);

AuditConfig audit_config(const RunConfig& config);

}  // namespace qwalk
