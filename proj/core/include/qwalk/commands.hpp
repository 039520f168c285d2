#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "qwalk/config.hpp"

namespace qwalk {

struct CommandResult {
  std::vector<std::filesystem::path> files;
  std::vector<std::string> warnings;
};

// Every command validates its own copy of the config (ConfigError), writes
// into config.output_dir (IoError) and records the effective configuration as
// run_config.json next to its outputs.

/// distribution.csv (t,x,probability) and origin_sequence.csv
/// (t,origin_probability,detected_period).
CommandResult cmd_simulate(const RunConfig& config);

/// spectrum.csv (k,branch,re_lambda,im_lambda,h,overlap,warnings).
CommandResult cmd_spectrum(const RunConfig& config);

/// moments.csv (r,spectral_value,empirical_value_at_horizon,abs_diff) and
/// rescaled_hist.csv (bin_center,probability) for X_t / t at the horizon.
CommandResult cmd_limits(const RunConfig& config);

/// claims.json and claims.txt. Verdicts never make this fail.
CommandResult cmd_claims(const RunConfig& config);

}  // namespace qwalk
