#include "qwalk/commands.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qwalk/error.hpp"
#include "qwalk/limits.hpp"
#include "qwalk/output.hpp"
#include "qwalk/spectral.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

namespace {

struct Prepared {
  RunConfig config;
  CoinMatrix coin;
  CommandResult result;
};

Prepared prepare(const RunConfig& input) {
  RunConfig config = input;
  std::vector<std::string> warnings = validate_config(config);
  CoinMatrix coin = make_coin(config);
  ensure_directory(config.output_dir);
  Prepared p{std::move(config), std::move(coin), {}};
  p.result.warnings = std::move(warnings);
  const auto path = p.config.output_dir / "run_config.json";
  save_config(p.config, path);
  p.result.files.push_back(path);
  return p;
}

void emit(Prepared& p, const char* name, const std::string& contents) {
  const auto path = p.config.output_dir / name;
  write_text_file(path, contents);
  p.result.files.push_back(path);
}

}  // namespace

CommandResult cmd_simulate(const RunConfig& input) {
  Prepared p = prepare(input);
  const RunConfig& cfg = p.config;

  std::ostringstream dist_csv;
  dist_csv << "t,x,probability\n";
  std::vector<double> origin;
  origin.reserve(static_cast<std::size_t>(cfg.horizon) + 1);

  WalkState state = make_initial(cfg.initial);
  for (TimeStep t = 0; t <= cfg.horizon; ++t) {
    origin.push_back(state.amplitude(0).squaredNorm());
    if (t % cfg.stride == 0 || t == cfg.horizon) {
      for (const auto& [x, prob] : distribution(state).probabilities) {
        dist_csv << t << ',' << x << ',' << format_real(prob) << '\n';
      }
    }
    if (t < cfg.horizon) {
      state = step(state, p.coin);
    }
  }

  const auto period = detect_period(origin);
  const std::string period_text = period ? std::to_string(period->period) : "none";
  std::ostringstream origin_csv;
  origin_csv << "t,origin_probability,detected_period\n";
  for (std::size_t t = 0; t < origin.size(); ++t) {
    origin_csv << t << ',' << format_real(origin[t]) << ',' << period_text << '\n';
  }

  emit(p, "distribution.csv", dist_csv.str());
  emit(p, "origin_sequence.csv", origin_csv.str());
  return p.result;
}

CommandResult cmd_spectrum(const RunConfig& input) {
  Prepared p = prepare(input);
  const RunConfig& cfg = p.config;
  const std::vector<SpectralSample> samples = sample_spectrum(p.coin, cfg.initial, cfg.k_grid);

  std::ostringstream csv;
  csv << "k,branch,re_lambda,im_lambda,h,overlap,warnings\n";
  for (const SpectralSample& s : samples) {
    if (!s.warning.empty()) {
      p.result.warnings.push_back("k = " + format_real(s.k) + ": " + s.warning);
    }
    for (std::size_t j = 0; j < 4; ++j) {
      const Complex lambda = s.eig.pairs[j].value;
      const double h = s.group_velocities ? (*s.group_velocities)[j] : std::nan("");
      csv << format_real(s.k) << ',' << j << ',' << format_real(lambda.real()) << ','
          << format_real(lambda.imag()) << ',' << format_real(h) << ','
          << format_real(s.overlaps[j]) << ',' << csv_field(s.warning) << '\n';
    }
  }
  emit(p, "spectrum.csv", csv.str());
  return p.result;
}

CommandResult cmd_limits(const RunConfig& input) {
  Prepared p = prepare(input);
  const RunConfig& cfg = p.config;

  std::vector<double> spectral(static_cast<std::size_t>(cfg.r_max), std::nan(""));
  try {
    spectral = limit_moments_spectral(p.coin, cfg.initial, cfg.r_max, cfg.k_grid);
  } catch (const BranchTrackingError& e) {
    p.result.warnings.push_back(std::string("spectral moments unavailable: ") + e.what());
  }

  const Distribution dist = distribution(evolve(make_initial(cfg.initial), p.coin, cfg.horizon));
  const auto horizon = static_cast<double>(cfg.horizon);

  std::ostringstream moments_csv;
  moments_csv << "r,spectral_value,empirical_value_at_horizon,abs_diff\n";
  for (int r = 1; r <= cfg.r_max; ++r) {
    double empirical = 0.0;
    for (const auto& [x, prob] : dist.probabilities) {
      empirical += std::pow(static_cast<double>(x) / horizon, r) * prob;
    }
    const double spec = spectral[static_cast<std::size_t>(r - 1)];
    moments_csv << r << ',' << format_real(spec) << ',' << format_real(empirical) << ','
                << format_real(std::abs(spec - empirical)) << '\n';
  }

  // Bins of width 2/n over [-1, 1]; v = 1 falls in the last bin.
  const std::size_t bins = cfg.hist_bins;
  std::vector<double> hist(bins, 0.0);
  for (const auto& [x, prob] : dist.probabilities) {
    const double v = static_cast<double>(x) / horizon;
    const auto raw = static_cast<std::int64_t>(std::floor((v + 1.0) / 2.0 * static_cast<double>(bins)));
    const auto index = std::clamp<std::int64_t>(raw, 0, static_cast<std::int64_t>(bins) - 1);
    hist[static_cast<std::size_t>(index)] += prob;
  }
  std::ostringstream hist_csv;
  hist_csv << "bin_center,probability\n";
  for (std::size_t b = 0; b < bins; ++b) {
    const double center = -1.0 + (2.0 * static_cast<double>(b) + 1.0) / static_cast<double>(bins);
    hist_csv << format_real(center) << ',' << format_real(hist[b]) << '\n';
  }

  emit(p, "moments.csv", moments_csv.str());
  emit(p, "rescaled_hist.csv", hist_csv.str());
  return p.result;
}

CommandResult cmd_claims(const RunConfig& input) {
  Prepared p = prepare(input);
  const std::vector<ClaimReport> reports =
      audit_claims(p.coin, p.config.initial, audit_config(p.config));
  emit(p, "claims.json", claims_to_json(reports));
  emit(p, "claims.txt", claims_to_text(reports));
  return p.result;
}

}  // namespace qwalk
