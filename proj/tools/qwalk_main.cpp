// qwalk: simulate the 4-state walk on the line, dump its spectrum, compare
// limit moments, and audit the closed-form stationary/limit claims.
//
//   qwalk <simulate|spectrum|limits|claims> [--config run.json] [overrides]

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qwalk/commands.hpp"
#include "qwalk/config.hpp"
#include "qwalk/error.hpp"

namespace {

constexpr int kExitConfigError = 2;
constexpr int kExitIoError = 3;

struct ComplexFlags {
  std::optional<double> re;
  std::optional<double> im;

  void add(CLI::App& app, const std::string& name) {
    app.add_option("--" + name + "-re", re, "real part of " + name);
    app.add_option("--" + name + "-im", im, "imaginary part of " + name);
  }

  void apply(qwalk::Complex& z) const {
    if (re) {
      z.real(*re);
    }
    if (im) {
      z.imag(*im);
    }
  }
};

struct Overrides {
  std::string config_path;
  std::optional<std::string> coin;
  ComplexFlags a, b, c, d;
  ComplexFlags alpha, beta, gamma, mu;
  std::optional<qwalk::TimeStep> horizon;
  std::optional<std::size_t> k_grid;
  std::optional<std::string> out;
  std::optional<std::uint64_t> seed;
  std::optional<qwalk::TimeStep> stride;
  std::optional<int> r_max;
  std::optional<std::size_t> hist_bins;
  std::string save_config;

  qwalk::RunConfig resolve() const {
    qwalk::RunConfig cfg = config_path.empty() ? qwalk::RunConfig{} : qwalk::load_config(config_path);
    if (coin) {
      cfg.coin = qwalk::coin_kind_from_string(*coin);
    }
    a.apply(cfg.custom_coin.a);
    b.apply(cfg.custom_coin.b);
    c.apply(cfg.custom_coin.c);
    d.apply(cfg.custom_coin.d);
    alpha.apply(cfg.initial.alpha);
    beta.apply(cfg.initial.beta);
    gamma.apply(cfg.initial.gamma);
    mu.apply(cfg.initial.mu);
    if (horizon) cfg.horizon = *horizon;
    if (k_grid) cfg.k_grid = *k_grid;
    if (out) cfg.output_dir = *out;
    if (seed) cfg.seed = *seed;
    if (stride) cfg.stride = *stride;
    if (r_max) cfg.r_max = *r_max;
    if (hist_bins) cfg.hist_bins = *hist_bins;
    return cfg;
  }
};

void add_run_options(CLI::App& sub, Overrides& o) {
  sub.add_option("--config", o.config_path, "JSON run configuration")->check(CLI::ExistingFile);
  sub.add_option("--coin", o.coin, "grover | hadamard | custom");
  o.a.add(sub, "a");
  o.b.add(sub, "b");
  o.c.add(sub, "c");
  o.d.add(sub, "d");
  o.alpha.add(sub, "alpha");
  o.beta.add(sub, "beta");
  o.gamma.add(sub, "gamma");
  o.mu.add(sub, "mu");
  sub.add_option("--horizon", o.horizon, "maximum time step");
  sub.add_option("--k-grid", o.k_grid, "wavenumber grid size (power of two >= 64)");
  sub.add_option("--out", o.out, "output directory");
  sub.add_option("--seed", o.seed, "reserved seed");
  sub.add_option("--stride", o.stride, "time stride of distribution.csv");
  sub.add_option("--r-max", o.r_max, "highest moment order");
  sub.add_option("--hist-bins", o.hist_bins, "bins of rescaled_hist.csv");
  sub.add_option("--save-config", o.save_config,
                 "also write the effective configuration to this path");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"4-state quantum walk simulator and claim auditor"};
  app.require_subcommand(1);

  Overrides overrides;
  using Command = qwalk::CommandResult (*)(const qwalk::RunConfig&);
  struct Entry {
    const char* name;
    const char* help;
    Command run;
  };
  const Entry entries[] = {
      {"simulate", "exact evolution: distribution.csv, origin_sequence.csv", qwalk::cmd_simulate},
      {"spectrum", "eigen-decomposition of U(k): spectrum.csv", qwalk::cmd_spectrum},
      {"limits", "limit moments and X_t/t histogram: moments.csv, rescaled_hist.csv",
       qwalk::cmd_limits},
      {"claims", "audit of the closed-form claims: claims.json, claims.txt", qwalk::cmd_claims},
  };
  std::vector<std::pair<CLI::App*, Command>> subcommands;
  for (const Entry& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    add_run_options(*sub, overrides);
    subcommands.emplace_back(sub, e.run);
  }

  CLI11_PARSE(app, argc, argv);

  try {
    const qwalk::RunConfig config = overrides.resolve();
    if (!overrides.save_config.empty()) {
      qwalk::save_config(config, overrides.save_config);
    }
    for (const auto& [sub, run] : subcommands) {
      if (sub->parsed()) {
        const qwalk::CommandResult result = run(config);
        for (const auto& w : result.warnings) {
          std::cerr << "warning: " << w << '\n';
        }
        for (const auto& f : result.files) {
          std::cout << f.string() << '\n';
        }
      }
    }
  } catch (const qwalk::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const qwalk::IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kExitIoError;
  } catch (const qwalk::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
