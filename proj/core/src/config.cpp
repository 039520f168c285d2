#include "qwalk/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qwalk/error.hpp"
#include "qwalk/output.hpp"

namespace qwalk {

namespace {

using nlohmann::json;

json complex_to_json(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

Complex complex_from_json(const json& node, const std::string& where) {
  if (!node.is_object() || !node.contains("re")) {
    throw ConfigError(where + " must be an object {\"re\": x, \"im\": y}");
  }
  const double re = node.at("re").get<double>();
  const double im = node.contains("im") ? node.at("im").get<double>() : 0.0;
  return {re, im};
}

template <typename T>
void read_if_present(const json& root, const char* key, T& target) {
  if (root.contains(key)) {
    target = root.at(key).get<T>();
  }
}

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace

std::string_view to_string(CoinKind kind) {
  switch (kind) {
    case CoinKind::kGrover:
      return "grover";
    case CoinKind::kHadamard:
      return "hadamard";
    case CoinKind::kCustom:
      break;
  }
  return "custom";
}

CoinKind coin_kind_from_string(std::string_view name) {
  if (name == "grover") {
    return CoinKind::kGrover;
  }
  if (name == "hadamard") {
    return CoinKind::kHadamard;
  }
  if (name == "custom") {
    return CoinKind::kCustom;
  }
  throw ConfigError("unknown coin '" + std::string(name) +
                    "' (expected grover, hadamard or custom)");
}

RunConfig parse_config(std::string_view json_text) {
  RunConfig config;
  try {
    const json root = json::parse(json_text);
    if (!root.is_object()) {
      throw ConfigError("config must be a JSON object");
    }
    if (root.contains("coin")) {
      config.coin = coin_kind_from_string(root.at("coin").get<std::string>());
    }
    if (root.contains("custom_coin")) {
      const json& c = root.at("custom_coin");
      config.custom_coin = {complex_from_json(c.at("a"), "custom_coin.a"),
                            complex_from_json(c.at("b"), "custom_coin.b"),
                            complex_from_json(c.at("c"), "custom_coin.c"),
                            complex_from_json(c.at("d"), "custom_coin.d")};
    }
    if (root.contains("initial")) {
      const json& s = root.at("initial");
      config.initial = {complex_from_json(s.at("alpha"), "initial.alpha"),
                        complex_from_json(s.at("beta"), "initial.beta"),
                        complex_from_json(s.at("gamma"), "initial.gamma"),
                        complex_from_json(s.at("mu"), "initial.mu")};
    }
    read_if_present(root, "horizon", config.horizon);
    read_if_present(root, "k_grid", config.k_grid);
    if (root.contains("output_dir")) {
      config.output_dir = root.at("output_dir").get<std::string>();
    }
    read_if_present(root, "seed", config.seed);
    read_if_present(root, "stride", config.stride);
    read_if_present(root, "offsite_positions", config.offsite_positions);
    read_if_present(root, "r_max", config.r_max);
    read_if_present(root, "hist_bins", config.hist_bins);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("invalid config: ") + e.what());
  }
  return config;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot read config file " + path.string());
  }
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

std::string serialize_config(const RunConfig& config) {
  const json root = {
      {"coin", std::string(to_string(config.coin))},
      {"custom_coin",
       {{"a", complex_to_json(config.custom_coin.a)},
        {"b", complex_to_json(config.custom_coin.b)},
        {"c", complex_to_json(config.custom_coin.c)},
        {"d", complex_to_json(config.custom_coin.d)}}},
      {"initial",
       {{"alpha", complex_to_json(config.initial.alpha)},
        {"beta", complex_to_json(config.initial.beta)},
        {"gamma", complex_to_json(config.initial.gamma)},
        {"mu", complex_to_json(config.initial.mu)}}},
      {"horizon", config.horizon},
      {"k_grid", config.k_grid},
      {"output_dir", config.output_dir.string()},
      {"seed", config.seed},
      {"stride", config.stride},
      {"offsite_positions", config.offsite_positions},
      {"r_max", config.r_max},
      {"hist_bins", config.hist_bins},
  };
  return root.dump(2) + "\n";
}

void save_config(const RunConfig& config, const std::filesystem::path& path) {
  write_text_file(path, serialize_config(config));
}

std::vector<std::string> validate_config(RunConfig& config) {
  if (config.horizon < 1) {
    throw ConfigError("horizon must be >= 1 (got " + std::to_string(config.horizon) + ")");
  }
  if (config.k_grid < 64 || !is_power_of_two(config.k_grid)) {
    throw ConfigError("k_grid must be a power of two >= 64 (got " +
                      std::to_string(config.k_grid) + ")");
  }
  if (config.stride < 1) {
    throw ConfigError("stride must be >= 1");
  }
  if (config.r_max < 1) {
    throw ConfigError("r_max must be >= 1");
  }
  if (config.hist_bins < 1) {
    throw ConfigError("hist_bins must be >= 1");
  }

  std::vector<std::string> warnings;
  const double defect = config.initial.norm_defect();
  if (!(defect <= kConfigRenormalizeTolerance)) {
    std::ostringstream msg;
    msg << "initial state norm defect " << defect << " exceeds "
        << kConfigRenormalizeTolerance;
    throw ConfigError(msg.str());
  }
  if (defect > kInitialNormTolerance) {
    const double scale = 1.0 / std::sqrt(config.initial.norm_squared());
    config.initial = InitialState::from_vector(config.initial.as_vector() * scale);
    if (defect > kConfigNormTolerance) {
      std::ostringstream msg;
      msg << "initial state renormalized (norm defect " << defect << ")";
      warnings.push_back(msg.str());
    }
  }
  return warnings;
}

CoinMatrix make_coin(const RunConfig& config) {
  switch (config.coin) {
    case CoinKind::kGrover:
      return build_grover_coin();
    case CoinKind::kHadamard:
      return build_hadamard_coin();
    case CoinKind::kCustom:
      break;
  }
  try {
    return build_general_coin(config.custom_coin);
  } catch (const ValidationError& e) {
    throw ConfigError(e.what());
  }
}

AuditConfig audit_config(const RunConfig& config) {
  AuditConfig audit;
  audit.horizon = config.horizon;
  audit.k_grid = config.k_grid;
  audit.offsite_positions = config.offsite_positions;
  audit.r_max = config.r_max;
  return audit;
}

}  // namespace qwalk
