#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "qwalk/parrondo.hpp"

namespace qwalk {

/// Anything wrong with a config file or its referenced files.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

nlohmann::json step_to_json(const QuantumStep& step);
QuantumStep step_from_json(const nlohmann::json& j);

nlohmann::json walk_to_json(const Walk& w);

/// Parse {"steps":[...],"repeat":n}. Elements are step objects or nested
/// walk blocks; nested blocks are expanded in place, the outermost repeat
/// stays symbolic.
Walk walk_from_json(const nlohmann::json& j);

/// Everything a CLI command may need; commands validate the fields they
/// actually use.
struct RunConfig {
    std::optional<Walk> walk;
    std::vector<QuantumStep> steps;   // family base steps
    long long cycles = 1;
    std::string observable_token = "mu";
    Observable observable = mu();
    double omega = 0.0;
    std::optional<CoinDensity> home;
    int grid_theta = 181;
    int grid_phi = 361;
    long long n_from = 1;
    long long n_to = 1;
    bool has_n_range = false;
    std::vector<std::pair<std::string, CoinState>> marks;
    bool svg = true;
    std::optional<DesignSpec> design;
};

RunConfig config_from_json(const nlohmann::json& j);
RunConfig load_config(const std::string& path);

/// Parse "NTxNP".
std::pair<int, int> parse_grid(const std::string& text);

Observable observable_from_token(const std::string& token);

}  // namespace qwalk
