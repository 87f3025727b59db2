#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "n2s/verify.hpp"

namespace n2s::scenario {

enum class OutputFormat { csv, json };

/// Fully resolved run description: scenario defaults, then file keys, then
/// flag overrides, with N2S_DEFAULT_GRID_N supplying the grid size when no
/// explicit `n` is given.
struct ScenarioConfig {
    std::string scenario;
    double x_min = -12.0;
    double x_max = 12.0;
    int n = 2000;
    double dt = 1e-3;
    long steps = 2000;
    int record_every = 10;
    std::string potential = "free";
    double potential_param = 0.0;
    double x0 = 0.0;
    double sigma = 1.0;
    double k0 = 0.0;
    double alpha = 1.0;  // inverse action; hbar = 1/alpha
    double mass = 1.0;
    int eigen_count = 6;
    double tolerance_scale = 1.0;
    std::string out_path;
    OutputFormat format = OutputFormat::csv;
};

const std::vector<std::string>& known_scenarios();

/// Raised for configs the CLI rejects with exit status 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// `key = value` lines; blank lines and `#` comments ignored.
std::map<std::string, std::string> read_key_values(std::istream& in);

/// Resolve a config from parsed keys. Throws ConfigError for an unknown
/// scenario (message names the valid ones), unknown keys, or bad values.
ScenarioConfig make_config(const std::map<std::string, std::string>& keys,
                           std::optional<int> default_grid_n = std::nullopt);

ScenarioConfig load_config_file(const std::string& path,
                                std::optional<int> default_grid_n = std::nullopt);

/// Round-trippable double formatting (17 significant digits, C locale).
std::string format_double(double v);

/// Execute the scenario and render its report; byte-deterministic for a
/// fixed config. CSV columns are `t,norm,x_exp,p_exp,gradU_exp,E_exp` for
/// propagation scenarios and `n,energy,analytic,abs_err` for spectra; the
/// derivation suite renders the verification schema.
std::string run_scenario(const ScenarioConfig& cfg);

/// JSON array of {"name", "residual", "tolerance", "passed"}.
std::string render_verification_json(const std::vector<verify::VerificationResult>& results);

}  // namespace n2s::scenario
