#include "n2s/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <numbers>
#include <sstream>

#include "n2s/errors.hpp"
#include "n2s/schrodinger.hpp"

namespace n2s::scenario {

namespace {

const std::vector<std::string> kScenarios = {
    "free-packet", "harmonic-coherent", "quartic-packet", "spectra", "derivation-suite"};

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const double v = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("invalid numeric value for '" + key + "': " + value);
    }
}

long parse_long(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const long v = std::stol(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("invalid integer value for '" + key + "': " + value);
    }
}

void apply_scenario_defaults(ScenarioConfig& cfg) {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    if (cfg.scenario == "free-packet") {
        cfg.x_min = -12.0;
        cfg.x_max = 12.0;
        cfg.steps = 2000;
        cfg.potential = "free";
        cfg.x0 = 0.0;
        cfg.sigma = 1.0;
        cfg.k0 = 0.0;
    } else if (cfg.scenario == "harmonic-coherent") {
        cfg.x_min = -10.0;
        cfg.x_max = 10.0;
        cfg.steps = 6283;
        cfg.potential = "harmonic";
        cfg.potential_param = 1.0;
        cfg.x0 = 1.0;
        cfg.sigma = inv_sqrt2;
    } else if (cfg.scenario == "quartic-packet") {
        cfg.x_min = -10.0;
        cfg.x_max = 10.0;
        cfg.steps = 2000;
        cfg.record_every = 5;
        cfg.potential = "quartic";
        cfg.potential_param = 0.25;
        cfg.x0 = 1.0;
        cfg.sigma = inv_sqrt2;
    } else if (cfg.scenario == "spectra") {
        cfg.x_min = -10.0;
        cfg.x_max = 10.0;
        cfg.potential = "harmonic";
        cfg.potential_param = 1.0;
        cfg.eigen_count = 6;
    } else if (cfg.scenario == "derivation-suite") {
        cfg.format = OutputFormat::json;
    }
}

dynamics::Potential make_potential(const ScenarioConfig& cfg) {
    if (cfg.potential == "free") return dynamics::Potential::free_space();
    if (cfg.potential == "harmonic") return dynamics::Potential::harmonic(cfg.potential_param);
    if (cfg.potential == "linear") return dynamics::Potential::linear(cfg.potential_param);
    if (cfg.potential == "quartic") return dynamics::Potential::quartic(cfg.potential_param);
    throw ConfigError("unknown potential '" + cfg.potential +
                      "' (expected free, harmonic, linear or quartic)");
}

struct NamedColumns {
    std::string header;
    std::vector<std::string> keys;
    std::vector<std::vector<double>> rows;
};

std::string render_csv(const NamedColumns& table) {
    std::string out = table.header + "\n";
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += format_double(row[i]);
        }
        out += '\n';
    }
    return out;
}

std::string render_json(const NamedColumns& table) {
    std::string out = "[\n";
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        out += "  {";
        for (std::size_t i = 0; i < table.keys.size(); ++i) {
            if (i) out += ", ";
            out += "\"" + table.keys[i] + "\": " + format_double(table.rows[r][i]);
        }
        out += r + 1 < table.rows.size() ? "},\n" : "}\n";
    }
    out += "]\n";
    return out;
}

std::string render_table(const NamedColumns& table, OutputFormat format) {
    return format == OutputFormat::csv ? render_csv(table) : render_json(table);
}

std::string run_propagation(const ScenarioConfig& cfg) {
    const Grid1D grid(cfg.x_min, cfg.x_max, cfg.n);
    const double hbar = 1.0 / cfg.alpha;
    const auto pot = make_potential(cfg);
    const auto H = schrodinger::build_hamiltonian(grid, pot, cfg.mass, hbar);
    const auto psi = schrodinger::gaussian_packet(grid, cfg.x0, cfg.sigma, cfg.k0);
    const auto trace = schrodinger::propagate(psi, H, cfg.dt, cfg.steps, cfg.record_every);

    NamedColumns table;
    table.header = "t,norm,x_exp,p_exp,gradU_exp,E_exp";
    table.keys = {"t", "norm", "x_exp", "p_exp", "gradU_exp", "E_exp"};
    table.rows.reserve(trace.size());
    for (std::size_t i = 0; i < trace.size(); ++i)
        table.rows.push_back({trace.times[i], trace.norms[i], trace.position[i],
                              trace.momentum[i], trace.grad_potential[i], trace.energy[i]});
    return render_table(table, cfg.format);
}

std::string run_spectra(const ScenarioConfig& cfg) {
    const double hbar = 1.0 / cfg.alpha;
    const auto pot = make_potential(cfg);

    Grid1D grid(cfg.x_min, cfg.x_max, cfg.n);
    if (cfg.potential == "free") {
        // Hard box: keep the Dirichlet phantom nodes exactly on the walls.
        const double h = (cfg.x_max - cfg.x_min) / (cfg.n + 1);
        grid = Grid1D(cfg.x_min + h, cfg.x_max - h, cfg.n);
    } else if (cfg.potential != "harmonic") {
        throw ConfigError("spectra scenario supports the free and harmonic potentials only");
    }

    const auto H = schrodinger::build_hamiltonian(grid, pot, cfg.mass, hbar);
    const auto pairs = schrodinger::eigensolve(H, cfg.eigen_count);

    const double box_length = cfg.x_max - cfg.x_min;
    const auto analytic_level = [&](int level) {
        if (cfg.potential == "free") {
            const double kn = (level + 1) * std::numbers::pi / box_length;
            return hbar * hbar * kn * kn / (2.0 * cfg.mass);
        }
        const double omega = std::sqrt(cfg.potential_param / cfg.mass);
        return (level + 0.5) * hbar * omega;
    };

    NamedColumns table;
    table.header = "n,energy,analytic,abs_err";
    table.keys = {"n", "energy", "analytic", "abs_err"};
    for (int level = 0; level < cfg.eigen_count; ++level) {
        const double analytic = analytic_level(level);
        table.rows.push_back({static_cast<double>(level), pairs[level].energy, analytic,
                              std::abs(pairs[level].energy - analytic)});
    }
    return render_table(table, cfg.format);
}

std::string run_suite(const ScenarioConfig& cfg) {
    verify::VerifyConfig vc;
    vc.grid_n = cfg.n;
    vc.dt = cfg.dt;
    vc.tolerance_scale = cfg.tolerance_scale;
    const auto results = verify::run_all(vc);
    if (cfg.format == OutputFormat::json) return render_verification_json(results);
    std::string out = "name,residual,tolerance,passed\n";
    for (const auto& r : results)
        out += r.name + "," + format_double(r.residual) + "," + format_double(r.tolerance) +
               "," + (r.passed ? "true" : "false") + "\n";
    return out;
}

}  // namespace

const std::vector<std::string>& known_scenarios() { return kScenarios; }

std::map<std::string, std::string> read_key_values(std::istream& in) {
    std::map<std::string, std::string> keys;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto comment = line.find('#');
        if (comment != std::string::npos) line.erase(comment);
        const std::string text = trim(line);
        if (text.empty()) continue;
        const auto eq = text.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(line_no) + ": expected key=value");
        const std::string key = trim(text.substr(0, eq));
        const std::string value = trim(text.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError("line " + std::to_string(line_no) + ": empty key or value");
        keys[key] = value;
    }
    return keys;
}

ScenarioConfig make_config(const std::map<std::string, std::string>& keys,
                           std::optional<int> default_grid_n) {
    ScenarioConfig cfg;
    const auto scenario_it = keys.find("scenario");
    if (scenario_it == keys.end()) throw ConfigError("missing required key 'scenario'");
    cfg.scenario = scenario_it->second;
    if (std::find(kScenarios.begin(), kScenarios.end(), cfg.scenario) == kScenarios.end()) {
        std::string msg = "unknown scenario '" + cfg.scenario + "'; valid scenarios:";
        for (const auto& s : kScenarios) msg += " " + s;
        throw ConfigError(msg);
    }
    if (default_grid_n) cfg.n = *default_grid_n;
    apply_scenario_defaults(cfg);

    for (const auto& [key, value] : keys) {
        if (key == "scenario") continue;
        if (key == "x_min") cfg.x_min = parse_double(key, value);
        else if (key == "x_max") cfg.x_max = parse_double(key, value);
        else if (key == "n") cfg.n = static_cast<int>(parse_long(key, value));
        else if (key == "dt") cfg.dt = parse_double(key, value);
        else if (key == "steps") cfg.steps = parse_long(key, value);
        else if (key == "record_every") cfg.record_every = static_cast<int>(parse_long(key, value));
        else if (key == "potential") cfg.potential = value;
        else if (key == "potential_param") cfg.potential_param = parse_double(key, value);
        else if (key == "x0") cfg.x0 = parse_double(key, value);
        else if (key == "sigma") cfg.sigma = parse_double(key, value);
        else if (key == "k0") cfg.k0 = parse_double(key, value);
        else if (key == "alpha") cfg.alpha = parse_double(key, value);
        else if (key == "mass") cfg.mass = parse_double(key, value);
        else if (key == "eigen_count") cfg.eigen_count = static_cast<int>(parse_long(key, value));
        else if (key == "tolerance_scale") cfg.tolerance_scale = parse_double(key, value);
        else if (key == "out") cfg.out_path = value;
        else if (key == "format") {
            if (value == "csv") cfg.format = OutputFormat::csv;
            else if (value == "json") cfg.format = OutputFormat::json;
            else throw ConfigError("invalid format '" + value + "' (expected csv or json)");
        } else {
            throw ConfigError("unknown config key '" + key + "'");
        }
    }

    if (cfg.n < 3) throw ConfigError("grid size n must be at least 3");
    if (!(cfg.x_max > cfg.x_min)) throw ConfigError("x_max must exceed x_min");
    if (!(cfg.dt > 0.0)) throw ConfigError("dt must be positive");
    if (cfg.steps < 0) throw ConfigError("steps must be non-negative");
    if (cfg.record_every < 1) throw ConfigError("record_every must be at least 1");
    if (!(cfg.alpha > 0.0)) throw ConfigError("alpha must be positive");
    if (!(cfg.mass > 0.0)) throw ConfigError("mass must be positive");
    if (!(cfg.sigma > 0.0)) throw ConfigError("sigma must be positive");
    if (cfg.eigen_count < 1) throw ConfigError("eigen_count must be at least 1");
    if (cfg.tolerance_scale < 0.0) throw ConfigError("tolerance_scale must be non-negative");
    return cfg;
}

ScenarioConfig load_config_file(const std::string& path, std::optional<int> default_grid_n) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    const auto keys = read_key_values(in);
    return make_config(keys, default_grid_n);
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string run_scenario(const ScenarioConfig& cfg) {
    if (cfg.scenario == "spectra") return run_spectra(cfg);
    if (cfg.scenario == "derivation-suite") return run_suite(cfg);
    return run_propagation(cfg);
}

std::string render_verification_json(const std::vector<verify::VerificationResult>& results) {
    std::string out = "[\n";
    for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& r = results[i];
        out += "  {\"name\": \"" + r.name + "\", \"residual\": " + format_double(r.residual) +
               ", \"tolerance\": " + format_double(r.tolerance) +
               ", \"passed\": " + (r.passed ? "true" : "false") + "}";
        out += i + 1 < results.size() ? ",\n" : "\n";
    }
    out += "]\n";
    return out;
}

}  // namespace n2s::scenario
