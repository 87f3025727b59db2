// Command-line front end: scenario runs with CSV/JSON reports and the
// machine-checkable verification suite.
//
//   n2s run <config> [--out PATH] [--format csv|json]
//   n2s verify [--config PATH] [--tolerance-scale X] [--out PATH]
//   n2s --version
//
// Exit status: 0 success (verify: all checks passed), 1 verification
// failures, 2 bad usage or config, 3 unwritable output path.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "n2s/scenario.hpp"
#include "n2s/verify.hpp"

namespace {

constexpr const char* kVersion = "n2s 0.1.0";

int usage(std::ostream& os, int code) {
    os << "usage:\n"
       << "  n2s run <config> [--out PATH] [--format csv|json]\n"
       << "  n2s verify [--config PATH] [--tolerance-scale X] [--out PATH]\n"
       << "  n2s --version\n";
    return code;
}

std::optional<int> env_grid_n() {
    const char* raw = std::getenv("N2S_DEFAULT_GRID_N");
    if (!raw) return std::nullopt;
    try {
        return std::stoi(raw);
    } catch (const std::exception&) {
        throw n2s::scenario::ConfigError("N2S_DEFAULT_GRID_N must be an integer");
    }
}

int write_report(const std::string& path, const std::string& body) {
    if (path.empty()) {
        std::cout << body;
        return 0;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output path: " << path << "\n";
        return 3;
    }
    out << body;
    out.flush();
    if (!out) {
        std::cerr << "error: failed writing output path: " << path << "\n";
        return 3;
    }
    return 0;
}

int cmd_run(const std::vector<std::string>& args) {
    if (args.empty()) {
        std::cerr << "error: run needs a config file\n";
        return usage(std::cerr, 2);
    }
    const std::string config_path = args[0];
    std::optional<std::string> out_flag;
    std::optional<std::string> format_flag;
    for (std::size_t i = 1; i < args.size(); ++i) {
        if (args[i] == "--out" && i + 1 < args.size()) out_flag = args[++i];
        else if (args[i] == "--format" && i + 1 < args.size()) format_flag = args[++i];
        else {
            std::cerr << "error: unknown argument '" << args[i] << "'\n";
            return usage(std::cerr, 2);
        }
    }

    n2s::scenario::ScenarioConfig cfg = n2s::scenario::load_config_file(config_path, env_grid_n());
    if (out_flag) cfg.out_path = *out_flag;
    if (format_flag) {
        if (*format_flag == "csv") cfg.format = n2s::scenario::OutputFormat::csv;
        else if (*format_flag == "json") cfg.format = n2s::scenario::OutputFormat::json;
        else {
            std::cerr << "error: invalid --format '" << *format_flag << "'\n";
            return 2;
        }
    }

    const std::string body = n2s::scenario::run_scenario(cfg);
    return write_report(cfg.out_path, body);
}

int cmd_verify(const std::vector<std::string>& args) {
    std::optional<std::string> config_path;
    std::optional<double> tolerance_scale;
    std::string out_path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) config_path = args[++i];
        else if (args[i] == "--tolerance-scale" && i + 1 < args.size()) {
            try {
                tolerance_scale = std::stod(args[++i]);
            } catch (const std::exception&) {
                std::cerr << "error: --tolerance-scale needs a number\n";
                return 2;
            }
        } else if (args[i] == "--out" && i + 1 < args.size()) out_path = args[++i];
        else {
            std::cerr << "error: unknown argument '" << args[i] << "'\n";
            return usage(std::cerr, 2);
        }
    }

    n2s::verify::VerifyConfig vc;
    if (const auto n = env_grid_n()) vc.grid_n = *n;
    if (config_path) {
        std::ifstream in(*config_path);
        if (!in) {
            std::cerr << "error: cannot open config file: " << *config_path << "\n";
            return 2;
        }
        for (const auto& [key, value] : n2s::scenario::read_key_values(in)) {
            try {
                if (key == "n") vc.grid_n = std::stoi(value);
                else if (key == "dt") vc.dt = std::stod(value);
                else if (key == "tolerance_scale") vc.tolerance_scale = std::stod(value);
                else {
                    std::cerr << "error: unknown verify config key '" << key << "'\n";
                    return 2;
                }
            } catch (const std::exception&) {
                std::cerr << "error: invalid value for '" << key << "': " << value << "\n";
                return 2;
            }
        }
    }
    if (tolerance_scale) vc.tolerance_scale = *tolerance_scale;
    if (vc.tolerance_scale < 0.0) {
        std::cerr << "error: tolerance scale must be non-negative\n";
        return 2;
    }

    const auto results = n2s::verify::run_all(vc);
    const int io_status = write_report(out_path, n2s::scenario::render_verification_json(results));
    if (io_status != 0) return io_status;
    for (const auto& r : results)
        if (!r.passed) return 1;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    if (args.empty()) return usage(std::cerr, 2);
    try {
        if (args[0] == "--version") {
            std::cout << kVersion << "\n";
            return 0;
        }
        if (args[0] == "run") return cmd_run({args.begin() + 1, args.end()});
        if (args[0] == "verify") return cmd_verify({args.begin() + 1, args.end()});
        std::cerr << "error: unknown command '" << args[0] << "'\n";
        return usage(std::cerr, 2);
    } catch (const n2s::scenario::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
