#include <doctest.h>

#include <cmath>
#include <sstream>

#include "n2s/scenario.hpp"

using namespace n2s::scenario;

namespace {

std::map<std::string, std::string> parse(const std::string& text) {
    std::istringstream in(text);
    return read_key_values(in);
}

}  // namespace

TEST_CASE("key=value parsing with comments and whitespace") {
    const auto keys = parse("# comment\n scenario = spectra \n\nn=400 # trailing\n");
    CHECK(keys.at("scenario") == "spectra");
    CHECK(keys.at("n") == "400");
    CHECK(keys.size() == 2);

    CHECK_THROWS_AS((void)parse("novalue\n"), ConfigError);
    CHECK_THROWS_AS((void)parse("=5\n"), ConfigError);
}

TEST_CASE("unknown scenario names every valid one") {
    try {
        (void)make_config({{"scenario", "bogus"}});
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        const std::string msg = e.what();
        for (const auto& name : known_scenarios())
            CHECK(msg.find(name) != std::string::npos);
    }
}

TEST_CASE("scenario defaults, file keys and the grid-size fallback") {
    const auto cfg = make_config({{"scenario", "harmonic-coherent"}});
    CHECK(cfg.potential == "harmonic");
    CHECK(cfg.x0 == 1.0);
    CHECK(cfg.steps == 6283);
    CHECK(cfg.n == 2000);
    CHECK(cfg.format == OutputFormat::csv);

    const auto with_env = make_config({{"scenario", "harmonic-coherent"}}, 512);
    CHECK(with_env.n == 512);

    const auto overridden = make_config({{"scenario", "harmonic-coherent"}, {"n", "700"}}, 512);
    CHECK(overridden.n == 700);

    const auto suite = make_config({{"scenario", "derivation-suite"}});
    CHECK(suite.format == OutputFormat::json);

    CHECK_THROWS_AS((void)make_config({{"scenario", "spectra"}, {"bogus_key", "1"}}),
                    ConfigError);
    CHECK_THROWS_AS((void)make_config({{"scenario", "spectra"}, {"dt", "-1"}}), ConfigError);
    CHECK_THROWS_AS((void)make_config({{"scenario", "spectra"}, {"format", "xml"}}),
                    ConfigError);
    CHECK_THROWS_AS((void)make_config({{"n", "100"}}), ConfigError);
}

TEST_CASE("doubles render round-trippable and deterministic") {
    for (double v : {1.0 / 3.0, 2.0 * std::acos(-1.0), 1e-300, 6.02214076e23, -0.0, 42.0}) {
        const std::string text = format_double(v);
        CHECK(std::stod(text) == v);
        CHECK(format_double(v) == text);
    }
}

TEST_CASE("propagation scenario renders the pinned CSV layout") {
    auto cfg = make_config({{"scenario", "free-packet"},
                            {"n", "600"},
                            {"steps", "40"},
                            {"record_every", "10"}});
    const std::string body = run_scenario(cfg);
    CHECK(body.substr(0, body.find('\n')) == "t,norm,x_exp,p_exp,gradU_exp,E_exp");
    const auto rows = std::count(body.begin(), body.end(), '\n');
    CHECK(rows == 1 + 40 / 10 + 1);  // header + records
    CHECK(body.find("\r") == std::string::npos);

    // Byte determinism.
    CHECK(run_scenario(cfg) == body);

    cfg.format = OutputFormat::json;
    const std::string json = run_scenario(cfg);
    CHECK(json.find("\"t\": 0") != std::string::npos);
    CHECK(json.find("\"E_exp\":") != std::string::npos);
}

TEST_CASE("spectra scenario reports analytic levels for both potentials") {
    const auto harmonic = make_config({{"scenario", "spectra"}, {"n", "400"},
                                       {"eigen_count", "2"}});
    const std::string body = run_scenario(harmonic);
    CHECK(body.substr(0, body.find('\n')) == "n,energy,analytic,abs_err");
    CHECK(body.find("\n0,") != std::string::npos);
    CHECK(body.find(",0.5,") != std::string::npos);  // analytic ground level

    const auto well = make_config({{"scenario", "spectra"},
                                   {"n", "400"},
                                   {"potential", "free"},
                                   {"x_min", "0"},
                                   {"x_max", "1"},
                                   {"eigen_count", "1"}});
    const std::string well_body = run_scenario(well);
    const auto last_comma = well_body.find_last_of(',');
    const double abs_err = std::stod(well_body.substr(last_comma + 1));
    CHECK(abs_err < 1e-3 * (M_PI * M_PI / 2.0));

    const auto quartic = make_config({{"scenario", "spectra"}, {"potential", "quartic"}});
    CHECK_THROWS_AS((void)run_scenario(quartic), ConfigError);
}

TEST_CASE("verification report schema") {
    std::vector<n2s::verify::VerificationResult> results = {
        n2s::verify::make_result("beta", 0.5, 1.0), n2s::verify::make_result("alpha", 2.0, 1.0)};
    const std::string json = render_verification_json(results);
    CHECK(json ==
          "[\n"
          "  {\"name\": \"beta\", \"residual\": 0.5, \"tolerance\": 1, \"passed\": true},\n"
          "  {\"name\": \"alpha\", \"residual\": 2, \"tolerance\": 1, \"passed\": false}\n"
          "]\n");
}
