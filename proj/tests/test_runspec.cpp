// SPDX-License-Identifier: Apache-2.0
//
// Run configuration tests: parsing, validation, deterministic CSV emission,
// grid round trip and sweep symmetry.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "irsop/runspec.hpp"

using namespace irsop;

namespace {

const char* kSmallConfig = R"(
[geometry]
irs_d = 30, 60
[system]
n = 2, 5
bits = 3, inf
gamma_s_db = 73
[thresholds]
db = -5, 0
[methods]
list = gamma_mom, gamma_kl
)";

}  // namespace

TEST_CASE("config parsing and defaults") {
    const RunSpec s = parse_runspec(kSmallConfig, "small");
    CHECK(s.d_list == std::vector<double>{30.0, 60.0});
    CHECK(s.n_list == std::vector<int>{2, 5});
    CHECK(s.b_list.size() == 2);
    CHECK(s.b_list[0] == QuantBits::finite(3));
    CHECK(s.b_list[1] == QuantBits::infinite());
    CHECK(s.sd_present);
    CHECK(s.sd_shape.kappa == 0.5);  // table defaults
    CHECK(s.methods == std::vector<std::string>{"gamma_mom", "gamma_kl"});
}

TEST_CASE("config errors carry the line and field") {
    CHECK_THROWS_WITH(parse_runspec("[methods]\nlist =\n", "cfg"),
                      Catch::Matchers::ContainsSubstring("empty method list"));
    CHECK_THROWS_WITH(parse_runspec("[system]\nn = quux\n", "cfg"),
                      Catch::Matchers::ContainsSubstring("cfg:2"));
    CHECK_THROWS_WITH(parse_runspec("[system]\nwat = 1\n", "cfg"),
                      Catch::Matchers::ContainsSubstring("unknown key 'wat'"));
    CHECK_THROWS_WITH(parse_runspec("n = 1\n", "cfg"),
                      Catch::Matchers::ContainsSubstring("outside any [section]"));
    CHECK_THROWS_AS(parse_runspec("[methods]\nlist = nope\n", "cfg"), ConfigError);
}

TEST_CASE("validation rejects inconsistent method/fading combinations") {
    RunSpec s = parse_runspec(kSmallConfig, "small");
    s.methods = {"univariate"};
    s.sd_present = false;
    CHECK_THROWS_AS(s.validate(), ConfigError);
    s.methods = {"gamma_kl_elem"};
    s.sd_present = true;
    CHECK_THROWS_AS(s.validate(), ConfigError);
    s.sd_present = false;
    CHECK_NOTHROW(s.validate());
}

TEST_CASE("run emits deterministic CSV and the grid round-trips") {
    const RunSpec s = parse_runspec(kSmallConfig, "small");
    const RunOutput a = run_spec(s);
    const RunOutput b = run_spec(s);
    const std::string csv_a = to_csv(a);
    CHECK(csv_a == to_csv(b));
    CHECK_FALSE(a.any_numeric_failure);

    const auto grid = parse_csv_grid(csv_a);
    // 2 d x 2 n x 2 bits x 2 thresholds x 2 methods rows; grid keys ignore method
    CHECK(grid.size() == 16);
    CHECK(grid.count({30.0, 2, "3", -5.0}) == 1);
    CHECK(grid.count({60.0, 5, "inf", 0.0}) == 1);
}

TEST_CASE("monte carlo rows are reproducible for a fixed seed") {
    RunSpec s = parse_runspec(kSmallConfig, "small");
    s.d_list = {30.0};
    s.n_list = {3};
    s.b_list = {QuantBits::finite(3)};
    s.methods = {"mc"};
    s.mc.samples = 50'000;
    s.mc.batch = 10'000;
    s.mc.seed = 99;
    const std::string a = to_csv(run_spec(s));
    const std::string b = to_csv(run_spec(s));
    CHECK(a == b);
    CHECK(a.find("seed=99") != std::string::npos);
    CHECK(a.find("xoshiro256++") != std::string::npos);
}

TEST_CASE("dB to linear conversion is applied exactly once") {
    CHECK(OutageQuery::from_db(0.0).threshold == 1.0);
    CHECK(OutageQuery::from_db(10.0).threshold == Catch::Approx(10.0).epsilon(1e-15));
    RunSpec s = parse_runspec(kSmallConfig, "small");
    s.gamma_s_db = 0.0;
    const Scenario sc = detail::make_scenario(s, 30.0, 2, QuantBits::finite(3));
    CHECK(sc.gamma_s == 1.0);
}

TEST_CASE("derive_links geometry") {
    const auto a = derive_links({90.0, 0.0, 10.0, 4.0}, {0.5, 0.8}, {1.41, 2.0},
                                {1.52, 2.5});
    CHECK(a.d_sr == Catch::Approx(10.0));
    CHECK(a.d_rd == Catch::Approx(std::sqrt(8100.0 + 100.0)));
    CHECK(a.d_sd == 90.0);

    const auto sym = derive_links({90.0, 45.0, 10.0, 4.0}, {0.5, 0.8}, {1.41, 2.0},
                                  {1.52, 2.5});
    CHECK(sym.d_sr == Catch::Approx(sym.d_rd));

    const auto d30 = derive_links({90.0, 30.0, 10.0, 4.0}, {0.5, 0.8}, {1.41, 2.0},
                                  {1.52, 2.5});
    CHECK(d30.sr.power == Catch::Approx(1e-6).epsilon(1e-12));  // (sqrt(1000))^-4

    CHECK_THROWS_AS(derive_links({90.0, 95.0, 10.0, 4.0}, {0, 1}, {0, 1}, {0, 1}),
                    DomainError);
    CHECK_THROWS_AS(derive_links({90.0, 30.0, 0.0, 4.0}, {0, 1}, {0, 1}, {0, 1}),
                    DomainError);
}

TEST_CASE("n-sweep outage is monotone decreasing") {
    RunSpec s = parse_runspec(kSmallConfig, "small");
    s.d_list = {30.0};
    s.n_list = {5, 20, 60, 120};
    s.b_list = {QuantBits::finite(5)};
    s.methods = {"univariate"};
    s.thresholds_db = {-5.0};
    s.sweep_axis = "n";
    const RunOutput out = run_spec(s);
    REQUIRE(out.rows.size() == 4);
    for (std::size_t i = 1; i < out.rows.size(); ++i)
        CHECK(out.rows[i].probability < out.rows[i - 1].probability);
}

TEST_CASE("d-sweep outage is symmetric about the midpoint") {
    RunSpec s = parse_runspec(kSmallConfig, "small");
    s.d_list = {10.0, 80.0};  // mirror pair about 45
    s.n_list = {4};
    s.b_list = {QuantBits::finite(4)};
    s.methods = {"gamma_mom"};
    s.thresholds_db = {-3.0};
    const RunOutput out = run_spec(s);
    REQUIRE(out.rows.size() == 2);
    CHECK(out.rows[0].probability ==
          Catch::Approx(out.rows[1].probability).epsilon(1e-12));
}

TEST_CASE("table presets parse and cover the published tables") {
    for (const auto& [name, text] : table_presets()) {
        CAPTURE(name);
        CHECK_NOTHROW(parse_runspec(text, name));
    }
    CHECK(table_presets().count("with-sd-vary-n") == 1);
    CHECK(table_presets().count("no-sd-vary-b") == 1);
}

TEST_CASE("json output carries diagnostics and seed metadata") {
    RunSpec s = parse_runspec(kSmallConfig, "small");
    s.d_list = {30.0};
    s.n_list = {2};
    s.b_list = {QuantBits::finite(3)};
    s.methods = {"univariate"};
    s.thresholds_db = {-5.0};
    const RunOutput out = run_spec(s);
    const auto j = nlohmann::json::parse(to_json(out));
    CHECK(j["generator"] == "xoshiro256++");
    REQUIRE(j["rows"].size() == 1);
    CHECK(j["rows"][0]["method"] == "univariate");
    CHECK(j["rows"][0]["diagnostics"].contains("pre_clamp"));
    CHECK(j["rows"][0]["diagnostics"].contains("series_terms"));
}
