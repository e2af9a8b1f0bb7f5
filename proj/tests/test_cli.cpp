// Copyright 2026 The polaoam Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "polaoam/cli.hpp"
#include "support.hpp"

using namespace polaoam;
using Catch::Matchers::WithinAbs;
namespace pc = polaoam::cli;

namespace {

bool all_finite(const nlohmann::json &j) {
    if (j.is_number_float())
        return std::isfinite(j.get<double>());
    if (j.is_structured())
        for (const auto &x : j)
            if (!all_finite(x))
                return false;
    return true;
}

void check_report(const pc::Outcome &o) {
    const auto text = o.report.dump();
    auto parsed = nlohmann::json::parse(text);
    CHECK(parsed == o.report);
    CHECK(all_finite(o.report));
    CHECK(o.report["tool"] == "polaoam");
    CHECK(o.report.contains("version"));
    CHECK(o.report["defaults"]["l"] == 1);
    CHECK(o.report["defaults"]["shots"] == 100000);
    if (o.report.contains("fidelity") && o.report["fidelity"].is_number()) {
        CHECK(o.report["fidelity"].get<double>() >= 0.0);
        CHECK(o.report["fidelity"].get<double>() <= 1.0);
    }
}

} // namespace

TEST_CASE("simulate bundled pipelines") {
    auto fig1 = pc::simulate({.pipeline = "fig1", .l = 1});
    REQUIRE(fig1.exit_code == pc::kOk);
    check_report(fig1);
    CHECK_THAT(fig1.report["fidelity"].get<double>(), WithinAbs(1.0, 1e-12));
    CHECK(fig1.report["reference"] == "PSI_POLOAM");
    CHECK(fig1.report["final_state"]["photon_number"] == 2);
    CHECK(fig1.report["final_state"]["top_amplitudes"].size() == 2);

    auto fig3 = pc::simulate({.pipeline = "fig3", .l = 100});
    REQUIRE(fig3.exit_code == pc::kOk);
    CHECK_THAT(fig3.report["fidelity"].get<double>(), WithinAbs(1.0, 1e-12));

    for (const auto &name : pipelines::names()) {
        auto o = pc::simulate({.pipeline = name, .l = 2});
        INFO(name);
        CHECK(o.exit_code == pc::kOk);
        check_report(o);
    }
    CHECK(pc::simulate({.pipeline = "nope"}).exit_code == pc::kUsage);
    CHECK(pc::simulate({.pipeline = "fig1", .l = 0}).exit_code == pc::kUsage);
}

TEST_CASE("simulate pipeline files") {
    const std::string dir = POLAOAM_TEST_DATA_DIR;
    auto bad = pc::simulate({.file = dir + "/malformed.pipe"});
    CHECK(bad.exit_code == pc::kUsage);
    CHECK(bad.report["error_line"] == 3);
    check_report(bad);
    auto dead = pc::simulate({.file = dir + "/annihilating.pipe"});
    CHECK(dead.exit_code == pc::kAnnihilated);
    CHECK(pc::simulate({.file = dir + "/does-not-exist.pipe"}).exit_code == pc::kUsage);
    auto ok = pc::simulate({.file = std::string(POLAOAM_PIPELINE_DIR) + "/ghz3.pipe"});
    CHECK(ok.exit_code == pc::kOk);
    CHECK_THAT(ok.report["fidelity"].get<double>(), WithinAbs(1.0, 1e-12));
}

TEST_CASE("witness command") {
    auto oam = pc::witness({.state = "PSI_OAM", .dof = "oam"});
    REQUIRE(oam.exit_code == pc::kOk);
    check_report(oam);
    CHECK_THAT(oam.report["expectation"].get<double>(), WithinAbs(-0.5, 1e-12));
    CHECK(oam.report["components"].size() == 6);
    CHECK(oam.report["decomposition_deviation"].get<double>() <= 1e-12);

    auto pol = pc::witness({.state = "psi_pol", .dof = "pol"});
    REQUIRE(pol.exit_code == pc::kOk);
    CHECK_THAT(pol.report["expectation"].get<double>(), WithinAbs(-0.5, 1e-12));

    auto min = pc::witness({.state = "PSI_OAM", .dof = "oam", .min_separable = true});
    REQUIRE(min.exit_code == pc::kOk);
    CHECK_THAT(min.report["min_separable"]["value"].get<double>(), WithinAbs(0.0, 1e-6));
    check_report(min);

    CHECK(pc::witness({.state = "PSI_POLOAM", .dof = "oam"}).exit_code == pc::kWitnessUndefined);
    CHECK(pc::witness({.state = "GHZ3", .dof = "pol"}).exit_code == pc::kWitnessUndefined);
    CHECK(pc::witness({.state = "PSI_OAM", .dof = "spin"}).exit_code == pc::kUsage);
    CHECK(pc::witness({.state = "PSI_NONE"}).exit_code == pc::kUsage);
}

TEST_CASE("sample command") {
    auto big = pc::sample({.state = "PSI_OAM", .dof = "oam", .shots = 1000000, .seed = 7});
    REQUIRE(big.exit_code == pc::kOk);
    check_report(big);
    CHECK_THAT(big.report["estimate"].get<double>(), WithinAbs(-0.5, 0.01));
    CHECK(big.csv.rfind("setting_label,shots,counts,seed\n", 0) == 0);
    CHECK(big.csv == pc::sample({.state = "PSI_OAM", .dof = "oam", .shots = 1000000, .seed = 7}).csv);

    // one shot per setting: the estimate is null or sum(+-1/2 c_k)/B with integer counts
    std::set<std::string> seen;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto o = pc::sample({.state = "PSI_OAM", .dof = "oam", .shots = 1, .seed = seed});
        REQUIRE(o.exit_code == pc::kOk);
        check_report(o);
        const auto &est = o.report["estimate"];
        seen.insert(est.dump());
        if (est.is_null())
            continue;
        double basis = 0;
        for (const auto &c : o.report["counts"])
            if (c["setting"].get<std::string>().rfind("b_", 0) == 0)
                basis += c["counts"].get<double>();
        const double twice = 2 * est.get<double>() * basis;
        CHECK_THAT(twice, WithinAbs(std::round(twice), 1e-12));
    }
    CHECK(seen.size() >= 2);
    CHECK(pc::sample({.state = "PSI_OAM", .shots = 0}).exit_code == pc::kUsage);
    CHECK(pc::sample({.state = "PSI_POLOAM"}).exit_code == pc::kWitnessUndefined);
}
