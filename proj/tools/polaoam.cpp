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


#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "polaoam/cli.hpp"

namespace {

int emit(const polaoam::cli::Outcome &out, const std::string &json_out, const std::string &csv_out) {
    const std::string text = out.report.dump(2);
    std::cout << text << '\n';
    if (!json_out.empty()) {
        std::ofstream f(json_out, std::ios::binary);
        if (!f) {
            std::cerr << "cannot write " << json_out << '\n';
            return polaoam::cli::kFailure;
        }
        f << text << '\n';
    }
    if (!csv_out.empty() && out.exit_code == polaoam::cli::kOk) {
        std::ofstream f(csv_out, std::ios::binary);
        if (!f) {
            std::cerr << "cannot write " << csv_out << '\n';
            return polaoam::cli::kFailure;
        }
        f << out.csv;
    }
    if (out.report.contains("error"))
        std::cerr << "error: " << out.report["error"].get<std::string>() << '\n';
    return out.exit_code;
}

} // namespace

int main(int argc, char **argv) {
    namespace pc = polaoam::cli;
    CLI::App app{"Few-photon polarization/OAM pipeline simulator and witness toolkit"};
    app.require_subcommand(1);
    std::string json_out;
    app.add_option("--json-out", json_out, "Also write the JSON report to this path");

    pc::SimulateOptions sim;
    auto *simulate = app.add_subcommand("simulate", "Run a bundled or file-described pipeline");
    simulate->add_option("pipeline", sim.pipeline, "Bundled pipeline name");
    std::string file;
    simulate->add_option("--file", file, "Pipeline description file");
    simulate->add_option("--l", sim.l, "OAM order")->capture_default_str();
    simulate->add_option("--json-out", json_out, "Also write the JSON report to this path");

    pc::WitnessOptions wit;
    auto *witness = app.add_subcommand("witness", "Evaluate the two-photon witness on a named state");
    witness->add_option("state", wit.state, "Named state")->required();
    witness->add_option("--dof", wit.dof, "oam or pol")->capture_default_str();
    witness->add_option("--l", wit.l, "OAM order")->capture_default_str();
    witness->add_flag("--min-separable", wit.min_separable, "Minimize over product states");
    witness->add_option("--json-out", json_out, "Also write the JSON report to this path");

    pc::SampleOptions smp;
    std::string csv_out;
    auto *sample = app.add_subcommand("sample", "Run the sampled ten-setting witness protocol");
    sample->add_option("state", smp.state, "Named state")->required();
    sample->add_option("--dof", smp.dof, "oam or pol")->capture_default_str();
    sample->add_option("--l", smp.l, "OAM order")->capture_default_str();
    sample->add_option("--shots", smp.shots, "Shots per setting")->capture_default_str();
    sample->add_option("--seed", smp.seed, "Base seed")->capture_default_str();
    sample->add_option("--csv-out", csv_out, "Write the count record CSV here");
    sample->add_option("--json-out", json_out, "Also write the JSON report to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return pc::kUsage;
    }

    if (*simulate) {
        if (!file.empty())
            sim.file = file;
        else if (sim.pipeline.empty()) {
            std::cerr << "simulate needs a pipeline name or --file\n";
            return pc::kUsage;
        }
        return emit(pc::simulate(sim), json_out, "");
    }
    if (*witness)
        return emit(pc::witness(wit), json_out, "");
    return emit(pc::sample(smp), json_out, csv_out);
}
