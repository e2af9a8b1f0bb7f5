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

#pragma once

// In-process command layer behind tools/polaoam. Each command returns a JSON
// report plus the process exit code, so tests can drive it without a shell.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "circuits.hpp"
#include "error.hpp"
#include "fock.hpp"
#include "measurement.hpp"
#include "pipeline_io.hpp"
#include "witness.hpp"

namespace polaoam::cli {

inline constexpr const char *kToolName = "polaoam";
inline constexpr const char *kVersion = "1.0.0";
inline constexpr int kDefaultL = 1;
inline constexpr std::int64_t kDefaultShots = 100000;
inline constexpr std::uint64_t kDefaultSeed = 20260101;
inline constexpr std::size_t kTopAmplitudes = 8;

enum ExitCode : int {
    kOk = 0,
    kFailure = 1,
    kUsage = 2,      ///< parse error, unknown pipeline or state, bad option value
    kAnnihilated = 3,
    kWitnessUndefined = 4,
};

struct Outcome {
    int exit_code = kOk;
    nlohmann::json report;
    std::string csv;  ///< count record, sample command only
};

namespace detail {

inline nlohmann::json base_report(const std::string &command) {
    return {{"tool", kToolName},
            {"version", kVersion},
            {"command", command},
            {"defaults", {{"l", kDefaultL}, {"shots", kDefaultShots}, {"seed", kDefaultSeed}}}};
}

inline Outcome failure(nlohmann::json report, int code, const std::string &message) {
    report["error"] = message;
    return {code, std::move(report), {}};
}

/// Largest amplitudes first; ties keep registry order.
inline nlohmann::json summarize(const PhotonicState &s, std::size_t k = kTopAmplitudes) {
    auto amps = s.amplitudes();
    std::vector<std::pair<Occupation, Complex>> v(amps.begin(), amps.end());
    std::stable_sort(v.begin(), v.end(),
                     [](const auto &a, const auto &b) { return std::abs(a.second) > std::abs(b.second); });
    if (v.size() > k)
        v.resize(k);
    nlohmann::json top = nlohmann::json::array();
    for (const auto &[occ, a] : v)
        top.push_back({{"occupation", describe(s.registry(), occ)},
                       {"re", a.real()},
                       {"im", a.imag()},
                       {"abs", std::abs(a)}});
    return {{"photon_number", s.photon_number()},
            {"terms", amps.size()},
            {"norm", s.norm()},
            {"top_amplitudes", std::move(top)}};
}

inline nlohmann::json separable_json(const SeparableMinimum &m) {
    return {{"value", m.value},
            {"grid_value", m.grid_value},
            {"refined", m.refined},
            {"iterations", m.iterations},
            {"angles", {{"alpha", m.angles[0]}, {"gamma", m.angles[1]}, {"phi1", m.angles[2]}, {"phi2", m.angles[3]}}},
            {"params",
             {{"a", m.params.a},
              {"b", m.params.b},
              {"c", m.params.c},
              {"d", m.params.d},
              {"phi1", m.params.phi1},
              {"phi2", m.params.phi2}}}};
}

inline std::optional<Dof> parse_dof(std::string text) {
    std::transform(text.begin(), text.end(), text.begin(), [](unsigned char c) { return std::tolower(c); });
    if (text == "oam")
        return Dof::OAM;
    if (text == "pol" || text == "polarization")
        return Dof::Polarization;
    return std::nullopt;
}

/// Witness on paths 1 and 2, restricted to two-photon states.
inline WitnessOperator witness_for(const PhotonicState &s, Dof dof) {
    if (s.photon_number() != 2)
        throw WitnessDomainError("the two-photon witness needs a two-photon state, got " +
                                 std::to_string(s.photon_number()) + " photons");
    return bell_witness(dof, s.registry());
}

} // namespace detail

struct SimulateOptions {
    std::string pipeline{};           ///< bundled pipeline name (ignored when file is set)
    std::optional<std::string> file{}; ///< pipeline description file
    int l = kDefaultL;
};

inline Outcome simulate(const SimulateOptions &opt) {
    auto report = detail::base_report("simulate");
    report["l"] = opt.l;
    if (opt.l < 1)
        return detail::failure(std::move(report), kUsage, "l must be at least 1");
    Pipeline p;
    if (opt.file) {
        report["file"] = *opt.file;
        std::ifstream in(*opt.file);
        if (!in)
            return detail::failure(std::move(report), kUsage, "cannot read " + *opt.file);
        try {
            p = parse_pipeline(in, *opt.file);
        } catch (const ParseError &e) {
            report["error_line"] = e.line();
            return detail::failure(std::move(report), kUsage, e.what());
        }
    } else {
        auto named = pipelines::by_name(opt.pipeline, opt.l);
        if (!named)
            return detail::failure(std::move(report), kUsage, "unknown pipeline '" + opt.pipeline + "'");
        p = *named;
    }
    report["pipeline"] = p.name;
    report["source"] = to_string(p.input);
    nlohmann::json elements = nlohmann::json::array();
    for (const auto &e : p.elements)
        elements.push_back(e.describe());
    report["elements"] = elements;
    try {
        const auto input = input_state(p.input, opt.l);
        const auto r = run_pipeline(input, p);
        report["final_state"] = detail::summarize(r.state);
        report["cumulative_probability"] = r.cumulative_probability;
        report["element_probabilities"] = r.element_probabilities;
        if (p.reference) {
            report["reference"] = to_string(*p.reference);
            const auto ref = reference_state(*p.reference, opt.l);
            report["fidelity"] = ref.photon_number() == r.state.photon_number() &&
                                         ref.registry() == r.state.registry()
                                     ? std::clamp(fidelity(ref, r.state), 0.0, 1.0)
                                     : 0.0;
        } else {
            report["reference"] = nullptr;
            report["fidelity"] = nullptr;
        }
    } catch (const AnnihilatedError &e) {
        return detail::failure(std::move(report), kAnnihilated, e.what());
    } catch (const Error &e) {
        return detail::failure(std::move(report), kFailure, e.what());
    }
    return {kOk, std::move(report), {}};
}

struct WitnessOptions {
    std::string state{};
    std::string dof = "oam";
    int l = kDefaultL;
    bool min_separable = false;
};

inline Outcome witness(const WitnessOptions &opt) {
    auto report = detail::base_report("witness");
    report["state"] = opt.state;
    report["l"] = opt.l;
    const auto id = parse_named_state(opt.state);
    const auto dof = detail::parse_dof(opt.dof);
    if (!id)
        return detail::failure(std::move(report), kUsage, "unknown state '" + opt.state + "'");
    if (!dof)
        return detail::failure(std::move(report), kUsage, "dof must be oam or pol");
    if (opt.l < 1)
        return detail::failure(std::move(report), kUsage, "l must be at least 1");
    report["dof"] = to_string(*dof);
    try {
        const auto s = input_state(*id, opt.l);
        const auto w = detail::witness_for(s, *dof);
        const auto ev = expectation(w, s);
        report["expectation"] = ev.value;
        report["expectation_from_projectors"] = ev.value_from_projectors;
        report["imaginary_residue"] = ev.imaginary_residue;
        report["coincidence_probability"] = ev.coincidence_probability;
        nlohmann::json comps = nlohmann::json::array();
        for (std::size_t k = 0; k < 6; ++k)
            comps.push_back({{"term", w.terms[k].label},
                             {"coefficient", w.terms[k].coefficient},
                             {"probability", ev.components[k]}});
        report["components"] = comps;
        report["decomposition_deviation"] = decomposition_deviation(w);
        if (opt.min_separable)
            report["min_separable"] = detail::separable_json(min_separable(w));
    } catch (const WitnessDomainError &e) {
        return detail::failure(std::move(report), kWitnessUndefined, e.what());
    } catch (const Error &e) {
        return detail::failure(std::move(report), kFailure, e.what());
    }
    return {kOk, std::move(report), {}};
}

struct SampleOptions {
    std::string state{};
    std::string dof = "oam";
    int l = kDefaultL;
    std::int64_t shots = kDefaultShots;
    std::uint64_t seed = kDefaultSeed;
};

/// Ten-setting protocol. With a zero basis-count sum (possible for tiny shot
/// budgets) the estimate is reported as null and the command still succeeds.
inline Outcome sample(const SampleOptions &opt) {
    auto report = detail::base_report("sample");
    report["state"] = opt.state;
    report["l"] = opt.l;
    report["shots"] = opt.shots;
    report["seed"] = opt.seed;
    const auto id = parse_named_state(opt.state);
    const auto dof = detail::parse_dof(opt.dof);
    if (!id)
        return detail::failure(std::move(report), kUsage, "unknown state '" + opt.state + "'");
    if (!dof)
        return detail::failure(std::move(report), kUsage, "dof must be oam or pol");
    if (opt.l < 1 || opt.shots < 1)
        return detail::failure(std::move(report), kUsage, "l and shots must be at least 1");
    report["dof"] = to_string(*dof);
    Outcome out;
    try {
        const auto s = input_state(*id, opt.l);
        const auto w = detail::witness_for(s, *dof);
        const auto settings = witness_settings(*dof, opt.l);
        const auto record = sample_counts(s, settings, opt.shots, opt.seed);
        nlohmann::json counts = nlohmann::json::array();
        for (const auto &e : record.entries)
            counts.push_back({{"setting", e.label}, {"shots", e.shots}, {"counts", e.counts}});
        report["counts"] = counts;
        report["exact_expectation"] = expectation(w, s).value;
        try {
            report["estimate"] = estimate_witness(w, record, opt.l);
        } catch (const WitnessDomainError &e) {
            report["estimate"] = nullptr;
            report["estimate_note"] = e.what();
        }
        std::ostringstream csv;
        write_csv(csv, record);
        out.csv = csv.str();
    } catch (const WitnessDomainError &e) {
        return detail::failure(std::move(report), kWitnessUndefined, e.what());
    } catch (const Error &e) {
        return detail::failure(std::move(report), kFailure, e.what());
    }
    out.report = std::move(report);
    return out;
}

} // namespace polaoam::cli
