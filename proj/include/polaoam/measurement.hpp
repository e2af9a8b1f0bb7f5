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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <istream>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "elements.hpp"
#include "error.hpp"
#include "fock.hpp"
#include "jones.hpp"
#include "witness.hpp"

namespace polaoam {

/// Mask angle (degrees) to superposition phase (radians) and back.
inline double angle_phase(double gamma_deg, int l) {
    if (l < 1)
        throw Error("OAM order must be at least 1");
    return angle_to_phase(gamma_deg, l);
}

inline double phase_angle(double phi, int l) {
    if (l < 1)
        throw Error("OAM order must be at least 1");
    return phase_to_angle(phi, l);
}

/// Azimuthal intensity of |chi(phi)> with mode functions e^{+-il theta}/sqrt(2pi).
inline double angular_intensity(double phi, int l, double theta) {
    if (l < 1)
        throw Error("OAM order must be at least 1");
    return (1.0 + std::cos(2.0 * l * theta - phi)) / (2.0 * std::numbers::pi);
}

/// The 2l maxima of angular_intensity in [0, 2pi), ascending.
inline std::vector<double> intensity_maxima(double phi, int l) {
    if (l < 1)
        throw Error("OAM order must be at least 1");
    const double two_pi = 2.0 * std::numbers::pi;
    std::vector<double> out;
    for (int k = 0; k < 2 * l; ++k) {
        double t = (phi + two_pi * k) / (2.0 * l);
        t = std::fmod(t, two_pi);
        if (t < 0)
            t += two_pi;
        out.push_back(t);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Slit mask at a rotation angle, projecting onto chi(phi(gamma')).
struct SlitMask {
    double gamma_deg;
};
/// Ideal projector onto |+l> (sign > 0) or |-l>. Not a single slit-mask
/// setting; experiments reach these by other means.
struct OamBasis {
    int sign;
};
/// QWP + HWP + transmitted PBS port selecting a polarization state.
struct PolAnalyzer {
    jones::PolState target;
};

struct PathSetting {
    int path;
    std::variant<SlitMask, OamBasis, PolAnalyzer> choice;
};

/// One coincidence configuration: one setting per witness path.
struct MeasurementSetting {
    std::string label;
    PathSetting first;
    PathSetting second;
};

inline Projector path_projector(const ModeRegistry &reg, const PathSetting &s) {
    return std::visit(
        [&](const auto &c) -> Projector {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, SlitMask>)
                return slit_mask_projector(reg, s.path, c.gamma_deg);
            else if constexpr (std::is_same_v<T, OamBasis>)
                return oam_basis_projector(reg, s.path, c.sign);
            else
                return pol_projector(reg, s.path, c.target);
        },
        s.choice);
}

inline Projector setting_projector(const ModeRegistry &reg, const MeasurementSetting &m) {
    if (m.first.path == m.second.path)
        throw Error("setting " + m.label + " uses one path twice");
    return path_projector(reg, m.first) * path_projector(reg, m.second);
}

/// Probability of a coincidence under the setting.
inline double coincidence_prob(const PhotonicState &state, const MeasurementSetting &m) {
    return projection_probability(state, setting_projector(state.registry(), m));
}

/// The six witness settings in term order followed by the four basis
/// settings. OAM labels use l/m for +l/-l, dp/dm for d+/d-, L/R for the
/// equator states at phase +-pi/2.
inline std::vector<MeasurementSetting> witness_settings(Dof dof, int l, int path_a = 1, int path_b = 2) {
    if (l < 1)
        throw Error("OAM order must be at least 1");
    std::vector<MeasurementSetting> out;
    auto add = [&](std::string label, auto a, auto b) {
        out.push_back({std::move(label), {path_a, a}, {path_b, b}});
    };
    if (dof == Dof::OAM) {
        const SlitMask dp{0.0};
        const SlitMask dm{90.0 / l};
        const SlitMask lq{45.0 / l};
        const SlitMask rq{-45.0 / l};
        const OamBasis p{+1};
        const OamBasis m{-1};
        add("w1_ll", p, p);
        add("w2_mm", m, m);
        add("w3_dpdp", dp, dp);
        add("w4_dmdm", dm, dm);
        add("w5_LR", lq, rq);
        add("w6_RL", rq, lq);
        add("b_ll", p, p);
        add("b_lm", p, m);
        add("b_ml", m, p);
        add("b_mm", m, m);
    } else {
        using jones::PolState;
        const PolAnalyzer h{PolState::H}, v{PolState::V}, dp{PolState::Dplus}, dm{PolState::Dminus},
            lc{PolState::L}, rc{PolState::R};
        add("w1_HH", h, h);
        add("w2_VV", v, v);
        add("w3_DpDp", dp, dp);
        add("w4_DmDm", dm, dm);
        add("w5_LR", lc, rc);
        add("w6_RL", rc, lc);
        add("b_HH", h, h);
        add("b_HV", h, v);
        add("b_VH", v, h);
        add("b_VV", v, v);
    }
    return out;
}

struct CountEntry {
    std::string label;
    std::int64_t shots;
    std::int64_t counts;
    std::uint64_t seed;
};

/// Coincidence counts, one entry per setting, all from the same base seed.
struct CountRecord {
    std::vector<CountEntry> entries;

    [[nodiscard]] const CountEntry &at(const std::string &label) const {
        for (const auto &e : entries)
            if (e.label == label)
                return e;
        throw Error("count record has no setting " + label);
    }

    bool operator==(const CountRecord &o) const {
        if (entries.size() != o.entries.size())
            return false;
        for (std::size_t i = 0; i < entries.size(); ++i) {
            const auto &a = entries[i];
            const auto &b = o.entries[i];
            if (a.label != b.label || a.shots != b.shots || a.counts != b.counts || a.seed != b.seed)
                return false;
        }
        return true;
    }
};

/// Generator for one setting: mt19937_64 seeded from (seed, setting index),
/// so settings can be drawn in any order or concurrently.
inline std::mt19937_64 setting_stream(std::uint64_t seed, std::size_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffu), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index)};
    return std::mt19937_64(seq);
}

/// Coincidence count of one setting drawn from its own stream, so any
/// subset of settings can be sampled in any order or concurrently.
inline CountEntry sample_setting(const PhotonicState &state, const MeasurementSetting &setting, std::size_t index,
                                 std::int64_t shots, std::uint64_t seed) {
    if (shots < 1)
        throw Error("shots must be at least 1");
    const double p = std::clamp(coincidence_prob(state, setting), 0.0, 1.0);
    auto gen = setting_stream(seed, index);
    std::binomial_distribution<std::int64_t> dist(shots, p);
    return {setting.label, shots, dist(gen), seed};
}

/// Binomial(shots, p) coincidences per setting.
inline CountRecord sample_counts(const PhotonicState &state, const std::vector<MeasurementSetting> &settings,
                                 std::int64_t shots, std::uint64_t seed) {
    if (shots < 1)
        throw Error("shots must be at least 1");
    CountRecord r;
    for (std::size_t i = 0; i < settings.size(); ++i)
        r.entries.push_back(sample_setting(state, settings[i], i, shots, seed));
    return r;
}

/// Signed witness sum from per-setting probabilities normalized by the four
/// basis-setting values. `values` follows witness_settings order.
inline double estimate_from_values(const WitnessOperator &w, const std::vector<double> &values) {
    if (values.size() != 10)
        throw Error("witness estimate needs six witness and four basis values");
    const double basis = values[6] + values[7] + values[8] + values[9];
    if (!(basis > 0.0))
        throw WitnessDomainError("basis-setting sum is zero");
    double s = 0.0;
    for (std::size_t k = 0; k < 6; ++k)
        s += w.terms[k].coefficient * values[k] / basis;
    return s;
}

/// Exact probabilities in place of counts; equals expectation(w, state).
inline double estimate_exact(const WitnessOperator &w, const PhotonicState &state) {
    std::vector<double> p;
    for (const auto &s : witness_settings(w.dof, state.registry().l(), w.path_a, w.path_b))
        p.push_back(coincidence_prob(state, s));
    return estimate_from_values(w, p);
}

/// Estimate from counts; the record must carry all ten settings.
inline double estimate_witness(const WitnessOperator &w, const CountRecord &record, int l) {
    std::vector<double> v;
    for (const auto &s : witness_settings(w.dof, l, w.path_a, w.path_b))
        v.push_back(static_cast<double>(record.at(s.label).counts));
    return estimate_from_values(w, v);
}

struct ProtocolResult {
    CountRecord record;
    double estimate;
};

/// Ten-setting protocol for either degree of freedom on paths 1 and 2.
inline ProtocolResult witness_protocol(const PhotonicState &state, Dof dof, std::int64_t shots,
                                       std::uint64_t seed) {
    const auto &reg = state.registry();
    const auto w = bell_witness(dof, reg);
    auto record = sample_counts(state, witness_settings(dof, reg.l()), shots, seed);
    const double est = estimate_witness(w, record, reg.l());
    return {std::move(record), est};
}

inline ProtocolResult pol_witness_protocol(const PhotonicState &state, std::int64_t shots, std::uint64_t seed) {
    return witness_protocol(state, Dof::Polarization, shots, seed);
}

inline void write_csv(std::ostream &out, const CountRecord &r) {
    out << "setting_label,shots,counts,seed\n";
    for (const auto &e : r.entries)
        out << e.label << ',' << e.shots << ',' << e.counts << ',' << e.seed << '\n';
}

inline CountRecord read_csv(std::istream &in) {
    std::string line;
    if (!std::getline(in, line) || line != "setting_label,shots,counts,seed")
        throw ParseError(1, "expected header setting_label,shots,counts,seed");
    CountRecord r;
    std::size_t n = 1;
    while (std::getline(in, line)) {
        ++n;
        if (line.empty())
            continue;
        std::stringstream ss(line);
        std::string label, shots, counts, seed;
        if (!std::getline(ss, label, ',') || !std::getline(ss, shots, ',') || !std::getline(ss, counts, ',') ||
            !std::getline(ss, seed))
            throw ParseError(n, "expected four comma-separated fields");
        try {
            CountEntry e{label, std::stoll(shots), std::stoll(counts), std::stoull(seed)};
            if (e.shots < 1 || e.counts < 0 || e.counts > e.shots)
                throw ParseError(n, "counts must lie in [0, shots]");
            r.entries.push_back(std::move(e));
        } catch (const std::logic_error &) {
            throw ParseError(n, "non-numeric field");
        }
    }
    return r;
}

} // namespace polaoam
