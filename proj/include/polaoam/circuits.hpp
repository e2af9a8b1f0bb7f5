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

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "elements.hpp"
#include "error.hpp"
#include "fock.hpp"
#include "modes.hpp"

namespace polaoam {

/// Every multi-photon state that appears in the setups.
enum class NamedState {
    PSI_POL,     ///< (|H,1>|V,2> + |V,1>|H,2>)/sqrt2, polarization-path
    PSI_OAM,     ///< (|l,1>|-l,2> + |-l,1>|l,2>)/sqrt2, OAM-path (H polarized)
    PSI_POLOAM,  ///< (|H,l>|V,-l> + |V,l>|H,-l>)/sqrt2, both photons in path 1
    PSI_PRIME,   ///< (|H,l,1>|V,-l,2> + |H,-l,1>|V,l,2>)/sqrt2
    GHZ3,        ///< (|H,1>|V,2>|V,3> + |V,1>|H,2>|H,3>)/sqrt2
    GHZ3_SINGLE, ///< (|H,l>|V,-l>^2 + |V,l>^2|H,-l>)/sqrt2 in path 1
    OAM3,        ///< (|l,1>|-l,2>^2 + |-l,1>|l,2>^2)/sqrt2
    POL3,        ///< (|H,1>|V,2>^2 + |V,1>^2|H,2>)/sqrt2
    POL4,        ///< (|H,1>^2|V,2>^2 + |V,1>^2|H,2>^2 + |H,1>|V,1>|H,2>|V,2>)/sqrt3
    PSI4,        ///< (|H,l>^2|V,-l>^2 + |V,l>^2|H,-l>^2 + |H,l>|V,l>|H,-l>|V,-l>)/sqrt3
    OAM4,        ///< (|l,1>^2|-l,2>^2 + |-l,1>^2|l,2>^2 + |l,1>|-l,1>|l,2>|-l,2>)/sqrt3
};

inline constexpr std::array<NamedState, 11> kAllNamedStates{
    NamedState::PSI_POL, NamedState::PSI_OAM, NamedState::PSI_POLOAM, NamedState::PSI_PRIME,
    NamedState::GHZ3,    NamedState::GHZ3_SINGLE, NamedState::OAM3,   NamedState::POL3,
    NamedState::POL4,    NamedState::PSI4,    NamedState::OAM4};

inline std::string_view to_string(NamedState s) {
    switch (s) {
    case NamedState::PSI_POL: return "PSI_POL";
    case NamedState::PSI_OAM: return "PSI_OAM";
    case NamedState::PSI_POLOAM: return "PSI_POLOAM";
    case NamedState::PSI_PRIME: return "PSI_PRIME";
    case NamedState::GHZ3: return "GHZ3";
    case NamedState::GHZ3_SINGLE: return "GHZ3_SINGLE";
    case NamedState::OAM3: return "OAM3";
    case NamedState::POL3: return "POL3";
    case NamedState::POL4: return "POL4";
    case NamedState::PSI4: return "PSI4";
    case NamedState::OAM4: return "OAM4";
    }
    return "?";
}

inline std::optional<NamedState> parse_named_state(std::string_view text) {
    std::string up;
    for (char c : text)
        up += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    for (auto s : kAllNamedStates)
        if (to_string(s) == up)
            return s;
    return std::nullopt;
}

inline int photon_number(NamedState s) {
    switch (s) {
    case NamedState::GHZ3:
    case NamedState::GHZ3_SINGLE:
    case NamedState::OAM3:
    case NamedState::POL3: return 3;
    case NamedState::POL4:
    case NamedState::PSI4:
    case NamedState::OAM4: return 4;
    default: return 2;
    }
}

/// Registry shared by a state and every pipeline stage around it: paths
/// {1,2,3} for the three-photon family, {1,2} otherwise; OAM {-l,0,+l}.
inline RegistryPtr registry_for(NamedState s, int l) {
    if (photon_number(s) == 3)
        return build_registry({1, 2, 3}, l, true);
    return build_registry({1, 2}, l, true);
}

namespace detail {

struct Occupied {
    ModeLabel mode;
    int count = 1;
};

inline Occupation occupation(const ModeRegistry &reg, std::initializer_list<Occupied> entries) {
    Occupation occ(reg.size(), 0);
    for (const auto &e : entries)
        occ[reg.index(e.mode)] += static_cast<std::uint8_t>(e.count);
    return occ;
}

/// Equal-weight superposition of normalized Fock basis states.
inline PhotonicState equal_superposition(const RegistryPtr &reg, const std::vector<Occupation> &terms) {
    const double a = 1.0 / std::sqrt(static_cast<double>(terms.size()));
    std::vector<std::pair<Occupation, Complex>> amps;
    for (const auto &occ : terms)
        amps.emplace_back(occ, Complex{a, 0.0});
    return PhotonicState::from_amplitudes(reg, amps);
}

inline PhotonicState create_all(PhotonicState s, std::initializer_list<ModeLabel> modes) {
    for (const auto &m : modes)
        s = apply_creation(s, m);
    return s;
}

} // namespace detail

/// Golden state written directly from its defining formula as normalized
/// Fock basis states with explicit coefficients. Never built by running a
/// pipeline.
inline PhotonicState reference_state(NamedState id, int l) {
    const auto reg = registry_for(id, l);
    const auto &r = *reg;
    constexpr auto H = Polarization::H;
    constexpr auto V = Polarization::V;
    using detail::occupation;
    switch (id) {
    case NamedState::PSI_POL:
        return detail::equal_superposition(
            reg, {occupation(r, {{{1, H, 0}}, {{2, V, 0}}}), occupation(r, {{{1, V, 0}}, {{2, H, 0}}})});
    case NamedState::PSI_OAM:
        return detail::equal_superposition(
            reg, {occupation(r, {{{1, H, l}}, {{2, H, -l}}}), occupation(r, {{{1, H, -l}}, {{2, H, l}}})});
    case NamedState::PSI_POLOAM:
        return detail::equal_superposition(
            reg, {occupation(r, {{{1, H, l}}, {{1, V, -l}}}), occupation(r, {{{1, V, l}}, {{1, H, -l}}})});
    case NamedState::PSI_PRIME:
        return detail::equal_superposition(
            reg, {occupation(r, {{{1, H, l}}, {{2, V, -l}}}), occupation(r, {{{1, H, -l}}, {{2, V, l}}})});
    case NamedState::GHZ3:
        return detail::equal_superposition(
            reg, {occupation(r, {{{1, H, 0}}, {{2, V, 0}}, {{3, V, 0}}}),
                  occupation(r, {{{1, V, 0}}, {{2, H, 0}}, {{3, H, 0}}})});
    case NamedState::GHZ3_SINGLE:
        return detail::equal_superposition(
            reg, {occupation(r, {{{1, H, l}}, {{1, V, -l}, 2}}),
                  occupation(r, {{{1, V, l}, 2}, {{1, H, -l}}})});
    case NamedState::OAM3:
        return detail::equal_superposition(
            reg, {occupation(r, {{{1, H, l}}, {{2, H, -l}, 2}}),
                  occupation(r, {{{1, H, -l}}, {{2, H, l}, 2}})});
    case NamedState::POL3:
        return detail::equal_superposition(
            reg, {occupation(r, {{{1, H, 0}}, {{2, V, 0}, 2}}),
                  occupation(r, {{{1, V, 0}, 2}, {{2, H, 0}}})});
    case NamedState::POL4:
        return detail::equal_superposition(
            reg, {occupation(r, {{{1, H, 0}, 2}, {{2, V, 0}, 2}}),
                  occupation(r, {{{1, V, 0}, 2}, {{2, H, 0}, 2}}),
                  occupation(r, {{{1, H, 0}}, {{1, V, 0}}, {{2, H, 0}}, {{2, V, 0}}})});
    case NamedState::PSI4:
        return detail::equal_superposition(
            reg, {occupation(r, {{{1, H, l}, 2}, {{1, V, -l}, 2}}),
                  occupation(r, {{{1, V, l}, 2}, {{1, H, -l}, 2}}),
                  occupation(r, {{{1, H, l}}, {{1, V, l}}, {{1, H, -l}}, {{1, V, -l}}})});
    case NamedState::OAM4:
        return detail::equal_superposition(
            reg, {occupation(r, {{{1, H, l}, 2}, {{2, H, -l}, 2}}),
                  occupation(r, {{{1, H, -l}, 2}, {{2, H, l}, 2}}),
                  occupation(r, {{{1, H, l}}, {{1, H, -l}}, {{2, H, l}}, {{2, H, -l}}})});
    }
    throw Error("unknown reference state");
}

/// Photon source built from creation operators on the vacuum.
///
/// PSI_POL and GHZ3 are the type-II down-conversion pair and its
/// three-photon extension; POL4 is the second-order down-conversion term,
/// the square of the pair creation polynomial, so the doubly occupied
/// components carry their bosonic factors.
inline PhotonicState source(NamedState id, int l) {
    constexpr auto H = Polarization::H;
    constexpr auto V = Polarization::V;
    const auto reg = registry_for(id, l);
    const auto vac = PhotonicState::vacuum(reg);
    const double r2 = std::numbers::sqrt2 / 2.0;
    switch (id) {
    case NamedState::PSI_POL:
        return superpose({{r2, detail::create_all(vac, {{1, H, 0}, {2, V, 0}})},
                          {r2, detail::create_all(vac, {{1, V, 0}, {2, H, 0}})}});
    case NamedState::GHZ3:
        return superpose({{r2, detail::create_all(vac, {{1, H, 0}, {2, V, 0}, {3, V, 0}})},
                          {r2, detail::create_all(vac, {{1, V, 0}, {2, H, 0}, {3, H, 0}})}});
    case NamedState::POL4: {
        auto pair = [](const PhotonicState &s) {
            return superpose({{1.0, detail::create_all(s, {{1, H, 0}, {2, V, 0}})},
                              {1.0, detail::create_all(s, {{1, V, 0}, {2, H, 0}})}});
        };
        return normalize(pair(pair(vac)));
    }
    default:
        throw Error("no source for " + std::string(to_string(id)) +
                    "; sources are PSI_POL, GHZ3 and POL4");
    }
}

/// Named input for a pipeline: a source where one exists, else the golden
/// state.
inline PhotonicState input_state(NamedState id, int l) {
    if (id == NamedState::PSI_POL || id == NamedState::GHZ3 || id == NamedState::POL4)
        return source(id, l);
    return reference_state(id, l);
}

struct Pipeline {
    std::string name;
    NamedState input = NamedState::PSI_POL;
    std::optional<NamedState> reference;
    std::vector<ElementSpec> elements;
};

struct PipelineResult {
    PhotonicState state;
    double cumulative_probability = 1.0;
    std::vector<double> element_probabilities;
};

/// Runs the elements in order on a normalized copy of `state`. Element
/// errors come back as PipelineError carrying the element index; a branch
/// with zero probability raises AnnihilatedError.
inline PipelineResult run_pipeline(const PhotonicState &state, const std::vector<ElementSpec> &elements) {
    PipelineResult r{normalize(state), 1.0, {}};
    for (std::size_t i = 0; i < elements.size(); ++i) {
        try {
            auto step = apply_element(r.state, elements[i]);
            r.state = std::move(step.state);
            r.cumulative_probability *= step.probability;
            r.element_probabilities.push_back(step.probability);
        } catch (const AnnihilatedError &e) {
            throw AnnihilatedError("post-selection annihilated the state at element " +
                                   std::to_string(i) + " (" + elements[i].describe() + ")");
        } catch (const Error &e) {
            throw PipelineError(i, e.what());
        }
    }
    return r;
}

inline PipelineResult run_pipeline(const PhotonicState &state, const Pipeline &p) {
    return run_pipeline(state, p.elements);
}

namespace pipelines {

using namespace element;

/// Source, two transferrers, HWP 45 deg on path 2, PBS merging paths 1 and 2.
inline Pipeline fig1(TransferrerVariant v = TransferrerVariant::QPlate) {
    return {"fig1", NamedState::PSI_POL, NamedState::PSI_POLOAM,
            {pi_to_l(1, v), pi_to_l(2, v), hwp(2, 45.0), pbs(1, 2)}};
}

/// Sorting by polarization: PBS, then HWP 45 deg on the V arm.
inline Pipeline fig2() {
    return {"fig2", NamedState::PSI_POLOAM, NamedState::PSI_OAM, {pbs(1, 2), hwp(2, 45.0)}};
}

/// Sorting by OAM: fork hologram, +l to path 1 and -l to path 2.
inline Pipeline fig3() {
    return {"fig3", NamedState::PSI_POLOAM, NamedState::PSI_POL, {fork_hologram(1, 1, 2)}};
}

/// Transferrers on all three arms, flippers on arms 2 and 3, collective lens.
inline Pipeline ghz3(TransferrerVariant v = TransferrerVariant::QPlate) {
    return {"ghz3", NamedState::GHZ3, NamedState::GHZ3_SINGLE,
            {pi_to_l(1, v), pi_to_l(2, v), pi_to_l(3, v), hwp(2, 45.0), hwp(3, 45.0), path_merge(1)}};
}

inline Pipeline ghz3_sort_pol() {
    return {"ghz3-sort-pol", NamedState::GHZ3_SINGLE, NamedState::OAM3, {pbs(1, 2), hwp(2, 45.0)}};
}

inline Pipeline ghz3_sort_oam() {
    return {"ghz3-sort-oam", NamedState::GHZ3_SINGLE, NamedState::POL3, {fork_hologram(1, 1, 2)}};
}

/// OAM +l imprinted on arm 1 and -l on arm 2, then one lens onto path 1.
inline Pipeline pdc4_merge(int l) {
    return {"pdc4-merge", NamedState::POL4, NamedState::PSI4, {slm(1, +l), slm(2, -l), path_merge(1)}};
}

inline Pipeline pdc4_sort_pol() {
    return {"pdc4-sort-pol", NamedState::PSI4, NamedState::OAM4, {pbs(1, 2), hwp(2, 45.0)}};
}

inline Pipeline pdc4_sort_oam() {
    return {"pdc4-sort-oam", NamedState::PSI4, NamedState::POL4, {fork_hologram(1, 1, 2)}};
}

inline const std::vector<std::string> &names() {
    static const std::vector<std::string> n{"fig1",          "fig2",       "fig3",
                                            "ghz3",          "ghz3-sort-pol", "ghz3-sort-oam",
                                            "pdc4-merge",    "pdc4-sort-pol", "pdc4-sort-oam"};
    return n;
}

inline std::optional<Pipeline> by_name(std::string_view name, int l) {
    if (name == "fig1") return fig1();
    if (name == "fig2") return fig2();
    if (name == "fig3") return fig3();
    if (name == "ghz3") return ghz3();
    if (name == "ghz3-sort-pol") return ghz3_sort_pol();
    if (name == "ghz3-sort-oam") return ghz3_sort_oam();
    if (name == "pdc4-merge") return pdc4_merge(l);
    if (name == "pdc4-sort-pol") return pdc4_sort_pol();
    if (name == "pdc4-sort-oam") return pdc4_sort_oam();
    return std::nullopt;
}

} // namespace pipelines

/// The 3-photon pipelines: GHZ3 -> GHZ3_SINGLE and the two sorting stages.
inline Pipeline ghz3_single_path_pipeline() { return pipelines::ghz3(); }

/// POL4 -> PSI4.
inline Pipeline four_photon_pipeline(int l) { return pipelines::pdc4_merge(l); }

} // namespace polaoam
