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

#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "error.hpp"
#include "fock.hpp"
#include "jones.hpp"
#include "modes.hpp"

namespace polaoam {

enum class ElementKind {
    HWP,
    QWP,
    PBS,
    QPLATE,
    POLARIZER,
    FORK_HOLOGRAM,
    SLIT_MASK,
    PI_TO_L,
    PATH_MERGE_LENS,
    SLM, ///< spiral-phase OAM imprint, optionally restricted to one polarization
};

enum class TransferrerVariant { QPlate, Slm };

inline std::string_view to_string(ElementKind k) {
    switch (k) {
    case ElementKind::HWP: return "HWP";
    case ElementKind::QWP: return "QWP";
    case ElementKind::PBS: return "PBS";
    case ElementKind::QPLATE: return "QPLATE";
    case ElementKind::POLARIZER: return "POLARIZER";
    case ElementKind::FORK_HOLOGRAM: return "FORK_HOLOGRAM";
    case ElementKind::SLIT_MASK: return "SLIT_MASK";
    case ElementKind::PI_TO_L: return "PI_TO_L";
    case ElementKind::PATH_MERGE_LENS: return "PATH_MERGE_LENS";
    case ElementKind::SLM: return "SLM";
    }
    return "?";
}

/// Parameters of one optical element. Fields not used by a kind are ignored.
struct ElementSpec {
    ElementKind kind = ElementKind::HWP;
    int path = 0;                 ///< acting path; merge target for PATH_MERGE_LENS
    std::vector<int> out{};       ///< PBS: the two paths; FORK_HOLOGRAM: (+l port, -l port)
    double theta_deg = 0.0;       ///< waveplate axis or slit-mask angle
    std::optional<int> l{};       ///< OAM order (defaults to the registry's); SLM: signed shift
    TransferrerVariant variant = TransferrerVariant::QPlate;
    jones::PolState direction = jones::PolState::H; ///< POLARIZER
    std::optional<Polarization> only{};             ///< SLM: act on one polarization only
    double efficiency = 1.0;      ///< PI_TO_L q-plate variant: nominal success probability
    bool swap_ports = false;      ///< FORK_HOLOGRAM

    [[nodiscard]] std::string describe() const {
        std::ostringstream os;
        os << to_string(kind);
        if (kind == ElementKind::PBS) {
            os << " out=" << out.at(0) << ',' << out.at(1);
            return os.str();
        }
        os << " path=" << path;
        switch (kind) {
        case ElementKind::HWP:
        case ElementKind::QWP:
        case ElementKind::SLIT_MASK: os << " theta=" << theta_deg; break;
        case ElementKind::POLARIZER: os << " pol=" << jones::name(direction); break;
        case ElementKind::FORK_HOLOGRAM:
            os << " out=" << out.at(0) << ',' << out.at(1);
            if (swap_ports)
                os << " swap=true";
            break;
        case ElementKind::PI_TO_L:
            os << " variant=" << (variant == TransferrerVariant::QPlate ? "qplate" : "slm");
            break;
        case ElementKind::SLM:
            if (only)
                os << " pol=" << to_char(*only);
            break;
        default: break;
        }
        if (l)
            os << " l=" << *l;
        return os.str();
    }
};

namespace element {

inline ElementSpec hwp(int path, double theta_deg) {
    return {.kind = ElementKind::HWP, .path = path, .theta_deg = theta_deg};
}
inline ElementSpec qwp(int path, double theta_deg) {
    return {.kind = ElementKind::QWP, .path = path, .theta_deg = theta_deg};
}
inline ElementSpec pbs(int path_a, int path_b) {
    return {.kind = ElementKind::PBS, .path = path_a, .out = {path_a, path_b}};
}
inline ElementSpec qplate(int path, std::optional<int> l = std::nullopt) {
    return {.kind = ElementKind::QPLATE, .path = path, .l = l};
}
inline ElementSpec polarizer(int path, jones::PolState direction) {
    return {.kind = ElementKind::POLARIZER, .path = path, .direction = direction};
}
inline ElementSpec fork_hologram(int in_path, int plus_port, int minus_port,
                                 std::optional<int> l = std::nullopt, bool swap = false) {
    return {.kind = ElementKind::FORK_HOLOGRAM, .path = in_path, .out = {plus_port, minus_port},
            .l = l, .swap_ports = swap};
}
inline ElementSpec slit_mask(int path, double gamma_deg, std::optional<int> l = std::nullopt) {
    return {.kind = ElementKind::SLIT_MASK, .path = path, .theta_deg = gamma_deg, .l = l};
}
inline ElementSpec pi_to_l(int path, TransferrerVariant variant, double efficiency = 1.0) {
    return {.kind = ElementKind::PI_TO_L, .path = path, .variant = variant,
            .efficiency = efficiency};
}
inline ElementSpec path_merge(int target) {
    return {.kind = ElementKind::PATH_MERGE_LENS, .path = target};
}
inline ElementSpec slm(int path, int shift, std::optional<Polarization> only = std::nullopt) {
    return {.kind = ElementKind::SLM, .path = path, .l = shift, .only = only};
}

} // namespace element

/// Slit-mask phase: phi = gamma' * 2l * 2pi / 360 deg.
inline double angle_to_phase(double gamma_deg, int l) {
    return gamma_deg * 2.0 * l * 2.0 * std::numbers::pi / 360.0;
}

/// Inverse of angle_to_phase; defined modulo the mask period 360 deg / (2l).
inline double phase_to_angle(double phi, int l) {
    return phi * 360.0 / (2.0 * l * 2.0 * std::numbers::pi);
}

/// (|l> + e^{i phi} |-l>)/sqrt2 at the given path and polarization.
inline SinglePhoton chi(int path, Polarization pol, int l, double phi) {
    const Complex i{0.0, 1.0};
    return {{{path, pol, l}, Complex{jones::kInvSqrt2, 0.0}},
            {{path, pol, -l}, std::exp(i * phi) * jones::kInvSqrt2}};
}

namespace detail {

inline void require_finite(double x, const char *what) {
    if (!std::isfinite(x))
        throw ElementError(std::string(what) + " must be finite");
}

inline int resolve_l(const ModeRegistry &reg, const std::optional<int> &l) {
    if (l && *l != reg.l())
        throw ElementError("element OAM order " + std::to_string(*l) +
                           " does not match the registry order " + std::to_string(reg.l()));
    return reg.l();
}

inline Polarization pol_of(int k) { return k == 0 ? Polarization::H : Polarization::V; }

/// Applies a 2x2 Jones matrix to every mode at one path.
inline ModeMap polarization_map(const RegistryPtr &reg, int path, const jones::Mat &m) {
    reg->require_path(path);
    ModeMap map = ModeMap::identity(reg);
    for (int oam : reg->oam_set())
        for (int in = 0; in < 2; ++in) {
            std::vector<MapTerm> terms;
            for (int o = 0; o < 2; ++o)
                terms.push_back({reg->index({path, pol_of(o), oam}), m[o][in]});
            map.set(ModeLabel{path, pol_of(in), oam}, std::move(terms));
        }
    return map;
}

} // namespace detail

/// HWP or QWP acting on the polarization of every mode at a path.
inline ModeMap waveplate_map(const RegistryPtr &reg, ElementKind kind, int path, double theta_deg) {
    detail::require_finite(theta_deg, "waveplate angle");
    if (kind != ElementKind::HWP && kind != ElementKind::QWP)
        throw ElementError("waveplate_map needs HWP or QWP");
    return detail::polarization_map(reg, path,
                                    kind == ElementKind::HWP ? jones::hwp(theta_deg)
                                                             : jones::qwp(theta_deg));
}

/// Polarizing beam splitter: H keeps its path, V swaps between the two paths.
inline ModeMap pbs_map(const RegistryPtr &reg, int a, int b) {
    if (a == b)
        throw ElementError("PBS needs two distinct paths");
    reg->require_path(a);
    reg->require_path(b);
    ModeMap map = ModeMap::identity(reg);
    for (int oam : reg->oam_set()) {
        map.set(ModeLabel{a, Polarization::V, oam}, {{reg->index({b, Polarization::V, oam}), 1.0}});
        map.set(ModeLabel{b, Polarization::V, oam}, {{reg->index({a, Polarization::V, oam}), 1.0}});
    }
    return map;
}

/// q-plate of order l in the circular basis: |L,0> -> |R,+l>, |R,0> -> |L,-l>
/// and the inverse pairs |R,+l> -> |L,0>, |L,-l> -> |R,0>. |L,+l> and |R,-l>
/// would leave the {-l,0,+l} space and go to error sinks.
inline ModeMap qplate_map(const RegistryPtr &reg, int path, std::optional<int> order = std::nullopt) {
    reg->require_path(path);
    const int l = detail::resolve_l(*reg, order);
    if (!reg->includes_zero_oam())
        throw ElementError("q-plate needs OAM 0 in the registry");
    using jones::PolState;
    const std::array<PolState, 2> circ{PolState::L, PolState::R};
    ModeMap map = ModeMap::identity(reg);
    for (int oam : reg->oam_set()) {
        for (int in = 0; in < 2; ++in) {
            const jones::Vec e_in = in == 0 ? jones::vec(PolState::H) : jones::vec(PolState::V);
            std::vector<MapTerm> terms;
            for (auto c : circ) {
                const Complex overlap = jones::dot(jones::vec(c), e_in);
                if (std::abs(overlap) < 1e-15)
                    continue;
                const bool left = c == PolState::L;
                // L adds +l and turns into R; R adds -l and turns into L.
                const int out_oam = oam + (left ? l : -l);
                const PolState out_c = left ? PolState::R : PolState::L;
                if (!reg->has_oam(out_oam)) {
                    auto s = map.sink("q-plate at path " + std::to_string(path) + ": " +
                                          std::string(jones::name(c)) + "," + std::to_string(oam) +
                                          " -> OAM " + std::to_string(out_oam) +
                                          " is outside the registry",
                                      SinkKind::Error);
                    terms.push_back({s, overlap});
                    continue;
                }
                const jones::Vec v = jones::vec(out_c);
                for (int o = 0; o < 2; ++o)
                    terms.push_back({reg->index({path, detail::pol_of(o), out_oam}), overlap * v[o]});
            }
            // merge duplicate targets
            std::map<std::size_t, Complex> acc;
            for (const auto &t : terms)
                acc[t.target] += t.amplitude;
            std::vector<MapTerm> merged;
            for (const auto &[t, a] : acc)
                if (std::abs(a) >= kPruneAmplitude)
                    merged.push_back({t, a});
            map.set(ModeLabel{path, detail::pol_of(in), oam}, std::move(merged));
        }
    }
    return map;
}

/// Keeps the component along `direction` at the path; the orthogonal part
/// goes to a loss sink.
inline ModeMap polarizer_map(const RegistryPtr &reg, int path, const jones::Vec &direction) {
    reg->require_path(path);
    const double n2 = std::norm(direction[0]) + std::norm(direction[1]);
    if (std::abs(n2 - 1.0) > 1e-9)
        throw ElementError("polarizer direction must be normalized");
    const jones::Vec perp{-std::conj(direction[1]), std::conj(direction[0])};
    ModeMap map = ModeMap::identity(reg);
    for (int oam : reg->oam_set()) {
        const auto sink = map.sink("polarizer at path " + std::to_string(path) + ", OAM " +
                                       std::to_string(oam),
                                   SinkKind::Loss);
        for (int in = 0; in < 2; ++in) {
            const jones::Vec e_in{in == 0 ? 1.0 : 0.0, in == 0 ? 0.0 : 1.0};
            const Complex keep = jones::dot(direction, e_in);
            const Complex lose = jones::dot(perp, e_in);
            std::vector<MapTerm> terms;
            for (int o = 0; o < 2; ++o)
                terms.push_back({reg->index({path, detail::pol_of(o), oam}), keep * direction[o]});
            terms.push_back({sink, lose});
            map.set(ModeLabel{path, detail::pol_of(in), oam}, std::move(terms));
        }
    }
    return map;
}

/// Fork hologram plus single-mode fibers. OAM +l leaves through the first
/// output port and OAM -l through the second, both with OAM 0; polarization
/// is untouched. OAM 0 input is rejected by the fibers (loss). Output paths
/// other than the input path must be empty on entry.
inline ModeMap fork_hologram_map(const RegistryPtr &reg, int in_path, int plus_port, int minus_port,
                                 std::optional<int> order = std::nullopt, bool swap = false) {
    reg->require_path(in_path);
    reg->require_path(plus_port);
    reg->require_path(minus_port);
    if (plus_port == minus_port)
        throw ElementError("fork hologram needs two distinct output paths");
    if (!reg->includes_zero_oam())
        throw ElementError("fork hologram needs OAM 0 in the registry");
    const int l = detail::resolve_l(*reg, order);
    if (swap)
        std::swap(plus_port, minus_port);
    ModeMap map = ModeMap::identity(reg);
    for (int out : {plus_port, minus_port}) {
        if (out == in_path)
            continue;
        for (int oam : reg->oam_set())
            for (auto pol : {Polarization::H, Polarization::V}) {
                auto s = map.sink("fork hologram output path " + std::to_string(out) +
                                      " is occupied on entry",
                                  SinkKind::Error);
                map.set(ModeLabel{out, pol, oam}, {{s, 1.0}});
            }
    }
    for (auto pol : {Polarization::H, Polarization::V}) {
        map.set(ModeLabel{in_path, pol, l}, {{reg->index({plus_port, pol, 0}), 1.0}});
        map.set(ModeLabel{in_path, pol, -l}, {{reg->index({minus_port, pol, 0}), 1.0}});
        auto s = map.sink(std::string("fork hologram fiber rejects OAM 0, ") + to_char(pol),
                          SinkKind::Loss);
        map.set(ModeLabel{in_path, pol, 0}, {{s, 1.0}});
    }
    return map;
}

/// Rotatable 2l-slit mask used as a filter: passes |chi(phi)> in the +-l
/// subspace, polarization-insensitive; everything else is lost.
inline ModeMap slit_mask_map(const RegistryPtr &reg, int path, double gamma_deg,
                             std::optional<int> order = std::nullopt) {
    detail::require_finite(gamma_deg, "slit-mask angle");
    reg->require_path(path);
    const int l = detail::resolve_l(*reg, order);
    const double phi = angle_to_phase(gamma_deg, l);
    const Complex i{0.0, 1.0};
    const Complex e = std::exp(i * phi);
    ModeMap map = ModeMap::identity(reg);
    for (auto pol : {Polarization::H, Polarization::V}) {
        const auto perp = map.sink(std::string("slit mask blocks ") + to_char(pol), SinkKind::Loss);
        const auto ip = reg->index({path, pol, l});
        const auto im = reg->index({path, pol, -l});
        // |l> = (chi + chi_perp)/sqrt2, |-l> = e^{-i phi}(chi - chi_perp)/sqrt2
        map.set(ModeLabel{path, pol, l}, {{ip, 0.5}, {im, 0.5 * e}, {perp, jones::kInvSqrt2}});
        map.set(ModeLabel{path, pol, -l},
                {{ip, 0.5 * std::conj(e)}, {im, 0.5}, {perp, -jones::kInvSqrt2 * std::conj(e)}});
        if (reg->includes_zero_oam()) {
            const auto z = map.sink(std::string("slit mask blocks OAM 0, ") + to_char(pol),
                                    SinkKind::Loss);
            map.set(ModeLabel{path, pol, 0}, {{z, 1.0}});
        }
    }
    return map;
}

/// Spiral-phase imprint: OAM m -> m + shift at the path (only for one
/// polarization when `only` is set).
inline ModeMap slm_map(const RegistryPtr &reg, int path, int shift,
                       std::optional<Polarization> only = std::nullopt) {
    reg->require_path(path);
    ModeMap map = ModeMap::identity(reg);
    for (auto pol : {Polarization::H, Polarization::V}) {
        if (only && *only != pol)
            continue;
        for (int oam : reg->oam_set()) {
            const int out = oam + shift;
            if (reg->has_oam(out)) {
                map.set(ModeLabel{path, pol, oam}, {{reg->index({path, pol, out}), 1.0}});
            } else {
                auto s = map.sink("SLM at path " + std::to_string(path) + ": OAM " +
                                      std::to_string(oam) + " -> " + std::to_string(out) +
                                      " is outside the registry",
                                  SinkKind::Error);
                map.set(ModeLabel{path, pol, oam}, {{s, 1.0}});
            }
        }
    }
    return map;
}

/// Relabels every path onto `target`; polarization and OAM are kept.
inline ModeMap path_merge_map(const RegistryPtr &reg, int target) {
    reg->require_path(target);
    ModeMap map(reg);
    for (std::size_t i = 0; i < reg->size(); ++i) {
        auto m = reg->mode(i);
        map.set(i, {{reg->index({target, m.pol, m.oam}), 1.0}});
    }
    return map;
}

/// Single-photon map of a polarization-to-OAM transferrer,
/// alpha|H,0> + beta|V,0>  ->  (alpha|+l> + beta|-l>)|H>.
///
/// Slm: per-polarization OAM imprint (+l on H, -l on V), D+ polarizer,
/// HWP at 22.5 deg. The polarizer removes half of every photon.
///
/// QPlate: QWP at 135 deg (H -> L, V -> iR), q-plate, D- analyzer and HWP at
/// -22.5 deg. The analyzer's factor 1/sqrt2 is taken out so that the map is
/// an isometry on OAM-0 input, i.e. the ideal lossless device; its nominal
/// success probability is the element's `efficiency`.
///
/// Non-zero input OAM at the path is rejected.
inline ModeMap transferrer_map(const RegistryPtr &reg, int path, TransferrerVariant variant) {
    reg->require_path(path);
    if (!reg->includes_zero_oam())
        throw ElementError("transferrer needs OAM 0 in the registry");
    const int l = reg->l();
    ModeMap chain(reg);
    if (variant == TransferrerVariant::Slm) {
        chain = compose(slm_map(reg, path, +l, Polarization::H),
                        slm_map(reg, path, -l, Polarization::V));
        chain = compose(chain, polarizer_map(reg, path, jones::vec(jones::PolState::Dplus)));
        chain = compose(chain, waveplate_map(reg, ElementKind::HWP, path, 22.5));
    } else {
        chain = compose(waveplate_map(reg, ElementKind::QWP, path, 135.0), qplate_map(reg, path));
        chain = compose(chain, polarizer_map(reg, path, jones::vec(jones::PolState::Dminus)));
        chain = compose(chain, waveplate_map(reg, ElementKind::HWP, path, -22.5));
    }
    ModeMap map = ModeMap::identity(reg);
    std::vector<std::size_t> sink_of(chain.sinks().size());
    for (std::size_t k = 0; k < chain.sinks().size(); ++k)
        sink_of[k] = map.sink(chain.sinks()[k].label, chain.sinks()[k].kind);
    const std::size_t n = reg->size();
    for (auto pol : {Polarization::H, Polarization::V}) {
        for (int oam : reg->oam_set()) {
            const ModeLabel in{path, pol, oam};
            if (oam != 0) {
                auto s = map.sink("transferrer at path " + std::to_string(path) +
                                      " needs OAM 0 input, got " + to_string(in),
                                  SinkKind::Error);
                map.set(in, {{s, 1.0}});
                continue;
            }
            std::vector<MapTerm> terms;
            for (const auto &t : *chain.image(reg->index(in))) {
                if (t.target < n) {
                    const double gain = variant == TransferrerVariant::QPlate ? std::numbers::sqrt2 : 1.0;
                    terms.push_back({t.target, gain * t.amplitude});
                } else if (variant == TransferrerVariant::Slm) {
                    terms.push_back({sink_of[t.target - n], t.amplitude});
                }
            }
            map.set(in, std::move(terms));
        }
    }
    return map;
}

/// The single-photon map of an element on a registry.
inline ModeMap element_map(const RegistryPtr &reg, const ElementSpec &e) {
    switch (e.kind) {
    case ElementKind::HWP:
    case ElementKind::QWP: return waveplate_map(reg, e.kind, e.path, e.theta_deg);
    case ElementKind::PBS:
        if (e.out.size() != 2)
            throw ElementError("PBS needs exactly two paths");
        return pbs_map(reg, e.out[0], e.out[1]);
    case ElementKind::QPLATE: return qplate_map(reg, e.path, e.l);
    case ElementKind::POLARIZER: return polarizer_map(reg, e.path, jones::vec(e.direction));
    case ElementKind::FORK_HOLOGRAM:
        if (e.out.size() != 2)
            throw ElementError("fork hologram needs exactly two output paths");
        return fork_hologram_map(reg, e.path, e.out[0], e.out[1], e.l, e.swap_ports);
    case ElementKind::SLIT_MASK: return slit_mask_map(reg, e.path, e.theta_deg, e.l);
    case ElementKind::PI_TO_L:
        if (e.l)
            detail::resolve_l(*reg, e.l);
        return transferrer_map(reg, e.path, e.variant);
    case ElementKind::PATH_MERGE_LENS: return path_merge_map(reg, e.path);
    case ElementKind::SLM:
        if (!e.l)
            throw ElementError("SLM needs an OAM shift l");
        return slm_map(reg, e.path, *e.l, e.only);
    }
    throw ElementError("unknown element kind");
}

/// True for elements whose map may discard amplitude.
inline bool is_projective(ElementKind k) {
    return k == ElementKind::POLARIZER || k == ElementKind::FORK_HOLOGRAM ||
           k == ElementKind::SLIT_MASK || k == ElementKind::PI_TO_L;
}

struct ElementResult {
    PhotonicState state; ///< normalized output
    double probability;  ///< success probability of this element
};

/// Applies one element to a normalized state and renormalizes.
///
/// The probability is the kept squared norm for every kind except
/// PATH_MERGE_LENS, which relabels paths with perfect mode overlap and is
/// treated as deterministic, and the q-plate transferrer, which reports its
/// configured efficiency.
inline ElementResult apply_element(const PhotonicState &state, const ElementSpec &e) {
    if (e.kind == ElementKind::PI_TO_L && !(e.efficiency > 0.0 && e.efficiency <= 1.0))
        throw ElementError("transferrer efficiency must lie in (0, 1]");
    const double in_norm2 = state.norm2();
    if (in_norm2 < kZeroNorm2)
        throw AnnihilatedError("element applied to a zero-norm state");
    const auto map = element_map(state.registry_ptr(), e);
    auto lifted = lift(state, map);
    const double kept = lifted.kept.norm2();
    if (kept < kZeroNorm2 * in_norm2)
        throw AnnihilatedError("post-selection annihilated the state at " + e.describe());
    double p = 1.0;
    if (e.kind != ElementKind::PATH_MERGE_LENS)
        p = std::clamp(kept / in_norm2, 0.0, 1.0);
    if (e.kind == ElementKind::PI_TO_L && e.variant == TransferrerVariant::QPlate)
        p *= e.efficiency;
    auto out = normalize(lifted.kept);
    return {out.with_success_probability(state.success_probability() * p), p};
}

/// |chi(phi)> (x) 1_pol at the path, phi from the mask angle.
inline Projector slit_mask_projector(const ModeRegistry &reg, int path, double gamma_deg,
                                     std::optional<int> order = std::nullopt) {
    detail::require_finite(gamma_deg, "slit-mask angle");
    reg.require_path(path);
    const int l = detail::resolve_l(reg, order);
    const double phi = angle_to_phase(gamma_deg, l);
    return Projector({{path, {chi(path, Polarization::H, l, phi), chi(path, Polarization::V, l, phi)}}});
}

/// |chi(phi)> (x) 1_pol at the path for a given phase.
inline Projector oam_phase_projector(const ModeRegistry &reg, int path, double phi) {
    reg.require_path(path);
    const int l = reg.l();
    return Projector({{path, {chi(path, Polarization::H, l, phi), chi(path, Polarization::V, l, phi)}}});
}

/// |sign*l> (x) 1_pol at the path.
inline Projector oam_basis_projector(const ModeRegistry &reg, int path, int sign) {
    reg.require_path(path);
    const int m = sign > 0 ? reg.l() : -reg.l();
    return Projector({{path,
                       {SinglePhoton{{{path, Polarization::H, m}, 1.0}},
                        SinglePhoton{{{path, Polarization::V, m}, 1.0}}}}});
}

/// Polarization state (x) 1_OAM at the path. Realized experimentally by a
/// QWP and HWP set per jones::analyzer_setting followed by the transmitted
/// port of a PBS.
inline Projector pol_projector(const ModeRegistry &reg, int path, jones::PolState target) {
    reg.require_path(path);
    const auto v = jones::vec(target);
    std::vector<SinglePhoton> basis;
    for (int oam : reg.oam_set())
        basis.push_back({{{path, Polarization::H, oam}, v[0]}, {{path, Polarization::V, oam}, v[1]}});
    return Projector({{path, std::move(basis)}});
}

} // namespace polaoam
