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
#include <complex>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "elements.hpp"
#include "error.hpp"
#include "fock.hpp"
#include "jones.hpp"

namespace polaoam {

/// Degree of freedom a two-photon witness is written in.
enum class Dof { OAM, Polarization };

inline std::string_view to_string(Dof d) { return d == Dof::OAM ? "oam" : "pol"; }

/// Two-level state of one photon: OAM basis (|+l>, |-l>) or polarization
/// basis (|H>, |V>).
using Qubit = std::array<Complex, 2>;
using Mat4 = std::array<std::array<Complex, 4>, 4>;

/// (|0> + e^{i phi}|1>)/sqrt2. In the OAM basis this is the slit-mask state.
inline Qubit equator_qubit(double phi) {
    const Complex i{0.0, 1.0};
    return {Complex{jones::kInvSqrt2, 0.0}, std::exp(i * phi) * jones::kInvSqrt2};
}

struct WitnessTerm {
    double coefficient;  ///< +1/2 or -1/2
    Qubit first;         ///< state measured at the first path
    Qubit second;        ///< state measured at the second path
    std::string label;
};

/// W = 1/2 * 1 - |Psi+><Psi+| with Psi+ = (|01> + |10>)/sqrt2, kept in two
/// forms: the fidelity form (identity coefficient and reference state) and
/// the six-projector local decomposition
///   1/2 ( |00><00| + |11><11| - |d+d+><d+d+| - |d-d-><d-d-|
///         + |LR><LR| + |RL><RL| ).
struct WitnessOperator {
    Dof dof = Dof::OAM;
    int path_a = 1;
    int path_b = 2;
    double identity_coefficient = 0.5;
    std::array<Complex, 4> reference{};  ///< index 2*i + j for |i>_a |j>_b
    std::array<WitnessTerm, 6> terms{};

    [[nodiscard]] Mat4 fidelity_matrix() const {
        Mat4 m{};
        for (std::size_t i = 0; i < 4; ++i) {
            m[i][i] += identity_coefficient;
            for (std::size_t j = 0; j < 4; ++j)
                m[i][j] -= reference[i] * std::conj(reference[j]);
        }
        return m;
    }

    [[nodiscard]] Mat4 decomposition_matrix() const {
        Mat4 m{};
        for (const auto &t : terms) {
            std::array<Complex, 4> v{};
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j)
                    v[2 * i + j] = t.first[i] * t.second[j];
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < 4; ++j)
                    m[i][j] += t.coefficient * v[i] * std::conj(v[j]);
        }
        return m;
    }
};

/// Builds the witness for the given degree of freedom on two paths. The
/// registry must carry both paths, and OAM +-l for the OAM variant.
inline WitnessOperator bell_witness(Dof dof, const ModeRegistry &reg, int path_a = 1, int path_b = 2) {
    if (path_a == path_b)
        throw WitnessDomainError("witness needs two distinct paths");
    if (!reg.has_path(path_a) || !reg.has_path(path_b))
        throw WitnessDomainError("witness paths are not in the registry");
    if (dof == Dof::OAM && (!reg.has_oam(reg.l()) || !reg.has_oam(-reg.l())))
        throw WitnessDomainError("registry lacks OAM +-l");
    WitnessOperator w;
    w.dof = dof;
    w.path_a = path_a;
    w.path_b = path_b;
    const double r = jones::kInvSqrt2;
    w.reference = {0.0, r, r, 0.0};
    const Qubit zero{1.0, 0.0};
    const Qubit one{0.0, 1.0};
    const double pi = std::numbers::pi;
    const Qubit dp = equator_qubit(0.0);
    const Qubit dm = equator_qubit(pi);
    const Qubit lq = equator_qubit(pi / 2);
    const Qubit rq = equator_qubit(-pi / 2);
    if (dof == Dof::OAM) {
        w.terms = {{{+0.5, zero, zero, "+l+l"},
                    {+0.5, one, one, "-l-l"},
                    {-0.5, dp, dp, "d+d+"},
                    {-0.5, dm, dm, "d-d-"},
                    {+0.5, lq, rq, "LR"},
                    {+0.5, rq, lq, "RL"}}};
    } else {
        auto q = [](jones::PolState s) {
            auto v = jones::vec(s);
            return Qubit{v[0], v[1]};
        };
        using jones::PolState;
        w.terms = {{{+0.5, q(PolState::H), q(PolState::H), "HH"},
                    {+0.5, q(PolState::V), q(PolState::V), "VV"},
                    {-0.5, q(PolState::Dplus), q(PolState::Dplus), "D+D+"},
                    {-0.5, q(PolState::Dminus), q(PolState::Dminus), "D-D-"},
                    {+0.5, q(PolState::L), q(PolState::R), "LR"},
                    {+0.5, q(PolState::R), q(PolState::L), "RL"}}};
    }
    return w;
}

/// Largest entry-wise deviation between the two forms on the coincidence
/// subspace.
inline double decomposition_deviation(const WitnessOperator &w) {
    const auto a = w.fidelity_matrix();
    const auto b = w.decomposition_matrix();
    double worst = 0.0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            worst = std::max(worst, std::abs(a[i][j] - b[i][j]));
    return worst;
}

namespace detail {

/// Qubit value of one path, lifted to a projector that ignores the other
/// degree of freedom.
inline Projector::PathSpan qubit_span(const ModeRegistry &reg, Dof dof, int path, const Qubit &q) {
    std::vector<SinglePhoton> basis;
    if (dof == Dof::OAM) {
        for (auto pol : {Polarization::H, Polarization::V})
            basis.push_back({{{path, pol, reg.l()}, q[0]}, {{path, pol, -reg.l()}, q[1]}});
    } else {
        for (int m : reg.oam_set())
            basis.push_back({{{path, Polarization::H, m}, q[0]}, {{path, Polarization::V, m}, q[1]}});
    }
    return {path, std::move(basis)};
}

/// Both qubit levels at the path: the coincidence support.
inline Projector::PathSpan support_span(const ModeRegistry &reg, Dof dof, int path) {
    auto span = qubit_span(reg, dof, path, Qubit{1.0, 0.0});
    auto other = qubit_span(reg, dof, path, Qubit{0.0, 1.0});
    span.basis.insert(span.basis.end(), other.basis.begin(), other.basis.end());
    return span;
}

} // namespace detail

/// Projector onto one witness term (or any product of qubit states).
inline Projector qubit_projector(const ModeRegistry &reg, Dof dof, int path_a, const Qubit &a,
                                 int path_b, const Qubit &b) {
    return Projector({detail::qubit_span(reg, dof, path_a, a), detail::qubit_span(reg, dof, path_b, b)});
}

/// One photon at each witness path inside the two-level space.
inline Projector coincidence_projector(const ModeRegistry &reg, const WitnessOperator &w) {
    return Projector({detail::support_span(reg, w.dof, w.path_a), detail::support_span(reg, w.dof, w.path_b)});
}

/// Reduced two-qubit density matrix of the coincidence component,
/// conditioned on coincidence. The other degree of freedom and all photons
/// elsewhere are traced out.
struct ReducedState {
    Mat4 rho{};
    double coincidence_probability = 0.0;
};

inline ReducedState reduced_coincidence_state(const PhotonicState &state, const WitnessOperator &w) {
    const auto &reg = state.registry();
    const double n2 = state.norm2();
    if (n2 < kZeroNorm2)
        throw AnnihilatedError("witness on a zero-norm state");
    std::map<std::vector<int>, std::array<Complex, 4>> branches;
    for (const auto &[occ, amp] : state.amplitudes()) {
        int qa = -1;
        int qb = -1;
        int oa = 0;
        int ob = 0;
        int count_a = 0;
        int count_b = 0;
        std::vector<int> env(occ.begin(), occ.end());
        for (std::size_t i = 0; i < occ.size(); ++i) {
            if (occ[i] == 0)
                continue;
            const auto &m = reg.mode(i);
            if (m.path != w.path_a && m.path != w.path_b)
                continue;
            const bool at_a = m.path == w.path_a;
            (at_a ? count_a : count_b) += occ[i];
            env[i] = 0;
            int level = -1;
            int other = 0;
            if (w.dof == Dof::OAM) {
                if (m.oam == reg.l())
                    level = 0;
                else if (m.oam == -reg.l())
                    level = 1;
                other = static_cast<int>(m.pol);
            } else {
                level = static_cast<int>(m.pol);
                other = m.oam;
            }
            (at_a ? qa : qb) = level;
            (at_a ? oa : ob) = other;
        }
        if (count_a != 1 || count_b != 1 || qa < 0 || qb < 0)
            continue;
        env.push_back(oa);
        env.push_back(ob);
        branches[env][static_cast<std::size_t>(2 * qa + qb)] += amp;
    }
    ReducedState r;
    double trace = 0.0;
    for (const auto &[env, v] : branches)
        for (std::size_t i = 0; i < 4; ++i) {
            trace += std::norm(v[i]);
            for (std::size_t j = 0; j < 4; ++j)
                r.rho[i][j] += v[i] * std::conj(v[j]);
        }
    r.coincidence_probability = trace / n2;
    if (trace < kZeroNorm2 * n2)
        throw WitnessDomainError("state has no component with one photon in each witness path");
    for (auto &row : r.rho)
        for (auto &x : row)
            x /= trace;
    return r;
}

struct WitnessEvaluation {
    double value = 0.0;                 ///< Tr(W rho) through the fidelity form
    double value_from_projectors = 0.0; ///< signed sum of the six projection probabilities
    double imaginary_residue = 0.0;     ///< |Im Tr(W rho)|
    double coincidence_probability = 0.0;
    std::array<double, 6> components{}; ///< conditional probabilities, term order
};

/// Witness expectation conditioned on the coincidence subspace. The value
/// comes from the fidelity form applied to the reduced state; the six term
/// probabilities come from projections of the full state and give an
/// independent second value.
inline WitnessEvaluation expectation(const WitnessOperator &w, const PhotonicState &state) {
    const auto &reg = state.registry();
    const auto red = reduced_coincidence_state(state, w);
    const auto W = w.fidelity_matrix();
    Complex tr{};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            tr += W[i][j] * red.rho[j][i];

    WitnessEvaluation ev;
    ev.value = tr.real();
    ev.imaginary_residue = std::abs(tr.imag());
    const double pc = projection_probability(state, coincidence_projector(reg, w));
    ev.coincidence_probability = pc;
    if (pc < kZeroNorm2)
        throw WitnessDomainError("state has no component with one photon in each witness path");
    double sum = 0.0;
    for (std::size_t k = 0; k < 6; ++k) {
        const auto &t = w.terms[k];
        const double p =
            projection_probability(state, qubit_projector(reg, w.dof, w.path_a, t.first, w.path_b, t.second));
        ev.components[k] = p / pc;
        sum += t.coefficient * ev.components[k];
    }
    ev.value_from_projectors = sum;
    return ev;
}

/// (a|0> + b e^{i phi1}|1>) (x) (c|0> + d e^{i phi2}|1>) with real a, b, c, d.
struct SeparableParams {
    double a = 1.0, b = 0.0, c = 1.0, d = 0.0;
    double phi1 = 0.0, phi2 = 0.0;

    static SeparableParams from_angles(double alpha, double gamma, double phi1, double phi2) {
        return {std::cos(alpha), std::sin(alpha), std::cos(gamma), std::sin(gamma), phi1, phi2};
    }
};

inline void validate(const SeparableParams &p) {
    if (std::abs(p.a * p.a + p.b * p.b - 1.0) > 1e-9 || std::abs(p.c * p.c + p.d * p.d - 1.0) > 1e-9)
        throw Error("separable parameters violate a^2 + b^2 = c^2 + d^2 = 1");
}

/// 1/2 [a^2c^2 + b^2d^2 - 2abcd cos(phi1)cos(phi2) - 2abcd sin(phi1)sin(phi2)]
inline double separable_value(const SeparableParams &p) {
    validate(p);
    const double abcd = p.a * p.b * p.c * p.d;
    return 0.5 * (p.a * p.a * p.c * p.c + p.b * p.b * p.d * p.d -
                  2.0 * abcd * std::cos(p.phi1) * std::cos(p.phi2) -
                  2.0 * abcd * std::sin(p.phi1) * std::sin(p.phi2));
}

/// Same value written with the phase difference.
inline double separable_value_phase_difference(const SeparableParams &p) {
    validate(p);
    const double abcd = p.a * p.b * p.c * p.d;
    return 0.5 * (p.a * p.a * p.c * p.c + p.b * p.b * p.d * p.d - 2.0 * abcd * std::cos(p.phi1 - p.phi2));
}

/// The six witness-term probabilities of the product state from the
/// amplitude products |1/2 (a + x b e^{i phi1})(c + y d e^{i phi2})|^2.
inline std::array<double, 6> separable_components(const SeparableParams &p) {
    validate(p);
    const Complex i{0.0, 1.0};
    const Complex e1 = std::exp(i * p.phi1);
    const Complex e2 = std::exp(i * p.phi2);
    auto prob = [&](Complex x, Complex y) {
        return std::norm(0.5 * (p.a + x * p.b * e1) * (p.c + y * p.d * e2));
    };
    return {p.a * p.a * p.c * p.c, p.b * p.b * p.d * p.d, prob(1.0, 1.0), prob(-1.0, -1.0),
            prob(-i, i),           prob(i, -i)};
}

/// The same six probabilities with the absolute squares expanded into
/// trigonometric form.
inline std::array<double, 6> separable_components_expanded(const SeparableParams &p) {
    validate(p);
    const double ab = p.a * p.b;
    const double cd = p.c * p.d;
    const double c1 = std::cos(p.phi1), c2 = std::cos(p.phi2);
    const double s1 = std::sin(p.phi1), s2 = std::sin(p.phi2);
    return {p.a * p.a * p.c * p.c,
            p.b * p.b * p.d * p.d,
            0.25 * (1 + 2 * ab * c1 + 2 * cd * c2 + 4 * ab * cd * c1 * c2),
            0.25 * (1 - 2 * ab * c1 - 2 * cd * c2 + 4 * ab * cd * c1 * c2),
            0.25 * (1 + 2 * ab * s1 - 2 * cd * s2 - 4 * ab * cd * s1 * s2),
            0.25 * (1 - 2 * ab * s1 + 2 * cd * s2 - 4 * ab * cd * s1 * s2)};
}

/// Fock state of the product ansatz on the witness paths. The spectator
/// degree of freedom is H (OAM witness) or OAM 0 (polarization witness,
/// +l when the registry has no OAM 0).
inline PhotonicState separable_product_state(const RegistryPtr &reg, const WitnessOperator &w,
                                             const SeparableParams &p) {
    validate(p);
    const Complex i{0.0, 1.0};
    auto photon = [&](int path, double x, double y, double phi) {
        const Qubit q{x, y * std::exp(i * phi)};
        if (w.dof == Dof::OAM)
            return SinglePhoton{{{path, Polarization::H, reg->l()}, q[0]},
                                {{path, Polarization::H, -reg->l()}, q[1]}};
        const int m = reg->includes_zero_oam() ? 0 : reg->l();
        return SinglePhoton{{{path, Polarization::H, m}, q[0]}, {{path, Polarization::V, m}, q[1]}};
    };
    auto s = apply_creation(PhotonicState::vacuum(reg), photon(w.path_a, p.a, p.b, p.phi1));
    return apply_creation(s, photon(w.path_b, p.c, p.d, p.phi2));
}

/// Witness quadratic form on the product ansatz, straight from the 4x4
/// operator.
inline double witness_on_product(const Mat4 &W, const SeparableParams &p) {
    const Complex i{0.0, 1.0};
    const Qubit u{p.a, p.b * std::exp(i * p.phi1)};
    const Qubit v{p.c, p.d * std::exp(i * p.phi2)};
    std::array<Complex, 4> psi{};
    for (std::size_t x = 0; x < 2; ++x)
        for (std::size_t y = 0; y < 2; ++y)
            psi[2 * x + y] = u[x] * v[y];
    Complex s{};
    for (std::size_t x = 0; x < 4; ++x)
        for (std::size_t y = 0; y < 4; ++y)
            s += std::conj(psi[x]) * W[x][y] * psi[y];
    return s.real();
}

struct SeparableSearchOptions {
    int grid_points = 32;       ///< per dimension, at least 32
    int max_iterations = 500;   ///< Nelder-Mead cap
    double tolerance = 1e-10;   ///< Nelder-Mead spread of simplex values
    /// Optional pins for (alpha, gamma, phi1, phi2); a = cos alpha, b = sin alpha,
    /// c = cos gamma, d = sin gamma.
    std::array<std::optional<double>, 4> fixed{};
};

struct SeparableMinimum {
    SeparableParams params;
    std::array<double, 4> angles{}; ///< alpha, gamma, phi1, phi2
    double value = 0.0;
    double grid_value = 0.0;
    int iterations = 0;
    bool refined = false; ///< true when the local search improved on the grid point
};

namespace detail {

/// Nelder-Mead with the standard coefficients (1, 2, 0.5, 0.5).
inline std::pair<std::vector<double>, int> nelder_mead(const std::function<double(const std::vector<double> &)> &f,
                                                       std::vector<double> start, double step,
                                                       int max_iter, double tol) {
    const std::size_t n = start.size();
    std::vector<std::vector<double>> simplex{start};
    for (std::size_t k = 0; k < n; ++k) {
        auto v = start;
        v[k] += step;
        simplex.push_back(v);
    }
    std::vector<double> fv;
    for (const auto &v : simplex)
        fv.push_back(f(v));
    int it = 0;
    for (; it < max_iter; ++it) {
        std::vector<std::size_t> order(n + 1);
        for (std::size_t k = 0; k <= n; ++k)
            order[k] = k;
        std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) { return fv[x] < fv[y]; });
        std::vector<std::vector<double>> s2;
        std::vector<double> f2;
        for (auto k : order) {
            s2.push_back(simplex[k]);
            f2.push_back(fv[k]);
        }
        simplex = std::move(s2);
        fv = std::move(f2);
        if (fv[n] - fv[0] <= tol)
            break;
        std::vector<double> centroid(n, 0.0);
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j)
                centroid[j] += simplex[k][j] / static_cast<double>(n);
        auto along = [&](double t) {
            std::vector<double> v(n);
            for (std::size_t j = 0; j < n; ++j)
                v[j] = centroid[j] + t * (simplex[n][j] - centroid[j]);
            return v;
        };
        auto xr = along(-1.0);
        const double fr = f(xr);
        if (fr < fv[0]) {
            auto xe = along(-2.0);
            const double fe = f(xe);
            if (fe < fr) {
                simplex[n] = xe;
                fv[n] = fe;
            } else {
                simplex[n] = xr;
                fv[n] = fr;
            }
        } else if (fr < fv[n - 1]) {
            simplex[n] = xr;
            fv[n] = fr;
        } else {
            auto xc = fr < fv[n] ? along(-0.5) : along(0.5);
            const double fc = f(xc);
            if (fc < std::min(fr, fv[n])) {
                simplex[n] = xc;
                fv[n] = fc;
            } else {
                for (std::size_t k = 1; k <= n; ++k) {
                    for (std::size_t j = 0; j < n; ++j)
                        simplex[k][j] = simplex[0][j] + 0.5 * (simplex[k][j] - simplex[0][j]);
                    fv[k] = f(simplex[k]);
                }
            }
        }
    }
    std::size_t best = 0;
    for (std::size_t k = 1; k <= n; ++k)
        if (fv[k] < fv[best])
            best = k;
    return {simplex[best], it};
}

} // namespace detail

/// Minimizes the witness over the product ansatz: a full grid over the free
/// angles (alpha, gamma in [0, pi), phases in [0, 2pi)) followed by
/// Nelder-Mead from the best grid point. Grid ties go to the lowest grid
/// index; a grid point is only replaced by a strictly better value (margin
/// 1e-14), and so is the grid result by the refined one.
inline SeparableMinimum min_separable(const WitnessOperator &w, const SeparableSearchOptions &opt = {}) {
    if (opt.grid_points < 32)
        throw Error("separable search needs at least 32 grid points per dimension");
    constexpr double kMargin = 1e-14;
    const auto W = w.fidelity_matrix();
    const double pi = std::numbers::pi;
    const int n = opt.grid_points;
    const std::array<double, 4> span{pi, pi, 2 * pi, 2 * pi};

    std::vector<int> free_dims;
    for (int k = 0; k < 4; ++k)
        if (!opt.fixed[static_cast<std::size_t>(k)])
            free_dims.push_back(k);

    auto eval = [&](const std::array<double, 4> &ang) {
        return witness_on_product(W, SeparableParams::from_angles(ang[0], ang[1], ang[2], ang[3]));
    };
    auto full = [&](const std::vector<double> &x) {
        std::array<double, 4> ang{};
        std::size_t j = 0;
        for (int k = 0; k < 4; ++k) {
            const auto &pin = opt.fixed[static_cast<std::size_t>(k)];
            ang[static_cast<std::size_t>(k)] = pin ? *pin : x[j++];
        }
        return ang;
    };

    // grid, lexicographic over the free dimensions
    std::array<double, 4> best_ang{};
    double best = std::numeric_limits<double>::infinity();
    std::size_t total = 1;
    for (std::size_t k = 0; k < free_dims.size(); ++k)
        total *= static_cast<std::size_t>(n);
    std::vector<double> x(free_dims.size());
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t rem = idx;
        for (std::size_t k = free_dims.size(); k-- > 0;) {
            const auto d = static_cast<std::size_t>(free_dims[k]);
            x[k] = span[d] * static_cast<double>(rem % static_cast<std::size_t>(n)) / n;
            rem /= static_cast<std::size_t>(n);
        }
        const auto ang = full(x);
        const double v = eval(ang);
        if (v < best - kMargin) {
            best = v;
            best_ang = ang;
        }
    }

    SeparableMinimum r;
    r.grid_value = best;
    r.value = best;
    r.angles = best_ang;
    if (!free_dims.empty()) {
        std::vector<double> start;
        for (int k : free_dims)
            start.push_back(best_ang[static_cast<std::size_t>(k)]);
        auto f = [&](const std::vector<double> &v) { return eval(full(v)); };
        auto [xmin, iters] = detail::nelder_mead(f, start, 0.5 * pi / n, opt.max_iterations, opt.tolerance);
        r.iterations = iters;
        const auto ang = full(xmin);
        const double v = eval(ang);
        if (v < best - kMargin) {
            r.value = v;
            r.angles = ang;
            r.refined = true;
        }
    }
    r.params = SeparableParams::from_angles(r.angles[0], r.angles[1], r.angles[2], r.angles[3]);
    return r;
}

} // namespace polaoam
