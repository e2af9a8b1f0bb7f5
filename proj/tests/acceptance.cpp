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


// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "polaoam.hpp"

using namespace polaoam;

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string &what) {
        if (!cond) {
            ok = false;
            detail << " [failed: " << what << "]";
        }
    }
};

using Clock = std::chrono::steady_clock;

bool run(int id, const std::string &title, double budget_s, const std::function<void(Check &)> &body) {
    Check c;
    const auto t0 = Clock::now();
    try {
        body(c);
    } catch (const std::exception &e) {
        c.ok = false;
        c.detail << " [exception: " << e.what() << "]";
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (budget_s > 0 && secs >= budget_s) {
        c.ok = false;
        c.detail << " [runtime " << secs << " s exceeds " << budget_s << " s]";
    }
    std::printf("%s criterion %2d: %s (%.3f s)%s\n", c.ok ? "PASS" : "FAIL", id, title.c_str(), secs,
                c.detail.str().c_str());
    std::fflush(stdout);
    return c.ok;
}

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

void witness_value(Check &c, int l) {
    auto psi = reference_state(NamedState::PSI_OAM, l);
    auto ev = expectation(bell_witness(Dof::OAM, psi.registry()), psi);
    c.detail << " l=" << l << " value=" << ev.value;
    c.require(near(ev.value, -0.5, 1e-12), "expectation within 1e-12 of -1/2");
}

void pipeline_goldens(Check &c, int l) {
    auto stage = [&](const PhotonicState &in, const Pipeline &p, NamedState ref) {
        auto r = run_pipeline(in, p);
        const double f = fidelity(r.state, reference_state(ref, l));
        c.require(f >= 1.0 - 1e-12, p.name + " fidelity " + std::to_string(f));
        return r.state;
    };
    auto hybrid = stage(source(NamedState::PSI_POL, l), pipelines::fig1(), NamedState::PSI_POLOAM);
    stage(hybrid, pipelines::fig2(), NamedState::PSI_OAM);
    stage(hybrid, pipelines::fig3(), NamedState::PSI_POL);
    auto single = stage(source(NamedState::GHZ3, l), ghz3_single_path_pipeline(), NamedState::GHZ3_SINGLE);
    stage(single, pipelines::ghz3_sort_pol(), NamedState::OAM3);
    stage(single, pipelines::ghz3_sort_oam(), NamedState::POL3);
    auto psi4 = stage(source(NamedState::POL4, l), four_photon_pipeline(l), NamedState::PSI4);
    stage(psi4, pipelines::pdc4_sort_pol(), NamedState::OAM4);
    stage(psi4, pipelines::pdc4_sort_oam(), NamedState::POL4);
    c.detail << " l=" << l << " 9 stages";
}

int sampled_maxima(double phi, int l) {
    const int n = 200 * l + 17;
    std::vector<double> f(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        f[static_cast<std::size_t>(k)] = angular_intensity(phi, l, 2 * kPi * k / n);
    int count = 0;
    for (int k = 0; k < n; ++k) {
        const double cur = f[static_cast<std::size_t>(k)];
        if (cur > f[static_cast<std::size_t>((k + n - 1) % n)] && cur >= f[static_cast<std::size_t>((k + 1) % n)])
            ++count;
    }
    return count;
}

void mask_physics(Check &c, const std::vector<int> &orders) {
    std::mt19937_64 g(8);
    std::uniform_real_distribution<double> u(-360, 360);
    for (int l : orders) {
        for (int k = 0; k < 100; ++k) {
            const double gamma = u(g);
            c.require(angle_phase(gamma, l) == gamma * 2.0 * l * 2.0 * kPi / 360.0, "phase formula");
        }
        for (double phi : {0.0, kPi / 3}) {
            const int m = sampled_maxima(phi, l);
            c.require(m == 2 * l, "l=" + std::to_string(l) + " has " + std::to_string(m) + " maxima");
        }
    }
    c.require(near(angle_phase(45.0, 1), kPi / 2, 1e-15), "45 deg at l=1 is pi/2");
    c.require(near(angle_phase(0.9, 100), kPi, 1e-12), "0.9 deg at l=100 is pi");
}

} // namespace

int main() {
    int failed = 0;
    auto tally = [&](bool ok) { failed += ok ? 0 : 1; };

    tally(run(1, "OAM witness on Psi_OAM equals -1/2", 1.0, [](Check &c) { witness_value(c, 1); }));

    tally(run(2, "witness components for Psi_OAM are (0,0,1/2,1/2,0,0)", 0, [](Check &c) {
        auto psi = reference_state(NamedState::PSI_OAM, 1);
        auto ev = expectation(bell_witness(Dof::OAM, psi.registry()), psi);
        const double want[6] = {0, 0, 0.5, 0.5, 0, 0};
        for (std::size_t k = 0; k < 6; ++k)
            c.require(near(ev.components[k], want[k], 1e-12), "component " + std::to_string(k + 1));
    }));

    tally(run(3, "separable closed form, non-negativity and numerical minimum 0", 30.0, [](Check &c) {
        auto reg = build_registry({1, 2}, 1, true);
        auto w = bell_witness(Dof::OAM, *reg);
        std::mt19937_64 g(3);
        std::uniform_real_distribution<double> ang(0, kPi), ph(0, 2 * kPi);
        double worst = 0, lowest = 1;
        for (int k = 0; k < 1000; ++k) {
            const auto p = SeparableParams::from_angles(ang(g), ang(g), ph(g), ph(g));
            const double sim = expectation(w, separable_product_state(reg, w, p)).value;
            worst = std::max(worst, std::abs(sim - separable_value(p)));
            lowest = std::min(lowest, sim);
        }
        c.require(worst <= 1e-12, "simulator vs closed form");
        c.require(lowest >= -1e-12, "non-negative on product states");
        const auto m = min_separable(w);
        const auto &p = m.params;
        c.detail << " max|diff|=" << worst << " min=" << m.value << " at a=" << p.a << " b=" << p.b << " c=" << p.c
                 << " d=" << p.d;
        c.require(std::abs(m.value) <= 1e-6, "minimum within 1e-6 of 0");
        c.require(std::abs(std::remainder(p.phi1 - p.phi2, 2 * kPi)) <= 1e-4, "phi1 = phi2");
        c.require(std::abs(p.a * p.c - p.b * p.d) <= 1e-4, "ac = bd");
    }));

    tally(run(4, "witness operator identity for OAM and polarization", 0, [](Check &c) {
        auto reg = build_registry({1, 2}, 1, true);
        for (auto dof : {Dof::OAM, Dof::Polarization}) {
            const double d = decomposition_deviation(bell_witness(dof, *reg));
            c.detail << " " << to_string(dof) << "=" << d;
            c.require(d <= 1e-12, "deviation within 1e-12");
        }
    }));

    tally(run(5, "pipeline golden states", 5.0, [](Check &c) { pipeline_goldens(c, 1); }));

    tally(run(6, "four-photon state has weight 1/3 on each occupation pattern", 0, [](Check &c) {
        auto s = source(NamedState::POL4, 1);
        const auto &r = s.registry();
        auto occ = [&](std::initializer_list<std::pair<ModeLabel, int>> modes) {
            Occupation o(r.size(), 0);
            for (const auto &[m, n] : modes)
                o[r.index(m)] = static_cast<std::uint8_t>(n);
            return o;
        };
        const auto H = Polarization::H, V = Polarization::V;
        for (const auto &o : {occ({{{1, H, 0}, 2}, {{2, V, 0}, 2}}), occ({{{1, V, 0}, 2}, {{2, H, 0}, 2}}),
                              occ({{{1, H, 0}, 1}, {{1, V, 0}, 1}, {{2, H, 0}, 1}, {{2, V, 0}, 1}})}) {
            const double p = std::norm(s.amplitude(o));
            c.detail << " " << p;
            c.require(near(p, 1.0 / 3.0, 1e-12), describe(r, o));
        }
    }));

    tally(run(7, "trigonometric expansion equals amplitude products", 0, [](Check &c) {
        std::mt19937_64 g(7);
        std::uniform_real_distribution<double> ang(0, kPi), ph(0, 2 * kPi);
        double worst = 0;
        for (int k = 0; k < 1000; ++k) {
            const auto p = SeparableParams::from_angles(ang(g), ang(g), ph(g), ph(g));
            const auto a = separable_components(p);
            const auto b = separable_components_expanded(p);
            for (std::size_t i = 0; i < 6; ++i)
                worst = std::max(worst, std::abs(a[i] - b[i]));
        }
        c.detail << " max|diff|=" << worst;
        c.require(worst <= 1e-12, "within 1e-12");
    }));

    tally(run(8, "mask angle-phase relation and 2l intensity maxima", 0,
              [](Check &c) { mask_physics(c, {1, 2, 3, 10, 100}); }));

    tally(run(9, "sampled witness estimate for Psi_OAM", 60.0, [](Check &c) {
        auto psi = reference_state(NamedState::PSI_OAM, 1);
        const auto big = witness_protocol(psi, Dof::OAM, 1000000, 2026);
        c.detail << " estimate(1e6)=" << big.estimate;
        c.require(near(big.estimate, -0.5, 0.01), "1e6 shots within 0.01");
        std::vector<double> est;
        for (std::uint64_t seed = 100; seed < 150; ++seed)
            est.push_back(witness_protocol(psi, Dof::OAM, 100000, seed).estimate);
        const double mean = std::accumulate(est.begin(), est.end(), 0.0) / 50.0;
        double var = 0;
        for (double e : est)
            var += (e - mean) * (e - mean);
        const double se = std::sqrt(var / 49.0) / std::sqrt(50.0);
        c.detail << " mean(50x1e5)=" << mean << " se=" << se;
        c.require(std::abs(mean + 0.5) <= 3 * se, "mean within 3 standard errors");
    }));

    tally(run(10, "criteria 1, 5 and 8 at l = 100", 10.0, [](Check &c) {
        witness_value(c, 100);
        pipeline_goldens(c, 100);
        mask_physics(c, {100});
    }));

    std::printf("%d of 10 criteria passed\n", 10 - failed);
    return failed == 0 ? 0 : 1;
}
