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


#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace polaoam;
using namespace testing;
using Catch::Matchers::WithinAbs;

namespace {

constexpr auto H = Polarization::H;
constexpr auto V = Polarization::V;

Occupation occ(const ModeRegistry &reg, std::initializer_list<std::pair<ModeLabel, int>> modes) {
    Occupation o(reg.size(), 0);
    for (const auto &[m, c] : modes)
        o[reg.index(m)] += static_cast<std::uint8_t>(c);
    return o;
}

/// Normalized state from (occupation, unnormalized Fock amplitude) pairs.
PhotonicState golden(const RegistryPtr &reg, std::vector<std::pair<Occupation, Complex>> amps) {
    return normalize(PhotonicState::from_amplitudes(reg, amps));
}

double best_fidelity(const PhotonicState &a, const PhotonicState &b) { return fidelity(a, b); }

} // namespace

TEST_CASE("sources") {
    auto pol = source(NamedState::PSI_POL, 1);
    const auto &r = pol.registry();
    auto oracle = golden(pol.registry_ptr(), {{occ(r, {{{1, H, 0}, 1}, {{2, V, 0}, 1}}), 1.0},
                                              {occ(r, {{{1, V, 0}, 1}, {{2, H, 0}, 1}}), 1.0}});
    CHECK_THAT(fidelity(pol, oracle), WithinAbs(1.0, 1e-12));
    CHECK_THAT(pol.norm2(), WithinAbs(1.0, 1e-12));

    auto ghz = source(NamedState::GHZ3, 1);
    const auto &g = ghz.registry();
    auto ghz_oracle = golden(ghz.registry_ptr(), {{occ(g, {{{1, H, 0}, 1}, {{2, V, 0}, 1}, {{3, V, 0}, 1}}), 1.0},
                                                  {occ(g, {{{1, V, 0}, 1}, {{2, H, 0}, 1}, {{3, H, 0}, 1}}), 1.0}});
    CHECK_THAT(fidelity(ghz, ghz_oracle), WithinAbs(1.0, 1e-12));
    CHECK_THROWS_AS(source(NamedState::PSI_OAM, 1), Error);
}

TEST_CASE("four-photon source from the squared pair polynomial") {
    auto s = source(NamedState::POL4, 1);
    const auto &r = s.registry();
    // (a1H a2V + a1V a2H)^2 = a1H^2 a2V^2 + a1V^2 a2H^2 + 2 a1H a1V a2H a2V;
    // Fock amplitude = monomial coefficient * sqrt(prod n!) = 2, 2, 2.
    const Occupation hhvv = occ(r, {{{1, H, 0}, 2}, {{2, V, 0}, 2}});
    const Occupation vvhh = occ(r, {{{1, V, 0}, 2}, {{2, H, 0}, 2}});
    const Occupation mixed = occ(r, {{{1, H, 0}, 1}, {{1, V, 0}, 1}, {{2, H, 0}, 1}, {{2, V, 0}, 1}});
    const double raw[3] = {1.0 * 2.0, 1.0 * 2.0, 2.0 * 1.0};
    const double total = raw[0] * raw[0] + raw[1] * raw[1] + raw[2] * raw[2];
    CHECK_THAT(std::norm(s.amplitude(hhvv)), WithinAbs(raw[0] * raw[0] / total, 1e-12));
    CHECK_THAT(std::norm(s.amplitude(vvhh)), WithinAbs(raw[1] * raw[1] / total, 1e-12));
    CHECK_THAT(std::norm(s.amplitude(mixed)), WithinAbs(raw[2] * raw[2] / total, 1e-12));
    CHECK_THAT(std::norm(s.amplitude(hhvv)), WithinAbs(1.0 / 3.0, 1e-12));
    CHECK(s.amplitudes().size() == 3);
    CHECK_THAT(fidelity(s, reference_state(NamedState::POL4, 1)), WithinAbs(1.0, 1e-12));
}

TEST_CASE("golden states match their defining occupation patterns") {
    for (int l : {1, 4, 100}) {
        auto gs = reference_state(NamedState::GHZ3_SINGLE, l);
        const auto &r = gs.registry();
        auto oracle = golden(gs.registry_ptr(), {{occ(r, {{{1, H, l}, 1}, {{1, V, -l}, 2}}), 1.0},
                                                 {occ(r, {{{1, V, l}, 2}, {{1, H, -l}, 1}}), 1.0}});
        CHECK_THAT(fidelity(gs, oracle), WithinAbs(1.0, 1e-12));

        auto psi4 = reference_state(NamedState::PSI4, l);
        const auto &q = psi4.registry();
        auto oracle4 = golden(psi4.registry_ptr(),
                              {{occ(q, {{{1, H, l}, 2}, {{1, V, -l}, 2}}), 1.0},
                               {occ(q, {{{1, V, l}, 2}, {{1, H, -l}, 2}}), 1.0},
                               {occ(q, {{{1, H, l}, 1}, {{1, V, l}, 1}, {{1, H, -l}, 1}, {{1, V, -l}, 1}}), 1.0}});
        CHECK_THAT(fidelity(psi4, oracle4), WithinAbs(1.0, 1e-12));
    }
    for (auto id : kAllNamedStates) {
        auto s = reference_state(id, 2);
        CHECK_THAT(s.norm2(), WithinAbs(1.0, 1e-12));
        CHECK(s.photon_number() == photon_number(id));
    }
}

TEST_CASE("every bundled pipeline reproduces its golden state") {
    for (int l : {1, 3, 100}) {
        for (const auto &name : pipelines::names()) {
            auto p = *pipelines::by_name(name, l);
            auto r = run_pipeline(input_state(p.input, l), p);
            INFO(name << " l=" << l);
            REQUIRE(p.reference.has_value());
            CHECK_THAT(best_fidelity(r.state, reference_state(*p.reference, l)), WithinAbs(1.0, 1e-12));
            CHECK(r.cumulative_probability > 0.0);
            CHECK(r.cumulative_probability <= 1.0);
            CHECK(r.state.photon_number() == photon_number(p.input));
        }
    }
}

TEST_CASE("SLM-variant transferrers give the same states at lower probability") {
    auto f = run_pipeline(source(NamedState::PSI_POL, 1), pipelines::fig1(TransferrerVariant::Slm));
    CHECK_THAT(fidelity(f.state, reference_state(NamedState::PSI_POLOAM, 1)), WithinAbs(1.0, 1e-12));
    CHECK_THAT(f.cumulative_probability, WithinAbs(0.25, 1e-12));
    auto g = run_pipeline(source(NamedState::GHZ3, 1), pipelines::ghz3(TransferrerVariant::Slm));
    CHECK_THAT(fidelity(g.state, reference_state(NamedState::GHZ3_SINGLE, 1)), WithinAbs(1.0, 1e-12));
    CHECK_THAT(g.cumulative_probability, WithinAbs(0.125, 1e-12));
}

TEST_CASE("three-photon merge yields exactly the two single-path occupation patterns") {
    auto r = run_pipeline(source(NamedState::GHZ3, 1), ghz3_single_path_pipeline());
    const auto &reg = r.state.registry();
    auto amps = r.state.amplitudes();
    REQUIRE(amps.size() == 2);
    std::vector<Occupation> got{amps[0].first, amps[1].first};
    std::vector<Occupation> want{occ(reg, {{{1, H, 1}, 1}, {{1, V, -1}, 2}}), occ(reg, {{{1, V, 1}, 2}, {{1, H, -1}, 1}})};
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    CHECK(got == want);
}

TEST_CASE("property: split pipelines compose") {
    for (const auto &name : pipelines::names()) {
        auto p = *pipelines::by_name(name, 2);
        auto in = input_state(p.input, 2);
        auto whole = run_pipeline(in, p);
        for (std::size_t cut = 0; cut <= p.elements.size(); ++cut) {
            std::vector<ElementSpec> a(p.elements.begin(), p.elements.begin() + static_cast<long>(cut));
            std::vector<ElementSpec> b(p.elements.begin() + static_cast<long>(cut), p.elements.end());
            auto first = run_pipeline(in, a);
            auto second = run_pipeline(first.state, b);
            INFO(name << " cut " << cut);
            CHECK_THAT(fidelity(second.state, whole.state), WithinAbs(1.0, 1e-12));
            CHECK_THAT(first.cumulative_probability * second.cumulative_probability,
                       WithinAbs(whole.cumulative_probability, 1e-12));
            CHECK_THAT(second.state.success_probability(), WithinAbs(whole.state.success_probability(), 1e-12));
        }
    }
}

TEST_CASE("sorting round trip restores the hybrid state") {
    for (int l : {1, 7}) {
        auto hybrid = reference_state(NamedState::PSI_POLOAM, l);
        auto sorted = run_pipeline(hybrid, pipelines::fig3());
        auto back = run_pipeline(sorted.state, pipelines::fig1());
        CHECK_THAT(fidelity(back.state, hybrid), WithinAbs(1.0, 1e-12));
    }
}

TEST_CASE("pipeline errors carry the element index") {
    auto s = source(NamedState::PSI_POL, 1);
    try {
        run_pipeline(s, {element::hwp(1, 0.0), element::hwp(9, 0.0)});
        FAIL("expected a pipeline error");
    } catch (const PipelineError &e) {
        CHECK(e.index() == 1);
    }
    CHECK_THROWS_AS(run_pipeline(s, {element::polarizer(1, jones::PolState::H), element::polarizer(1, jones::PolState::V)}),
                    AnnihilatedError);
    CHECK_THROWS_AS(run_pipeline(PhotonicState::zero(s.registry_ptr(), 2), std::vector<ElementSpec>{}), AnnihilatedError);
}

TEST_CASE("named lookups") {
    CHECK(parse_named_state("psi_oam") == NamedState::PSI_OAM);
    CHECK_FALSE(parse_named_state("PSI_X").has_value());
    CHECK_FALSE(pipelines::by_name("fig9", 1).has_value());
}
