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

// Test-side oracles and hand-rolled generators. Nothing here calls into the
// library's algorithms except to build inputs.

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "polaoam.hpp"

namespace testing {

using polaoam::Complex;
using CMatrix = std::vector<std::vector<Complex>>;

inline constexpr double kPi = 3.14159265358979323846;
inline const double kR2 = 1.0 / std::sqrt(2.0);

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline Complex gauss_complex(std::mt19937_64 &g) {
    std::normal_distribution<double> n(0.0, 1.0);
    return {n(g), n(g)};
}

inline double uniform(std::mt19937_64 &g, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(g);
}

/// Haar-ish random unitary by Gram-Schmidt on a Gaussian matrix (columns).
inline CMatrix random_unitary(std::size_t n, std::mt19937_64 &g) {
    CMatrix cols(n, std::vector<Complex>(n));
    for (auto &c : cols)
        for (auto &x : c)
            x = gauss_complex(g);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < j; ++k) {
            Complex ip{};
            for (std::size_t i = 0; i < n; ++i)
                ip += std::conj(cols[k][i]) * cols[j][i];
            for (std::size_t i = 0; i < n; ++i)
                cols[j][i] -= ip * cols[k][i];
        }
        double nn = 0;
        for (auto x : cols[j])
            nn += std::norm(x);
        for (auto &x : cols[j])
            x /= std::sqrt(nn);
    }
    CMatrix m(n, std::vector<Complex>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = cols[j][i];
    return m;
}

/// Mode map whose column j is U[.][j].
inline polaoam::ModeMap dense_map(const polaoam::RegistryPtr &reg, const CMatrix &u) {
    polaoam::ModeMap m(reg);
    for (std::size_t j = 0; j < reg->size(); ++j) {
        std::vector<polaoam::MapTerm> terms;
        for (std::size_t i = 0; i < reg->size(); ++i)
            terms.push_back({i, u[i][j]});
        m.set(j, terms);
    }
    return m;
}

/// Random occupation with n photons over `modes` modes.
inline polaoam::Occupation random_occupation(std::size_t modes, int n, std::mt19937_64 &g) {
    polaoam::Occupation occ(modes, 0);
    std::uniform_int_distribution<std::size_t> pick(0, modes - 1);
    for (int k = 0; k < n; ++k)
        ++occ[pick(g)];
    return occ;
}

/// Random normalized n-photon state with up to `terms` Fock components.
inline polaoam::PhotonicState random_state(const polaoam::RegistryPtr &reg, int n, int terms,
                                           std::mt19937_64 &g) {
    std::vector<std::pair<polaoam::Occupation, Complex>> amps;
    for (int k = 0; k < terms; ++k)
        amps.emplace_back(random_occupation(reg->size(), n, g), gauss_complex(g));
    return polaoam::normalize(polaoam::PhotonicState::from_amplitudes(reg, amps));
}

inline double factorial(int n) {
    double f = 1;
    for (int k = 2; k <= n; ++k)
        f *= k;
    return f;
}

/// Permanent by Ryser's formula.
inline Complex permanent(const CMatrix &a) {
    const std::size_t n = a.size();
    if (n == 0)
        return 1.0;
    Complex total{};
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
        Complex prod = 1.0;
        for (std::size_t i = 0; i < n; ++i) {
            Complex row{};
            for (std::size_t j = 0; j < n; ++j)
                if (s & (1u << j))
                    row += a[i][j];
            prod *= row;
        }
        const int bits = std::popcount(s);
        total += ((n - static_cast<std::size_t>(bits)) % 2 ? -1.0 : 1.0) * prod;
    }
    return total;
}

/// <out| U-lifted |in> for Fock basis states: perm(U[out-rows, in-cols]) /
/// sqrt(prod in! prod out!).
inline Complex transition_amplitude(const CMatrix &u, const polaoam::Occupation &in,
                                    const polaoam::Occupation &out) {
    std::vector<std::size_t> rows, cols;
    double w = 1;
    for (std::size_t i = 0; i < in.size(); ++i) {
        for (int k = 0; k < in[i]; ++k)
            cols.push_back(i);
        for (int k = 0; k < out[i]; ++k)
            rows.push_back(i);
        w *= factorial(in[i]) * factorial(out[i]);
    }
    if (rows.size() != cols.size())
        return 0.0;
    CMatrix sub(rows.size(), std::vector<Complex>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            sub[i][j] = u[rows[i]][cols[j]];
    return permanent(sub) / std::sqrt(w);
}

/// All occupations of n photons in m modes.
inline std::vector<polaoam::Occupation> all_occupations(std::size_t m, int n) {
    std::vector<polaoam::Occupation> out;
    polaoam::Occupation cur(m, 0);
    auto rec = [&](auto &self, std::size_t i, int left) -> void {
        if (i + 1 == m) {
            cur[i] = static_cast<std::uint8_t>(left);
            out.push_back(cur);
            return;
        }
        for (int k = left; k >= 0; --k) {
            cur[i] = static_cast<std::uint8_t>(k);
            self(self, i + 1, left - k);
        }
    };
    rec(rec, 0, n);
    return out;
}

/// Fock basis vector for a list of (mode, count).
inline polaoam::PhotonicState basis_state(const polaoam::RegistryPtr &reg,
                                          std::initializer_list<std::pair<polaoam::ModeLabel, int>> modes,
                                          Complex amp = 1.0) {
    polaoam::Occupation occ(reg->size(), 0);
    for (const auto &[m, c] : modes)
        occ[reg->index(m)] += static_cast<std::uint8_t>(c);
    return polaoam::PhotonicState::from_amplitudes(reg, {{occ, amp}});
}

inline polaoam::PhotonicState add(const polaoam::PhotonicState &a, const polaoam::PhotonicState &b,
                                  Complex ca = 1.0, Complex cb = 1.0) {
    return polaoam::superpose({{ca, a}, {cb, b}});
}

} // namespace testing
