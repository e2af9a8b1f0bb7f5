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
#include <cctype>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <string_view>

#include "error.hpp"

namespace polaoam::jones {

using Complex = std::complex<double>;

/// Polarization vector in the (H, V) basis.
using Vec = std::array<Complex, 2>;

/// 2x2 Jones matrix, m[row][col]; column c is the image of basis state c.
using Mat = std::array<std::array<Complex, 2>, 2>;

inline constexpr double kInvSqrt2 = 0.70710678118654752440;

inline double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }

/// Named polarization states; L = (H + iV)/sqrt2 and R = (H - iV)/sqrt2.
enum class PolState { H, V, Dplus, Dminus, L, R };

inline Vec vec(PolState s) {
    const Complex i{0.0, 1.0};
    switch (s) {
    case PolState::H: return {1.0, 0.0};
    case PolState::V: return {0.0, 1.0};
    case PolState::Dplus: return {kInvSqrt2, kInvSqrt2};
    case PolState::Dminus: return {kInvSqrt2, -kInvSqrt2};
    case PolState::L: return {kInvSqrt2, i * kInvSqrt2};
    case PolState::R: return {kInvSqrt2, -i * kInvSqrt2};
    }
    return {};
}

inline std::string_view name(PolState s) {
    switch (s) {
    case PolState::H: return "H";
    case PolState::V: return "V";
    case PolState::Dplus: return "D+";
    case PolState::Dminus: return "D-";
    case PolState::L: return "L";
    case PolState::R: return "R";
    }
    return "?";
}

/// Accepts H, V, D+, D-, L, R (case-insensitive; "dp"/"dm" also accepted).
inline PolState parse_pol_state(std::string_view text) {
    std::string s;
    for (char c : text)
        s += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (s == "H") return PolState::H;
    if (s == "V") return PolState::V;
    if (s == "D+" || s == "DP" || s == "D") return PolState::Dplus;
    if (s == "D-" || s == "DM" || s == "A") return PolState::Dminus;
    if (s == "L") return PolState::L;
    if (s == "R") return PolState::R;
    throw ElementError("unknown polarization state '" + std::string(text) + "'");
}

/// The state orthogonal to s within the same mutually unbiased pair.
inline PolState orthogonal(PolState s) {
    switch (s) {
    case PolState::H: return PolState::V;
    case PolState::V: return PolState::H;
    case PolState::Dplus: return PolState::Dminus;
    case PolState::Dminus: return PolState::Dplus;
    case PolState::L: return PolState::R;
    case PolState::R: return PolState::L;
    }
    return s;
}

inline Complex dot(const Vec &a, const Vec &b) {
    return std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1];
}

inline Vec apply(const Mat &m, const Vec &v) {
    return {m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]};
}

inline Mat multiply(const Mat &a, const Mat &b) {
    Mat r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return r;
}

/// Half-wave plate with fast axis at theta: [[cos2t, sin2t], [sin2t, -cos2t]].
inline Mat hwp(double theta_deg) {
    const double t = 2.0 * deg_to_rad(theta_deg);
    return {{{std::cos(t), std::sin(t)}, {std::sin(t), -std::cos(t)}}};
}

/// Quarter-wave plate with fast axis at theta:
/// e^{-i pi/4} [[cos^2 + i sin^2, (1-i) sc], [(1-i) sc, sin^2 + i cos^2]].
inline Mat qwp(double theta_deg) {
    const double t = deg_to_rad(theta_deg);
    const double c = std::cos(t);
    const double s = std::sin(t);
    const Complex i{0.0, 1.0};
    const Complex g = std::exp(-i * std::numbers::pi / 4.0);
    return {{{g * (c * c + i * s * s), g * (1.0 - i) * s * c},
             {g * (1.0 - i) * s * c, g * (s * s + i * c * c)}}};
}

/// Waveplate angles that rotate a target polarization onto H, so that the
/// transmitted port of a following PBS projects onto the target. Applied in
/// order QWP then HWP.
struct AnalyzerSetting {
    double qwp_deg;
    double hwp_deg;
};

inline AnalyzerSetting analyzer_setting(PolState target) {
    switch (target) {
    case PolState::H: return {0.0, 0.0};
    case PolState::V: return {0.0, 45.0};
    case PolState::Dplus: return {45.0, 22.5};
    case PolState::Dminus: return {45.0, -22.5};
    case PolState::L: return {45.0, 0.0};
    case PolState::R: return {45.0, 45.0};
    }
    return {};
}

} // namespace polaoam::jones
