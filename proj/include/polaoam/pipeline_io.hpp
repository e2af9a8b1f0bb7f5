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

#include <cctype>
#include <charconv>
#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>

#include "circuits.hpp"
#include "elements.hpp"
#include "error.hpp"

namespace polaoam {

// Line-oriented pipeline description, one element per line:
//
//   # comment
//   SOURCE PSI_POL
//   REFERENCE PSI_POLOAM
//   NAME my-setup
//   PI_TO_L path=1 variant=qplate
//   HWP path=2 theta=45
//   PBS out=1,2
//   FORK_HOLOGRAM path=1 out=1,2 [swap=true]
//   SLIT_MASK path=1 theta=22.5
//   POLARIZER path=1 pol=D+
//   SLM path=1 l=-1 [pol=H]
//   PATH_MERGE_LENS path=1
//
// Keywords and keys are case-insensitive. `l=` defaults to the registry
// order (SLM: required, signed shift).

namespace detail {

inline std::string lower(std::string_view s) {
    std::string out;
    for (char c : s)
        out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

inline int parse_int(std::string_view v, std::size_t line, std::string_view key) {
    int x = 0;
    if (!v.empty() && v.front() == '+')
        v.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
    if (ec != std::errc{} || ptr != v.data() + v.size())
        throw ParseError(line, "bad integer for " + std::string(key) + ": '" + std::string(v) + "'");
    return x;
}

inline double parse_double(std::string_view v, std::size_t line, std::string_view key) {
    std::string s(v);
    std::size_t used = 0;
    double x = 0.0;
    try {
        x = std::stod(s, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used == 0 || used != s.size() || !std::isfinite(x))
        throw ParseError(line, "bad number for " + std::string(key) + ": '" + s + "'");
    return x;
}

inline std::optional<ElementKind> parse_kind(const std::string &k) {
    static const std::map<std::string, ElementKind> kinds{
        {"hwp", ElementKind::HWP},
        {"qwp", ElementKind::QWP},
        {"pbs", ElementKind::PBS},
        {"qplate", ElementKind::QPLATE},
        {"q_plate", ElementKind::QPLATE},
        {"polarizer", ElementKind::POLARIZER},
        {"fork_hologram", ElementKind::FORK_HOLOGRAM},
        {"slit_mask", ElementKind::SLIT_MASK},
        {"pi_to_l", ElementKind::PI_TO_L},
        {"path_merge_lens", ElementKind::PATH_MERGE_LENS},
        {"slm", ElementKind::SLM},
    };
    auto it = kinds.find(k);
    if (it == kinds.end())
        return std::nullopt;
    return it->second;
}

} // namespace detail

/// Parses a pipeline description. `default_name` is used when the text has
/// no NAME line.
inline Pipeline parse_pipeline(std::istream &in, const std::string &default_name = "file") {
    Pipeline p;
    p.name = default_name;
    bool have_source = false;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        std::istringstream ls(raw);
        std::string word;
        if (!(ls >> word))
            continue;
        const auto keyword = detail::lower(word);
        if (keyword == "source" || keyword == "reference" || keyword == "name") {
            std::string value;
            if (!(ls >> value))
                throw ParseError(line_no, keyword + " needs a value");
            std::string extra;
            if (ls >> extra)
                throw ParseError(line_no, "unexpected token '" + extra + "'");
            if (keyword == "name") {
                p.name = value;
                continue;
            }
            auto id = parse_named_state(value);
            if (!id)
                throw ParseError(line_no, "unknown state '" + value + "'");
            if (keyword == "source") {
                p.input = *id;
                have_source = true;
            } else {
                p.reference = *id;
            }
            continue;
        }
        auto kind = detail::parse_kind(keyword);
        if (!kind)
            throw ParseError(line_no, "unknown element kind '" + word + "'");
        ElementSpec e;
        e.kind = *kind;
        bool have_path = false;
        bool have_theta = false;
        bool have_out = false;
        bool have_pol = false;
        std::string token;
        while (ls >> token) {
            auto eq = token.find('=');
            if (eq == std::string::npos || eq == 0 || eq + 1 == token.size())
                throw ParseError(line_no, "expected key=value, got '" + token + "'");
            const auto key = detail::lower(token.substr(0, eq));
            const std::string value = token.substr(eq + 1);
            if (key == "path") {
                e.path = detail::parse_int(value, line_no, key);
                have_path = true;
            } else if (key == "theta") {
                e.theta_deg = detail::parse_double(value, line_no, key);
                have_theta = true;
            } else if (key == "l") {
                e.l = detail::parse_int(value, line_no, key);
            } else if (key == "out") {
                auto comma = value.find(',');
                if (comma == std::string::npos)
                    throw ParseError(line_no, "out= needs two comma-separated paths");
                e.out = {detail::parse_int(std::string_view(value).substr(0, comma), line_no, key),
                         detail::parse_int(std::string_view(value).substr(comma + 1), line_no, key)};
                have_out = true;
            } else if (key == "variant") {
                const auto v = detail::lower(value);
                if (v == "qplate" || v == "qplate_kind" || v == "q-plate")
                    e.variant = TransferrerVariant::QPlate;
                else if (v == "slm" || v == "slm_kind")
                    e.variant = TransferrerVariant::Slm;
                else
                    throw ParseError(line_no, "unknown transferrer variant '" + value + "'");
            } else if (key == "pol") {
                try {
                    if (e.kind == ElementKind::SLM) {
                        const auto v = detail::lower(value);
                        if (v != "h" && v != "v")
                            throw ElementError("SLM pol= must be H or V");
                        e.only = v == "h" ? Polarization::H : Polarization::V;
                    } else {
                        e.direction = jones::parse_pol_state(value);
                    }
                } catch (const ElementError &err) {
                    throw ParseError(line_no, err.what());
                }
                have_pol = true;
            } else if (key == "efficiency") {
                e.efficiency = detail::parse_double(value, line_no, key);
            } else if (key == "swap") {
                const auto v = detail::lower(value);
                if (v != "true" && v != "false" && v != "1" && v != "0")
                    throw ParseError(line_no, "swap= must be true or false");
                e.swap_ports = v == "true" || v == "1";
            } else {
                throw ParseError(line_no, "unknown key '" + key + "'");
            }
        }
        if (e.kind == ElementKind::PBS) {
            if (!have_out)
                throw ParseError(line_no, "PBS needs out=<a>,<b>");
            e.path = e.out[0];
        } else if (!have_path) {
            throw ParseError(line_no, std::string(to_string(e.kind)) + " needs path=<n>");
        }
        if ((e.kind == ElementKind::HWP || e.kind == ElementKind::QWP ||
             e.kind == ElementKind::SLIT_MASK) &&
            !have_theta)
            throw ParseError(line_no, std::string(to_string(e.kind)) + " needs theta=<deg>");
        if (e.kind == ElementKind::FORK_HOLOGRAM && !have_out)
            throw ParseError(line_no, "FORK_HOLOGRAM needs out=<plus>,<minus>");
        if (e.kind == ElementKind::POLARIZER && !have_pol)
            throw ParseError(line_no, "POLARIZER needs pol=<state>");
        if (e.kind == ElementKind::SLM && !e.l)
            throw ParseError(line_no, "SLM needs l=<signed shift>");
        p.elements.push_back(std::move(e));
    }
    if (!have_source)
        throw ParseError(line_no == 0 ? 1 : line_no, "pipeline has no SOURCE line");
    return p;
}

inline Pipeline parse_pipeline(const std::string &text, const std::string &default_name = "file") {
    std::istringstream in(text);
    return parse_pipeline(in, default_name);
}

} // namespace polaoam
