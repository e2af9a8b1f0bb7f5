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
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"

namespace polaoam {

enum class Polarization { H = 0, V = 1 };

inline char to_char(Polarization p) { return p == Polarization::H ? 'H' : 'V'; }

/// A single-photon mode: spatial path, linear polarization and OAM quantum
/// number.
struct ModeLabel {
    int path = 0;
    Polarization pol = Polarization::H;
    int oam = 0;

    friend bool operator==(const ModeLabel &, const ModeLabel &) = default;
};

inline std::string to_string(const ModeLabel &m) {
    std::string s = std::to_string(m.path) + ":" + to_char(m.pol);
    if (m.oam > 0)
        s += "+";
    s += std::to_string(m.oam);
    return s;
}

/// The finite mode set of one experiment. Modes are enumerated path-major,
/// then H before V, then OAM ascending; the enumeration never changes once
/// built.
class ModeRegistry {
  public:
    ModeRegistry(std::vector<int> paths, int l, bool include_zero_oam)
        : paths_(std::move(paths)), l_(l), zero_(include_zero_oam) {
        if (paths_.empty())
            throw RegistryError("registry needs at least one path");
        if (l_ < 1)
            throw RegistryError("OAM order l must be >= 1, got " +
                                std::to_string(l_));
        std::sort(paths_.begin(), paths_.end());
        if (std::adjacent_find(paths_.begin(), paths_.end()) != paths_.end())
            throw RegistryError("duplicate path index in registry");
        oam_ = zero_ ? std::vector<int>{-l_, 0, l_} : std::vector<int>{-l_, l_};
        for (int p : paths_)
            for (auto pol : {Polarization::H, Polarization::V})
                for (int m : oam_)
                    modes_.push_back({p, pol, m});
    }

    [[nodiscard]] const std::vector<int> &paths() const { return paths_; }
    [[nodiscard]] const std::vector<int> &oam_set() const { return oam_; }
    [[nodiscard]] int l() const { return l_; }
    [[nodiscard]] bool includes_zero_oam() const { return zero_; }
    [[nodiscard]] std::size_t size() const { return modes_.size(); }
    [[nodiscard]] const ModeLabel &mode(std::size_t i) const { return modes_.at(i); }
    [[nodiscard]] const std::vector<ModeLabel> &modes() const { return modes_; }

    [[nodiscard]] bool has_path(int p) const {
        return std::binary_search(paths_.begin(), paths_.end(), p);
    }
    [[nodiscard]] bool has_oam(int m) const {
        return std::find(oam_.begin(), oam_.end(), m) != oam_.end();
    }

    [[nodiscard]] std::optional<std::size_t> find(const ModeLabel &m) const {
        if (!has_path(m.path) || !has_oam(m.oam))
            return std::nullopt;
        auto path_pos = static_cast<std::size_t>(
            std::lower_bound(paths_.begin(), paths_.end(), m.path) - paths_.begin());
        auto oam_pos = static_cast<std::size_t>(
            std::find(oam_.begin(), oam_.end(), m.oam) - oam_.begin());
        return (path_pos * 2 + static_cast<std::size_t>(m.pol)) * oam_.size() + oam_pos;
    }

    [[nodiscard]] std::size_t index(const ModeLabel &m) const {
        auto i = find(m);
        if (!i)
            throw RegistryError("mode " + to_string(m) + " is not registered");
        return *i;
    }

    void require_path(int p) const {
        if (!has_path(p))
            throw RegistryError("path " + std::to_string(p) + " is not registered");
    }

    friend bool operator==(const ModeRegistry &a, const ModeRegistry &b) {
        return a.paths_ == b.paths_ && a.l_ == b.l_ && a.zero_ == b.zero_;
    }

  private:
    std::vector<int> paths_;
    int l_;
    bool zero_;
    std::vector<int> oam_;
    std::vector<ModeLabel> modes_;
};

using RegistryPtr = std::shared_ptr<const ModeRegistry>;

inline RegistryPtr build_registry(std::vector<int> paths, int l, bool include_zero_oam) {
    return std::make_shared<const ModeRegistry>(std::move(paths), l, include_zero_oam);
}

} // namespace polaoam
