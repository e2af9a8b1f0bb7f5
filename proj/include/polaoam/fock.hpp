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
#include <complex>
#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "modes.hpp"

namespace polaoam {

using Complex = std::complex<double>;

/// Per-mode photon counts, indexed by registry mode index.
using Occupation = std::vector<std::uint8_t>;

/// A single-photon wavefunction as a list of (mode, amplitude) pairs.
using SinglePhoton = std::vector<std::pair<ModeLabel, Complex>>;

/// Amplitudes whose magnitude falls below this are dropped after every
/// mode map and projection.
inline constexpr double kPruneAmplitude = 1e-14;

/// Squared norms below this count as the zero vector.
inline constexpr double kZeroNorm2 = 1e-24;

namespace detail {

inline double factorial_weight(const Occupation &n) {
    double w = 1.0;
    for (auto k : n)
        for (int j = 2; j <= k; ++j)
            w *= j;
    return w;
}

inline int count_photons(const Occupation &n) {
    int total = 0;
    for (auto k : n)
        total += k;
    return total;
}

} // namespace detail

/// Fixed-photon-number pure state over the modes of a registry.
///
/// Storage is sparse and keyed by occupation vector. Internally each entry
/// holds the coefficient of the normally ordered creation monomial
/// prod_i (a_i^dag)^{n_i} acting on the vacuum; the Fock amplitude of |n>
/// is that coefficient times sqrt(prod_i n_i!). Creation operators then act
/// on coefficients without any bosonic factor, so the result of a sequence
/// of creations is independent of its order bit for bit.
class PhotonicState {
  public:
    using Coefficients = std::map<Occupation, Complex>;

    static PhotonicState vacuum(RegistryPtr reg) {
        PhotonicState s(std::move(reg), 0, 1.0);
        s.coeff_.emplace(Occupation(s.reg_->size(), 0), Complex{1.0, 0.0});
        return s;
    }

    /// Zero vector with the given photon number.
    static PhotonicState zero(RegistryPtr reg, int photon_number,
                              double success_probability = 1.0) {
        return PhotonicState(std::move(reg), photon_number, success_probability);
    }

    /// Builds a state from Fock amplitudes <n|psi>.
    static PhotonicState from_amplitudes(RegistryPtr reg,
                                         const std::vector<std::pair<Occupation, Complex>> &amps,
                                         double success_probability = 1.0) {
        if (amps.empty())
            throw Error("from_amplitudes needs at least one occupation vector");
        const int n = detail::count_photons(amps.front().first);
        PhotonicState s(std::move(reg), n, success_probability);
        for (const auto &[occ, a] : amps) {
            if (occ.size() != s.reg_->size())
                throw RegistryError("occupation vector length does not match registry");
            if (detail::count_photons(occ) != n)
                throw PhotonNumberError("occupation vectors with different photon numbers");
            s.coeff_[occ] += a / std::sqrt(detail::factorial_weight(occ));
        }
        return s;
    }

    /// Raw constructor from monomial coefficients; used by the operations below.
    static PhotonicState from_coefficients(RegistryPtr reg, int photon_number,
                                           Coefficients coeff,
                                           double success_probability) {
        PhotonicState s(std::move(reg), photon_number, success_probability);
        s.coeff_ = std::move(coeff);
        return s;
    }

    [[nodiscard]] const ModeRegistry &registry() const { return *reg_; }
    [[nodiscard]] const RegistryPtr &registry_ptr() const { return reg_; }
    [[nodiscard]] int photon_number() const { return n_; }
    [[nodiscard]] double success_probability() const { return success_; }
    [[nodiscard]] const Coefficients &coefficients() const { return coeff_; }
    [[nodiscard]] bool is_zero() const { return norm2() < kZeroNorm2; }

    [[nodiscard]] Complex amplitude(const Occupation &occ) const {
        auto it = coeff_.find(occ);
        if (it == coeff_.end())
            return {};
        return it->second * std::sqrt(detail::factorial_weight(occ));
    }

    /// Nonzero Fock amplitudes in canonical occupation order.
    [[nodiscard]] std::vector<std::pair<Occupation, Complex>> amplitudes() const {
        std::vector<std::pair<Occupation, Complex>> out;
        out.reserve(coeff_.size());
        for (const auto &[occ, c] : coeff_)
            out.emplace_back(occ, c * std::sqrt(detail::factorial_weight(occ)));
        return out;
    }

    [[nodiscard]] double norm2() const {
        double s = 0.0;
        for (const auto &[occ, c] : coeff_)
            s += std::norm(c) * detail::factorial_weight(occ);
        return s;
    }
    [[nodiscard]] double norm() const { return std::sqrt(norm2()); }

    [[nodiscard]] PhotonicState with_success_probability(double p) const {
        PhotonicState s = *this;
        s.success_ = p;
        return s;
    }

    /// Photons at the given path in one occupation vector.
    [[nodiscard]] int photons_at(const Occupation &occ, int path) const {
        int total = 0;
        for (std::size_t i = 0; i < occ.size(); ++i)
            if (reg_->mode(i).path == path)
                total += occ[i];
        return total;
    }

  private:
    PhotonicState(RegistryPtr reg, int n, double success)
        : reg_(std::move(reg)), n_(n), success_(success) {
        if (!reg_)
            throw RegistryError("state needs a registry");
    }

    RegistryPtr reg_;
    int n_ = 0;
    Coefficients coeff_;
    double success_ = 1.0;
};

/// Human-readable occupation, e.g. "1:H+1 1:V-1^2".
inline std::string describe(const ModeRegistry &reg, const Occupation &occ) {
    std::string out;
    for (std::size_t i = 0; i < occ.size(); ++i) {
        if (occ[i] == 0)
            continue;
        if (!out.empty())
            out += ' ';
        out += to_string(reg.mode(i));
        if (occ[i] > 1)
            out += "^" + std::to_string(occ[i]);
    }
    return out.empty() ? "vac" : out;
}

inline void require_same_registry(const PhotonicState &a, const PhotonicState &b) {
    if (a.registry_ptr() != b.registry_ptr() && !(a.registry() == b.registry()))
        throw RegistryError("states live on different mode registries");
}

inline void require_same_photon_number(const PhotonicState &a, const PhotonicState &b) {
    if (a.photon_number() != b.photon_number())
        throw PhotonNumberError("photon numbers differ: " +
                                std::to_string(a.photon_number()) + " vs " +
                                std::to_string(b.photon_number()));
}

/// Applies a^dag for one registered mode. The result is unnormalized.
inline PhotonicState apply_creation(const PhotonicState &state, const ModeLabel &mode) {
    const std::size_t m = state.registry().index(mode);
    PhotonicState::Coefficients out;
    for (const auto &[occ, c] : state.coefficients()) {
        Occupation next = occ;
        ++next[m];
        out[next] += c;
    }
    return PhotonicState::from_coefficients(state.registry_ptr(), state.photon_number() + 1,
                                            std::move(out), state.success_probability());
}

/// Applies the creation operator of a superposed single-photon mode,
/// sum_j u_j a_j^dag.
inline PhotonicState apply_creation(const PhotonicState &state, const SinglePhoton &wavefunction) {
    std::vector<std::pair<std::size_t, Complex>> idx;
    for (const auto &[mode, u] : wavefunction) {
        const auto m = state.registry().index(mode);
        if (u != Complex{})
            idx.emplace_back(m, u);
    }
    PhotonicState::Coefficients out;
    for (const auto &[occ, c] : state.coefficients()) {
        for (const auto &[m, u] : idx) {
            Occupation next = occ;
            ++next[m];
            out[next] += c * u;
        }
    }
    return PhotonicState::from_coefficients(state.registry_ptr(), state.photon_number() + 1,
                                            std::move(out), state.success_probability());
}

/// Linear combination sum_k c_k |psi_k>. The success probability of the
/// result is the minimum over the terms; a warning goes to std::clog when
/// the terms disagree.
inline PhotonicState superpose(const std::vector<std::pair<Complex, PhotonicState>> &terms) {
    if (terms.empty())
        throw Error("superpose needs at least one term");
    const PhotonicState &first = terms.front().second;
    double success = first.success_probability();
    bool disagree = false;
    PhotonicState::Coefficients out;
    for (const auto &[k, s] : terms) {
        require_same_registry(first, s);
        require_same_photon_number(first, s);
        if (s.success_probability() != first.success_probability())
            disagree = true;
        success = std::min(success, s.success_probability());
        for (const auto &[occ, c] : s.coefficients())
            out[occ] += k * c;
    }
    if (disagree)
        std::clog << "polaoam: warning: superposing states with different "
                     "post-selection histories; keeping the minimum success "
                     "probability\n";
    std::erase_if(out, [](const auto &kv) {
        return std::abs(kv.second) * std::sqrt(detail::factorial_weight(kv.first)) <
               kPruneAmplitude;
    });
    return PhotonicState::from_coefficients(first.registry_ptr(), first.photon_number(),
                                            std::move(out), success);
}

/// <a|b>, conjugate-linear in the first argument.
inline Complex inner(const PhotonicState &a, const PhotonicState &b) {
    require_same_registry(a, b);
    require_same_photon_number(a, b);
    Complex s{};
    const auto &small = a.coefficients().size() <= b.coefficients().size() ? a : b;
    const auto &large = &small == &a ? b : a;
    for (const auto &[occ, c] : small.coefficients()) {
        auto it = large.coefficients().find(occ);
        if (it == large.coefficients().end())
            continue;
        const Complex ca = &small == &a ? c : it->second;
        const Complex cb = &small == &a ? it->second : c;
        s += std::conj(ca) * cb * detail::factorial_weight(occ);
    }
    return s;
}

/// |<a|b>|^2 / (<a|a><b|b>). Equals |<a|b>|^2 for normalized inputs.
inline double fidelity(const PhotonicState &a, const PhotonicState &b) {
    const double na = a.norm2();
    const double nb = b.norm2();
    if (na < kZeroNorm2 || nb < kZeroNorm2)
        throw AnnihilatedError("fidelity of a zero-norm state");
    return std::norm(inner(a, b)) / (na * nb);
}

inline PhotonicState scale(const PhotonicState &s, Complex k) {
    PhotonicState::Coefficients out = s.coefficients();
    for (auto &kv : out)
        kv.second *= k;
    return PhotonicState::from_coefficients(s.registry_ptr(), s.photon_number(), std::move(out),
                                            s.success_probability());
}

/// Rescales to unit norm; the success probability is carried over.
inline PhotonicState normalize(const PhotonicState &s) {
    const double n2 = s.norm2();
    if (n2 < kZeroNorm2)
        throw AnnihilatedError("cannot normalize a zero-norm state: the post-selected "
                               "branch is impossible");
    return scale(s, Complex{1.0 / std::sqrt(n2), 0.0});
}

enum class SinkKind {
    Loss,  ///< amplitude discarded, counted as post-selection loss
    Error, ///< amplitude must vanish; otherwise the map is applied outside its domain
};

struct Sink {
    std::string label;
    SinkKind kind;
};

struct MapTerm {
    std::size_t target; ///< registry mode index, or registry size + sink index
    Complex amplitude;
};

/// Linear single-photon map from registry modes into registry modes plus a
/// list of sinks. Modes with no image are outside the map's domain.
class ModeMap {
  public:
    explicit ModeMap(RegistryPtr reg) : reg_(std::move(reg)), images_(reg_->size()) {}

    static ModeMap identity(RegistryPtr reg) {
        ModeMap m(std::move(reg));
        for (std::size_t i = 0; i < m.images_.size(); ++i)
            m.images_[i] = std::vector<MapTerm>{{i, Complex{1.0, 0.0}}};
        return m;
    }

    [[nodiscard]] const ModeRegistry &registry() const { return *reg_; }
    [[nodiscard]] const RegistryPtr &registry_ptr() const { return reg_; }
    [[nodiscard]] std::size_t mode_count() const { return reg_->size(); }
    [[nodiscard]] const std::vector<Sink> &sinks() const { return sinks_; }
    [[nodiscard]] std::size_t extended_size() const { return reg_->size() + sinks_.size(); }

    [[nodiscard]] const std::optional<std::vector<MapTerm>> &image(std::size_t i) const {
        return images_.at(i);
    }

    /// Returns the target index of a (possibly new) sink with this label.
    std::size_t sink(const std::string &label, SinkKind kind) {
        for (std::size_t k = 0; k < sinks_.size(); ++k)
            if (sinks_[k].label == label && sinks_[k].kind == kind)
                return reg_->size() + k;
        sinks_.push_back({label, kind});
        return reg_->size() + sinks_.size() - 1;
    }

    void set(std::size_t i, std::vector<MapTerm> terms) {
        std::erase_if(terms, [](const MapTerm &t) { return t.amplitude == Complex{}; });
        images_.at(i) = std::move(terms);
    }
    void set(const ModeLabel &m, std::vector<MapTerm> terms) { set(reg_->index(m), std::move(terms)); }
    void clear(std::size_t i) { images_.at(i).reset(); }

    /// Dense matrix over registry modes (rows: outputs, columns: inputs);
    /// sink components and undefined columns are left out.
    [[nodiscard]] std::vector<std::vector<Complex>> matrix() const {
        const std::size_t n = reg_->size();
        std::vector<std::vector<Complex>> m(n, std::vector<Complex>(n));
        for (std::size_t j = 0; j < n; ++j)
            if (images_[j])
                for (const auto &t : *images_[j])
                    if (t.target < n)
                        m[t.target][j] += t.amplitude;
        return m;
    }

    /// Column inner products <image(i)|image(j)> over the extended space.
    [[nodiscard]] Complex column_inner(std::size_t i, std::size_t j) const {
        Complex s{};
        if (!images_[i] || !images_[j])
            return s;
        for (const auto &a : *images_[i])
            for (const auto &b : *images_[j])
                if (a.target == b.target)
                    s += std::conj(a.amplitude) * b.amplitude;
        return s;
    }

  private:
    RegistryPtr reg_;
    std::vector<std::optional<std::vector<MapTerm>>> images_;
    std::vector<Sink> sinks_;
};

/// Map applying `first`, then `second`. Components that `first` sends to a
/// mode outside the domain of `second` go to an error sink.
inline ModeMap compose(const ModeMap &first, const ModeMap &second) {
    if (!(first.registry() == second.registry()))
        throw RegistryError("composing maps over different registries");
    ModeMap out(first.registry_ptr());
    const std::size_t n = first.mode_count();
    std::vector<std::size_t> first_sink(first.sinks().size());
    for (std::size_t k = 0; k < first.sinks().size(); ++k)
        first_sink[k] = out.sink(first.sinks()[k].label, first.sinks()[k].kind);
    std::vector<std::size_t> second_sink(second.sinks().size());
    for (std::size_t k = 0; k < second.sinks().size(); ++k)
        second_sink[k] = out.sink(second.sinks()[k].label, second.sinks()[k].kind);

    for (std::size_t i = 0; i < n; ++i) {
        const auto &img = first.image(i);
        if (!img)
            continue;
        std::map<std::size_t, Complex> acc;
        for (const auto &t : *img) {
            if (t.target >= n) {
                acc[first_sink[t.target - n]] += t.amplitude;
                continue;
            }
            const auto &img2 = second.image(t.target);
            if (!img2) {
                auto s = out.sink("mode " + to_string(first.registry().mode(t.target)) +
                                      " outside the domain of the second map",
                                  SinkKind::Error);
                acc[s] += t.amplitude;
                continue;
            }
            for (const auto &u : *img2) {
                auto target = u.target < n ? u.target : second_sink[u.target - n];
                acc[target] += t.amplitude * u.amplitude;
            }
        }
        std::vector<MapTerm> terms;
        for (const auto &[target, a] : acc)
            if (std::abs(a) >= kPruneAmplitude)
                terms.push_back({target, a});
        out.set(i, std::move(terms));
    }
    return out;
}

/// Outcome of lifting a mode map to the full state.
struct LiftResult {
    PhotonicState kept;       ///< components with no photon in any sink, unnormalized
    double lost_norm2 = 0.0;  ///< squared norm that ended in loss sinks
};

/// Lifts a single-photon map to the N-photon state: each photon is mapped
/// independently, sum_j M_ji a_j^dag replaces a_i^dag. Throws DomainError when
/// an occupied mode has no image or when amplitude reaches an error sink.
inline LiftResult lift(const PhotonicState &state, const ModeMap &map) {
    if (!(state.registry() == map.registry()))
        throw RegistryError("mode map and state use different registries");
    const std::size_t n = map.mode_count();
    const std::size_t ext = map.extended_size();
    std::map<Occupation, Complex> result;

    for (const auto &[occ, c] : state.coefficients()) {
        std::map<Occupation, Complex> partial{{Occupation(ext, 0), c}};
        for (std::size_t i = 0; i < n; ++i) {
            if (occ[i] == 0)
                continue;
            const auto &img = map.image(i);
            if (!img)
                throw DomainError("occupied mode " + to_string(map.registry().mode(i)) +
                                  " is outside the domain of the element");
            for (int rep = 0; rep < occ[i]; ++rep) {
                std::map<Occupation, Complex> next;
                for (const auto &[k, a] : partial)
                    for (const auto &t : *img) {
                        Occupation kk = k;
                        ++kk[t.target];
                        next[kk] += a * t.amplitude;
                    }
                partial = std::move(next);
            }
        }
        for (const auto &[k, a] : partial)
            result[k] += a;
    }

    const double in_norm2 = state.norm2();
    double error_norm2 = 0.0;
    std::size_t worst_sink = 0;
    double worst = -1.0;
    double lost = 0.0;
    PhotonicState::Coefficients kept;
    for (const auto &[k, a] : result) {
        const double w = std::norm(a) * detail::factorial_weight(k);
        bool in_error = false;
        bool in_loss = false;
        for (std::size_t s = n; s < ext; ++s) {
            if (k[s] == 0)
                continue;
            if (map.sinks()[s - n].kind == SinkKind::Error) {
                in_error = true;
                if (w > worst) {
                    worst = w;
                    worst_sink = s - n;
                }
            } else {
                in_loss = true;
            }
        }
        if (in_error) {
            error_norm2 += w;
        } else if (in_loss) {
            lost += w;
        } else if (std::sqrt(w) >= kPruneAmplitude) {
            kept.emplace(Occupation(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(n)), a);
        }
    }
    if (error_norm2 > 1e-20 * std::max(in_norm2, 1e-300))
        throw DomainError(map.sinks()[worst_sink].label);
    return {PhotonicState::from_coefficients(state.registry_ptr(), state.photon_number(),
                                             std::move(kept), state.success_probability()),
            lost};
}

/// Homomorphic lift of a single-photon map; components sent to loss sinks
/// are dropped, so the result is generally unnormalized.
inline PhotonicState apply_mode_map(const PhotonicState &state, const ModeMap &map) {
    return lift(state, map).kept;
}

/// "Exactly one photon at each listed path, found in the span of the given
/// single-photon states". Each span must be orthonormal and live on its
/// path; listed paths are distinct.
class Projector {
  public:
    struct PathSpan {
        int path;
        std::vector<SinglePhoton> basis;
    };

    Projector() = default;
    explicit Projector(std::vector<PathSpan> spans) : spans_(std::move(spans)) { validate(); }

    /// One single-photon state per path.
    static Projector product(const std::vector<std::pair<int, SinglePhoton>> &states) {
        std::vector<PathSpan> spans;
        for (const auto &[p, s] : states)
            spans.push_back({p, {s}});
        return Projector(std::move(spans));
    }

    [[nodiscard]] const std::vector<PathSpan> &spans() const { return spans_; }

    /// Tensor product with another projector on disjoint paths.
    [[nodiscard]] Projector operator*(const Projector &other) const {
        auto spans = spans_;
        spans.insert(spans.end(), other.spans_.begin(), other.spans_.end());
        return Projector(std::move(spans));
    }

  private:
    void validate() const {
        for (std::size_t i = 0; i < spans_.size(); ++i) {
            for (std::size_t j = i + 1; j < spans_.size(); ++j)
                if (spans_[i].path == spans_[j].path)
                    throw Error("projector lists path " + std::to_string(spans_[i].path) +
                                " twice");
            const auto &basis = spans_[i].basis;
            if (basis.empty())
                throw Error("projector span at path " + std::to_string(spans_[i].path) +
                            " is empty");
            for (std::size_t a = 0; a < basis.size(); ++a) {
                for (const auto &[m, u] : basis[a])
                    if (m.path != spans_[i].path)
                        throw Error("projector vector for path " +
                                    std::to_string(spans_[i].path) + " has a component on " +
                                    to_string(m));
                for (std::size_t b = a; b < basis.size(); ++b) {
                    Complex ip{};
                    for (const auto &[ma, ua] : basis[a])
                        for (const auto &[mb, ub] : basis[b])
                            if (ma == mb)
                                ip += std::conj(ua) * ub;
                    const double expect = a == b ? 1.0 : 0.0;
                    if (std::abs(ip - expect) > 1e-9)
                        throw Error("projector span at path " + std::to_string(spans_[i].path) +
                                    " is not orthonormal");
                }
            }
        }
    }

    std::vector<PathSpan> spans_;
};

struct ProjectionResult {
    PhotonicState state;  ///< renormalized projected state (zero vector when probability is 0)
    double probability;   ///< squared norm of the projected component of the normalized input
};

namespace detail {

struct LocalProjector {
    std::vector<std::size_t> modes; ///< registry indices of the path's modes
    std::vector<std::vector<Complex>> q; ///< q[a][b]: <mode a|Q|mode b>
};

inline LocalProjector local_projector(const ModeRegistry &reg, const Projector::PathSpan &span) {
    reg.require_path(span.path);
    LocalProjector lp;
    for (std::size_t i = 0; i < reg.size(); ++i)
        if (reg.mode(i).path == span.path)
            lp.modes.push_back(i);
    const std::size_t d = lp.modes.size();
    lp.q.assign(d, std::vector<Complex>(d));
    for (const auto &vec : span.basis) {
        std::vector<Complex> dense(d);
        for (const auto &[m, u] : vec) {
            const std::size_t idx = reg.index(m);
            auto pos = std::find(lp.modes.begin(), lp.modes.end(), idx) - lp.modes.begin();
            dense[static_cast<std::size_t>(pos)] += u;
        }
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b)
                lp.q[a][b] += dense[a] * std::conj(dense[b]);
    }
    return lp;
}

} // namespace detail

/// Applies the projector. Components without exactly one photon at each
/// listed path are removed; the photon at each listed path is projected onto
/// the span. The returned state is renormalized and its success probability
/// multiplied by the returned probability.
inline ProjectionResult project(const PhotonicState &state, const Projector &proj) {
    const double in_norm2 = state.norm2();
    if (in_norm2 < kZeroNorm2)
        throw AnnihilatedError("projecting a zero-norm state");
    const auto &reg = state.registry();
    std::vector<detail::LocalProjector> locals;
    for (const auto &span : proj.spans())
        locals.push_back(detail::local_projector(reg, span));

    PhotonicState::Coefficients current;
    for (const auto &[occ, c] : state.coefficients()) {
        bool ok = true;
        for (const auto &lp : locals) {
            int count = 0;
            for (auto i : lp.modes)
                count += occ[i];
            if (count != 1) {
                ok = false;
                break;
            }
        }
        if (ok)
            current.emplace(occ, c);
    }
    // The photon at a projected path is alone there, so its mode carries
    // occupation 1 before and after and the coefficient transforms like an
    // amplitude.
    for (const auto &lp : locals) {
        PhotonicState::Coefficients next;
        for (const auto &[occ, c] : current) {
            std::size_t from = 0;
            while (occ[lp.modes[from]] == 0)
                ++from;
            for (std::size_t to = 0; to < lp.modes.size(); ++to) {
                const Complex q = lp.q[to][from];
                if (q == Complex{})
                    continue;
                Occupation k = occ;
                k[lp.modes[from]] = 0;
                k[lp.modes[to]] = 1;
                next[k] += q * c;
            }
        }
        current = std::move(next);
    }
    std::erase_if(current, [](const auto &kv) {
        return std::abs(kv.second) * std::sqrt(detail::factorial_weight(kv.first)) <
               kPruneAmplitude;
    });
    auto projected = PhotonicState::from_coefficients(state.registry_ptr(), state.photon_number(),
                                                      std::move(current),
                                                      state.success_probability());
    const double prob = std::clamp(projected.norm2() / in_norm2, 0.0, 1.0);
    if (projected.norm2() < kZeroNorm2)
        return {PhotonicState::zero(state.registry_ptr(), state.photon_number(), 0.0), 0.0};
    return {normalize(projected).with_success_probability(state.success_probability() * prob),
            prob};
}

inline double projection_probability(const PhotonicState &state, const Projector &proj) {
    return project(state, proj).probability;
}

} // namespace polaoam
