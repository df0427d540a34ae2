/*
 * Bodies of evidence.
 *
 * A BodyOfEvidence maps focal elements to nonnegative masses under one of
 * two normalization regimes:
 *
 *   closed:   subset and theta masses sum to 1, the empty label
 *             carries no mass;
 *   open_tbm: subset, theta and empty masses sum to 1 (the open-world
 *             regime where conflict accumulates on the empty label).
 *
 * Normalization is exact for Rational masses and holds within 1e-9 for
 * doubles. Bodies are immutable after construction; zero-mass entries
 * are dropped, duplicated focal elements have their masses summed.
 */

#pragma once

#include <map>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "frame.hpp"
#include "numeric.hpp"

namespace evidentia {

enum class Regime { closed, open_tbm };

inline const char* regime_name(Regime regime) {
    return regime == Regime::closed ? "closed" : "open_tbm";
}

template <class M>
class BodyOfEvidence {
public:
    using Traits = MassTraits<M>;
    using MassMap = std::map<FocalElement, M>;

    /// Validating constructor: sums duplicates, drops zeros, checks the
    /// regime's normalization condition.
    static BodyOfEvidence make(FramePtr frame,
                               const std::vector<std::pair<FocalElement, M>>& assignments,
                               Regime regime) {
        MassMap masses;
        for (const auto& [focal, mass] : assignments) {
            if (mass < Traits::zero())
                raise(Errc::negative_mass,
                      "mass " + Traits::to_string(mass) + " on " + focal_label(*frame, focal));
            if (focal.is_subset() && focal.mask().universe_size() != frame->size())
                raise(Errc::frame_mismatch, "focal element built against a different frame");
            auto [it, inserted] = masses.emplace(focal, mass);
            if (!inserted) it->second += mass;
        }
        for (auto it = masses.begin(); it != masses.end();) {
            if (Traits::equals(it->second, Traits::zero()))
                it = masses.erase(it);
            else
                ++it;
        }
        M total = Traits::zero();
        for (const auto& [focal, mass] : masses) total += mass;
        if (regime == Regime::closed) {
            auto it = masses.find(FocalElement::empty());
            if (it != masses.end())
                raise(Errc::empty_mass_in_closed_regime,
                      "closed regime admits no mass on the empty label (found " +
                          Traits::to_string(it->second) + ")");
        }
        if (!Traits::is_unit_sum(total))
            raise(Errc::normalization_violation,
                  "masses sum to " + Traits::to_string(total) + ", expected 1");
        return BodyOfEvidence(std::move(frame), regime, std::move(masses));
    }

    /// Total ignorance: all mass on theta. Identity element of both
    /// combination rules.
    static BodyOfEvidence vacuous(FramePtr frame) {
        return make(std::move(frame), {{FocalElement::theta(), Traits::one()}}, Regime::closed);
    }

    const FramePtr& frame() const { return frame_; }
    Regime regime() const { return regime_; }
    const MassMap& masses() const { return masses_; }
    std::size_t focal_count() const { return masses_.size(); }

    /// Mass of a focal element; absent focal elements carry mass 0.
    M mass(const FocalElement& focal) const {
        auto it = masses_.find(focal);
        return it == masses_.end() ? Traits::zero() : it->second;
    }

    M theta_mass() const { return mass(FocalElement::theta()); }
    M empty_mass() const { return mass(FocalElement::empty()); }

    bool operator==(const BodyOfEvidence& other) const {
        return regime_ == other.regime_ && masses_ == other.masses_ &&
               same_frame(frame_, other.frame_);
    }

private:
    BodyOfEvidence(FramePtr frame, Regime regime, MassMap masses)
        : frame_(std::move(frame)), regime_(regime), masses_(std::move(masses)) {}

    FramePtr frame_;
    Regime regime_;
    MassMap masses_;
};

/// Re-normalizes a body into the target regime. Moving to the closed
/// regime drops the empty label's mass and rescales the remainder, so a
/// body carrying all its mass on the empty label has no closed form.
template <class M>
BodyOfEvidence<M> renormalize(const BodyOfEvidence<M>& body, Regime target) {
    using Traits = MassTraits<M>;
    std::vector<std::pair<FocalElement, M>> kept;
    M total = Traits::zero();
    for (const auto& [focal, mass] : body.masses()) {
        if (target == Regime::closed && focal.is_empty()) continue;
        kept.emplace_back(focal, mass);
        total += mass;
    }
    if (Traits::equals(total, Traits::zero()))
        raise(Errc::total_conflict, "all mass sits on the empty label; no closed-regime body exists");
    for (auto& [focal, mass] : kept) mass = mass / total;
    return BodyOfEvidence<M>::make(body.frame(), kept, target);
}

} // namespace evidentia
