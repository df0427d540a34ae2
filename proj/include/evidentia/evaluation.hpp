/*
 * Belief and Plausibility in three regimes.
 *
 * literal: the functions as usually written. For a proper subset
 *   hypothesis H: Bel sums subset focal masses contained in H, Pl sums
 *   subset focal masses intersecting H plus the theta mass (open-world
 *   ignorance could support anything). The theta label itself evaluates
 *   to 1 and the empty label to 0 by definition.
 *
 * table: the bookkeeping convention used when decoding a sign through a
 *   frame whose named possibilities overlap. Valid only for hypotheses
 *   that ARE named possibilities. Bel counts only unambiguous support:
 *   subset focals inside H that lie inside no other named possibility.
 *   Pl counts every subset focal inside H. Theta counts toward neither.
 *   This is deliberately different from the literal reading: a focal in
 *   the overlap of two possibilities pleads for both, so it is plausible
 *   for each but believed for neither.
 *
 * tbm: the open-world amendment: proper subset hypotheses follow the
 *   literal rule, while the empty and theta labels return their own
 *   masses m(empty) and m(theta) instead of the definitional 0 and 1.
 */

#pragma once

#include "body.hpp"
#include "errors.hpp"
#include "frame.hpp"
#include "numeric.hpp"

namespace evidentia {

enum class EvalMode { literal, table, tbm };

inline const char* eval_mode_name(EvalMode mode) {
    switch (mode) {
        case EvalMode::literal: return "literal";
        case EvalMode::table: return "table";
        case EvalMode::tbm: return "tbm";
    }
    return "?";
}

template <class M>
struct EvalResult {
    M belief;
    M plausibility;
    EvalMode mode;
};

namespace detail {

template <class M>
void require_hypothesis_in_frame(const BodyOfEvidence<M>& body, const FocalElement& hypothesis) {
    if (hypothesis.is_subset() && hypothesis.mask().universe_size() != body.frame()->size())
        raise(Errc::hypothesis_outside_frame, "hypothesis built against a different frame");
}

/// True when the focal subset lies inside some named possibility other
/// than the hypothesis itself (same-mask possibilities don't count as
/// "other").
inline bool inside_other_possibility(const Frame& frame, const SubsetMask& focal,
                                     const SubsetMask& hypothesis) {
    for (const auto& [name, mask] : frame.possibilities()) {
        if (mask == hypothesis) continue;
        if (focal.is_subset_of(mask)) return true;
    }
    return false;
}

} // namespace detail

template <class M>
EvalResult<M> interval(const BodyOfEvidence<M>& body, const FocalElement& hypothesis,
                       EvalMode mode) {
    using Traits = MassTraits<M>;
    detail::require_hypothesis_in_frame(body, hypothesis);

    if (!hypothesis.is_subset()) {
        switch (mode) {
            case EvalMode::literal:
                // Bel(theta)=Pl(theta)=1 and Bel(empty)=Pl(empty)=0 hold by
                // definition, independent of the masses.
                return {hypothesis.is_theta() ? Traits::one() : Traits::zero(),
                        hypothesis.is_theta() ? Traits::one() : Traits::zero(), mode};
            case EvalMode::tbm: {
                M own = hypothesis.is_theta() ? body.theta_mass() : body.empty_mass();
                return {own, own, mode};
            }
            case EvalMode::table:
                raise(Errc::table_mode_on_unnamed_hypothesis,
                      "table mode evaluates named possibilities only");
        }
    }

    const Frame& frame = *body.frame();
    const SubsetMask& target = hypothesis.mask();

    if (mode == EvalMode::table) {
        bool named = false;
        for (const auto& [name, mask] : frame.possibilities())
            if (mask == target) { named = true; break; }
        if (!named)
            raise(Errc::table_mode_on_unnamed_hypothesis,
                  "hypothesis is not a named possibility of the frame");

        M bel = Traits::zero();
        M pl = Traits::zero();
        for (const auto& [focal, mass] : body.masses()) {
            if (!focal.is_subset() || !focal.mask().is_subset_of(target)) continue;
            pl += mass;
            if (!detail::inside_other_possibility(frame, focal.mask(), target)) bel += mass;
        }
        return {std::move(bel), std::move(pl), mode};
    }

    // literal and tbm share the rule for proper subset hypotheses.
    M bel = Traits::zero();
    M pl = Traits::zero();
    for (const auto& [focal, mass] : body.masses()) {
        if (focal.is_theta()) {
            pl += mass;
            continue;
        }
        if (focal.is_empty()) continue;
        if (focal.mask().is_subset_of(target)) bel += mass;
        if (focal.mask().intersects(target)) pl += mass;
    }
    return {std::move(bel), std::move(pl), mode};
}

template <class M>
M belief(const BodyOfEvidence<M>& body, const FocalElement& hypothesis, EvalMode mode) {
    return interval(body, hypothesis, mode).belief;
}

template <class M>
M plausibility(const BodyOfEvidence<M>& body, const FocalElement& hypothesis, EvalMode mode) {
    return interval(body, hypothesis, mode).plausibility;
}

enum class Criterion { by_belief, by_plausibility };

enum class Preference { first, second, indifferent };

/// Orders two hypotheses by Bel or Pl. Exact comparison for rationals;
/// doubles within 1e-12 count as indifferent.
template <class M>
Preference compare_hypotheses(const BodyOfEvidence<M>& body, const FocalElement& first,
                              const FocalElement& second, Criterion criterion, EvalMode mode) {
    using Traits = MassTraits<M>;
    EvalResult<M> lhs = interval(body, first, mode);
    EvalResult<M> rhs = interval(body, second, mode);
    const M& a = criterion == Criterion::by_belief ? lhs.belief : lhs.plausibility;
    const M& b = criterion == Criterion::by_belief ? rhs.belief : rhs.plausibility;
    if (Traits::indifferent(a, b)) return Preference::indifferent;
    return a > b ? Preference::first : Preference::second;
}

} // namespace evidentia
