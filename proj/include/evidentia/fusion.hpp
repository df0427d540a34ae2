/*
 * Combination of bodies of evidence.
 *
 * Two conjunctive rules over the same frame:
 *
 *   combine_dempster: products of masses accumulate on the intersection
 *     of their focal elements; mass falling on the empty intersection is
 *     discarded and the rest renormalized by 1-K, where K is the
 *     conflict mass. Requires closed-regime inputs and K < 1.
 *
 *   combine_smets: the same products with no renormalization: conflict
 *     stays as mass on the empty label and the result lives in the
 *     open-world regime. Accepts closed and open_tbm inputs.
 *
 * Both rules are commutative and associative with the vacuous body as
 * two-sided identity, so combine_all may fold a list in any order; in
 * exact mode the result is identical for every order.
 */

#pragma once

#include <span>
#include <utility>
#include <vector>

#include "body.hpp"
#include "errors.hpp"
#include "frame.hpp"
#include "numeric.hpp"

namespace evidentia {

enum class Rule { dempster, smets };

inline const char* rule_name(Rule rule) {
    return rule == Rule::dempster ? "dempster" : "smets";
}

template <class M>
struct CombinationReport {
    BodyOfEvidence<M> result;
    M conflict; // pre-normalization mass on empty intersections
    Rule rule;
};

namespace detail {

template <class M>
void require_same_frame(const BodyOfEvidence<M>& a, const BodyOfEvidence<M>& b) {
    if (!same_frame(a.frame(), b.frame()))
        raise(Errc::frame_mismatch, "bodies live on different frames");
}

/// All pairwise products, keyed by the intersection of the operands.
template <class M>
std::map<FocalElement, M> product_masses(const BodyOfEvidence<M>& a, const BodyOfEvidence<M>& b) {
    std::map<FocalElement, M> products;
    for (const auto& [x, mass_x] : a.masses()) {
        for (const auto& [y, mass_y] : b.masses()) {
            FocalElement meet = intersect(x, y);
            M product = mass_x * mass_y;
            auto it = products.find(meet);
            if (it == products.end())
                products.emplace(std::move(meet), std::move(product));
            else
                it->second += product;
        }
    }
    return products;
}

} // namespace detail

/// Mass the two bodies place on contradictory commitments: the sum of
/// m_a(X)·m_b(Y) over pairs whose intersection is empty.
template <class M>
M conflict_mass(const BodyOfEvidence<M>& a, const BodyOfEvidence<M>& b) {
    detail::require_same_frame(a, b);
    M conflict = MassTraits<M>::zero();
    for (const auto& [x, mass_x] : a.masses())
        for (const auto& [y, mass_y] : b.masses())
            if (intersect(x, y).is_empty()) conflict += mass_x * mass_y;
    return conflict;
}

template <class M>
CombinationReport<M> combine_dempster(const BodyOfEvidence<M>& a, const BodyOfEvidence<M>& b) {
    using Traits = MassTraits<M>;
    detail::require_same_frame(a, b);
    if (a.regime() != Regime::closed || b.regime() != Regime::closed)
        raise(Errc::regime_mismatch, "dempster combination requires closed-regime inputs");

    auto products = detail::product_masses(a, b);
    M conflict = Traits::zero();
    if (auto it = products.find(FocalElement::empty()); it != products.end()) {
        conflict = it->second;
        products.erase(it);
    }
    M keep = Traits::one() - conflict;
    if (!(keep > Traits::zero()))
        raise(Errc::total_conflict, "bodies are totally conflicting (K = 1)");

    std::vector<std::pair<FocalElement, M>> assignments;
    assignments.reserve(products.size());
    for (auto& [focal, mass] : products) assignments.emplace_back(focal, mass / keep);
    return {BodyOfEvidence<M>::make(a.frame(), assignments, Regime::closed), conflict,
            Rule::dempster};
}

template <class M>
CombinationReport<M> combine_smets(const BodyOfEvidence<M>& a, const BodyOfEvidence<M>& b) {
    detail::require_same_frame(a, b);
    auto products = detail::product_masses(a, b);
    M conflict = MassTraits<M>::zero();
    if (auto it = products.find(FocalElement::empty()); it != products.end()) conflict = it->second;

    std::vector<std::pair<FocalElement, M>> assignments(products.begin(), products.end());
    return {BodyOfEvidence<M>::make(a.frame(), assignments, Regime::open_tbm), conflict,
            Rule::smets};
}

template <class M>
CombinationReport<M> combine(Rule rule, const BodyOfEvidence<M>& a, const BodyOfEvidence<M>& b) {
    return rule == Rule::dempster ? combine_dempster(a, b) : combine_smets(a, b);
}

/// Left fold of the pairwise rule over a nonempty list. Cumulative
/// conflict is 1 - prod(1-K_i) for dempster and the final empty-label
/// mass for smets; a single body folds to itself with conflict 0.
template <class M>
CombinationReport<M> combine_all(Rule rule, std::span<const BodyOfEvidence<M>> bodies) {
    using Traits = MassTraits<M>;
    if (bodies.empty()) raise(Errc::empty_list, "no bodies to combine");
    if (bodies.size() == 1) return {bodies.front(), Traits::zero(), rule};

    BodyOfEvidence<M> accumulated = bodies.front();
    M survival = Traits::one(); // prod over steps of (1 - K_step)
    for (std::size_t i = 1; i < bodies.size(); ++i) {
        CombinationReport<M> step = combine(rule, accumulated, bodies[i]);
        survival *= Traits::one() - step.conflict;
        accumulated = std::move(step.result);
    }
    M conflict = rule == Rule::dempster ? Traits::one() - survival
                                        : accumulated.mass(FocalElement::empty());
    return {std::move(accumulated), std::move(conflict), rule};
}

template <class M>
CombinationReport<M> combine_all(Rule rule, const std::vector<BodyOfEvidence<M>>& bodies) {
    return combine_all(rule, std::span<const BodyOfEvidence<M>>(bodies));
}

/// Classical reliability discounting: subset masses scale by alpha, the
/// withheld remainder joins theta. alpha=1 keeps the body, alpha=0 gives
/// the vacuous body. Closed-regime bodies only.
template <class M>
BodyOfEvidence<M> discount(const BodyOfEvidence<M>& body, const M& alpha) {
    using Traits = MassTraits<M>;
    if (alpha < Traits::zero() || alpha > Traits::one())
        raise(Errc::alpha_out_of_range, "reliability must lie in [0,1], got " + Traits::to_string(alpha));
    if (body.regime() != Regime::closed)
        raise(Errc::regime_mismatch, "discounting is defined for closed-regime bodies");

    std::vector<std::pair<FocalElement, M>> assignments;
    M theta = Traits::one() - alpha + alpha * body.theta_mass();
    for (const auto& [focal, mass] : body.masses()) {
        if (focal.is_theta()) continue;
        assignments.emplace_back(focal, alpha * mass);
    }
    assignments.emplace_back(FocalElement::theta(), theta);
    return BodyOfEvidence<M>::make(body.frame(), assignments, Regime::closed);
}

} // namespace evidentia
