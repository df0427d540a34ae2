/*
 * Generalized entropy of a body of evidence.
 *
 * Over the frame's named possibilities A_i, with Bel/Pl taken in the
 * chosen evaluation regime:
 *
 *   H = -sum_i [Pl(A_i)·lg2 Pl(A_i)] / e^(Pl(A_i)-Bel(A_i))
 *       +sum_i [Pl(A_i) - Bel(A_i)]
 *
 * using the 0·lg 0 = 0 convention. The first sum (conflict term) reduces
 * to Shannon entropy when the possibilities are disjoint singletons and
 * the body is Bayesian, because then Bel = Pl = p pointwise and the
 * damping factor is e^0. The second sum (ambiguity term) measures how
 * far the evidence stretches beyond each possibility; it vanishes iff
 * Bel = Pl for every possibility.
 *
 * The exponential is base e and the logarithm base 2, mixed on purpose.
 */

#pragma once

#include <cmath>
#include <map>
#include <span>
#include <string>

#include "body.hpp"
#include "errors.hpp"
#include "evaluation.hpp"
#include "numeric.hpp"

namespace evidentia {

struct PossibilityTerms {
    double bel = 0.0;
    double pl = 0.0;
    double conflict = 0.0;  // -Pl·lg2(Pl)/e^(Pl-Bel)
    double ambiguity = 0.0; // Pl-Bel
};

struct EntropyReport {
    double total = 0.0;
    double conflict_term = 0.0;
    double ambiguity_term = 0.0;
    EvalMode mode = EvalMode::literal;
    std::map<std::string, PossibilityTerms> per_possibility;
};

template <class M>
EntropyReport entropy(const BodyOfEvidence<M>& body, EvalMode mode = EvalMode::literal) {
    const Frame& frame = *body.frame();
    if (frame.possibilities().empty())
        raise(Errc::no_named_possibilities, "entropy needs at least one named possibility");

    EntropyReport report;
    report.mode = mode;
    for (const auto& [name, mask] : frame.possibilities()) {
        EvalResult<M> value = interval(body, FocalElement::subset(mask), mode);
        PossibilityTerms terms;
        terms.bel = MassTraits<M>::to_double(value.belief);
        terms.pl = MassTraits<M>::to_double(value.plausibility);
        terms.ambiguity = terms.pl - terms.bel;
        terms.conflict =
            terms.pl > 0.0 ? -(terms.pl * std::log2(terms.pl)) / std::exp(terms.ambiguity) : 0.0;
        report.conflict_term += terms.conflict;
        report.ambiguity_term += terms.ambiguity;
        report.per_possibility.emplace(name, terms);
    }
    report.total = report.conflict_term + report.ambiguity_term;
    return report;
}

/// The ambiguity term alone, computed exactly in the mass type:
/// sum_i [Pl(A_i) - Bel(A_i)].
template <class M>
M ambiguity(const BodyOfEvidence<M>& body, EvalMode mode = EvalMode::literal) {
    const Frame& frame = *body.frame();
    if (frame.possibilities().empty())
        raise(Errc::no_named_possibilities, "ambiguity needs at least one named possibility");

    M total = MassTraits<M>::zero();
    for (const auto& [name, mask] : frame.possibilities()) {
        EvalResult<M> value = interval(body, FocalElement::subset(mask), mode);
        total += value.plausibility - value.belief;
    }
    return total;
}

/// Shannon entropy in bits of a probability vector; the reference the
/// conflict term collapses to on disjoint singleton frames.
inline double shannon(std::span<const double> probabilities) {
    double sum = 0.0;
    for (double p : probabilities) {
        if (p < 0.0)
            raise(Errc::not_a_probability_vector, "negative entry " + format_double(p));
        sum += p;
    }
    if (std::fabs(sum - 1.0) > 1e-9)
        raise(Errc::not_a_probability_vector, "entries sum to " + format_double(sum));
    double h = 0.0;
    for (double p : probabilities)
        if (p > 0.0) h -= p * std::log2(p);
    return h;
}

} // namespace evidentia
