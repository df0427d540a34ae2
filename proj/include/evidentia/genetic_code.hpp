/*
 * Genetic-code decoding as sequential evidence fusion.
 *
 * A GeneticCode is a frame whose ground elements are codons and whose
 * named possibilities are amino acids, plus an evidence table: for each
 * codon position (1..3) and nucleotide (A,C,G,U) one closed-regime body
 * of evidence describing what that nucleotide, at that position, says
 * about the amino acid being assembled.
 *
 * decode_codon replays the arrival of the three nucleotides: bodies are
 * combined in arrival order, Bel/Pl per amino acid recorded at every
 * step, and the codon is decided for the unique amino acid maximizing
 * table-mode belief on the final body (ties stay undecided). Ambiguous
 * codes resolve undecided codons stochastically in translate, producing
 * statistical proteins.
 *
 * evolve_code runs a greedy first-improvement search over small evidence
 * mutations, accepting a mutation only when the mean decoding entropy
 * strictly drops, so the accepted entropy sequence is a descent by
 * construction.
 */

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "body.hpp"
#include "entropy.hpp"
#include "errors.hpp"
#include "evaluation.hpp"
#include "frame.hpp"
#include "fusion.hpp"
#include "numeric.hpp"

namespace evidentia {

inline constexpr std::array<char, 4> nucleotides{'A', 'C', 'G', 'U'};

inline bool is_nucleotide(char c) {
    return c == 'A' || c == 'C' || c == 'G' || c == 'U';
}

inline void require_nucleotide(char c) {
    if (!is_nucleotide(c))
        raise(Errc::invalid_nucleotide, std::string("'") + c + "' is not one of A, C, G, U");
}

template <class M>
class GeneticCode {
public:
    using EvidenceTable = std::array<std::map<char, BodyOfEvidence<M>>, 3>;

    GeneticCode(std::string name, FramePtr frame, EvidenceTable evidence)
        : name_(std::move(name)), frame_(std::move(frame)), evidence_(std::move(evidence)) {
        for (std::size_t pos = 0; pos < 3; ++pos) {
            for (char nt : nucleotides) {
                auto it = evidence_[pos].find(nt);
                if (it == evidence_[pos].end())
                    raise(Errc::invalid_genetic_code,
                          std::string("missing evidence body for position ") +
                              std::to_string(pos + 1) + ", nucleotide " + nt);
                if (!same_frame(it->second.frame(), frame_))
                    raise(Errc::invalid_genetic_code, "evidence body on a different frame");
                if (it->second.regime() != Regime::closed)
                    raise(Errc::invalid_genetic_code, "evidence bodies must be closed-regime");
            }
        }
    }

    const std::string& name() const { return name_; }
    const FramePtr& frame() const { return frame_; }
    const EvidenceTable& evidence() const { return evidence_; }

    /// Evidence carried by `nucleotide` at codon `position` (1-based).
    const BodyOfEvidence<M>& body(std::size_t position, char nucleotide) const {
        require_nucleotide(nucleotide);
        return evidence_[position - 1].at(nucleotide);
    }

    /// Copy of this code with one evidence cell replaced.
    GeneticCode with_body(std::size_t position, char nucleotide, BodyOfEvidence<M> body) const {
        EvidenceTable table = evidence_;
        table[position - 1].insert_or_assign(nucleotide, std::move(body));
        return GeneticCode(name_, frame_, std::move(table));
    }

private:
    std::string name_;
    FramePtr frame_;
    EvidenceTable evidence_;
};

template <class M>
struct TraceStep {
    std::size_t time_index = 0; // arrival order, 1-based
    BodyOfEvidence<M> incoming;
    BodyOfEvidence<M> cumulative;
    std::map<std::string, EvalResult<M>> evaluations; // per amino acid
};

template <class M>
struct DecodingTrace {
    std::string codon;
    Rule rule = Rule::smets;
    EvalMode mode = EvalMode::table;
    std::vector<TraceStep<M>> steps;
    std::optional<std::string> decision; // nullopt when undecided
};

namespace detail {

/// Amino acids tied for maximal table-mode belief on a body.
template <class M>
std::vector<std::string> table_belief_winners(const BodyOfEvidence<M>& body) {
    using Traits = MassTraits<M>;
    const Frame& frame = *body.frame();
    std::vector<std::pair<std::string, M>> beliefs;
    for (const auto& [name, mask] : frame.possibilities())
        beliefs.emplace_back(name, belief(body, FocalElement::subset(mask), EvalMode::table));
    const M* best = nullptr;
    for (const auto& [name, value] : beliefs)
        if (!best || value > *best) best = &value;
    std::vector<std::string> winners;
    for (const auto& [name, value] : beliefs)
        if (Traits::indifferent(value, *best)) winners.push_back(name);
    return winners;
}

inline void require_codon(std::string_view triplet) {
    if (triplet.size() != 3)
        raise(Errc::invalid_nucleotide,
              "a codon is exactly 3 nucleotides, got '" + std::string(triplet) + "'");
    for (char c : triplet) require_nucleotide(c);
}

} // namespace detail

template <class M>
DecodingTrace<M> decode_codon(const GeneticCode<M>& code, std::string_view triplet,
                              Rule rule = Rule::smets, EvalMode mode = EvalMode::table) {
    detail::require_codon(triplet);

    DecodingTrace<M> trace;
    trace.codon = std::string(triplet);
    trace.rule = rule;
    trace.mode = mode;

    std::optional<BodyOfEvidence<M>> cumulative;
    for (std::size_t pos = 1; pos <= 3; ++pos) {
        const BodyOfEvidence<M>& incoming = code.body(pos, triplet[pos - 1]);
        cumulative = cumulative ? combine(rule, *cumulative, incoming).result : incoming;

        TraceStep<M> step{pos, incoming, *cumulative, {}};
        for (const auto& [name, mask] : code.frame()->possibilities())
            step.evaluations.emplace(name,
                                     interval(*cumulative, FocalElement::subset(mask), mode));
        trace.steps.push_back(std::move(step));
    }

    auto winners = detail::table_belief_winners(*cumulative);
    if (winners.size() == 1) trace.decision = winners.front();
    return trace;
}

struct StatisticalProtein {
    std::string mrna;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    // Amino-acid sequences with the number of sampled translations that
    // produced them; counts sum to `samples`.
    std::map<std::vector<std::string>, std::uint64_t> counts;

    std::map<std::vector<std::string>, double> frequencies() const {
        std::map<std::vector<std::string>, double> out;
        for (const auto& [sequence, count] : counts)
            out.emplace(sequence, static_cast<double>(count) / static_cast<double>(samples));
        return out;
    }
};

namespace detail {

/// Deterministic uniform draw in [0,1).
inline double canonical(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline std::size_t pick(std::mt19937_64& rng, std::size_t n) {
    return static_cast<std::size_t>(rng() % n);
}

struct CodonResolution {
    std::optional<std::string> decision;
    std::vector<std::string> tied;   // candidates when undecided
    std::vector<double> weights;     // plausibility weights for sampling
};

template <class M>
CodonResolution resolve_codon(const GeneticCode<M>& code, std::string_view codon) {
    DecodingTrace<M> trace = decode_codon(code, codon);
    CodonResolution res;
    res.decision = trace.decision;
    if (res.decision) return res;

    const BodyOfEvidence<M>& final_body = trace.steps.back().cumulative;
    res.tied = table_belief_winners(final_body);
    double total = 0.0;
    for (const auto& name : res.tied) {
        double w = MassTraits<M>::to_double(
            plausibility(final_body, FocalElement::subset(code.frame()->possibility(name)),
                         EvalMode::table));
        res.weights.push_back(w);
        total += w;
    }
    // All-zero plausibilities degenerate to a uniform draw.
    if (total <= 0.0)
        for (auto& w : res.weights) w = 1.0;
    return res;
}

} // namespace detail

/// Translates an mRNA string, resolving undecided codons by sampling an
/// amino acid among the belief-tied candidates with probability
/// proportional to table-mode plausibility. Pure in (code, mrna,
/// samples, seed).
template <class M>
StatisticalProtein translate(const GeneticCode<M>& code, std::string_view mrna,
                             std::uint64_t samples, std::uint64_t seed) {
    if (mrna.size() % 3 != 0)
        raise(Errc::length_not_multiple_of_three,
              "mRNA length " + std::to_string(mrna.size()) + " is not a multiple of 3");
    for (char c : mrna) require_nucleotide(c);
    if (samples < 1) raise(Errc::invalid_argument, "samples must be at least 1");

    std::vector<std::string> codons;
    for (std::size_t i = 0; i < mrna.size(); i += 3) codons.emplace_back(mrna.substr(i, 3));

    std::map<std::string, detail::CodonResolution> resolved;
    bool any_undecided = false;
    for (const auto& codon : codons) {
        auto [it, inserted] = resolved.try_emplace(codon);
        if (inserted) it->second = detail::resolve_codon(code, codon);
        if (!it->second.decision) any_undecided = true;
    }

    StatisticalProtein protein;
    protein.mrna = std::string(mrna);
    protein.samples = samples;
    protein.seed = seed;

    if (!any_undecided) {
        std::vector<std::string> sequence;
        for (const auto& codon : codons) sequence.push_back(*resolved[codon].decision);
        protein.counts.emplace(std::move(sequence), samples);
        return protein;
    }

    std::mt19937_64 rng(seed);
    for (std::uint64_t s = 0; s < samples; ++s) {
        std::vector<std::string> sequence;
        sequence.reserve(codons.size());
        for (const auto& codon : codons) {
            const auto& res = resolved[codon];
            if (res.decision) {
                sequence.push_back(*res.decision);
                continue;
            }
            double total = 0.0;
            for (double w : res.weights) total += w;
            double u = detail::canonical(rng) * total;
            std::size_t chosen = res.tied.size() - 1;
            double running = 0.0;
            for (std::size_t i = 0; i < res.tied.size(); ++i) {
                running += res.weights[i];
                if (u < running) {
                    chosen = i;
                    break;
                }
            }
            sequence.push_back(res.tied[chosen]);
        }
        ++protein.counts[sequence];
    }
    return protein;
}

namespace detail {

/// Final combined body for one codon under the smets reading (the
/// nucleotide bodies are combined by the bare conjunctive numerator).
template <class M>
BodyOfEvidence<M> final_body(const GeneticCode<M>& code, char n1, char n2, char n3) {
    auto first = combine_smets(code.body(1, n1), code.body(2, n2)).result;
    return combine_smets(first, code.body(3, n3)).result;
}

} // namespace detail

/// Mean decoding entropy over all 64 codons.
template <class M>
double code_entropy(const GeneticCode<M>& code, EvalMode mode = EvalMode::literal) {
    double total = 0.0;
    for (char n1 : nucleotides)
        for (char n2 : nucleotides) {
            auto partial = combine_smets(code.body(1, n1), code.body(2, n2)).result;
            for (char n3 : nucleotides)
                total += entropy(combine_smets(partial, code.body(3, n3)).result, mode).total;
        }
    return total / 64.0;
}

/// Mean ambiguity term over all 64 codons, exact in the mass type.
template <class M>
M code_ambiguity(const GeneticCode<M>& code, EvalMode mode = EvalMode::literal) {
    using Traits = MassTraits<M>;
    M total = Traits::zero();
    for (char n1 : nucleotides)
        for (char n2 : nucleotides) {
            auto partial = combine_smets(code.body(1, n1), code.body(2, n2)).result;
            for (char n3 : nucleotides)
                total += ambiguity(combine_smets(partial, code.body(3, n3)).result, mode);
        }
    M count = Traits::zero();
    for (int i = 0; i < 64; ++i) count += Traits::one();
    return total / count;
}

struct EvolutionStep {
    std::size_t step = 0;   // proposal index, 1-based
    std::string mutation;   // e.g. "pos=3 nt=A theta->A2 frac=1/1"
    double entropy = 0.0;   // entropy of the proposed code
    bool accepted = false;
};

template <class M>
struct EvolutionTrajectory {
    double initial_entropy = 0.0;
    EvalMode mode = EvalMode::literal;
    std::vector<EvolutionStep> steps;
    GeneticCode<M> final_code;
    std::size_t accepted_count = 0;
};

namespace detail {

template <class M>
std::pair<GeneticCode<M>, std::string> propose_mutation(const GeneticCode<M>& code,
                                                        std::mt19937_64& rng) {
    using Traits = MassTraits<M>;
    const Frame& frame = *code.frame();
    std::vector<std::string> names;
    for (const auto& [name, mask] : frame.possibilities()) names.push_back(name);

    std::size_t position = pick(rng, 3) + 1;
    char nt = nucleotides[pick(rng, 4)];
    const BodyOfEvidence<M>& cell = code.body(position, nt);

    bool do_swap = names.size() >= 2 && pick(rng, 3) == 0;
    std::string desc = "pos=" + std::to_string(position) + " nt=" + nt + " ";

    std::vector<std::pair<FocalElement, M>> assignments(cell.masses().begin(),
                                                        cell.masses().end());
    auto mass_at = [&](const FocalElement& focal) -> M {
        for (auto& [f, m] : assignments)
            if (f == focal) return m;
        return Traits::zero();
    };
    auto set_mass = [&](const FocalElement& focal, const M& value) {
        for (auto& [f, m] : assignments) {
            if (f == focal) {
                m = value;
                return;
            }
        }
        assignments.emplace_back(focal, value);
    };

    if (do_swap) {
        std::size_t i = pick(rng, names.size());
        std::size_t j = pick(rng, names.size() - 1);
        if (j >= i) ++j;
        if (i > j) std::swap(i, j);
        FocalElement a = possibility_focal(frame, names[i]);
        FocalElement b = possibility_focal(frame, names[j]);
        M mass_a = mass_at(a);
        M mass_b = mass_at(b);
        set_mass(a, mass_b);
        set_mass(b, mass_a);
        desc += "swap " + names[i] + "<->" + names[j];
    } else {
        const std::string& name = names[pick(rng, names.size())];
        FocalElement target = possibility_focal(frame, name);
        bool to_theta = pick(rng, 2) == 0;
        bool half = pick(rng, 2) == 0;
        FocalElement theta = FocalElement::theta();
        FocalElement source = to_theta ? target : theta;
        FocalElement sink = to_theta ? theta : target;
        M amount = mass_at(source);
        if (half) amount = amount / (Traits::one() + Traits::one());
        set_mass(source, mass_at(source) - amount);
        set_mass(sink, mass_at(sink) + amount);
        desc += (to_theta ? name + "->theta" : "theta->" + name);
        desc += half ? " frac=1/2" : " frac=1/1";
    }

    BodyOfEvidence<M> mutated =
        BodyOfEvidence<M>::make(code.frame(), assignments, Regime::closed);
    return {code.with_body(position, nt, std::move(mutated)), std::move(desc)};
}

/// Number of distinct single mutations: per cell, every
/// (possibility, direction, fraction) transfer plus every unordered
/// possibility swap.
inline std::size_t neighborhood_size(std::size_t possibility_count) {
    std::size_t per_cell =
        possibility_count * 4 + possibility_count * (possibility_count - 1) / 2;
    return 12 * per_cell;
}

} // namespace detail

/// Greedy first-improvement descent on code entropy. Each proposal
/// mutates one evidence cell; it is accepted iff the mean decoding
/// entropy strictly decreases. Stops at max_steps or once a full
/// neighborhood's worth of consecutive proposals brought no improvement.
template <class M>
EvolutionTrajectory<M> evolve_code(const GeneticCode<M>& initial, std::size_t max_steps,
                                   std::uint64_t seed, EvalMode mode = EvalMode::literal) {
    if (max_steps < 1) raise(Errc::invalid_argument, "max_steps must be at least 1");

    EvolutionTrajectory<M> trajectory{code_entropy(initial, mode), mode, {}, initial, 0};
    double current = trajectory.initial_entropy;
    GeneticCode<M> code = initial;

    std::mt19937_64 rng(seed);
    const std::size_t sweep = detail::neighborhood_size(code.frame()->possibilities().size());
    std::size_t stale = 0;

    for (std::size_t step = 1; step <= max_steps && stale < sweep; ++step) {
        auto [candidate, description] = detail::propose_mutation(code, rng);
        double candidate_entropy = code_entropy(candidate, mode);
        bool accepted = candidate_entropy < current;
        trajectory.steps.push_back({step, std::move(description), candidate_entropy, accepted});
        if (accepted) {
            code = std::move(candidate);
            current = candidate_entropy;
            ++trajectory.accepted_count;
            stale = 0;
        } else {
            ++stale;
        }
    }
    trajectory.final_code = std::move(code);
    return trajectory;
}

// --- shipped toy code -------------------------------------------------
//
// Two amino acids over six codons, A1 = {c1..c4}, A2 = {c4,c5}; the
// shared codon c4 is what makes ambiguity possible. The first two
// nucleotide positions carry the even three-way split between A1, A2
// and theta; the third position either names A2 outright (unambiguous
// variant) or brings no information at all (ambiguous variant).

inline FramePtr toy_frame() {
    return make_frame({"c1", "c2", "c3", "c4", "c5", "c6"},
                      {{"A1", {"c1", "c2", "c3", "c4"}}, {"A2", {"c4", "c5"}}});
}

namespace detail {

template <class M>
GeneticCode<M> toy_code(bool ambiguous) {
    using Traits = MassTraits<M>;
    FramePtr frame = toy_frame();
    M third = Traits::one() / (Traits::one() + Traits::one() + Traits::one());

    BodyOfEvidence<M> split = BodyOfEvidence<M>::make(
        frame,
        {{possibility_focal(*frame, "A1"), third},
         {possibility_focal(*frame, "A2"), third},
         {FocalElement::theta(), third}},
        Regime::closed);
    BodyOfEvidence<M> last =
        ambiguous ? BodyOfEvidence<M>::vacuous(frame)
                  : BodyOfEvidence<M>::make(
                        frame, {{possibility_focal(*frame, "A2"), Traits::one()}}, Regime::closed);

    typename GeneticCode<M>::EvidenceTable table;
    for (char nt : nucleotides) {
        table[0].emplace(nt, split);
        table[1].emplace(nt, split);
        table[2].emplace(nt, last);
    }
    return GeneticCode<M>(ambiguous ? "toy-ambiguous" : "toy-unambiguous", frame,
                          std::move(table));
}

} // namespace detail

template <class M>
GeneticCode<M> toy_code_ambiguous() {
    return detail::toy_code<M>(true);
}

template <class M>
GeneticCode<M> toy_code_unambiguous() {
    return detail::toy_code<M>(false);
}

} // namespace evidentia
