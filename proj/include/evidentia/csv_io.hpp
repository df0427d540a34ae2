/*
 * CSV export of decoding traces and evolution trajectories.
 *
 * Comma-separated, header row, LF line endings, deterministic field
 * formatting (rationals "p/q", doubles with 17 significant digits) so
 * files are byte-stable across runs.
 */

#pragma once

#include <string>

#include "entropy.hpp"
#include "frame.hpp"
#include "genetic_code.hpp"
#include "numeric.hpp"

namespace evidentia::io {

namespace detail {

inline std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\n") == std::string::npos) return text;
    std::string quoted = "\"";
    for (char c : text) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

} // namespace detail

/// One row per (step, focal element of the cumulative body). The Bel/Pl
/// columns repeat the step's per-amino-acid evaluation on every row of
/// that step; the entropy column holds the cumulative body's entropy.
template <class M>
std::string trace_to_csv(const DecodingTrace<M>& trace) {
    using Traits = MassTraits<M>;
    if (trace.steps.empty()) return "step,focal,mass,entropy\n";
    const Frame& frame = *trace.steps.front().cumulative.frame();

    std::string out = "step,focal,mass";
    for (const auto& [name, mask] : frame.possibilities()) out += ",bel_" + detail::csv_field(name);
    for (const auto& [name, mask] : frame.possibilities()) out += ",pl_" + detail::csv_field(name);
    out += ",entropy\n";

    for (const auto& step : trace.steps) {
        std::string eval_columns;
        for (const auto& [name, result] : step.evaluations)
            eval_columns += "," + Traits::to_string(result.belief);
        for (const auto& [name, result] : step.evaluations)
            eval_columns += "," + Traits::to_string(result.plausibility);
        double step_entropy = entropy(step.cumulative, trace.mode).total;

        for (const auto& [focal, mass] : step.cumulative.masses()) {
            out += std::to_string(step.time_index);
            out += ',' + detail::csv_field(focal_label(frame, focal));
            out += ',' + Traits::to_string(mass);
            out += eval_columns;
            out += ',' + format_double(step_entropy);
            out += '\n';
        }
    }
    return out;
}

/// One row per proposal (step 0 is the initial code), with the mutation
/// description, the proposed code's entropy and the acceptance flag.
template <class M>
std::string trajectory_to_csv(const EvolutionTrajectory<M>& trajectory) {
    std::string out = "step,mutation,entropy,accepted\n";
    out += "0,," + format_double(trajectory.initial_entropy) + ",1\n";
    for (const auto& step : trajectory.steps) {
        out += std::to_string(step.step);
        out += ',' + detail::csv_field(step.mutation);
        out += ',' + format_double(step.entropy);
        out += step.accepted ? ",1\n" : ",0\n";
    }
    return out;
}

} // namespace evidentia::io
