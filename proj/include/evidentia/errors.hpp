/*
 * Error taxonomy shared by the whole library.
 *
 * Every failure is reported as an Error carrying an Errc code. Codes are
 * split into two kinds: validation failures (bad input, broken
 * precondition) and computation failures (the inputs were well formed but
 * the requested operation has no result, e.g. combining totally
 * conflicting evidence). The CLI maps the two kinds to exit statuses 1
 * and 2.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace evidentia {

enum class Errc {
    // frame construction
    duplicate_label,
    empty_possibility,
    unknown_label,
    frame_too_large,
    // body construction
    negative_mass,
    normalization_violation,
    empty_mass_in_closed_regime,
    empty_subset_focal,
    // frame coarsening / refinement
    partial_merge_map,
    overlapping_images,
    empty_image,
    // combination
    total_conflict,
    frame_mismatch,
    regime_mismatch,
    alpha_out_of_range,
    empty_list,
    // evaluation
    hypothesis_outside_frame,
    table_mode_on_unnamed_hypothesis,
    // entropy
    no_named_possibilities,
    not_a_probability_vector,
    // genetic codes
    invalid_nucleotide,
    length_not_multiple_of_three,
    invalid_genetic_code,
    // i/o
    parse_error,
    mixed_numeric_modes,
    // generic precondition failures (bad counts, bad flags)
    invalid_argument,
};

inline const char* errc_name(Errc code) {
    switch (code) {
        case Errc::duplicate_label: return "DuplicateLabel";
        case Errc::empty_possibility: return "EmptyPossibility";
        case Errc::unknown_label: return "UnknownLabel";
        case Errc::frame_too_large: return "FrameTooLarge";
        case Errc::negative_mass: return "NegativeMass";
        case Errc::normalization_violation: return "NormalizationViolation";
        case Errc::empty_mass_in_closed_regime: return "EmptyMassInClosedRegime";
        case Errc::empty_subset_focal: return "EmptySubsetFocal";
        case Errc::partial_merge_map: return "PartialMergeMap";
        case Errc::overlapping_images: return "OverlappingImages";
        case Errc::empty_image: return "EmptyImage";
        case Errc::total_conflict: return "TotalConflict";
        case Errc::frame_mismatch: return "FrameMismatch";
        case Errc::regime_mismatch: return "RegimeMismatch";
        case Errc::alpha_out_of_range: return "AlphaOutOfRange";
        case Errc::empty_list: return "EmptyList";
        case Errc::hypothesis_outside_frame: return "HypothesisOutsideFrame";
        case Errc::table_mode_on_unnamed_hypothesis: return "TableModeOnUnnamedHypothesis";
        case Errc::no_named_possibilities: return "NoNamedPossibilities";
        case Errc::not_a_probability_vector: return "NotAProbabilityVector";
        case Errc::invalid_nucleotide: return "InvalidNucleotide";
        case Errc::length_not_multiple_of_three: return "LengthNotMultipleOfThree";
        case Errc::invalid_genetic_code: return "InvalidGeneticCode";
        case Errc::parse_error: return "ParseError";
        case Errc::mixed_numeric_modes: return "MixedNumericModes";
        case Errc::invalid_argument: return "InvalidArgument";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message),
          code_(code),
          message_(message) {}

    Errc code() const noexcept { return code_; }

    /// Message without the errc-name prefix, for re-wrapping with context.
    const std::string& message() const noexcept { return message_; }

    // Computation errors have well-formed inputs; everything else is a
    // validation failure.
    bool is_computation() const noexcept { return code_ == Errc::total_conflict; }

private:
    Errc code_;
    std::string message_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message) {
    throw Error(code, message);
}

} // namespace evidentia
