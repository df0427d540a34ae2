/*
 * Numeric modes.
 *
 * The library runs in one of two arithmetic modes, selected by the mass
 * type M of the templates:
 *
 *   Rational: arbitrary-precision fractions. Every operation is exact,
 *             so sums that should equal 1 equal 1 and golden values in
 *             ninths are reproduced bit for bit.
 *   double:   ordinary IEEE doubles for large runs, with a 1e-9
 *             normalization tolerance.
 *
 * MassTraits centralizes the difference: exactness flag, tolerances,
 * string formatting ("p/q" in lowest terms vs. 17 significant digits)
 * and parsing.
 */

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdio>
#include <string>

#include "errors.hpp"

namespace evidentia {

using Rational = boost::multiprecision::cpp_rational;

/// Formats a double with 17 significant digits (enough to round-trip).
inline std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

template <class M>
struct MassTraits;

template <>
struct MassTraits<Rational> {
    static constexpr bool is_exact = true;

    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }

    static double to_double(const Rational& value) { return value.convert_to<double>(); }

    // Lowest terms are guaranteed by cpp_rational's canonical form.
    static std::string to_string(const Rational& value) {
        return numerator(value).str() + "/" + denominator(value).str();
    }

    // Accepts "p/q" and plain integers "p".
    static Rational parse(const std::string& text) {
        if (!looks_rational(text))
            raise(Errc::parse_error, "not a rational number: '" + text + "'");
        try {
            Rational value(text);
            return value;
        } catch (const std::exception&) {
            raise(Errc::parse_error, "not a rational number: '" + text + "'");
        }
    }

    static bool looks_rational(const std::string& text) {
        std::size_t i = 0;
        auto digits = [&] {
            std::size_t start = i;
            while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
            return i > start;
        };
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
        if (!digits()) return false;
        if (i == text.size()) return true;
        if (text[i] != '/') return false;
        ++i;
        std::size_t denom_start = i;
        if (!digits() || i != text.size()) return false;
        // a zero denominator is not a number
        for (std::size_t j = denom_start; j < text.size(); ++j)
            if (text[j] != '0') return true;
        return false;
    }

    static bool equals(const Rational& a, const Rational& b) { return a == b; }

    /// Exact mode: a sum is normalized only if it is exactly 1.
    static bool is_unit_sum(const Rational& sum) { return sum == 1; }

    static bool indifferent(const Rational& a, const Rational& b) { return a == b; }
};

template <>
struct MassTraits<double> {
    static constexpr bool is_exact = false;

    static constexpr double normalization_tolerance = 1e-9;
    static constexpr double comparison_tolerance = 1e-12;

    static double zero() { return 0.0; }
    static double one() { return 1.0; }

    static double to_double(double value) { return value; }

    static std::string to_string(double value) { return format_double(value); }

    static double parse(const std::string& text) {
        std::size_t consumed = 0;
        double value = 0.0;
        try {
            value = std::stod(text, &consumed);
        } catch (const std::exception&) {
            raise(Errc::parse_error, "not a number: '" + text + "'");
        }
        if (consumed != text.size())
            raise(Errc::parse_error, "trailing characters in number: '" + text + "'");
        return value;
    }

    static bool equals(double a, double b) { return a == b; }

    static bool is_unit_sum(double sum) { return std::fabs(sum - 1.0) <= normalization_tolerance; }

    /// Hypothesis comparison treats values within 1e-12 as equal.
    static bool indifferent(double a, double b) { return std::fabs(a - b) <= comparison_tolerance; }
};

} // namespace evidentia
