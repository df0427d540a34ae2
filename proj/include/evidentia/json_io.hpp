/*
 * JSON input/output.
 *
 * Input documents are parsed with nlohmann::json; every validation error
 * carries the JSON-pointer path of the offending element. Two document
 * kinds exist:
 *
 *   bundle: a frame plus bodies of evidence:
 *     { "ground": [...], "possibilities": {name: [labels]},
 *       "regime": "closed"|"open_tbm",
 *       "bodies": [ {"masses": [ {"focal": ..., "mass": ...} ]} ] }
 *     A focal is a list of possibility names (meaning their
 *     intersection), an {"elements": [labels]} subset, or the literal
 *     strings "theta" / "empty".
 *
 *   genetic code:
 *     { "name": ..., "ground": [codons], "amino_acids": {name: [codons]},
 *       "evidence": {"1": {"A": {"masses": [...]}, ...}, "2": ..., "3": ...} }
 *
 * Masses are either fraction strings ("1/3", exact rationals) or JSON
 * numbers (doubles); one file must stick to one representation.
 *
 * Output goes through a small deterministic writer instead of
 * nlohmann's: object keys sorted, rationals as lowest-terms "p/q"
 * strings, doubles with 17 significant digits, 2-space indent, trailing
 * newline. Identical inputs always produce byte-identical documents.
 */

#pragma once

#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "body.hpp"
#include "entropy.hpp"
#include "errors.hpp"
#include "evaluation.hpp"
#include "frame.hpp"
#include "fusion.hpp"
#include "genetic_code.hpp"
#include "numeric.hpp"

namespace evidentia::io {

// --- deterministic writer ----------------------------------------------

class JsonValue {
public:
    using Object = std::map<std::string, JsonValue>;
    using Array = std::vector<JsonValue>;

    JsonValue() : value_(Object{}) {}
    JsonValue(const char* s) : value_(std::string(s)) {}
    JsonValue(std::string s) : value_(std::move(s)) {}
    JsonValue(double d) : value_(d) {}
    JsonValue(std::uint64_t n) : value_(n) {}
    JsonValue(Object o) : value_(std::move(o)) {}
    JsonValue(Array a) : value_(std::move(a)) {}

    std::string dump() const {
        std::string out;
        write(out, 0);
        out += '\n';
        return out;
    }

private:
    static void write_escaped(std::string& out, const std::string& s) {
        out += '"';
        for (char c : s) {
            switch (c) {
                case '"': out += "\\\""; break;
                case '\\': out += "\\\\"; break;
                case '\n': out += "\\n"; break;
                case '\r': out += "\\r"; break;
                case '\t': out += "\\t"; break;
                default:
                    if (static_cast<unsigned char>(c) < 0x20) {
                        char buf[8];
                        std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                        out += buf;
                    } else {
                        out += c;
                    }
            }
        }
        out += '"';
    }

    void write(std::string& out, int depth) const {
        const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
        const std::string inner(static_cast<std::size_t>(depth + 1) * 2, ' ');
        if (const auto* s = std::get_if<std::string>(&value_)) {
            write_escaped(out, *s);
        } else if (const auto* d = std::get_if<double>(&value_)) {
            out += format_double(*d);
        } else if (const auto* n = std::get_if<std::uint64_t>(&value_)) {
            out += std::to_string(*n);
        } else if (const auto* obj = std::get_if<Object>(&value_)) {
            if (obj->empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (const auto& [key, child] : *obj) {
                if (!first) out += ",\n";
                first = false;
                out += inner;
                write_escaped(out, key);
                out += ": ";
                child.write(out, depth + 1);
            }
            out += '\n' + pad + '}';
        } else if (const auto* arr = std::get_if<Array>(&value_)) {
            if (arr->empty()) {
                out += "[]";
                return;
            }
            out += "[\n";
            bool first = true;
            for (const auto& child : *arr) {
                if (!first) out += ",\n";
                first = false;
                out += inner;
                child.write(out, depth + 1);
            }
            out += '\n' + pad + ']';
        }
    }

    std::variant<std::string, double, std::uint64_t, Object, Array> value_;
};

// --- parsing helpers ----------------------------------------------------

using nlohmann::json;

inline json parse_text(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) raise(Errc::parse_error, "input is not valid JSON");
    return doc;
}

inline json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(Errc::parse_error, "cannot open file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_text(buffer.str());
}

namespace detail {

[[noreturn]] inline void fail(const std::string& path, const std::string& what) {
    raise(Errc::parse_error, what + " (at " + path + ")");
}

inline const json& member(const json& node, const std::string& key, const std::string& path) {
    if (!node.is_object()) fail(path, "expected an object");
    auto it = node.find(key);
    if (it == node.end()) fail(path + "/" + key, "missing member");
    return *it;
}

inline std::string get_string(const json& node, const std::string& path) {
    if (!node.is_string()) fail(path, "expected a string");
    return node.get<std::string>();
}

inline std::vector<std::string> get_string_array(const json& node, const std::string& path) {
    if (!node.is_array()) fail(path, "expected an array of strings");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < node.size(); ++i)
        out.push_back(get_string(node[i], path + "/" + std::to_string(i)));
    return out;
}

/// Runs a parser step and appends the JSON path to any library error.
template <class F>
auto with_path(const std::string& path, F&& f) {
    try {
        return f();
    } catch (const Error& e) {
        if (e.code() == Errc::parse_error) throw;
        raise(e.code(), e.message() + " (at " + path + ")");
    }
}

} // namespace detail

enum class NumericMode { rational, floating };

/// Scans every "mass" member in the document. Fraction strings select
/// rational mode, JSON numbers select float mode; one file must not mix
/// the two.
inline NumericMode detect_numeric_mode(const json& doc) {
    bool saw_string = false;
    bool saw_number = false;
    std::function<void(const json&)> walk = [&](const json& node) {
        if (node.is_object()) {
            for (auto it = node.begin(); it != node.end(); ++it) {
                if (it.key() == "mass") {
                    if (it.value().is_string()) saw_string = true;
                    else if (it.value().is_number()) saw_number = true;
                }
                walk(it.value());
            }
        } else if (node.is_array()) {
            for (const auto& child : node) walk(child);
        }
    };
    walk(doc);
    if (saw_string && saw_number)
        raise(Errc::mixed_numeric_modes,
              "file mixes fraction strings and numeric masses; use one representation");
    return saw_number ? NumericMode::floating : NumericMode::rational;
}

namespace detail {

template <class M>
M parse_mass(const json& node, const std::string& path);

template <>
inline Rational parse_mass<Rational>(const json& node, const std::string& path) {
    if (node.is_string())
        return with_path(path, [&] { return MassTraits<Rational>::parse(node.get<std::string>()); });
    if (node.is_number()) {
        // Exact binary expansion of the double; only reachable when the
        // caller forces rational mode on a float file.
        return Rational(node.get<double>());
    }
    fail(path, "expected a mass (fraction string or number)");
}

template <>
inline double parse_mass<double>(const json& node, const std::string& path) {
    if (node.is_number()) return node.get<double>();
    if (node.is_string()) {
        Rational exact =
            with_path(path, [&] { return MassTraits<Rational>::parse(node.get<std::string>()); });
        return MassTraits<Rational>::to_double(exact);
    }
    fail(path, "expected a mass (fraction string or number)");
}

inline FocalElement parse_focal(const Frame& frame, const json& node, const std::string& path) {
    if (node.is_string()) {
        std::string label = node.get<std::string>();
        if (label == "theta") return FocalElement::theta();
        if (label == "empty") return FocalElement::empty();
        fail(path, "focal string must be \"theta\" or \"empty\", got '" + label + "'");
    }
    if (node.is_array()) {
        auto names = get_string_array(node, path);
        return with_path(path, [&] { return intersection_focal(frame, names); });
    }
    if (node.is_object()) {
        auto labels = get_string_array(member(node, "elements", path), path + "/elements");
        return with_path(path, [&] { return FocalElement::subset(frame.mask_of(labels)); });
    }
    fail(path, "expected a focal element");
}

template <class M>
BodyOfEvidence<M> parse_body(FramePtr frame, const json& node, Regime regime,
                             const std::string& path) {
    const json& masses = member(node, "masses", path);
    if (!masses.is_array()) fail(path + "/masses", "expected an array");
    std::vector<std::pair<FocalElement, M>> assignments;
    for (std::size_t i = 0; i < masses.size(); ++i) {
        const std::string entry_path = path + "/masses/" + std::to_string(i);
        const json& entry = masses[i];
        FocalElement focal = parse_focal(*frame, member(entry, "focal", entry_path),
                                         entry_path + "/focal");
        M mass = parse_mass<M>(member(entry, "mass", entry_path), entry_path + "/mass");
        assignments.emplace_back(std::move(focal), std::move(mass));
    }
    return with_path(path, [&] { return BodyOfEvidence<M>::make(frame, assignments, regime); });
}

inline FramePtr parse_frame(const json& doc, const std::string& possibilities_key) {
    auto ground = get_string_array(member(doc, "ground", ""), "/ground");
    const json& poss_node = member(doc, possibilities_key, "");
    if (!poss_node.is_object()) fail("/" + possibilities_key, "expected an object");
    std::map<std::string, std::vector<std::string>> possibilities;
    for (auto it = poss_node.begin(); it != poss_node.end(); ++it)
        possibilities.emplace(it.key(), get_string_array(it.value(), "/" + possibilities_key +
                                                                         "/" + it.key()));
    return with_path("/ground", [&] { return make_frame(std::move(ground), possibilities); });
}

} // namespace detail

template <class M>
struct Bundle {
    FramePtr frame;
    Regime regime = Regime::closed;
    std::vector<BodyOfEvidence<M>> bodies;
};

inline Regime parse_regime(const json& node, const std::string& path) {
    std::string text = detail::get_string(node, path);
    if (text == "closed") return Regime::closed;
    if (text == "open_tbm") return Regime::open_tbm;
    detail::fail(path, "regime must be \"closed\" or \"open_tbm\", got '" + text + "'");
}

template <class M>
Bundle<M> parse_bundle(const json& doc) {
    Bundle<M> bundle;
    bundle.frame = detail::parse_frame(doc, "possibilities");
    bundle.regime = parse_regime(detail::member(doc, "regime", ""), "/regime");
    const json& bodies = detail::member(doc, "bodies", "");
    if (!bodies.is_array()) detail::fail("/bodies", "expected an array");
    for (std::size_t i = 0; i < bodies.size(); ++i)
        bundle.bodies.push_back(detail::parse_body<M>(bundle.frame, bodies[i], bundle.regime,
                                                      "/bodies/" + std::to_string(i)));
    return bundle;
}

template <class M>
GeneticCode<M> parse_genetic_code(const json& doc) {
    std::string name = detail::get_string(detail::member(doc, "name", ""), "/name");
    FramePtr frame = detail::parse_frame(doc, "amino_acids");
    const json& evidence = detail::member(doc, "evidence", "");

    typename GeneticCode<M>::EvidenceTable table;
    for (std::size_t pos = 1; pos <= 3; ++pos) {
        const std::string pos_key = std::to_string(pos);
        const json& per_position = detail::member(evidence, pos_key, "/evidence");
        for (char nt : nucleotides) {
            const std::string nt_key(1, nt);
            const std::string path = "/evidence/" + pos_key + "/" + nt_key;
            const json& body_node = detail::member(per_position, nt_key, "/evidence/" + pos_key);
            table[pos - 1].emplace(
                nt, detail::parse_body<M>(frame, body_node, Regime::closed, path));
        }
    }
    return detail::with_path("/evidence", [&] {
        return GeneticCode<M>(std::move(name), frame, std::move(table));
    });
}

// --- serialization --------------------------------------------------------

template <class M>
JsonValue mass_value(const M& mass) {
    if constexpr (MassTraits<M>::is_exact)
        return JsonValue(MassTraits<M>::to_string(mass));
    else
        return JsonValue(MassTraits<M>::to_double(mass));
}

inline JsonValue focal_value(const Frame& frame, const FocalElement& focal) {
    switch (focal.kind()) {
        case FocalElement::Kind::theta: return JsonValue("theta");
        case FocalElement::Kind::empty: return JsonValue("empty");
        case FocalElement::Kind::subset: {
            JsonValue::Array elements;
            for (const auto& label : frame.labels_of(focal.mask()))
                elements.emplace_back(label);
            JsonValue::Object obj;
            obj.emplace("elements", std::move(elements));
            return JsonValue(std::move(obj));
        }
    }
    return JsonValue("?");
}

template <class M>
JsonValue body_value(const BodyOfEvidence<M>& body) {
    JsonValue::Array masses;
    for (const auto& [focal, mass] : body.masses()) {
        JsonValue::Object entry;
        entry.emplace("focal", focal_value(*body.frame(), focal));
        entry.emplace("mass", mass_value(mass));
        masses.emplace_back(std::move(entry));
    }
    JsonValue::Object obj;
    obj.emplace("masses", std::move(masses));
    return JsonValue(std::move(obj));
}

inline JsonValue::Object frame_members(const Frame& frame) {
    JsonValue::Object out;
    JsonValue::Array ground;
    for (const auto& label : frame.ground()) ground.emplace_back(label);
    out.emplace("ground", std::move(ground));
    JsonValue::Object possibilities;
    for (const auto& [name, mask] : frame.possibilities()) {
        JsonValue::Array labels;
        for (const auto& label : frame.labels_of(mask)) labels.emplace_back(label);
        possibilities.emplace(name, std::move(labels));
    }
    out.emplace("possibilities", std::move(possibilities));
    return out;
}

/// Bundle document; re-parses as valid input.
template <class M>
JsonValue bundle_value(const Frame& frame, Regime regime,
                       const std::vector<BodyOfEvidence<M>>& bodies) {
    JsonValue::Object doc = frame_members(frame);
    doc.emplace("regime", JsonValue(regime_name(regime)));
    JsonValue::Array body_array;
    for (const auto& body : bodies) body_array.emplace_back(body_value(body));
    doc.emplace("bodies", std::move(body_array));
    return JsonValue(std::move(doc));
}

/// Combination result: a bundle holding the combined body, plus the
/// conflict mass and the rule used.
template <class M>
JsonValue combination_value(const CombinationReport<M>& report) {
    JsonValue::Object doc = frame_members(*report.result.frame());
    doc.emplace("regime", JsonValue(regime_name(report.result.regime())));
    JsonValue::Array body_array;
    body_array.emplace_back(body_value(report.result));
    doc.emplace("bodies", std::move(body_array));
    doc.emplace("conflict", mass_value(report.conflict));
    doc.emplace("rule", JsonValue(rule_name(report.rule)));
    return JsonValue(std::move(doc));
}

template <class M>
JsonValue eval_value(const EvalResult<M>& result) {
    JsonValue::Object doc;
    doc.emplace("bel", mass_value(result.belief));
    doc.emplace("pl", mass_value(result.plausibility));
    return JsonValue(std::move(doc));
}

inline JsonValue entropy_value(const EntropyReport& report) {
    JsonValue::Object doc;
    doc.emplace("total", JsonValue(report.total));
    doc.emplace("conflict_term", JsonValue(report.conflict_term));
    doc.emplace("ambiguity_term", JsonValue(report.ambiguity_term));
    doc.emplace("mode", JsonValue(eval_mode_name(report.mode)));
    JsonValue::Object per;
    for (const auto& [name, terms] : report.per_possibility) {
        JsonValue::Object entry;
        entry.emplace("bel", JsonValue(terms.bel));
        entry.emplace("pl", JsonValue(terms.pl));
        entry.emplace("conflict", JsonValue(terms.conflict));
        entry.emplace("ambiguity", JsonValue(terms.ambiguity));
        per.emplace(name, std::move(entry));
    }
    doc.emplace("per_possibility", std::move(per));
    return JsonValue(std::move(doc));
}

inline std::string sequence_key(const std::vector<std::string>& sequence) {
    std::string out;
    for (std::size_t i = 0; i < sequence.size(); ++i) {
        if (i) out += '-';
        out += sequence[i];
    }
    return out;
}

/// Statistical protein; frequencies are exact "count/samples" fractions
/// in rational mode and doubles in float mode.
template <class M>
JsonValue protein_value(const StatisticalProtein& protein) {
    JsonValue::Object distribution;
    for (const auto& [sequence, count] : protein.counts) {
        if constexpr (MassTraits<M>::is_exact) {
            Rational frequency(count, protein.samples);
            distribution.emplace(sequence_key(sequence),
                                 JsonValue(MassTraits<Rational>::to_string(frequency)));
        } else {
            distribution.emplace(sequence_key(sequence),
                                 JsonValue(static_cast<double>(count) /
                                           static_cast<double>(protein.samples)));
        }
    }
    JsonValue::Object doc;
    doc.emplace("mrna", JsonValue(protein.mrna));
    doc.emplace("samples", JsonValue(std::uint64_t(protein.samples)));
    doc.emplace("seed", JsonValue(std::uint64_t(protein.seed)));
    doc.emplace("distribution", std::move(distribution));
    return JsonValue(std::move(doc));
}

/// Genetic-code document in the input schema.
template <class M>
JsonValue genetic_code_value(const GeneticCode<M>& code) {
    const Frame& frame = *code.frame();
    JsonValue::Object doc;
    doc.emplace("name", JsonValue(code.name()));
    JsonValue::Array ground;
    for (const auto& label : frame.ground()) ground.emplace_back(label);
    doc.emplace("ground", std::move(ground));
    JsonValue::Object aminos;
    for (const auto& [name, mask] : frame.possibilities()) {
        JsonValue::Array labels;
        for (const auto& label : frame.labels_of(mask)) labels.emplace_back(label);
        aminos.emplace(name, std::move(labels));
    }
    doc.emplace("amino_acids", std::move(aminos));
    JsonValue::Object evidence;
    for (std::size_t pos = 1; pos <= 3; ++pos) {
        JsonValue::Object per_position;
        for (char nt : nucleotides)
            per_position.emplace(std::string(1, nt), body_value(code.body(pos, nt)));
        evidence.emplace(std::to_string(pos), std::move(per_position));
    }
    doc.emplace("evidence", std::move(evidence));
    return JsonValue(std::move(doc));
}

} // namespace evidentia::io
