/*
 * evidentia: command-line surface of the library.
 *
 *   combine    combine the bodies of a bundle under --rule
 *   eval       Bel/Pl of a hypothesis against one body
 *   entropy    entropy report of one body
 *   decode     decoding trace of one codon under a genetic code (CSV)
 *   translate  statistical protein of an mRNA string (JSON)
 *   evolve     greedy entropy descent over a genetic code (CSV)
 *
 * Arithmetic mode: fraction-string masses select exact rationals, numeric
 * masses select doubles; EVIDENTIA_NUMERIC=rational|float overrides.
 *
 * Exit status: 0 success, 1 validation error, 2 computation error.
 */

#include <CLI11.hpp>

#include <evidentia/evidentia.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

using namespace evidentia;

namespace {

struct Options {
    std::string input;
    std::string out;
    std::string rule = "dempster";
    std::string mode = "literal";
    std::string hypothesis;
    std::string codon;
    std::string mrna;
    std::size_t body_index = 0;
    std::uint64_t samples = 1000;
    std::uint64_t seed = 0;
    std::size_t steps = 200;
};

void emit(const Options& opt, const std::string& text) {
    if (opt.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(opt.out, std::ios::binary);
    if (!file) raise(Errc::parse_error, "cannot write to '" + opt.out + "'");
    file << text;
}

Rule parse_rule(const std::string& name) {
    if (name == "dempster") return Rule::dempster;
    if (name == "smets") return Rule::smets;
    raise(Errc::invalid_argument, "rule must be dempster or smets, got '" + name + "'");
}

EvalMode parse_mode(const std::string& name) {
    if (name == "literal") return EvalMode::literal;
    if (name == "table") return EvalMode::table;
    if (name == "tbm") return EvalMode::tbm;
    raise(Errc::invalid_argument, "mode must be literal, table or tbm, got '" + name + "'");
}

io::NumericMode resolve_numeric_mode(const io::json& doc) {
    io::NumericMode detected = io::detect_numeric_mode(doc);
    const char* env = std::getenv("EVIDENTIA_NUMERIC");
    if (!env || !*env) return detected;
    std::string choice(env);
    if (choice == "rational") return io::NumericMode::rational;
    if (choice == "float") return io::NumericMode::floating;
    raise(Errc::invalid_argument,
          "EVIDENTIA_NUMERIC must be 'rational' or 'float', got '" + choice + "'");
}

template <class M>
const BodyOfEvidence<M>& select_body(const io::Bundle<M>& bundle, std::size_t index) {
    if (bundle.bodies.empty()) raise(Errc::empty_list, "bundle contains no bodies");
    if (index >= bundle.bodies.size())
        raise(Errc::invalid_argument,
              "body index " + std::to_string(index) + " out of range (bundle has " +
                  std::to_string(bundle.bodies.size()) + ")");
    return bundle.bodies[index];
}

template <class M>
FocalElement resolve_hypothesis(const Frame& frame, const std::string& name) {
    if (frame.has_possibility(name)) return possibility_focal(frame, name);
    if (name == "theta") return FocalElement::theta();
    if (name == "empty") return FocalElement::empty();
    raise(Errc::unknown_label, "unknown hypothesis '" + name + "'");
}

template <class M>
void run_combine(const io::json& doc, const Options& opt) {
    auto bundle = io::parse_bundle<M>(doc);
    if (bundle.bodies.empty()) raise(Errc::empty_list, "bundle contains no bodies (at /bodies)");
    auto report = combine_all(parse_rule(opt.rule), bundle.bodies);
    emit(opt, io::combination_value(report).dump());
}

template <class M>
void run_eval(const io::json& doc, const Options& opt) {
    auto bundle = io::parse_bundle<M>(doc);
    const auto& body = select_body(bundle, opt.body_index);
    auto hypothesis = resolve_hypothesis<M>(*bundle.frame, opt.hypothesis);
    auto result = interval(body, hypothesis, parse_mode(opt.mode));
    emit(opt, io::eval_value(result).dump());
}

template <class M>
void run_entropy(const io::json& doc, const Options& opt) {
    auto bundle = io::parse_bundle<M>(doc);
    const auto& body = select_body(bundle, opt.body_index);
    emit(opt, io::entropy_value(entropy(body, parse_mode(opt.mode))).dump());
}

template <class M>
void run_decode(const io::json& doc, const Options& opt) {
    auto code = io::parse_genetic_code<M>(doc);
    auto trace = decode_codon(code, opt.codon, parse_rule(opt.rule), parse_mode(opt.mode));
    emit(opt, io::trace_to_csv(trace));
}

template <class M>
void run_translate(const io::json& doc, const Options& opt) {
    auto code = io::parse_genetic_code<M>(doc);
    auto protein = translate(code, opt.mrna, opt.samples, opt.seed);
    emit(opt, io::protein_value<M>(protein).dump());
}

template <class M>
void run_evolve(const io::json& doc, const Options& opt) {
    auto code = io::parse_genetic_code<M>(doc);
    auto trajectory = evolve_code(code, opt.steps, opt.seed, parse_mode(opt.mode));
    emit(opt, io::trajectory_to_csv(trajectory));
}

template <void (*RationalRun)(const io::json&, const Options&),
          void (*FloatRun)(const io::json&, const Options&)>
void dispatch(const Options& opt) {
    io::json doc = io::load_file(opt.input);
    if (resolve_numeric_mode(doc) == io::NumericMode::rational)
        RationalRun(doc, opt);
    else
        FloatRun(doc, opt);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"evidence combination, evaluation, entropy and genetic-code simulation"};
    app.require_subcommand(1);

    Options opt;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("input", opt.input, "input JSON file")->required();
        cmd->add_option("--out", opt.out, "output file (default: stdout)");
    };

    auto* combine_cmd = app.add_subcommand("combine", "combine the bodies of a bundle");
    add_input(combine_cmd);
    combine_cmd->add_option("--rule", opt.rule, "dempster|smets")->required();

    auto* eval_cmd = app.add_subcommand("eval", "belief and plausibility of a hypothesis");
    add_input(eval_cmd);
    eval_cmd->add_option("--hypothesis", opt.hypothesis, "possibility name, or theta/empty (tbm)")
        ->required();
    eval_cmd->add_option("--mode", opt.mode, "literal|table|tbm")->required();
    eval_cmd->add_option("--body", opt.body_index, "body index in the bundle (default 0)");

    auto* entropy_cmd = app.add_subcommand("entropy", "entropy report of a body");
    add_input(entropy_cmd);
    entropy_cmd->add_option("--mode", opt.mode, "literal|table|tbm (default literal)");
    entropy_cmd->add_option("--body", opt.body_index, "body index in the bundle (default 0)");

    auto* decode_cmd = app.add_subcommand("decode", "decoding trace of one codon (CSV)");
    add_input(decode_cmd);
    decode_cmd->add_option("--codon", opt.codon, "three nucleotides, e.g. ACG")->required();
    decode_cmd->add_option("--rule", opt.rule, "smets|dempster (default smets)");
    decode_cmd->add_option("--mode", opt.mode, "literal|table|tbm (default table)");

    auto* translate_cmd = app.add_subcommand("translate", "statistical protein of an mRNA (JSON)");
    add_input(translate_cmd);
    translate_cmd->add_option("--mrna", opt.mrna, "nucleotide string")->required();
    translate_cmd->add_option("--samples", opt.samples, "sample count (default 1000)");
    translate_cmd->add_option("--seed", opt.seed, "RNG seed (default 0)");

    auto* evolve_cmd = app.add_subcommand("evolve", "greedy entropy descent (CSV)");
    add_input(evolve_cmd);
    evolve_cmd->add_option("--steps", opt.steps, "maximum proposals (default 200)");
    evolve_cmd->add_option("--seed", opt.seed, "RNG seed (default 0)");
    evolve_cmd->add_option("--mode", opt.mode, "literal|table|tbm (default literal)");

    // decode defaults differ from the shared Options defaults
    if (argc > 1 && std::string(argv[1]) == "decode") {
        opt.rule = "smets";
        opt.mode = "table";
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (combine_cmd->parsed()) dispatch<run_combine<Rational>, run_combine<double>>(opt);
        else if (eval_cmd->parsed()) dispatch<run_eval<Rational>, run_eval<double>>(opt);
        else if (entropy_cmd->parsed()) dispatch<run_entropy<Rational>, run_entropy<double>>(opt);
        else if (decode_cmd->parsed()) dispatch<run_decode<Rational>, run_decode<double>>(opt);
        else if (translate_cmd->parsed()) dispatch<run_translate<Rational>, run_translate<double>>(opt);
        else if (evolve_cmd->parsed()) dispatch<run_evolve<Rational>, run_evolve<double>>(opt);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.is_computation() ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
