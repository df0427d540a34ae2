#include <catch2/catch_amalgamated.hpp>

#include <evidentia/evidentia.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace evidentia;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string output;
    std::string error;
};

std::string data_file(const std::string& name) {
    return std::string(EVIDENTIA_DATA_DIR) + "/" + name;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

CliResult run_cli(const std::string& args, const std::string& env = "") {
    static int counter = 0;
    auto err_path = std::filesystem::temp_directory_path() /
                    ("evidentia_cli_err_" + std::to_string(++counter) + ".txt");
    std::string command = env + (env.empty() ? "" : " ") + EVIDENTIA_CLI_PATH + " " + args +
                          " 2>" + err_path.string();
    CliResult result;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buffer[4096];
    std::size_t n;
    while ((n = fread(buffer, 1, sizeof(buffer), pipe)) > 0) result.output.append(buffer, n);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.error = slurp(err_path.string());
    std::filesystem::remove(err_path);
    return result;
}

std::string write_temp(const std::string& name, const std::string& text) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path, std::ios::binary);
    out << text;
    return path.string();
}

} // namespace

TEST_CASE("combine reproduces the decided third row") {
    auto result = run_cli("combine --rule smets " + data_file("toy_bodies_decided.json"));
    REQUIRE(result.exit_code == 0);

    auto bundle = io::parse_bundle<Rational>(io::parse_text(result.output));
    REQUIRE(bundle.bodies.size() == 1);
    auto frame = bundle.frame;
    auto overlap = FocalElement::subset(frame->mask_of({std::string("c4")}));
    CHECK(bundle.bodies[0].mass(overlap) == Rational(5, 9));
    CHECK(bundle.bodies[0].mass(possibility_focal(*frame, "A2")) == Rational(4, 9));
    CHECK(result.output.find("\"conflict\": \"0/1\"") != std::string::npos);
    CHECK(result.output.find("\"rule\": \"smets\"") != std::string::npos);
}

TEST_CASE("combine output is byte-identical across runs") {
    std::string args = "combine --rule smets " + data_file("toy_bodies_ambiguous.json");
    auto first = run_cli(args);
    auto second = run_cli(args);
    REQUIRE(first.exit_code == 0);
    CHECK(first.output == second.output);
}

TEST_CASE("combine with dempster matches smets here because nothing conflicts") {
    auto smets = run_cli("combine --rule smets " + data_file("toy_bodies_decided.json"));
    auto dempster = run_cli("combine --rule dempster " + data_file("toy_bodies_decided.json"));
    REQUIRE(smets.exit_code == 0);
    REQUIRE(dempster.exit_code == 0);
    auto s = io::parse_bundle<Rational>(io::parse_text(smets.output));
    auto d = io::parse_bundle<Rational>(io::parse_text(dempster.output));
    CHECK(s.bodies.at(0).masses() == d.bodies.at(0).masses());
    CHECK(s.regime == Regime::open_tbm);
    CHECK(d.regime == Regime::closed);
}

TEST_CASE("eval prints belief and plausibility of the second row") {
    auto result =
        run_cli("eval --hypothesis A1 --mode table " + data_file("toy_body_step2.json"));
    REQUIRE(result.exit_code == 0);
    auto doc = io::parse_text(result.output);
    CHECK(MassTraits<Rational>::parse(doc.at("bel").get<std::string>()) == Rational(3, 9));
    CHECK(MassTraits<Rational>::parse(doc.at("pl").get<std::string>()) == Rational(5, 9));
    // lowest-terms serialization
    CHECK(result.output.find("\"bel\": \"1/3\"") != std::string::npos);
    CHECK(result.output.find("\"pl\": \"5/9\"") != std::string::npos);
}

TEST_CASE("eval handles the open-world labels in tbm mode") {
    std::string path = write_temp("tbm_body.json", R"({
      "ground": ["a", "b"],
      "possibilities": {"A": ["a"]},
      "regime": "open_tbm",
      "bodies": [ { "masses": [
        {"focal": ["A"], "mass": "1/2"},
        {"focal": "theta", "mass": "1/3"},
        {"focal": "empty", "mass": "1/6"}
      ] } ]
    })");
    auto theta = run_cli("eval --hypothesis theta --mode tbm " + path);
    REQUIRE(theta.exit_code == 0);
    CHECK(theta.output.find("\"bel\": \"1/3\"") != std::string::npos);
    auto empty = run_cli("eval --hypothesis empty --mode tbm " + path);
    REQUIRE(empty.exit_code == 0);
    CHECK(empty.output.find("\"bel\": \"1/6\"") != std::string::npos);
}

TEST_CASE("entropy report of the second row") {
    auto result = run_cli("entropy --mode table " + data_file("toy_body_step2.json"));
    REQUIRE(result.exit_code == 0);
    auto doc = io::parse_text(result.output);
    CHECK(doc.at("mode").get<std::string>() == "table");
    // 2·(-(5/9)·lg2(5/9)/e^(2/9)) + 4/9, evaluated independently
    CHECK(doc.at("total").get<double>() ==
          Catch::Approx(1.1989142673736644).epsilon(1e-12));
    CHECK(doc.at("per_possibility").size() == 2);
}

TEST_CASE("decode emits the trace as CSV") {
    auto result = run_cli("decode --codon ACG " + data_file("toy_code_unambiguous.json"));
    REQUIRE(result.exit_code == 0);
    CHECK(result.output.rfind("step,focal,mass,bel_A1,bel_A2,pl_A1,pl_A2,entropy\n", 0) == 0);
    CHECK(result.output.find("3,{c4 c5},4/9") != std::string::npos);
    CHECK(result.output.find("3,{c4},5/9") != std::string::npos);
}

TEST_CASE("decode narrows the standard code down to a single codon") {
    auto result = run_cli("decode --codon AUG " + data_file("standard_code.json"));
    REQUIRE(result.exit_code == 0);
    CHECK(result.output.find("3,{AUG},1/1") != std::string::npos);
    auto protein = run_cli("translate --mrna AUGUUUGGC --samples 10 --seed 1 " +
                           data_file("standard_code.json"));
    REQUIRE(protein.exit_code == 0);
    CHECK(protein.output.find("\"Met-Phe-Gly\": \"1/1\"") != std::string::npos);
}

TEST_CASE("translate is deterministic and splits the ambiguous codon") {
    std::string args = "translate --mrna ACG --samples 400 --seed 3 " +
                       data_file("toy_code_ambiguous.json");
    auto first = run_cli(args);
    auto second = run_cli(args);
    REQUIRE(first.exit_code == 0);
    CHECK(first.output == second.output);
    auto doc = io::parse_text(first.output);
    CHECK(doc.at("samples").get<std::uint64_t>() == 400);
    auto distribution = doc.at("distribution");
    REQUIRE(distribution.size() == 2);
    Rational total(0);
    for (const auto& [key, value] : distribution.items())
        total += MassTraits<Rational>::parse(value.get<std::string>());
    CHECK(total == Rational(1));
}

TEST_CASE("evolve emits a monotone accepted-entropy trajectory") {
    auto result = run_cli("evolve --steps 60 --seed 4 --mode table " +
                          data_file("toy_code_ambiguous.json"));
    REQUIRE(result.exit_code == 0);
    std::istringstream lines(result.output);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "step,mutation,entropy,accepted");
    double last_accepted = -1.0;
    bool first_row = true;
    int accepted_rows = 0;
    while (std::getline(lines, line)) {
        auto last_comma = line.rfind(',');
        auto second_last = line.rfind(',', last_comma - 1);
        bool accepted = line.substr(last_comma + 1) == "1";
        double entropy_value = std::stod(line.substr(second_last + 1, last_comma - second_last - 1));
        if (accepted) {
            if (!first_row) CHECK(entropy_value < last_accepted);
            last_accepted = entropy_value;
            ++accepted_rows;
        }
        first_row = false;
    }
    CHECK(accepted_rows > 1);
}

TEST_CASE("combine on an empty bodies list exits 1 with EmptyList") {
    std::string path = write_temp("empty_bodies.json", R"({
      "ground": ["a"],
      "possibilities": {"A": ["a"]},
      "regime": "closed",
      "bodies": []
    })");
    auto result = run_cli("combine --rule smets " + path);
    CHECK(result.exit_code == 1);
    CHECK(result.error.find("EmptyList") != std::string::npos);
}

TEST_CASE("total conflict under dempster exits 2") {
    std::string path = write_temp("total_conflict.json", R"({
      "ground": ["a", "b"],
      "possibilities": {"A": ["a"], "B": ["b"]},
      "regime": "closed",
      "bodies": [
        { "masses": [ {"focal": ["A"], "mass": "1/1"} ] },
        { "masses": [ {"focal": ["B"], "mass": "1/1"} ] }
      ]
    })");
    auto dempster = run_cli("combine --rule dempster " + path);
    CHECK(dempster.exit_code == 2);
    CHECK(dempster.error.find("TotalConflict") != std::string::npos);
    // smets routes the conflict onto the empty label instead
    auto smets = run_cli("combine --rule smets " + path);
    CHECK(smets.exit_code == 0);
    CHECK(smets.output.find("\"conflict\": \"1/1\"") != std::string::npos);
}

TEST_CASE("unknown hypothesis exits 1") {
    auto result =
        run_cli("eval --hypothesis Nope --mode table " + data_file("toy_body_step2.json"));
    CHECK(result.exit_code == 1);
    CHECK(result.error.find("UnknownLabel") != std::string::npos);
}

TEST_CASE("the numeric-mode override switches the arithmetic") {
    auto result = run_cli("combine --rule smets " + data_file("toy_bodies_ambiguous.json"),
                          "EVIDENTIA_NUMERIC=float");
    REQUIRE(result.exit_code == 0);
    // float mode serializes numbers, not fraction strings
    CHECK(result.output.find("\"mass\": 0.") != std::string::npos);
    CHECK(result.output.find("\"mass\": \"") == std::string::npos);

    auto invalid = run_cli("combine --rule smets " + data_file("toy_bodies_ambiguous.json"),
                           "EVIDENTIA_NUMERIC=decimal");
    CHECK(invalid.exit_code == 1);
}

TEST_CASE("the --out flag writes the same bytes as stdout") {
    auto out_path = std::filesystem::temp_directory_path() / "combine_out.json";
    std::string args = "combine --rule smets " + data_file("toy_bodies_decided.json");
    auto piped = run_cli(args);
    auto filed = run_cli(args + " --out " + out_path.string());
    REQUIRE(filed.exit_code == 0);
    CHECK(filed.output.empty());
    CHECK(slurp(out_path.string()) == piped.output);
    std::filesystem::remove(out_path);
}

TEST_CASE("missing flags and bad files exit 1") {
    CHECK(run_cli("combine " + data_file("toy_body_step2.json")).exit_code == 1); // --rule missing
    CHECK(run_cli("eval --mode table " + data_file("toy_body_step2.json")).exit_code == 1);
    CHECK(run_cli("combine --rule smets /nonexistent.json").exit_code == 1);
    CHECK(run_cli("decode --codon ACX " + data_file("toy_code_ambiguous.json")).exit_code == 1);
    CHECK(run_cli("--help").exit_code == 0);
}
