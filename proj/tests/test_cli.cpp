#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ptabkit/cli.hpp"

namespace {

struct CliResult {
    int code = -1;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& argv) {
    std::ostringstream out;
    std::ostringstream err;
    CliResult r;
    r.code = ptab::cli::run(argv, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

const std::string kBiword = "1122333444/2122331331";
const std::string kRunning = "11112334445/33112323223";
const std::string kTenCellTableau = ". 1 . 3 4\n1 2 2 . .\n3 3 4 4 .";

}  // namespace

TEST_CASE("cli help lists every subcommand and exits cleanly") {
    const CliResult r = run_cli({"--help"});
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    CHECK(contains(r.out, "ptabkit: crystal operators, duality and insertion on perforated tableaux"));
    for (const std::string name :
         {"rsk", "classic-rsk", "unrsk", "hw", "lw", "dual", "rot", "perf", "bw", "matrix",
          "evac", "lus", "apply", "estar", "graph", "check"})
        CHECK(contains(r.out, name));
    for (const std::string flag : {"--format", "--in", "--as"}) CHECK(contains(r.out, flag));

    const CliResult bare = run_cli({});
    CHECK(bare.code == 2);
    CHECK(contains(bare.err, "usage error: A subcommand is required"));
}

TEST_CASE("cli rsk prints the insertion pair in text and json") {
    const CliResult text = run_cli({"rsk", kBiword});
    CHECK(text.code == 0);
    CHECK(text.out ==
          "PT:\n"
          ". . 1 1 1\n"
          "1 1 . 2 .\n"
          "2 2 2 3 .\n"
          "\n"
          "Tmax:\n"
          "1 1 2 3 4\n"
          "2 3 4 4 .\n"
          "3 . . . .\n"
          "\n"
          "eta: 1121321221\n");

    const CliResult js = run_cli({"rsk", "--format", "json", kBiword});
    CHECK(js.code == 0);
    const nlohmann::json j = nlohmann::json::parse(js.out);
    CHECK(j.at("eta") == nlohmann::json({1, 1, 2, 1, 3, 2, 1, 2, 2, 1}));
    CHECK(j.at("PT").at("rows").size() == 3);
    CHECK(j.at("Tmax").at("rows").at(0) == nlohmann::json({1, 1, 2, 3, 4}));
}

TEST_CASE("cli rsk --trace walks through every placement and repair") {
    const CliResult r = run_cli({"rsk", "--trace", "12/21"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "step 1: insert [1] in row 2\n"
          "  place [1] at (2, 1)\n"
          "  eta = 1\n"
          "PT:\n"
          ".\n"
          "1\n"
          "Tmax:\n"
          "1\n"
          ".\n"
          "\n"
          "step 2: insert [2] in row 1\n"
          "  place [2] at (1, 2)\n"
          "  decrement [2] at (1, 2) -> 1\n"
          "  eta = 1\n"
          "PT:\n"
          ". 1\n"
          "1 .\n"
          "Tmax:\n"
          "1 2\n"
          ". .\n"
          "\n"
          "PT:\n"
          ". 1\n"
          "1 .\n"
          "\n"
          "Tmax:\n"
          "1 2\n"
          ". .\n"
          "\n"
          "eta: 11\n");
}

TEST_CASE("cli classic-rsk prints the column-insertion pair") {
    const CliResult r = run_cli({"classic-rsk", kBiword});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "P:\n"
          "1 1 1 2 2\n"
          "2 3 3 3 .\n"
          "3 . . . .\n"
          "\n"
          "Q:\n"
          "1 1 2 3 4\n"
          "2 3 4 4 .\n"
          "3 . . . .\n");
}

TEST_CASE("cli unrsk inverts insertion from text and json forms") {
    const CliResult text = run_cli(
        {"unrsk", ". . 1 1 1\n1 1 . 2 .\n2 2 2 3 .\n\n1 1 2 3 4\n2 3 4 4 .\n3 . . . .\n"});
    CHECK(text.code == 0);
    CHECK(text.out == kTenCellTableau + "\n");

    const CliResult js = run_cli(
        {"unrsk", R"({"PT":{"rows":[[null,1],[1,null]]},"Tmax":{"rows":[[1,2],[null,null]]}})"});
    CHECK(js.code == 0);
    CHECK(js.out == ". 2\n1 .\n");

    const CliResult missing = run_cli({"unrsk", ". 1\n1 .\n"});
    CHECK(missing.code == 2);
    CHECK(contains(missing.err, "two tableaux separated by a blank line"));
}

TEST_CASE("cli hw and lw report the extreme node with its path") {
    const CliResult hw = run_cli({"hw", kBiword});
    CHECK(hw.code == 0);
    CHECK(hw.out == "1122333444/1121321221\npath: e1^2 e2^3\n");

    const CliResult word_hw = run_cli({"hw", "--as", "word", "2122331331"});
    CHECK(word_hw.code == 0);
    CHECK(word_hw.out == "1121321221\npath: e1^2 e2^3\n");

    const CliResult word_lw = run_cli({"lw", "--as", "word", "2122331331"});
    CHECK(word_lw.code == 0);
    CHECK(word_lw.out == "2122332333\npath: f1^2 f2\n");

    const CliResult js = run_cli({"hw", "--format", "json", "12/21"});
    CHECK(js.code == 0);
    const nlohmann::json j = nlohmann::json::parse(js.out);
    CHECK(j.at("node").at("top") == nlohmann::json({1, 2}));
    CHECK(j.at("node").at("bottom") == nlohmann::json({1, 1}));
    CHECK(j.at("path") == "e1");
}

TEST_CASE("cli dual handles tableaux, biwords and words") {
    const CliResult tab = run_cli({"dual", "1 1\n2 3\n"});
    CHECK(tab.code == 0);
    CHECK(tab.out == "1 1\n. 2\n2 .\n");

    const CliResult bi = run_cli({"dual", kBiword});
    CHECK(bi.code == 0);
    CHECK(bi.out == "1112223333/4312214433\n");

    const CliResult word = run_cli({"dual", "--as", "word", "112"});
    CHECK(word.code == 0);
    CHECK(word.out == "112/213\n");
}

TEST_CASE("cli rot complements within the requested alphabet") {
    const CliResult def = run_cli({"rot", "1 1\n2 3\n"});
    CHECK(def.code == 0);
    CHECK(def.out == "1 2\n3 3\n");

    const CliResult wide = run_cli({"rot", "--m", "4", "1 1\n2 3\n"});
    CHECK(wide.code == 0);
    CHECK(wide.out == "2 3\n4 4\n");

    const CliResult tight = run_cli({"rot", "--m", "2", "1 1\n2 3\n"});
    CHECK(tight.code == 1);
    CHECK(contains(tight.err, "error: ContentExceedsAlphabet"));
    CHECK(contains(tight.err, "content 3 exceeds the alphabet bound 2"));
}

TEST_CASE("cli perf and bw convert between biwords and tableaux") {
    const CliResult p = run_cli({"perf", kRunning});
    CHECK(p.code == 0);
    CHECK(p.out == ". . 1 1 . .\n. . 2 3 4 4\n1 1 3 4 5 .\n");

    const CliResult b = run_cli({"bw", "1 1\n2 3\n"});
    CHECK(b.code == 0);
    CHECK(b.out == "1123/1122\n");

    const CliResult roundtrip = run_cli({"perf", b.out});
    CHECK(roundtrip.code == 0);
    CHECK(roundtrip.out == "1 1\n2 3\n");
}

TEST_CASE("cli matrix prints multiplicities with optional padding") {
    const CliResult m = run_cli({"matrix", "112/212"});
    CHECK(m.code == 0);
    CHECK(m.out == "1 1\n0 1\n");

    const CliResult padded = run_cli({"matrix", "--m", "4", "--n", "3", "112/212"});
    CHECK(padded.code == 0);
    CHECK(padded.out == "1 1 0\n0 1 0\n0 0 0\n0 0 0\n");

    const CliResult cramped = run_cli({"matrix", "--m", "1", "--n", "1", "112/212"});
    CHECK(cramped.code == 1);
    CHECK(contains(cramped.err, "error: BoundViolation"));
    CHECK(contains(cramped.err, "matrix dimensions 1 x 1 too small for alphabets 2 / 2"));

    const CliResult js = run_cli({"matrix", "--format", "json", "112/212"});
    CHECK(js.code == 0);
    CHECK(nlohmann::json::parse(js.out) == nlohmann::json({{1, 1}, {0, 1}}));
}

TEST_CASE("cli evac slides a highest-weight tableau to lowest weight") {
    const CliResult r = run_cli({"evac", "1 1 2\n2 . .\n"});
    CHECK(r.code == 0);
    CHECK(r.out == ". 1 .\n1 2 2\n");
}

TEST_CASE("cli lus agrees across methods and estar prints the sequence") {
    const std::string tmin = ". . 1 1 . .\n. . 2 3 4 4\n1 1 3 4 5 .\n";
    const std::string lus_golden = ". 1 1 1 4 4\n1 2 3 5 . .\n3 4 . . . .\n";
    for (const std::string method : {"both", "uninsert", "estar"}) {
        const CliResult r = run_cli({"lus", "--method", method, tmin});
        CHECK(r.code == 0);
        CHECK(r.out == lus_golden);
    }

    const std::string pt_text = ". . . . 1 1\n. . 1 1 2 2\n1 1 2 3 3 .\n";
    const CliResult star = run_cli({"estar", pt_text});
    CHECK(star.code == 0);
    CHECK(star.out == "e1^2 e2^3 e1^2\n");

    const CliResult star_js = run_cli({"estar", "--format", "json", pt_text});
    CHECK(star_js.code == 0);
    CHECK(nlohmann::json::parse(star_js.out).at("sequence") == "e1^2 e2^3 e1^2");

    const CliResult bad = run_cli({"estar", tmin});
    CHECK(bad.code == 1);
    CHECK(contains(bad.err, "error: WordConditionPrecondition"));
}

TEST_CASE("cli apply runs operator sequences on any input kind") {
    const std::string pt_text = ". . . . 1 1\n. . 1 1 2 2\n1 1 2 3 3 .\n";
    const CliResult straightened = run_cli({"apply", "--ops", "e1^2 e2^3 e1^2", pt_text});
    CHECK(straightened.code == 0);
    CHECK(straightened.out == "1 1 1 1 1 1\n2 2 2 . . .\n3 3 . . . .\n");

    const CliResult identity = run_cli({"apply", "--ops", "", pt_text});
    CHECK(identity.code == 0);
    CHECK(identity.out == pt_text);

    const CliResult word = run_cli({"apply", "--as", "word", "--ops", "f1", "112"});
    CHECK(word.code == 0);
    CHECK(word.out == "212\n");

    const CliResult out_of_range = run_cli({"apply", "--ops", "e9", "112/212"});
    CHECK(out_of_range.code == 1);
    CHECK(contains(out_of_range.err, "error: IndexOutOfRange"));
    CHECK(contains(out_of_range.err, "operator index 9 outside [1, 1]"));

    const CliResult malformed = run_cli({"apply", "--ops", "x3", "112/212"});
    CHECK(malformed.code == 2);
    CHECK(contains(malformed.err, "operator steps look like e2 or f1^3, got \"x3\""));

    const CliResult missing = run_cli({"apply", "112/212"});
    CHECK(missing.code == 2);
    CHECK(contains(missing.err, "usage error"));
    CHECK(contains(missing.err, "--ops"));
}

TEST_CASE("cli graph exports dot or json under a node budget") {
    const CliResult dot = run_cli({"graph", "1\n.\n"});
    CHECK(dot.code == 0);
    CHECK(dot.out ==
          "digraph crystal {\n"
          "  rankdir=TB;\n"
          "  node [shape=box, fontname=\"monospace\"];\n"
          "  n0 [label=\"1\\n.\"];\n"
          "  n1 [label=\".\\n1\"];\n"
          "  n0 -> n1 [label=\"f1\"];\n"
          "}\n");

    const CliResult js = run_cli({"graph", "--json", "1\n.\n"});
    CHECK(js.code == 0);
    const nlohmann::json j = nlohmann::json::parse(js.out);
    CHECK(j.at("nodes").size() == 2);
    CHECK(j.at("edges").size() == 1);
    CHECK(j.at("source") == 0);
    CHECK(j.at("sink") == 1);

    const CliResult both = run_cli({"graph", "--dot", "--json", "1\n.\n"});
    CHECK(both.code == 2);
    CHECK(contains(both.err, "pass at most one of --dot and --json"));

    const std::string three_cells = "1 1 .\n2 . .\n. . .\n";
    const CliResult cramped = run_cli({"graph", "--limit", "3", three_cells});
    CHECK(cramped.code == 1);
    CHECK(contains(cramped.err, "error: LimitExceeded: component exceeds 3 nodes"));
}

TEST_CASE("cli graph honours the node-budget environment variable") {
    const std::string three_cells = "1 1 .\n2 . .\n. . .\n";

    setenv("PTABKIT_LIMIT", "3", 1);
    const CliResult cramped = run_cli({"graph", three_cells});
    CHECK(cramped.code == 1);
    CHECK(contains(cramped.err, "error: LimitExceeded: component exceeds 3 nodes"));

    setenv("PTABKIT_LIMIT", "banana", 1);
    const CliResult bad = run_cli({"graph", three_cells});
    CHECK(bad.code == 2);
    CHECK(contains(bad.err, "PTABKIT_LIMIT must be a positive integer"));

    setenv("PTABKIT_LIMIT", "100", 1);
    const CliResult roomy = run_cli({"graph", three_cells});
    CHECK(roomy.code == 0);
    CHECK(contains(roomy.out, "digraph crystal {"));
    unsetenv("PTABKIT_LIMIT");

    const CliResult flag_wins = run_cli({"graph", "--limit", "200", three_cells});
    CHECK(flag_wins.code == 0);
}

TEST_CASE("cli check runs the randomized suites") {
    const CliResult all = run_cli({"check", "--count", "3", "--seed", "7"});
    CHECK(all.code == 0);
    CHECK(all.out == "checks passed: 12 instances, 136 assertions\n");

    const CliResult one = run_cli({"check", "--count", "2", "--suite", "rsk", "--verbose"});
    CHECK(one.code == 0);
    CHECK(contains(one.out, "suite rsk: 2 instances ok"));
    CHECK(contains(one.out, "checks passed: 2 instances"));
}

TEST_CASE("cli reads json input and enforces the declared kind") {
    const CliResult word_json = run_cli({"hw", "[2,1,1]"});
    CHECK(word_json.code == 0);
    CHECK(word_json.out == "111\npath: e1\n");

    const CliResult ptab_json = run_cli({"bw", R"({"rows":[[1,1],[null,2]]})"});
    CHECK(ptab_json.code == 0);
    CHECK(ptab_json.out == "112/112\n");

    const CliResult biword_json = run_cli({"matrix", R"({"top":[1,1,2],"bottom":[2,1,2]})"});
    CHECK(biword_json.code == 0);
    CHECK(biword_json.out == "1 1\n0 1\n");

    const CliResult mismatch = run_cli({"hw", "--as", "ptab", "[2,1,1]"});
    CHECK(mismatch.code == 2);
    CHECK(contains(mismatch.err, "JSON input is a word but --as ptab was given"));

    const CliResult unknown = run_cli({"hw", R"({"oops":1})"});
    CHECK(unknown.code == 2);
    CHECK(contains(unknown.err, "unrecognized JSON input"));
}

TEST_CASE("cli reads from a file and rejects conflicting sources") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "ptabkit_cli_test";
    fs::create_directories(dir);
    const fs::path file = dir / "biword.txt";
    {
        std::ofstream f(file);
        f << kBiword << "\n";
    }

    const CliResult from_file = run_cli({"hw", "--in", file.string()});
    CHECK(from_file.code == 0);
    CHECK(from_file.out == "1122333444/1121321221\npath: e1^2 e2^3\n");

    const CliResult conflict = run_cli({"hw", "--in", file.string(), "12/12"});
    CHECK(conflict.code == 2);
    CHECK(contains(conflict.err, "pass the input either inline or with --in, not both"));

    const CliResult missing = run_cli({"hw", "--in", (dir / "nope.txt").string()});
    CHECK(missing.code == 2);
    CHECK(contains(missing.err, "cannot open input file"));

    fs::remove_all(dir);
}

TEST_CASE("cli reports parse and usage problems with exit code 2") {
    const CliResult ambiguous = run_cli({"dual", "2"});
    CHECK(ambiguous.code == 2);
    CHECK(contains(ambiguous.err,
                   "parse error: ambiguous input: a single line of digits could be a "
                   "word or a one-row tableau; pass --as word or --as ptab"));

    const CliResult empty = run_cli({"rsk", "  \n "});
    CHECK(empty.code == 2);
    CHECK(contains(empty.err, "parse error: empty input"));

    const CliResult bad_flag = run_cli({"rsk", "--bogus"});
    CHECK(bad_flag.code == 2);
    CHECK(contains(bad_flag.err, "usage error"));

    const CliResult bad_format = run_cli({"rsk", "--format", "bogus", "12/21"});
    CHECK(bad_format.code == 2);
    CHECK(contains(bad_format.err, "usage error"));
    CHECK(contains(bad_format.err, "bogus"));

    const CliResult invalid_tableau = run_cli({"estar", "1 1 1 1\n1 2 . .\n"});
    CHECK(invalid_tableau.code == 1);
    CHECK(contains(invalid_tableau.err, "error: ColumnStrictnessViolation"));
}
