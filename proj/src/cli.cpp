#include "ptabkit/cli.hpp"

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ptabkit/check.hpp"
#include "ptabkit/crystal.hpp"
#include "ptabkit/duality.hpp"
#include "ptabkit/errors.hpp"
#include "ptabkit/graph.hpp"
#include "ptabkit/io.hpp"
#include "ptabkit/paths.hpp"
#include "ptabkit/ptableau.hpp"
#include "ptabkit/rsk.hpp"
#include "ptabkit/word.hpp"

namespace ptab::cli {
namespace {

using nlohmann::ordered_json;

struct GlobalOpts {
    std::string format = "text";
    std::string in_path;
    std::string as_kind = "auto";
};

std::string trimmed(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::string read_source(const GlobalOpts& g, const std::string& inline_input) {
    if (!g.in_path.empty()) {
        if (!inline_input.empty())
            throw parse_error("pass the input either inline or with --in, not both");
        std::ifstream file(g.in_path);
        if (!file) throw parse_error("cannot open input file: " + g.in_path);
        std::ostringstream buf;
        buf << file.rdbuf();
        return buf.str();
    }
    if (!inline_input.empty()) return inline_input;
    if (isatty(STDIN_FILENO))
        throw parse_error("no input: pass it inline, with --in FILE, or on stdin");
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
}

struct Input {
    std::string kind;  // "word" | "ptab" | "biword"
    std::optional<Word> word;
    std::optional<Ptableau> ptab;
    std::optional<Biword> biword;
};

Word word_from_json(const ordered_json& j) {
    std::vector<int> letters;
    for (const auto& v : j) letters.push_back(v.get<int>());
    return make_word(std::move(letters));
}

Input parse_json_input(const std::string& text, const std::string& as_kind) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
    Input in;
    if (j.is_array()) {
        in.kind = "word";
        in.word = word_from_json(j);
    } else if (j.is_object() && j.contains("rows")) {
        in.kind = "ptab";
        in.ptab = ptableau_from_json(j);
    } else if (j.is_object() && j.contains("top") && j.contains("bottom")) {
        in.kind = "biword";
        in.biword = make_biword(word_from_json(j.at("top")), word_from_json(j.at("bottom")));
    } else {
        throw parse_error(
            "unrecognized JSON input: expected an array (word), {\"rows\": ...} "
            "(tableau) or {\"top\", \"bottom\"} (biword)");
    }
    if (as_kind != "auto" && as_kind != in.kind)
        throw parse_error("JSON input is a " + in.kind + " but --as " + as_kind + " was given");
    return in;
}

// Kind detection on plain text: '/' marks a biword; '.' or a second line marks
// a tableau; a single line of bare digits is ambiguous (word vs. one-row
// tableau) and must be disambiguated with --as.
std::string detect_kind(const std::string& text) {
    if (text.find('/') != std::string::npos) return "biword";
    if (text.find('.') != std::string::npos) return "ptab";
    bool seen_line = false;
    std::istringstream stream(text);
    for (std::string line; std::getline(stream, line);) {
        if (trimmed(line).empty()) continue;
        if (seen_line) return "ptab";
        seen_line = true;
    }
    return "";
}

Input parse_input(const std::string& raw, const std::string& as_kind) {
    const std::string text = trimmed(raw);
    if (text.empty()) throw parse_error("empty input");
    if (text.front() == '{' || text.front() == '[') return parse_json_input(text, as_kind);

    std::string kind = as_kind;
    if (kind == "auto") {
        kind = detect_kind(text);
        if (kind.empty())
            throw parse_error(
                "ambiguous input: a single line of digits could be a word or a "
                "one-row tableau; pass --as word or --as ptab");
    }
    Input in;
    in.kind = kind;
    if (kind == "word") {
        in.word = parse_word(text);
    } else if (kind == "biword") {
        in.biword = parse_biword(text);
    } else {
        in.ptab = parse_ptableau(text);
    }
    return in;
}

// A word w names the standard biword with columns (position / letter); all
// tableau-level commands act on the tableau of that biword.
Biword word_to_biword(const Word& w) {
    std::vector<std::pair<int, int>> columns;
    columns.reserve(w.size());
    for (std::size_t j = 0; j < w.size(); ++j)
        columns.emplace_back(int(j + 1), w.letters[j]);
    return standardize(std::move(columns), int(w.size()), w.n);
}

Ptableau input_ptab(const Input& in) {
    if (in.kind == "ptab") return *in.ptab;
    if (in.kind == "biword") return perf(*in.biword);
    return perf(word_to_biword(*in.word));
}

Biword input_biword(const Input& in) {
    if (in.kind == "biword") return *in.biword;
    if (in.kind == "ptab") return bw(*in.ptab);
    return word_to_biword(*in.word);
}

void emit_ptab(std::ostream& out, const GlobalOpts& g, const Ptableau& t) {
    if (g.format == "json")
        out << json_ptableau(t).dump(2) << "\n";
    else
        out << format_ptableau(t) << "\n";
}

void emit_word(std::ostream& out, const GlobalOpts& g, const Word& w) {
    if (g.format == "json")
        out << json_word(w).dump() << "\n";
    else
        out << format_word(w) << "\n";
}

void emit_biword(std::ostream& out, const GlobalOpts& g, const Biword& b) {
    if (g.format == "json")
        out << json_biword(b).dump(2) << "\n";
    else
        out << format_biword(b) << "\n";
}

void print_trace_steps(std::ostream& out, const ResolutionTrace& trace) {
    for (const TraceStep& step : trace.steps) {
        switch (step.kind) {
            case TraceStep::Kind::Insert:
                out << "  place [" << step.cell.content << "] at (" << step.cell.row << ", "
                    << step.cell.col << ")\n";
                break;
            case TraceStep::Kind::Decrement:
                out << "  decrement [" << step.from << "] at (" << step.cell.row << ", "
                    << step.cell.col << ") -> " << step.to << "\n";
                break;
            case TraceStep::Kind::Terminal:
                out << "  eta = " << step.eta << "\n";
                break;
        }
    }
}

int cmd_rsk(std::ostream& out, const GlobalOpts& g, const Input& in, bool trace) {
    const Biword b = input_biword(in);
    if (!trace) {
        const RskPair pair = ptab_rsk(b);
        if (g.format == "json") {
            ordered_json j = json_rsk_pair(pair);
            j["eta"] = json_word(eta_word(pair.tmax));
            out << j.dump(2) << "\n";
        } else {
            out << "PT:\n"
                << format_ptableau(pair.pt) << "\n\nTmax:\n"
                << format_ptableau(pair.tmax) << "\n\neta: " << format_word(eta_word(pair.tmax))
                << "\n";
        }
        return 0;
    }
    const std::vector<RskStep> steps = ptab_rsk_steps(b);
    const RskPair pair = ptab_rsk(b);
    if (g.format == "json") {
        ordered_json j = json_rsk_pair(pair);
        j["eta"] = json_word(eta_word(pair.tmax));
        ordered_json jsteps = ordered_json::array();
        for (const RskStep& s : steps) {
            ordered_json js;
            js["tau"] = s.tau;
            js["omega"] = s.omega;
            js["eta"] = s.eta;
            js["resolution"] = json_trace(s.trace);
            js["PT"] = json_ptableau(s.pt_after);
            js["Tmax"] = json_ptableau(s.tmax_after);
            jsteps.push_back(std::move(js));
        }
        j["trace"] = std::move(jsteps);
        out << j.dump(2) << "\n";
        return 0;
    }
    for (std::size_t k = 0; k < steps.size(); ++k) {
        const RskStep& s = steps[k];
        out << "step " << (k + 1) << ": insert [" << s.tau << "] in row " << s.omega << "\n";
        print_trace_steps(out, s.trace);
        out << "PT:\n" << format_ptableau(s.pt_after) << "\n";
        out << "Tmax:\n" << format_ptableau(s.tmax_after) << "\n\n";
    }
    out << "PT:\n"
        << format_ptableau(pair.pt) << "\n\nTmax:\n"
        << format_ptableau(pair.tmax) << "\n\neta: " << format_word(eta_word(pair.tmax)) << "\n";
    return 0;
}

int cmd_classic_rsk(std::ostream& out, const GlobalOpts& g, const Input& in) {
    const SsytPair pair = classic_rsk(input_biword(in));
    if (g.format == "json") {
        ordered_json j;
        j["P"] = json_ptableau(pair.p);
        j["Q"] = json_ptableau(pair.q);
        out << j.dump(2) << "\n";
    } else {
        out << "P:\n" << format_ptableau(pair.p) << "\n\nQ:\n" << format_ptableau(pair.q) << "\n";
    }
    return 0;
}

int cmd_unrsk(std::ostream& out, const GlobalOpts& g, const std::string& raw) {
    const std::string text = trimmed(raw);
    if (text.empty()) throw parse_error("empty input");
    Ptableau pt, tmax;
    if (text.front() == '{') {
        ordered_json j;
        try {
            j = ordered_json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw parse_error(std::string("invalid JSON: ") + e.what());
        }
        if (!j.contains("PT") || !j.contains("Tmax"))
            throw parse_error("unrsk JSON input needs \"PT\" and \"Tmax\"");
        pt = ptableau_from_json(j.at("PT"));
        tmax = ptableau_from_json(j.at("Tmax"));
    } else {
        std::vector<std::string> lines;
        std::istringstream stream(text);
        for (std::string line; std::getline(stream, line);) lines.push_back(line);
        std::size_t split = lines.size();
        for (std::size_t k = 0; k < lines.size(); ++k) {
            if (trimmed(lines[k]).empty()) {
                split = k;
                break;
            }
        }
        if (split == lines.size())
            throw parse_error(
                "unrsk input must be two tableaux separated by a blank line, or "
                "JSON {\"PT\": ..., \"Tmax\": ...}");
        std::string first, second;
        for (std::size_t k = 0; k < split; ++k) first += lines[k] + "\n";
        for (std::size_t k = split + 1; k < lines.size(); ++k) second += lines[k] + "\n";
        if (trimmed(second).empty()) throw parse_error("unrsk input is missing Tmax");
        pt = parse_ptableau(first);
        tmax = parse_ptableau(second);
    }
    emit_ptab(out, g, rsk_inverse(RskPair{std::move(pt), std::move(tmax)}));
    return 0;
}

int cmd_extreme(std::ostream& out, const GlobalOpts& g, const Input& in, Extreme which) {
    if (in.kind == "word") {
        const ExtremeWordResult r = to_extreme(*in.word, which);
        if (g.format == "json") {
            ordered_json j;
            j["node"] = json_word(r.node);
            j["path"] = format_sequence(r.path);
            out << j.dump(2) << "\n";
        } else {
            out << format_word(r.node) << "\npath: " << format_sequence(r.path) << "\n";
        }
        return 0;
    }
    if (in.kind == "biword") {
        const ExtremeBiwordResult r = to_extreme(*in.biword, which);
        if (g.format == "json") {
            ordered_json j;
            j["node"] = json_biword(r.node);
            j["path"] = format_sequence(r.path);
            out << j.dump(2) << "\n";
        } else {
            out << format_biword(r.node) << "\npath: " << format_sequence(r.path) << "\n";
        }
        return 0;
    }
    const ExtremeResult r = to_extreme(*in.ptab, which);
    if (g.format == "json") {
        ordered_json j;
        j["node"] = json_ptableau(r.node);
        j["path"] = format_sequence(r.path);
        out << j.dump(2) << "\n";
    } else {
        out << format_ptableau(r.node) << "\npath: " << format_sequence(r.path) << "\n";
    }
    return 0;
}

int cmd_apply(std::ostream& out, const GlobalOpts& g, const Input& in, const std::string& ops) {
    const CrystalOpSequence seq = parse_sequence(ops);
    if (in.kind == "word") {
        emit_word(out, g, apply_sequence(*in.word, seq));
    } else if (in.kind == "biword") {
        emit_biword(out, g, apply_sequence(*in.biword, seq));
    } else {
        emit_ptab(out, g, apply_sequence(*in.ptab, seq));
    }
    return 0;
}

std::size_t resolve_limit(long long flag_limit) {
    if (flag_limit > 0) return std::size_t(flag_limit);
    if (const char* env = std::getenv("PTABKIT_LIMIT")) {
        char* end = nullptr;
        const unsigned long long value = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0' || value == 0)
            throw parse_error("PTABKIT_LIMIT must be a positive integer");
        return std::size_t(value);
    }
    return kDefaultNodeLimit;
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"ptabkit: crystal operators, duality and insertion on perforated tableaux"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--in", g.in_path, "read the input from FILE");
    app.add_option("--as", g.as_kind, "force the input kind")
        ->check(CLI::IsMember({"auto", "word", "ptab", "biword"}))
        ->capture_default_str();

    std::string inline_input;
    bool trace = false;
    int rot_m = 0;
    int lus_m = 0;
    std::string method = "both";
    std::string ops;
    int matrix_m = 0;
    int matrix_n = 0;
    bool want_dot = false;
    bool want_json_graph = false;
    long long limit = 0;
    CheckOptions check_opts;

    auto add_input = [&](CLI::App* cmd) {
        cmd->fallthrough();
        cmd->add_option("input", inline_input, "inline input (otherwise --in FILE or stdin)");
        return cmd;
    };

    auto* c_rsk = add_input(app.add_subcommand("rsk", "insertion pair (PT, Tmax) of the input"));
    c_rsk->add_flag("--trace", trace, "show every placement and repair step");

    add_input(app.add_subcommand("classic-rsk", "classic column-insertion pair (P, Q)"));

    add_input(app.add_subcommand(
        "unrsk", "invert insertion: two tableaux split by a blank line, or JSON {PT, Tmax}"));

    add_input(app.add_subcommand("hw", "walk to the highest-weight vertex; print node and path"));
    add_input(app.add_subcommand("lw", "walk to the lowest-weight vertex; print node and path"));

    add_input(app.add_subcommand("dual", "content/row dual (tableau) or row swap (biword)"));

    auto* c_rot = add_input(app.add_subcommand("rot", "rotate 180 degrees and complement contents"));
    c_rot->add_option("--m", rot_m, "alphabet bound (default: max content)");

    add_input(app.add_subcommand("perf", "tableau of a biword"));
    add_input(app.add_subcommand("bw", "biword of a tableau"));

    auto* c_matrix = add_input(app.add_subcommand("matrix", "multiplicity matrix of a biword"));
    c_matrix->add_option("--m", matrix_m, "row count (default: top alphabet bound)");
    c_matrix->add_option("--n", matrix_n, "column count (default: bottom alphabet bound)");

    add_input(app.add_subcommand("evac", "slide a highest-weight tableau to lowest weight"));

    auto* c_lus = add_input(app.add_subcommand("lus", "Lusztig involution"));
    c_lus->add_option("--method", method, "construction to use")
        ->check(CLI::IsMember({"uninsert", "estar", "both"}))
        ->capture_default_str();
    c_lus->add_option("--m", lus_m, "alphabet bound for rotation (default: max content)");

    auto* c_apply = add_input(app.add_subcommand("apply", "apply a crystal operator sequence"));
    c_apply->add_option("--ops", ops, "sequence such as \"e2 f1^3\", applied left first")
        ->required();

    add_input(app.add_subcommand("estar", "straightening sequence of a word-condition tableau"));

    auto* c_graph = add_input(app.add_subcommand("graph", "connected crystal component of the input"));
    c_graph->add_flag("--dot", want_dot, "emit Graphviz DOT (default)");
    c_graph->add_flag("--json", want_json_graph, "emit JSON");
    c_graph->add_option("--limit", limit, "node budget (default: PTABKIT_LIMIT or 100000)")
        ->check(CLI::PositiveNumber);

    auto* c_check = app.add_subcommand("check", "randomized self-checks");
    c_check->fallthrough();
    c_check->add_option("--seed", check_opts.seed, "RNG seed")->capture_default_str();
    c_check->add_option("--count", check_opts.count, "instances per suite")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    c_check->add_option("--suite", check_opts.suite, "suite to run")
        ->check(CLI::IsMember({"all", "rsk", "duality", "crystal", "lusztig"}))
        ->capture_default_str();
    c_check->add_flag("--verbose", check_opts.verbose, "per-suite progress");

    std::vector<std::string> full;
    full.reserve(argv.size() + 1);
    full.push_back("ptabkit");
    full.insert(full.end(), argv.begin(), argv.end());
    std::vector<char*> cargv;
    cargv.reserve(full.size());
    for (std::string& s : full) cargv.push_back(s.data());

    try {
        app.parse(int(cargv.size()), cargv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    const CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();

    try {
        if (name == "check") {
            const CheckReport report = run_checks(check_opts, out);
            return report.ok ? 0 : 3;
        }
        const std::string raw = read_source(g, inline_input);
        if (name == "unrsk") return cmd_unrsk(out, g, raw);

        const Input in = parse_input(raw, g.as_kind);
        if (name == "rsk") return cmd_rsk(out, g, in, trace);
        if (name == "classic-rsk") return cmd_classic_rsk(out, g, in);
        if (name == "hw") return cmd_extreme(out, g, in, Extreme::Highest);
        if (name == "lw") return cmd_extreme(out, g, in, Extreme::Lowest);
        if (name == "dual") {
            if (in.kind == "ptab")
                emit_ptab(out, g, dual_ptab(*in.ptab));
            else
                emit_biword(out, g, dual_biword(input_biword(in)));
            return 0;
        }
        if (name == "rot") {
            emit_ptab(out, g, rot(input_ptab(in), rot_m));
            return 0;
        }
        if (name == "perf") {
            emit_ptab(out, g, perf(input_biword(in)));
            return 0;
        }
        if (name == "bw") {
            emit_biword(out, g, bw(input_ptab(in)));
            return 0;
        }
        if (name == "matrix") {
            const IntMatrix m = to_matrix(input_biword(in), matrix_m, matrix_n);
            if (g.format == "json")
                out << json_matrix(m).dump() << "\n";
            else
                out << format_matrix(m) << "\n";
            return 0;
        }
        if (name == "evac") {
            emit_ptab(out, g, evacuate(input_ptab(in)));
            return 0;
        }
        if (name == "lus") {
            const LusztigMethod lm = method == "uninsert" ? LusztigMethod::Uninsert
                                     : method == "estar"  ? LusztigMethod::EStar
                                                          : LusztigMethod::Both;
            emit_ptab(out, g, lusztig(input_ptab(in), lm, lus_m));
            return 0;
        }
        if (name == "apply") return cmd_apply(out, g, in, ops);
        if (name == "estar") {
            const CrystalOpSequence seq = e_star_sequence(input_ptab(in));
            if (g.format == "json") {
                ordered_json j;
                j["sequence"] = format_sequence(seq);
                out << j.dump() << "\n";
            } else {
                out << format_sequence(seq) << "\n";
            }
            return 0;
        }
        if (name == "graph") {
            if (want_dot && want_json_graph)
                throw parse_error("pass at most one of --dot and --json");
            const ExportFormat fmt = want_json_graph || (!want_dot && g.format == "json")
                                         ? ExportFormat::Json
                                         : ExportFormat::Dot;
            out << export_component(explore(input_ptab(in), resolve_limit(limit)), fmt);
            return 0;
        }
        err << "usage error: unknown command " << name << "\n";
        return 2;
    } catch (const parse_error& e) {
        err << "parse error";
        if (e.line() != 0) err << " (line " << e.line() << ", column " << e.column() << ")";
        err << ": " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const nlohmann::json::exception& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace ptab::cli
