#include "ptabkit/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ptab {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string current;
    for (char ch : text) {
        if (ch == '\n') {
            lines.push_back(current);
            current.clear();
        } else if (ch != '\r') {
            current += ch;
        }
    }
    if (!current.empty()) lines.push_back(current);
    while (!lines.empty() && lines.back().find_first_not_of(" \t") == std::string::npos)
        lines.pop_back();
    return lines;
}

bool all_digits(const std::string& s) {
    return !s.empty() &&
           std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

std::string format_layout(const Grid& grid) {
    std::string out;
    for (std::size_t r = 0; r < grid.size(); ++r) {
        if (r) out += '\n';
        if (grid[r].empty()) {
            out += '.';
            continue;
        }
        for (std::size_t c = 0; c < grid[r].size(); ++c) {
            if (c) out += ' ';
            out += grid[r][c] ? std::to_string(*grid[r][c]) : ".";
        }
    }
    return out;
}

std::string format_ptableau(const Ptableau& t) {
    return format_layout(justify(t, Side::Left).grid());
}

Ptableau parse_ptableau(const std::string& text) {
    auto lines = split_lines(text);
    if (lines.empty()) throw parse_error("empty tableau input", 1, 1);
    Grid grid;
    for (std::size_t ln = 0; ln < lines.size(); ++ln) {
        std::istringstream is(lines[ln]);
        std::vector<Box> row;
        std::string token;
        std::size_t col = 0;
        while (is >> token) {
            ++col;
            if (token == ".") {
                row.push_back(std::nullopt);
            } else if (all_digits(token)) {
                row.push_back(std::stoi(token));
            } else {
                throw parse_error("expected a positive integer or '.', got \"" + token + "\"",
                                  ln + 1, col);
            }
        }
        grid.push_back(std::move(row));
    }
    return Ptableau::validate(std::move(grid));
}

std::string format_word(const Word& w) {
    std::string out;
    const bool compact = w.n <= 9;
    for (std::size_t j = 0; j < w.letters.size(); ++j) {
        if (j && !compact) out += ' ';
        out += std::to_string(w.letters[j]);
    }
    return out;
}

Word parse_word(const std::string& text) {
    std::vector<int> letters;
    if (text.find_first_of(" \t") != std::string::npos) {
        std::istringstream is(text);
        std::string token;
        std::size_t col = 0;
        while (is >> token) {
            ++col;
            if (!all_digits(token))
                throw parse_error("expected an integer letter, got \"" + token + "\"", 1, col);
            letters.push_back(std::stoi(token));
        }
    } else {
        for (std::size_t j = 0; j < text.size(); ++j) {
            unsigned char ch = (unsigned char)text[j];
            if (!std::isdigit(ch))
                throw parse_error(std::string("unexpected character '") + char(ch) +
                                      "' in a word",
                                  1, j + 1);
            letters.push_back(text[j] - '0');
        }
    }
    return make_word(std::move(letters));
}

std::string format_biword(const Biword& b) {
    return format_word(b.top) + "/" + format_word(b.bottom);
}

Biword parse_biword(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos)
        throw parse_error("a biword needs a '/' between its top and bottom words", 1, 1);
    if (text.find('/', slash + 1) != std::string::npos)
        throw parse_error("a biword has exactly one '/'", 1, slash + 2);
    Word top = parse_word(text.substr(0, slash));
    Word bottom = parse_word(text.substr(slash + 1));
    return make_biword(std::move(top), std::move(bottom));
}

std::string format_matrix(const IntMatrix& m) {
    std::string out;
    for (std::size_t r = 0; r < m.a.size(); ++r) {
        if (r) out += '\n';
        for (std::size_t c = 0; c < m.a[r].size(); ++c) {
            if (c) out += ' ';
            out += std::to_string(m.a[r][c]);
        }
    }
    return out;
}

std::string format_sequence(const CrystalOpSequence& seq) {
    std::string out;
    for (std::size_t s = 0; s < seq.steps.size(); ++s) {
        if (s) out += ' ';
        const auto& step = seq.steps[s];
        out += step.dir == Direction::Raise ? 'e' : 'f';
        out += std::to_string(step.index);
        if (step.exponent != 1) out += "^" + std::to_string(step.exponent);
    }
    return out;
}

CrystalOpSequence parse_sequence(const std::string& text) {
    CrystalOpSequence seq;
    std::istringstream is(text);
    std::string token;
    std::size_t col = 0;
    while (is >> token) {
        ++col;
        if (token.size() < 2 || (token[0] != 'e' && token[0] != 'f'))
            throw parse_error("operator steps look like e2 or f1^3, got \"" + token + "\"", 1,
                              col);
        const Direction dir = token[0] == 'e' ? Direction::Raise : Direction::Lower;
        const auto caret = token.find('^');
        const std::string index_part = token.substr(1, caret == std::string::npos
                                                           ? std::string::npos
                                                           : caret - 1);
        if (!all_digits(index_part))
            throw parse_error("bad operator index in \"" + token + "\"", 1, col);
        long long exponent = 1;
        if (caret != std::string::npos) {
            const std::string exp_part = token.substr(caret + 1);
            if (!all_digits(exp_part))
                throw parse_error("bad exponent in \"" + token + "\"", 1, col);
            exponent = std::stoll(exp_part);
        }
        if (exponent == 0) continue;
        seq.steps.push_back({std::stoi(index_part), dir, exponent});
    }
    return seq;
}

nlohmann::ordered_json json_ptableau(const Ptableau& t) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    const Ptableau canonical = justify(t, Side::Left);
    for (const auto& grow : canonical.grid()) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (const auto& box : grow) {
            if (box)
                row.push_back(*box);
            else
                row.push_back(nullptr);
        }
        rows.push_back(std::move(row));
    }
    return nlohmann::ordered_json{{"rows", std::move(rows)}};
}

Ptableau ptableau_from_json(const nlohmann::json& j) {
    try {
        const auto& rows = j.at("rows");
        if (!rows.is_array()) throw parse_error("\"rows\" must be an array");
        Grid grid;
        for (const auto& row : rows) {
            if (!row.is_array()) throw parse_error("each row must be an array");
            std::vector<Box> out_row;
            for (const auto& box : row) {
                if (box.is_null())
                    out_row.push_back(std::nullopt);
                else if (box.is_number_integer())
                    out_row.push_back(box.get<int>());
                else
                    throw parse_error("boxes are integers or null");
            }
            grid.push_back(std::move(out_row));
        }
        return Ptableau::validate(std::move(grid));
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("bad tableau JSON: ") + e.what());
    }
}

nlohmann::ordered_json json_word(const Word& w) { return nlohmann::ordered_json(w.letters); }

nlohmann::ordered_json json_biword(const Biword& b) {
    return nlohmann::ordered_json{{"top", b.top.letters}, {"bottom", b.bottom.letters}};
}

nlohmann::ordered_json json_matrix(const IntMatrix& m) { return nlohmann::ordered_json(m.a); }

nlohmann::ordered_json json_trace(const ResolutionTrace& trace) {
    nlohmann::ordered_json steps = nlohmann::ordered_json::array();
    for (const auto& step : trace.steps) {
        nlohmann::ordered_json entry;
        switch (step.kind) {
            case TraceStep::Kind::Insert:
                entry["kind"] = "insert";
                entry["cell"] = {{"content", step.cell.content},
                                 {"row", step.cell.row},
                                 {"col", step.cell.col}};
                break;
            case TraceStep::Kind::Decrement:
                entry["kind"] = "decrement";
                entry["cell"] = {{"content", step.cell.content},
                                 {"row", step.cell.row},
                                 {"col", step.cell.col}};
                entry["from"] = step.from;
                entry["to"] = step.to;
                break;
            case TraceStep::Kind::Terminal:
                entry["kind"] = "terminal";
                entry["eta"] = step.eta;
                break;
        }
        steps.push_back(std::move(entry));
    }
    return nlohmann::ordered_json{{"steps", std::move(steps)}, {"eta", trace.eta}};
}

nlohmann::ordered_json json_rsk_pair(const RskPair& pair) {
    return nlohmann::ordered_json{{"PT", json_ptableau(pair.pt)},
                                  {"Tmax", json_ptableau(pair.tmax)}};
}

}  // namespace ptab
