#include "ptabkit/ptableau.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace ptab {

namespace {

std::string at(int row, int col) {
    std::ostringstream os;
    os << "(" << row << ", " << col << ")";
    return os.str();
}

// Normalizes raw input: at least one row, rectangular (ragged rows padded
// with blanks on the right), non-positive contents rejected.
Grid normalize(Grid grid) {
    if (grid.empty()) grid.emplace_back();
    std::size_t width = 0;
    for (const auto& row : grid) width = std::max(width, row.size());
    for (std::size_t r = 0; r < grid.size(); ++r) {
        for (std::size_t c = 0; c < grid[r].size(); ++c) {
            if (grid[r][c] && *grid[r][c] < 1)
                throw error(errc::invalid_box,
                            "content must be a positive integer at " + at(int(r) + 1, int(c) + 1));
        }
        grid[r].resize(width, std::nullopt);
    }
    return grid;
}

void erase_blank_columns(Grid& grid) {
    if (grid.empty() || grid[0].empty()) return;
    std::size_t width = grid[0].size();
    std::vector<std::size_t> keep;
    for (std::size_t c = 0; c < width; ++c) {
        bool blank = true;
        for (const auto& row : grid)
            if (row[c]) { blank = false; break; }
        if (!blank) keep.push_back(c);
    }
    if (keep.size() == width) return;
    for (auto& row : grid) {
        std::vector<Box> next;
        next.reserve(keep.size());
        for (std::size_t c : keep) next.push_back(row[c]);
        row = std::move(next);
    }
}

std::vector<CellRef> collect_cells(const Grid& grid) {
    std::vector<CellRef> out;
    for (std::size_t r = 0; r < grid.size(); ++r)
        for (std::size_t c = 0; c < grid[r].size(); ++c)
            if (grid[r][c]) out.push_back({*grid[r][c], int(r) + 1, int(c) + 1});
    return out;
}

// Checks conditions (1)-(4) on a rectangular grid, throwing on the first
// failure.  Blank columns are not this function's business.
void check_layout(const Grid& grid) {
    // (1) rows weakly increase
    for (std::size_t r = 0; r < grid.size(); ++r) {
        int prev = 0;
        int prev_col = 0;
        for (std::size_t c = 0; c < grid[r].size(); ++c) {
            if (!grid[r][c]) continue;
            int v = *grid[r][c];
            if (v < prev)
                throw error(errc::row_order_violation,
                            "row " + std::to_string(r + 1) + " decreases from " +
                                std::to_string(prev) + " at " + at(int(r) + 1, prev_col) + " to " +
                                std::to_string(v) + " at " + at(int(r) + 1, int(c) + 1));
            prev = v;
            prev_col = int(c) + 1;
        }
    }
    // (2) columns strictly increase
    std::size_t width = grid.empty() ? 0 : grid[0].size();
    for (std::size_t c = 0; c < width; ++c) {
        int prev = 0;
        int prev_row = 0;
        for (std::size_t r = 0; r < grid.size(); ++r) {
            if (!grid[r][c]) continue;
            int v = *grid[r][c];
            if (prev_row != 0 && v <= prev)
                throw error(errc::column_strictness_violation,
                            "column " + std::to_string(c + 1) + " fails to increase from " +
                                std::to_string(prev) + " at " + at(prev_row, int(c) + 1) + " to " +
                                std::to_string(v) + " at " + at(int(r) + 1, int(c) + 1));
            prev = v;
            prev_row = int(r) + 1;
        }
    }
    // (3) equal contents form horizontal strips; (4) distinct strips are
    // ordered: no larger content strictly above and weakly left of a smaller.
    auto cells = collect_cells(grid);
    for (const auto& a : cells) {
        for (const auto& b : cells) {
            if (a.content == b.content) {
                // b lower than a must be strictly left of a
                if (b.row > a.row && b.col >= a.col)
                    throw error(errc::strip_order_violation,
                                "the " + std::to_string(a.content) + " at " + at(a.row, a.col) +
                                    " must lie strictly right of the one at " + at(b.row, b.col));
            } else if (a.content < b.content) {
                if (b.row < a.row && b.col <= a.col)
                    throw error(errc::strip_order_violation,
                                "the " + std::to_string(b.content) + " at " + at(b.row, b.col) +
                                    " lies above and left of the " + std::to_string(a.content) +
                                    " at " + at(a.row, a.col));
            }
        }
    }
}

}  // namespace

Ptableau::Ptableau() : rows_(1), cols_(0), grid_(1) {}

Ptableau Ptableau::trusted(Grid grid) {
    Ptableau t;
    t.rows_ = int(grid.size());
    t.cols_ = grid.empty() ? 0 : int(grid[0].size());
    t.grid_ = std::move(grid);
    return t;
}

Ptableau Ptableau::validate(Grid grid) {
    Grid g = normalize(std::move(grid));
    erase_blank_columns(g);
    check_layout(g);
    return trusted(std::move(g));
}

std::size_t Ptableau::cell_count() const {
    std::size_t k = 0;
    for (const auto& row : grid_)
        for (const auto& b : row)
            if (b) ++k;
    return k;
}

int Ptableau::max_content() const {
    int m = 0;
    for (const auto& row : grid_)
        for (const auto& b : row)
            if (b) m = std::max(m, *b);
    return m;
}

Box Ptableau::box(int row, int col) const {
    if (row < 1 || row > rows_ || col < 1 || col > cols_)
        throw error(errc::index_out_of_range,
                    "box (" + std::to_string(row) + ", " + std::to_string(col) +
                        ") outside a " + std::to_string(rows_) + " x " + std::to_string(cols_) +
                        " grid");
    return grid_[std::size_t(row) - 1][std::size_t(col) - 1];
}

std::vector<CellRef> Ptableau::cells() const { return collect_cells(grid_); }

std::vector<std::vector<int>> Ptableau::row_multisets() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(rows_));
    for (int r = 0; r < rows_; ++r) {
        for (const auto& b : grid_[std::size_t(r)])
            if (b) out[std::size_t(r)].push_back(*b);
        std::sort(out[std::size_t(r)].begin(), out[std::size_t(r)].end());
    }
    return out;
}

bool operator==(const Ptableau& a, const Ptableau& b) {
    return a.rows_ == b.rows_ && a.row_multisets() == b.row_multisets();
}

bool operator<(const Ptableau& a, const Ptableau& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
    return a.row_multisets() < b.row_multisets();
}

namespace detail {

Grid greedy_layout(const std::vector<std::vector<int>>& rows, int n_rows, Side side) {
    const int R = std::max<int>(n_rows, int(rows.size()));
    // For each column (offset from the adjacent edge), the content of the
    // cell nearest the current row among rows already placed.
    std::map<int, int> frontier;
    std::vector<std::vector<std::pair<int, int>>> placed(static_cast<std::size_t>(R));  // (offset, value)
    int width = 0;

    auto place_row = [&](int r, std::vector<int> vals) {
        const std::size_t rr = std::size_t(r);
        if (side == Side::Left)
            std::sort(vals.begin(), vals.end());
        else
            std::sort(vals.begin(), vals.end(), std::greater<int>());
        int off = -1;
        for (int v : vals) {
            ++off;
            if (side == Side::Left)
                // left layout is built bottom row first: v may sit over a
                // column whose topmost content below is larger
                while (frontier.count(off) && frontier[off] <= v) ++off;
            else
                // right layout is built top row first: v may sit under a
                // column whose bottommost content above is smaller
                while (frontier.count(off) && frontier[off] >= v) ++off;
            placed[rr].push_back({off, v});
        }
        for (auto [o, v] : placed[rr]) {
            frontier[o] = v;
            width = std::max(width, o + 1);
        }
    };

    if (side == Side::Left) {
        for (int r = R - 1; r >= 0; --r)
            place_row(r, std::size_t(r) < rows.size() ? rows[std::size_t(r)]
                                                      : std::vector<int>{});
    } else {
        for (int r = 0; r < R; ++r)
            place_row(r, std::size_t(r) < rows.size() ? rows[std::size_t(r)]
                                                      : std::vector<int>{});
    }

    Grid grid(static_cast<std::size_t>(R));
    for (auto& grow : grid) grow.assign(std::size_t(width), Box{});
    for (int r = 0; r < R; ++r)
        for (auto [o, v] : placed[std::size_t(r)]) {
            int c = side == Side::Left ? o : width - 1 - o;
            grid[std::size_t(r)][std::size_t(c)] = v;
        }
    return grid;
}

bool layout_valid(const Grid& grid, int n_rows) {
    if (int(grid.size()) != n_rows) return false;
    try {
        check_layout(grid);
        return true;
    } catch (const error&) {
        return false;
    }
}

bool justify_sweep(Grid& grid, int n_rows, Side side, bool reverse_scan) {
    if (grid.empty() || grid[0].empty()) return false;
    const int R = int(grid.size());
    const int W = int(grid[0].size());
    bool moved = false;
    std::vector<std::pair<int, int>> scan;
    for (int r = 0; r < R; ++r)
        for (int c = 0; c + 1 < W; ++c) scan.push_back({r, c});
    if (reverse_scan) std::reverse(scan.begin(), scan.end());
    for (auto [r, c] : scan) {
        auto& left = grid[std::size_t(r)][std::size_t(c)];
        auto& right = grid[std::size_t(r)][std::size_t(c) + 1];
        bool applicable =
            side == Side::Left ? (!left && right.has_value()) : (left.has_value() && !right);
        if (!applicable) continue;
        std::swap(left, right);
        if (layout_valid(grid, n_rows))
            moved = true;
        else
            std::swap(left, right);
    }
    return moved;
}

}  // namespace detail

Ptableau Ptableau::from_rows(std::vector<std::vector<int>> rows, int n_rows) {
    int R = std::max<int>({1, n_rows, int(rows.size())});
    Grid g = detail::greedy_layout(rows, R, Side::Left);
    return validate(std::move(g));
}

Ptableau justify(const Ptableau& t, Side side) {
    Grid g = detail::greedy_layout(t.row_multisets(), t.n_rows(), side);
    check_layout(g);
    return Ptableau::trusted(std::move(g));
}

Ptableau restrict_rows(const Ptableau& t, int i) {
    if (i < 1 || i >= t.n_rows())
        throw error(errc::index_out_of_range,
                    "restriction index " + std::to_string(i) + " outside [1, " +
                        std::to_string(t.n_rows() - 1) + "]");
    auto rows = t.row_multisets();
    return Ptableau::from_rows({rows[std::size_t(i) - 1], rows[std::size_t(i)]}, 2);
}

Ptableau extend(const Ptableau& t, int content, int row) {
    if (row < 1) throw error(errc::index_out_of_range, "extension row must be positive");
    if (content < 1) throw error(errc::invalid_box, "extension content must be positive");
    // The new cell must be the final biword column in standard order: its
    // content at least every content present, and -- on ties -- its row at
    // most every row already holding that content.
    if (content < t.max_content())
        throw error(errc::invalid_extension,
                    "appending " + std::to_string(content) + " after a larger content " +
                        std::to_string(t.max_content()) + " is not an extension");
    for (const auto& cell : t.cells())
        if (cell.content == content && cell.row < row)
            throw error(errc::invalid_extension,
                        "appending " + std::to_string(content) + " in row " + std::to_string(row) +
                            " below an existing " + std::to_string(content) + " in row " +
                            std::to_string(cell.row) + " is not an extension");
    const int R = std::max(t.n_rows(), row);
    Grid g = detail::greedy_layout(t.row_multisets(), R, Side::Left);
    for (auto& grow : g) grow.push_back(std::nullopt);
    g[std::size_t(row) - 1].back() = content;
    try {
        check_layout(g);
    } catch (const error& e) {
        throw error(errc::invalid_extension, "appending " + std::to_string(content) + " in row " +
                                                 std::to_string(row) + " breaks validity (" +
                                                 e.what() + ")");
    }
    auto rows = t.row_multisets();
    rows.resize(std::size_t(R));
    rows[std::size_t(row) - 1].push_back(content);
    return Ptableau::from_rows(std::move(rows), R);
}

Weight weight(const Ptableau& t) {
    Weight w(std::size_t(t.n_rows()), 0);
    for (const auto& cell : t.cells()) ++w[std::size_t(cell.row) - 1];
    return w;
}

}  // namespace ptab
