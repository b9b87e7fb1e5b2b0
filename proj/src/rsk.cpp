#include "ptabkit/rsk.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "ptabkit/crystal.hpp"

namespace ptab {

namespace {

// The working state of a resolution is the multiset of contents in each row;
// its display is the relaxed right layout, which agrees with the canonical
// right-justified layout once the word condition holds again.
struct Working {
    std::vector<std::vector<int>> rows;
    int n_rows = 1;

    Grid layout() const { return detail::greedy_layout(rows, n_rows, Side::Right); }
};

struct Offender {
    int row = 0;  // 1-based position in the relaxed layout
    int col = 0;
    int content = 0;
};

// First cell, scanning columns right to left and bottom to top, whose
// content s >= 2 has no s-1 above it in its column.
std::optional<Offender> first_offender(const Grid& grid) {
    const int R = int(grid.size());
    const int W = grid.empty() ? 0 : int(grid[0].size());
    for (int c = W; c >= 1; --c) {
        for (int r = R; r >= 1; --r) {
            const Box& b = grid[std::size_t(r) - 1][std::size_t(c) - 1];
            if (!b || *b < 2) continue;
            bool supported = false;
            for (int rr = 1; rr < r && !supported; ++rr)
                supported = grid[std::size_t(rr) - 1][std::size_t(c) - 1] == Box{*b - 1};
            if (!supported) return Offender{r, c, *b};
        }
    }
    return std::nullopt;
}

void decrement_in_row(std::vector<int>& row, int value) {
    auto it = std::find(row.begin(), row.end(), value);
    if (it == row.end())
        throw error(errc::internal_inconsistency,
                    "offending content vanished from its row between layout and decrement");
    *it = value - 1;
    std::sort(row.begin(), row.end());
}

int rightmost_in_row(const Grid& grid, int row, int value) {
    const auto& r = grid[std::size_t(row) - 1];
    for (std::size_t c = r.size(); c-- > 0;)
        if (r[c] == Box{value}) return int(c) + 1;
    return 0;
}

}  // namespace

InsertResult insert_resolve(const Ptableau& pt, int content, int row) {
    if (row < 1) throw error(errc::index_out_of_range, "insertion row must be positive");
    if (content < 1) throw error(errc::invalid_box, "insertion content must be positive");
    if (!satisfies_word_condition(pt))
        throw error(errc::word_condition_precondition,
                    "insertion target must satisfy the word condition");

    Working w;
    w.n_rows = std::max(pt.n_rows(), row);
    w.rows = pt.row_multisets();
    w.rows.resize(std::size_t(w.n_rows));
    w.rows[std::size_t(row) - 1].push_back(content);
    std::sort(w.rows[std::size_t(row) - 1].begin(), w.rows[std::size_t(row) - 1].end());

    ResolutionTrace trace;
    Grid grid = w.layout();
    trace.steps.push_back(
        {TraceStep::Kind::Insert, CellRef{content, row, rightmost_in_row(grid, row, content)},
         0, 0, 0});

    trace.eta = content;
    long long guard = 0;
    for (const auto& r : w.rows)
        for (int v : r) guard += v;
    while (auto off = first_offender(grid)) {
        if (--guard < 0)
            throw error(errc::internal_inconsistency, "resolution failed to terminate");
        decrement_in_row(w.rows[std::size_t(off->row) - 1], off->content);
        trace.steps.push_back({TraceStep::Kind::Decrement,
                               CellRef{off->content, off->row, off->col}, off->content,
                               off->content - 1, 0});
        trace.eta = off->content - 1;
        grid = w.layout();
    }
    trace.steps.push_back({TraceStep::Kind::Terminal, CellRef{}, 0, 0, trace.eta});

    Ptableau out = Ptableau::from_rows(w.rows, w.n_rows);
    if (!satisfies_word_condition(out))
        throw error(errc::internal_inconsistency,
                    "resolution finished on a tableau violating the word condition");
    return {std::move(out), std::move(trace)};
}

RskPair ptab_rsk(const Biword& b) {
    auto steps = ptab_rsk_steps(b);
    if (steps.empty()) {
        const int n = std::max(b.bottom.n, 1);
        Ptableau empty_t = Ptableau::from_rows({}, n);
        return {empty_t, empty_t};
    }
    return {steps.back().pt_after, steps.back().tmax_after};
}

RskPair ptab_rsk(const Ptableau& t) { return ptab_rsk(bw(t)); }

std::vector<RskStep> ptab_rsk_steps(const Biword& b) {
    if (!is_standard(b))
        throw error(errc::standard_form_violation, "insertion runs over a standard biword");
    const int n = std::max(b.bottom.n, 1);
    Ptableau pt = Ptableau::from_rows({}, n);
    Ptableau tmax = Ptableau::from_rows({}, n);
    std::vector<RskStep> steps;
    for (std::size_t j = 0; j < b.size(); ++j) {
        const int tau = b.top.letters[j];
        const int omega = b.bottom.letters[j];
        InsertResult ir = insert_resolve(pt, tau, omega);
        pt = std::move(ir.pt);
        const int eta = ir.trace.eta;
        if (eta < 1 || eta > n)
            throw error(errc::internal_inconsistency,
                        "bumping value " + std::to_string(eta) + " outside [1, " +
                            std::to_string(n) + "]");
        tmax = extend(tmax, tau, eta);
        steps.push_back({tau, omega, eta, pt, tmax, std::move(ir.trace)});
    }
    if (!steps.empty() && !is_highest_weight(steps.back().tmax_after))
        throw error(errc::internal_inconsistency, "recording tableau is not highest weight");
    return steps;
}

Word eta_word(const Ptableau& tmax) { return bw(tmax).bottom; }

namespace {

// Semistandard tableaux as vectors of columns (top entry first), the shape
// classic column insertion naturally works in.
std::vector<std::vector<int>> to_columns(const Ptableau& t) {
    const Grid g = justify(t, Side::Left).grid();
    const int W = g.empty() ? 0 : int(g[0].size());
    std::vector<std::vector<int>> cols(static_cast<std::size_t>(W));
    for (int c = 0; c < W; ++c)
        for (const auto& grow : g) {
            if (!grow[std::size_t(c)]) break;
            cols[std::size_t(c)].push_back(*grow[std::size_t(c)]);
        }
    return cols;
}

Ptableau from_columns(const std::vector<std::vector<int>>& cols, int n_rows) {
    std::size_t height = 0;
    for (const auto& col : cols) height = std::max(height, col.size());
    Grid g(std::max<std::size_t>(std::size_t(n_rows), std::max<std::size_t>(height, 1)),
           std::vector<Box>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < cols[c].size(); ++r) g[r][c] = cols[c][r];
    return Ptableau::validate(std::move(g));
}

// Column-inserts v, returning the grown box (1-based row, col).
std::pair<int, int> column_insert_into(std::vector<std::vector<int>>& cols, int v) {
    std::size_t j = 0;
    for (;;) {
        if (j == cols.size()) {
            cols.push_back({v});
            return {1, int(j) + 1};
        }
        auto& col = cols[j];
        auto it = std::find_if(col.begin(), col.end(), [&](int x) { return x >= v; });
        if (it == col.end()) {
            col.push_back(v);
            return {int(col.size()), int(j) + 1};
        }
        std::swap(*it, v);
        ++j;
    }
}

}  // namespace

Ptableau column_insert(const Ptableau& ssyt, int value) {
    if (!is_highest_weight(ssyt))
        throw error(errc::highest_weight_precondition,
                    "column insertion expects a semistandard (highest-weight) tableau");
    if (value < 1) throw error(errc::invalid_box, "inserted value must be positive");
    auto cols = to_columns(ssyt);
    column_insert_into(cols, value);
    return from_columns(cols, ssyt.n_rows());
}

SsytPair classic_rsk(const Biword& b) {
    if (!is_standard(b))
        throw error(errc::standard_form_violation, "insertion runs over a standard biword");
    const int n = std::max(b.bottom.n, 1);
    std::vector<std::vector<int>> p, q;
    for (std::size_t j = 0; j < b.size(); ++j) {
        auto [row, col] = column_insert_into(p, b.bottom.letters[j]);
        while (q.size() < std::size_t(col)) q.emplace_back();
        if (int(q[std::size_t(col) - 1].size()) != row - 1)
            throw error(errc::internal_inconsistency, "recording tableau fell out of shape");
        q[std::size_t(col) - 1].push_back(b.top.letters[j]);
    }
    return {from_columns(p, n), from_columns(q, n)};
}

RskPair make_rsk_pair(Ptableau pt, Ptableau tmax) {
    if (!satisfies_word_condition(pt))
        throw error(errc::word_condition_precondition,
                    "the insertion half of a pair must satisfy the word condition");
    if (!is_highest_weight(tmax))
        throw error(errc::highest_weight_precondition,
                    "the recording half of a pair must be highest weight");
    if (pt.cell_count() != tmax.cell_count())
        throw error(errc::shape_mismatch,
                    "cell counts differ: " + std::to_string(pt.cell_count()) + " vs " +
                        std::to_string(tmax.cell_count()));
    auto shape_of = [](const Ptableau& t) {
        std::vector<long long> shape;
        const Ptableau canonical = justify(t, Side::Left);
        for (const auto& grow : canonical.grid()) {
            long long len = 0;
            for (const auto& box : grow)
                if (box) ++len;
            shape.push_back(len);
        }
        while (!shape.empty() && shape.back() == 0) shape.pop_back();
        return shape;
    };
    if (shape_of(tmax) != shape_of(dual_ptab(pt)))
        throw error(errc::shape_mismatch,
                    "the recording shape must match the dual shape of the insertion half");
    return {std::move(pt), std::move(tmax)};
}

Ptableau rsk_inverse(const RskPair& pair) {
    RskPair checked = make_rsk_pair(pair.pt, pair.tmax);
    const int n = checked.pt.n_rows();

    Working wt{checked.tmax.row_multisets(), checked.tmax.n_rows()};
    Working wp{checked.pt.row_multisets(), n};

    std::deque<std::pair<int, int>> pairs;
    const std::size_t k = checked.pt.cell_count();
    for (std::size_t step = 0; step < k; ++step) {
        // Remove the rightmost cell of maximal content from the recording
        // tableau; its content t and row a drive the un-insertion round.
        Grid rt = wt.layout();
        int t = 0;
        for (const auto& grow : rt)
            for (const auto& box : grow)
                if (box) t = std::max(t, *box);
        int a = 0, best_col = 0;
        for (std::size_t r = 0; r < rt.size(); ++r)
            for (std::size_t c = 0; c < rt[r].size(); ++c)
                if (rt[r][c] == Box{t} && int(c) + 1 > best_col) {
                    best_col = int(c) + 1;
                    a = int(r) + 1;
                }
        auto& trow = wt.rows[std::size_t(a) - 1];
        trow.erase(std::find(trow.begin(), trow.end(), t));

        // Walk the insertion tableau: remove the leftmost a-cell, then let
        // each column to the right hand its lowest cell at or above the
        // walker's row over to the walker's row.
        Grid rp = wp.layout();
        const int W = rp.empty() ? 0 : int(rp[0].size());
        int wrow = 0, wcol = 0;
        for (int c = 1; c <= W && wrow == 0; ++c)
            for (int r = 1; r <= wp.n_rows; ++r)
                if (rp[std::size_t(r) - 1][std::size_t(c) - 1] == Box{a}) {
                    wrow = r;
                    wcol = c;
                    break;
                }
        if (wrow == 0)
            throw error(errc::malformed_input, "no cell of content " + std::to_string(a) +
                                                   " to start un-inserting from");
        rp[std::size_t(wrow) - 1][std::size_t(wcol) - 1] = std::nullopt;
        auto& prow = wp.rows[std::size_t(wrow) - 1];
        prow.erase(std::find(prow.begin(), prow.end(), a));

        while (wcol + 1 <= W) {
            int srow = 0;
            for (int r = wrow; r >= 1; --r)
                if (rp[std::size_t(r) - 1][std::size_t(wcol)]) {
                    srow = r;
                    break;
                }
            if (srow == 0)
                throw error(errc::malformed_input,
                            "column " + std::to_string(wcol + 1) +
                                " offers no cell at or above row " + std::to_string(wrow));
            const int b = *rp[std::size_t(srow) - 1][std::size_t(wcol)];
            rp[std::size_t(srow) - 1][std::size_t(wcol)] = std::nullopt;
            rp[std::size_t(wrow) - 1][std::size_t(wcol)] = b;
            if (srow != wrow) {
                auto& from = wp.rows[std::size_t(srow) - 1];
                from.erase(std::find(from.begin(), from.end(), b));
                auto& to = wp.rows[std::size_t(wrow) - 1];
                to.insert(std::upper_bound(to.begin(), to.end(), b), b);
            }
            wrow = srow;
            ++wcol;
        }
        pairs.emplace_front(t, wrow);
    }

    std::vector<std::pair<int, int>> ordered(pairs.begin(), pairs.end());
    Biword recovered = standardize(ordered, checked.tmax.max_content(), n);
    for (std::size_t j = 0; j < recovered.size(); ++j)
        if (recovered.top.letters[j] != ordered[j].first ||
            recovered.bottom.letters[j] != ordered[j].second)
            throw error(errc::internal_inconsistency,
                        "un-inserted columns arrived out of standard order");
    return perf(recovered);
}

}  // namespace ptab
