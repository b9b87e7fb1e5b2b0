#include "ptabkit/duality.hpp"

#include <algorithm>
#include <string>

namespace ptab {

Biword bw(const Ptableau& t) {
    std::vector<std::pair<int, int>> pairs;
    for (const auto& cell : t.cells()) pairs.push_back({cell.content, cell.row});
    return standardize(std::move(pairs), t.max_content(), t.n_rows());
}

Ptableau perf(const Biword& b) {
    const int n = std::max(b.bottom.n, 1);
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(n));
    for (std::size_t j = 0; j < b.size(); ++j)
        rows[std::size_t(b.bottom.letters[j]) - 1].push_back(b.top.letters[j]);
    return Ptableau::from_rows(std::move(rows), n);
}

Ptableau dual_ptab(const Ptableau& t) {
    const int n = std::max(t.max_content(), 1);
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(n));
    for (const auto& cell : t.cells()) rows[std::size_t(cell.content) - 1].push_back(cell.row);
    return Ptableau::from_rows(std::move(rows), n);
}

Ptableau rot(const Ptableau& t, int m) {
    if (m == 0) m = std::max(t.max_content(), 1);
    if (t.max_content() > m)
        throw error(errc::content_exceeds_alphabet,
                    "content " + std::to_string(t.max_content()) + " exceeds the alphabet bound " +
                        std::to_string(m));
    const int n = t.n_rows();
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(n));
    for (const auto& cell : t.cells())
        rows[std::size_t(n - cell.row)].push_back(m - cell.content + 1);
    return Ptableau::from_rows(std::move(rows), n);
}

IntMatrix to_matrix(const Biword& b, int m, int n) {
    if (m == 0) m = b.top.n;
    if (n == 0) n = b.bottom.n;
    if (b.top.n > m || b.bottom.n > n)
        throw error(errc::bound_violation,
                    "matrix dimensions " + std::to_string(m) + " x " + std::to_string(n) +
                        " too small for alphabets " + std::to_string(b.top.n) + " / " +
                        std::to_string(b.bottom.n));
    IntMatrix mat;
    mat.a.assign(std::size_t(m), std::vector<long long>(std::size_t(n), 0));
    for (std::size_t j = 0; j < b.size(); ++j)
        ++mat.a[std::size_t(b.top.letters[j]) - 1][std::size_t(b.bottom.letters[j]) - 1];
    return mat;
}

Biword from_matrix(const IntMatrix& mat) {
    for (const auto& row : mat.a)
        if (row.size() != mat.cols())
            throw error(errc::malformed_input, "matrix rows differ in length");
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < mat.rows(); ++i)
        for (std::size_t j = 0; j < mat.cols(); ++j) {
            if (mat.a[i][j] < 0)
                throw error(errc::malformed_input, "matrix entries must be non-negative");
            for (long long rep = 0; rep < mat.a[i][j]; ++rep)
                pairs.push_back({int(i) + 1, int(j) + 1});
        }
    return standardize(std::move(pairs), int(mat.rows()), int(mat.cols()));
}

ViolationReport violations(const Ptableau& t) {
    const Grid grid = justify(t, Side::Right).grid();
    const int R = int(grid.size());
    const int W = grid.empty() ? 0 : int(grid[0].size());
    ViolationReport report;
    for (int c = W; c >= 1; --c) {
        for (int r = R; r >= 1; --r) {
            const Box& b = grid[std::size_t(r) - 1][std::size_t(c) - 1];
            if (!b || *b < 2) continue;
            // column strictness keeps contents above this cell below *b, so
            // the largest of them witnesses whether *b - 1 is present
            int largest_above = 0;
            for (int rr = 1; rr < r; ++rr) {
                const Box& above = grid[std::size_t(rr) - 1][std::size_t(c) - 1];
                if (above) largest_above = std::max(largest_above, *above);
            }
            if (largest_above >= *b - 1) continue;
            report.entries.push_back({CellRef{*b, r, c}, *b - largest_above - 1});
        }
    }
    return report;
}

bool satisfies_word_condition(const Ptableau& t) {
    // Every cell of content s+1 must be matched to its own s-cell in a
    // strictly higher row (these matchings chain each cell down to a 1, the
    // columns of the left-justified dual).  By Hall's condition on the
    // nested row prefixes, the matching exists exactly when every prefix of
    // rows holds at least as many s's above as (s+1)'s within.  On tableaux
    // whose content c sits in rows >= c -- all straight tableaux do -- this
    // is the same as comparing i-counts in row windows [i, i+k] against
    // (i+1)-counts in [i+1, i+k+1].
    const int n = t.n_rows();
    const int m = t.max_content();
    auto rows = t.row_multisets();
    auto count = [&](int value, int row) {
        return std::count(rows[std::size_t(row) - 1].begin(), rows[std::size_t(row) - 1].end(),
                          value);
    };
    for (int s = 1; s <= m; ++s) {
        long long available = 0;  // s-cells in rows < r
        long long needed = 0;     // (s+1)-cells in rows <= r
        for (int r = 1; r <= n; ++r) {
            needed += count(s + 1, r);
            if (needed > available) return false;
            available += count(s, r);
        }
    }
    return true;
}

}  // namespace ptab
