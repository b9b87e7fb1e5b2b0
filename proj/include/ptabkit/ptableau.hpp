// Perforated tableaux: rectangular grids over a fixed number of rows whose
// boxes either hold a positive integer ("content") or are blank.
//
// A grid is a valid perforated tableau when
//   (1) reading each row left to right, contents weakly increase;
//   (2) reading each column top to bottom, contents strictly increase;
//   (3) for each value s, the s-cells form a horizontal strip: no column holds
//       two s-cells, and an s-cell in a lower row lies strictly left of every
//       s-cell in a higher row;
//   (4) for values s < t, no t-cell lies strictly above and weakly left of an
//       s-cell (the strips are ordered bottom-left to top-right);
//   (5) no column is entirely blank (rows may be entirely blank).
//
// Blank boxes carry no information of their own: two grids that agree on the
// multiset of contents in each row describe the same tableau.  Equality,
// hashing and canonical text output therefore compare the left-justified
// form, while a Ptableau value remembers the particular layout it was built
// with so that layout-sensitive algorithms (justification, violation scans,
// sliding) can show their work.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ptabkit/errors.hpp"

namespace ptab {

using Box = std::optional<int>;
using Grid = std::vector<std::vector<Box>>;

// 1-based reference to a filled box: `content` sits at (row, col).
struct CellRef {
    int content = 0;
    int row = 0;
    int col = 0;

    friend bool operator==(const CellRef& a, const CellRef& b) {
        return a.content == b.content && a.row == b.row && a.col == b.col;
    }
};

// weight(T)[r-1] counts the filled boxes in row r.
using Weight = std::vector<long long>;

enum class Side { Left, Right };

class Ptableau {
  public:
    // The empty tableau on one row.
    Ptableau();

    // Validates `grid` as a perforated tableau.  Ragged rows are padded with
    // blanks on the right; all-blank columns are removed (enforcing minimal
    // width); the resulting layout is otherwise preserved.  Throws
    // ptab::error with code invalid_box / row_order_violation /
    // column_strictness_violation / strip_order_violation, naming the
    // offending coordinates.
    static Ptableau validate(Grid grid);

    // Builds the unique tableau whose row r holds exactly the multiset
    // `rows[r-1]`, in the canonical left-justified layout.  `n_rows` may
    // exceed rows.size() to append blank rows.  Throws if no valid tableau
    // has those row contents.
    static Ptableau from_rows(std::vector<std::vector<int>> rows, int n_rows = 0);

    int n_rows() const { return rows_; }
    int n_cols() const { return cols_; }
    bool empty() const { return cell_count() == 0; }
    std::size_t cell_count() const;
    int max_content() const;  // 0 for the empty tableau

    // The stored layout, rows_ x cols_.
    const Grid& grid() const { return grid_; }

    // 1-based box access; throws index_out_of_range.
    Box box(int row, int col) const;

    // All filled boxes of the stored layout in row-major order.
    std::vector<CellRef> cells() const;

    // Contents of each row as a sorted vector (the layout-free description).
    std::vector<std::vector<int>> row_multisets() const;

    // Equality of tableaux, not of layouts: compares row multisets.
    friend bool operator==(const Ptableau& a, const Ptableau& b);
    friend bool operator!=(const Ptableau& a, const Ptableau& b) { return !(a == b); }

    // Total order (row count, then canonical layout lexicographically);
    // used to keep containers and exports deterministic.
    friend bool operator<(const Ptableau& a, const Ptableau& b);

  private:
    int rows_ = 1;
    int cols_ = 0;
    Grid grid_;  // rows_ x cols_, already validated

    friend Ptableau justify(const Ptableau&, Side);
    static Ptableau trusted(Grid grid);  // skips validation; internal use
};

// Slides every content as far left (or right) as validity allows, one
// box/blank swap at a time, until no swap applies.  The fixpoint is unique
// and equals the canonical greedy construction; the returned value stores
// that justified layout.
Ptableau justify(const Ptableau& t, Side side);

// The two-row tableau holding rows i and i+1 of t (1 <= i < n_rows);
// returned in canonical layout.  Throws index_out_of_range.
Ptableau restrict_rows(const Ptableau& t, int i);

// Appends `content` in a fresh rightmost column at `row` (growing the row
// count when row > n_rows) and returns the canonical result.  Throws
// invalid_extension when the appended cell breaks validity.
Ptableau extend(const Ptableau& t, int content, int row);

Weight weight(const Ptableau& t);

namespace detail {

// The canonical justified layout of given row contents on n_rows rows:
// Side::Left packs rows bottom-up, ascending, each cell in the first column
// whose contents below it (if any) are larger; Side::Right packs rows
// top-down, descending, each cell in the first column from the right whose
// contents above it (if any) are smaller.
Grid greedy_layout(const std::vector<std::vector<int>>& rows, int n_rows, Side side);

// One full sweep pass of the justification fixpoint over an explicit grid,
// exposed so tests can drive the iteration in arbitrary scan orders.
// Returns true when some swap was applied.
bool justify_sweep(Grid& grid, int n_rows, Side side, bool reverse_scan);

// Validity of an explicit grid without constructing a Ptableau (all-blank
// columns are tolerated); used by the sweep acceptance test.
bool layout_valid(const Grid& grid, int n_rows);

}  // namespace detail

}  // namespace ptab
