// Insertion on perforated tableaux and the resulting correspondence
//
//   T  <-->  (PT, Tmax)
//
// between tableaux (equivalently standard biwords) and pairs consisting of a
// word-condition tableau PT and a highest-weight tableau Tmax of dual shape.
//
// One insertion step places a new cell [tau] in row omega of a fresh
// rightmost column and then repairs the word condition:
//
//   * lay the rows out right to left, top to bottom, each row's contents in
//     decreasing order, each cell taking the first free column (from the
//     right) whose occupied boxes above are all smaller;
//   * scan columns right to left, bottom to top, for a cell of content
//     s >= 2 with no s-1 above it in its column; decrement the first such
//     cell by one and re-lay out;
//   * repeat until no such cell exists.  The bumping value eta is the final
//     content of the last cell decremented (tau itself when nothing was).
//
// ptab_rsk runs the steps over the columns of bw(T), building PT by
// insertion and Tmax by recording [tau] in row eta.  classic_rsk is the
// textbook column-insertion correspondence on the same biword, used as an
// independent cross-check: Tmax equals the classic recording tableau and PT
// equals the content/row dual of the classic insertion tableau.
// rsk_inverse reverses the construction column by column.

#pragma once

#include <vector>

#include "ptabkit/duality.hpp"
#include "ptabkit/errors.hpp"
#include "ptabkit/ptableau.hpp"
#include "ptabkit/word.hpp"

namespace ptab {

struct TraceStep {
    enum class Kind { Insert, Decrement, Terminal };
    Kind kind = Kind::Insert;
    CellRef cell;   // Insert: the placed cell; Decrement: the cell before decrement
    int from = 0;   // Decrement: content before
    int to = 0;     // Decrement: content after
    int eta = 0;    // Terminal: the bumping value
};

struct ResolutionTrace {
    std::vector<TraceStep> steps;
    int eta = 0;
};

struct InsertResult {
    Ptableau pt;
    ResolutionTrace trace;
};

// One insertion step into a tableau satisfying the word condition.  Throws
// word_condition_precondition otherwise; index_out_of_range / invalid_box on
// non-positive row / content.
InsertResult insert_resolve(const Ptableau& pt, int content, int row);

struct RskPair {
    Ptableau pt;    // satisfies the word condition
    Ptableau tmax;  // highest weight; shape dual to pt
};

// Validates the pair invariants: pt satisfies the word condition, tmax is
// highest weight, the cell counts agree, and the shape of tmax equals the
// row lengths of the left-justified dual of pt.  Throws shape_mismatch (or
// the grid errors) otherwise.
RskPair make_rsk_pair(Ptableau pt, Ptableau tmax);

struct RskStep {
    int tau = 0;
    int omega = 0;
    int eta = 0;
    Ptableau pt_after;
    Ptableau tmax_after;
    ResolutionTrace trace;
};

RskPair ptab_rsk(const Ptableau& t);
RskPair ptab_rsk(const Biword& b);
std::vector<RskStep> ptab_rsk_steps(const Biword& b);

// The word of bumping values, read off Tmax without rerunning insertion:
// eta = bottom word of bw(tmax).
Word eta_word(const Ptableau& tmax);

struct SsytPair {
    Ptableau p;  // insertion tableau (semistandard)
    Ptableau q;  // recording tableau (semistandard)
};

// Classic column-insertion correspondence.  Inserting v into a column
// displaces the topmost entry >= v into the next column; with no such entry
// v lands at the bottom of the column, growing the shape, and the recording
// tableau takes tau in the grown box.  Both results are returned on
// b.bottom.n rows (trailing blank rows padded) so they compare directly with
// the tableaux of ptab_rsk.
SsytPair classic_rsk(const Biword& b);

// Column-inserts a single value into a semistandard tableau (given and
// returned in left-justified layout); exposed for cross-checks.
Ptableau column_insert(const Ptableau& ssyt, int value);

// Inverts ptab_rsk: recovers T with ptab_rsk(T) == pair.  Validates the pair
// first (see make_rsk_pair); throws malformed_input when a required cell
// cannot be located during un-insertion.
Ptableau rsk_inverse(const RskPair& pair);

}  // namespace ptab
