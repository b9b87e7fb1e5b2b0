// Crystal operators on perforated tableaux.
//
// For a tableau T on n rows and an index 1 <= i < n, the action of raise_i
// is computed on the two-row restriction to rows i and i+1:
//
//   * left-justify the restriction; eps_i(T) counts the blanks in its top
//     row.  If eps_i = 0 the operator is null.  Otherwise the moving cell is
//     the rightmost bottom-row cell with a blank directly above it; it moves
//     up into that blank.
//   * the move is transported back to T: in the left-justified layout of T
//     itself, the corresponding cell of row i+1 (matched by its rank among
//     the movable cells) is swapped with the blank above it.
//
// lower_i is the mirror image: right-justify, phi_i(T) counts the blanks in
// the bottom row, and the leftmost top-row cell with a blank directly below
// moves down.  Raising and lowering are mutually inverse partial maps, and
// they commute with the biword encoding of T (the bottom-word operators of
// word.hpp compute the same result).
//
// T is a highest-weight tableau exactly when every raise_i is null, which
// happens exactly when the left-justified layout is a semistandard Young
// tableau: rows flush to column 1 with weakly decreasing lengths.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ptabkit/errors.hpp"
#include "ptabkit/ptableau.hpp"
#include "ptabkit/word.hpp"

namespace ptab {

enum class Extreme { Highest, Lowest };

struct EpsPhi {
    long long eps = 0;
    long long phi = 0;
};

EpsPhi eps_phi(const Ptableau& t, int i);

// raise_i (Direction::Raise) or lower_i (Direction::Lower); nullopt when the
// operator is null.  Throws index_out_of_range unless 1 <= i < n_rows, and
// invalid_result if the moved grid fails validation (which would indicate a
// bug, not bad input).  The result is returned in canonical layout.
std::optional<Ptableau> crystal_ptab(const Ptableau& t, int i, Direction dir);

bool is_highest_weight(const Ptableau& t);
bool is_lowest_weight(const Ptableau& t);

// A run-length encoded sequence of crystal operators, applied left to right:
// "e2 f1^3" means raise_2 once, then lower_1 three times.
struct OpStep {
    int index = 0;
    Direction dir = Direction::Raise;
    long long exponent = 1;
};

struct CrystalOpSequence {
    std::vector<OpStep> steps;

    bool empty() const { return steps.empty(); }
    long long length() const;  // total exponent
};

// Applies the sequence left to right; throws null_step (naming the failing
// operator and its position) if any application is null.
Ptableau apply_sequence(const Ptableau& t, const CrystalOpSequence& seq);
Word apply_sequence(const Word& w, const CrystalOpSequence& seq);
Biword apply_sequence(const Biword& b, const CrystalOpSequence& seq);

// Greedy walk to the highest- (lowest-) weight vertex of the component:
// repeatedly applies the non-null raise (lower) of smallest index.  `path`
// records the operators actually applied, left to right.
struct ExtremeResult {
    Ptableau node;
    CrystalOpSequence path;
};
struct ExtremeWordResult {
    Word node;
    CrystalOpSequence path;
};
struct ExtremeBiwordResult {
    Biword node;
    CrystalOpSequence path;
};

ExtremeResult to_extreme(const Ptableau& t, Extreme which);
ExtremeWordResult to_extreme(const Word& w, Extreme which);
ExtremeBiwordResult to_extreme(const Biword& b, Extreme which);

}  // namespace ptab
