// Straightening paths, evacuation, and the Lusztig involution.
//
// For a tableau PT satisfying the word condition, let alpha_{ij} count the
// i's in row j and beta_{st} = sum_{i<=s} alpha_{it}.  The straightening
// sequence
//
//   e_(*) = e_(1) e_(2) ... e_(n-1),   e_(l) = prod_{s=1..n-l} raise_s^{beta_{s,s+l}}
//
// (factors of e_(l) applied smallest s first, e_(1) applied first) raises PT
// to the minimal highest-weight tableau T_mu of its weight, and raises any T
// with insertion tableau PT to its component's highest-weight vertex Tmax.
//
// evacuate(Tmax) slides the highest-weight tableau to the lowest-weight
// vertex of its component: repeatedly take the first outer corner (row-major
// order) -- an empty box with empty right and below neighbours and a filled
// neighbour above or left -- and slide it inward, each step swapping the
// hole with the larger of the contents above/left of it (ties to the one
// above), until neither exists.
//
// The Lusztig involution sends each vertex x to the mirror vertex S(x)
// characterized by S(Tmax) = Tmin and S(raise_i(x)) = lower_{n-i}(S(x)).  Two
// independent constructions are provided:
//   * Uninsert: S(T) = rot(rsk_inverse(PT, rot(Tmin, m)), m);
//   * EStar: apply to Tmin the straightening sequence of PT reversed and
//     complemented (expanded application order reversed, index i -> n-i).
// Method Both runs both and insists they agree.

#pragma once

#include <vector>

#include "ptabkit/crystal.hpp"
#include "ptabkit/duality.hpp"
#include "ptabkit/errors.hpp"
#include "ptabkit/ptableau.hpp"
#include "ptabkit/rsk.hpp"

namespace ptab {

struct AlphaTable {
    IntMatrix alpha;                            // alpha.a[i-1][j-1] = #{i's in row j}
    std::vector<std::vector<long long>> beta;   // beta[s-1][t-1] = sum_{i<=s} alpha_{it}
};

AlphaTable alpha_table(const Ptableau& pt);

// The straightening sequence of a word-condition tableau, as a run-length
// operator sequence (zero exponents omitted).  Throws
// word_condition_precondition otherwise.
CrystalOpSequence e_star_sequence(const Ptableau& pt);

// Reverses the expanded application order and complements indices i -> n-i.
CrystalOpSequence reversed_complement(const CrystalOpSequence& seq, int n);

// Sliding from highest weight to lowest weight.  Throws
// highest_weight_precondition unless is_highest_weight(tmax).
Ptableau evacuate(const Ptableau& tmax);

enum class LusztigMethod { Uninsert, EStar, Both };

// The Lusztig involution on the crystal of n-row tableaux.  m bounds the
// content alphabet for the rotation step (m == 0 uses max content).  Method
// Both cross-checks the two constructions and throws method_disagreement if
// they differ.
Ptableau lusztig(const Ptableau& t, LusztigMethod method = LusztigMethod::Both, int m = 0);

}  // namespace ptab
