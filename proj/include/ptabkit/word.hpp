// Words over the alphabet {1..n}, biwords, and the letter-level crystal
// operators.
//
// For a word w = w_1..w_k and an index 1 <= i < n, each letter contributes
// eps_i(w_s) = [w_s == i+1] and phi_i(w_s) = [w_s == i].  The running sums
//
//   ce_i(j) = sum_{s<=j} eps_i(w_s) - sum_{s<j} phi_i(w_s)
//   cf_i(j) = sum_{s>=j} phi_i(w_s) - sum_{s>j} eps_i(w_s)
//
// peak at eps_i(w) = max_j ce_i(j) and phi_i(w) = max_j cf_i(j) (both >= 0,
// and 0 on the empty word).  raise_i changes the letter at the smallest
// maximizer of ce from i+1 to i; lower_i changes the letter at the largest
// maximizer of cf from i to i+1.  When eps (resp. phi) is 0 the operator is
// null.  This is the signature-rule description of the tensor-power crystal
// of the standard representation.
//
// A biword is a pair of equal-length words (top over {1..m}, bottom over
// {1..n}) whose columns are sorted standardly: top weakly increasing, and
// bottom weakly decreasing within each constant-top block.  Crystal
// operators act on the bottom word; standard form is preserved.

#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ptabkit/errors.hpp"
#include "ptabkit/ptableau.hpp"

namespace ptab {

struct Word {
    std::vector<int> letters;
    int n = 0;  // alphabet bound; letters lie in {1..n}

    std::size_t size() const { return letters.size(); }

    friend bool operator==(const Word& a, const Word& b) {
        return a.n == b.n && a.letters == b.letters;
    }
    friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
};

// Checks 1 <= letter <= n for every letter.  n == 0 means "derive": the bound
// becomes the maximum letter (0 for the empty word).
Word make_word(std::vector<int> letters, int n = 0);

// weight(w)[c-1] counts the letters equal to c, for c = 1..n.
Weight word_weight(const Word& w);

enum class Direction { Raise, Lower };

struct WordSignature {
    int i = 0;
    std::vector<long long> ce;  // ce[j-1] = ce_i(j)
    std::vector<long long> cf;  // cf[j-1] = cf_i(j)
    long long eps = 0;
    long long phi = 0;
    std::size_t e_pos = 0;  // smallest maximizer of ce (1-based; 0 when eps == 0)
    std::size_t f_pos = 0;  // largest maximizer of cf (1-based; 0 when phi == 0)
};

WordSignature signature(const Word& w, int i);

// raise_i / lower_i; nullopt when the operator is null.  Throws
// internal_inconsistency if the selected letter is not the expected one.
std::optional<Word> crystal_word(const Word& w, int i, Direction dir);

struct Biword {
    Word top;     // alphabet {1..m}
    Word bottom;  // alphabet {1..n}

    std::size_t size() const { return top.size(); }

    friend bool operator==(const Biword& a, const Biword& b) {
        return a.top == b.top && a.bottom == b.bottom;
    }
    friend bool operator!=(const Biword& a, const Biword& b) { return !(a == b); }
};

bool is_standard(const Biword& b);

// Sorts the columns (tau_j, omega_j) into standard order: tau ascending,
// omega descending within equal tau.  m/n == 0 derives the bounds from the
// letters present.
Biword standardize(std::vector<std::pair<int, int>> pairs, int m = 0, int n = 0);

// Wraps two words as a biword; throws standard_form_violation when the
// columns are not standardly sorted (or the lengths differ).
Biword make_biword(Word top, Word bottom);

// Crystal operators act on the bottom word; the result is re-checked to be
// standard (throwing internal_inconsistency if the action broke sorting).
std::optional<Biword> crystal_biword(const Biword& b, int i, Direction dir);

// Swaps the two rows of the biword and re-sorts into standard form.  An
// involution on standard biwords.
Biword dual_biword(const Biword& b);

}  // namespace ptab
