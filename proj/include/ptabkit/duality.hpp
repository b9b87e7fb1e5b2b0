// Encodings of tableaux as biwords and matrices, the content/row duality,
// rotation, and the violation calculus.
//
// bw(T) lists the cells of T as biword columns (content / row), sorted
// standardly; perf is its inverse: row r of perf(b) holds the multiset of
// tops tau_j with bottom omega_j = r.  dual_ptab swaps the two coordinates
// of every cell -- cell [s] in row t becomes cell [t] in row s -- i.e. it is
// perf . dual_biword . bw, an involution exchanging content and position.
//
// rot(T, m) rotates the grid 180 degrees and complements contents within
// {1..m}; on cells, [s] at (r, c) of an n x w grid becomes [m-s+1] at
// (n-r+1, w-c+1).  It reverses rows and columns, so it conjugates raising to
// lowering.
//
// A violation of T is witnessed in the right-justified layout: a cell of
// content s >= 2 whose column contains no s-1 above it.  Its multiplicity is
// s - s' - 1 where s' is the largest content above it in its column (0 when
// none).  T satisfies the word condition -- for every i and k, rows i..i+k
// hold at least as many i's as rows i+1..i+k+1 hold (i+1)'s -- exactly when
// no violations exist, exactly when dual_ptab(T) is highest weight.

#pragma once

#include <vector>

#include "ptabkit/errors.hpp"
#include "ptabkit/ptableau.hpp"
#include "ptabkit/word.hpp"

namespace ptab {

// Tableau -> biword: columns (content / row) over all cells, standard order.
// The top alphabet bound is max content (0 cells -> 0); the bottom bound is
// n_rows.
Biword bw(const Ptableau& t);

// Biword -> tableau: row r collects the tops paired with bottom r.  The row
// count is the bottom alphabet bound.  Inverse to bw.
Ptableau perf(const Biword& b);

// The content/row dual; an involution.  The dual has max_content(t) rows
// (one row when t is empty).
Ptableau dual_ptab(const Ptableau& t);

// 180-degree rotation with content complement in {1..m}.  m == 0 uses the
// maximum content present; explicit m below that throws
// content_exceeds_alphabet.
Ptableau rot(const Ptableau& t, int m = 0);

struct IntMatrix {
    std::vector<std::vector<long long>> a;  // m rows, n columns

    std::size_t rows() const { return a.size(); }
    std::size_t cols() const { return a.empty() ? 0 : a[0].size(); }

    friend bool operator==(const IntMatrix& x, const IntMatrix& y) { return x.a == y.a; }
    friend bool operator!=(const IntMatrix& x, const IntMatrix& y) { return !(x == y); }
};

// alpha_{ij} counts the biword columns equal to (i / j).  m/n == 0 derive
// the dimensions from the alphabet bounds; explicit values smaller than a
// letter present throw bound_violation.  Transposing the matrix is the
// matrix-side image of dual_biword.
IntMatrix to_matrix(const Biword& b, int m = 0, int n = 0);
Biword from_matrix(const IntMatrix& mat);

struct Violation {
    CellRef cell;               // position in the right-justified layout
    long long multiplicity = 0;  // s - s' - 1, always >= 1
};

struct ViolationReport {
    std::vector<Violation> entries;  // scan order: columns right to left,
                                     // bottom to top within a column
    bool empty() const { return entries.empty(); }
};

ViolationReport violations(const Ptableau& t);

bool satisfies_word_condition(const Ptableau& t);

}  // namespace ptab
