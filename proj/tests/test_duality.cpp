// Biword and matrix encodings, the content/row dual, rotation, and the
// violation calculus.

#include <doctest.h>

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "ptabkit/check.hpp"
#include "ptabkit/crystal.hpp"
#include "ptabkit/duality.hpp"
#include "ptabkit/errors.hpp"
#include "ptabkit/io.hpp"
#include "ptabkit/ptableau.hpp"

using ptab::Biword;
using ptab::Ptableau;

namespace {

Ptableau pt(const std::string& text) { return ptab::parse_ptableau(text); }

// Total violation multiplicity compared against uncovered blanks in the dual:
// each violation of multiplicity m corresponds to m blanks sitting directly
// above a cell in the left-justified dual.
long long blanks_above_cells(const Ptableau& t) {
    const Ptableau left = justify(t, ptab::Side::Left);
    const ptab::Grid& g = left.grid();
    long long total = 0;
    for (int c = 1; c <= left.n_cols(); ++c) {
        int run = 0;
        for (int r = 1; r <= left.n_rows(); ++r) {
            if (g[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)]) {
                total += run;
                run = 0;
            } else {
                ++run;
            }
        }
    }
    return total;
}

}  // namespace

TEST_CASE("the biword lists cells as content over row in standard order") {
    const Ptableau t = Ptableau::from_rows({{1, 3, 4}, {1, 2, 2}, {3, 3, 4, 4}});
    const Biword b = bw(t);
    CHECK(ptab::format_biword(b) == "1122333444/2122331331");
    CHECK(perf(b) == t);

    // initial factors of the biword encode the cell-by-cell growth of t
    Biword prefix;
    prefix.top = ptab::make_word({1, 1, 2, 2, 3}, b.top.n);
    prefix.bottom = ptab::make_word({2, 1, 2, 2, 3}, b.bottom.n);
    CHECK(perf(prefix) == Ptableau::from_rows({{1}, {1, 2, 2}, {3}}));

    CHECK(bw(Ptableau()).size() == 0);
    CHECK(perf(bw(pt("1"))) == pt("1"));
}

TEST_CASE("the dual swaps content with row") {
    // an eight-cell tableau and its printed dual
    const Ptableau t = perf(ptab::parse_biword("11122233/22133132"));
    CHECK(t == Ptableau::from_rows({{1, 2}, {1, 1, 3}, {2, 2, 3}}));
    const Ptableau d = dual_ptab(t);
    CHECK(d == Ptableau::from_rows({{1, 2, 2}, {1, 3, 3}, {2, 3}}));
    CHECK(dual_ptab(d) == t);

    // the ten-cell running example has contents up to 4, so its dual has 4 rows
    const Ptableau t10 = Ptableau::from_rows({{1, 3, 4}, {1, 2, 2}, {3, 3, 4, 4}});
    const Ptableau d10 = dual_ptab(t10);
    CHECK(d10.n_rows() == 4);
    CHECK(d10 == Ptableau::from_rows({{1, 2}, {2, 2}, {1, 3, 3}, {1, 3, 3}}));
    CHECK(dual_ptab(d10) == t10);

    // dual of the biword equals the biword of the dual
    CHECK(bw(d10) == ptab::dual_biword(bw(t10)));
    CHECK(dual_ptab(Ptableau()).n_rows() == 1);
}

TEST_CASE("rotation flips the grid and complements the contents") {
    const Ptableau t = pt(
        ". . . . . . . . 4 4 5\n"
        ". . . . . 1 1 2 . 5 6\n"
        ". . . 1 1 . 2 4 5 6 7\n"
        "1 1 2 3 3 3 4 6 6 . 8");
    const Ptableau r = rot(t, 8);
    CHECK(ptab::format_ptableau(r) ==
          "1 . 3 3 5 6 6 6 7 8 8\n"
          "2 3 4 5 7 . 8 8 . . .\n"
          "3 4 . 7 8 8 . . . . .\n"
          "4 5 5 . . . . . . . .");
    CHECK(rot(r, 8) == t);
    CHECK(rot(pt("1 2")) == pt("1 2"));  // m defaults to the max content, 2

    bool small_bound = false;
    try {
        (void)rot(t, 7);
    } catch (const ptab::error& e) {
        small_bound = e.code() == ptab::errc::content_exceeds_alphabet;
    }
    CHECK(small_bound);
}

TEST_CASE("rotation conjugates raising into lowering") {
    std::uint64_t state = 31;
    for (int trial = 0; trial < 200; ++trial) {
        const Biword b = ptab::random_biword(state);
        const Ptableau t = perf(b);
        const int m = b.top.n;
        const int n = t.n_rows();
        CHECK(rot(rot(t, m), m) == t);
        for (int i = 1; i + 1 <= n; ++i) {
            const auto lowered = ptab::crystal_ptab(t, i, ptab::Direction::Lower);
            const auto raised =
                ptab::crystal_ptab(rot(t, m), n - i, ptab::Direction::Raise);
            CHECK(lowered.has_value() == raised.has_value());
            if (lowered) CHECK(rot(*lowered, m) == *raised);
        }
    }
}

TEST_CASE("matrices count biword columns") {
    const Biword b = ptab::parse_biword("11122233/22133132");
    const ptab::IntMatrix m = to_matrix(b);
    CHECK(m == ptab::IntMatrix{{{1, 2, 0}, {1, 0, 2}, {0, 1, 1}}});
    CHECK(from_matrix(m) == b);
    CHECK(ptab::format_matrix(m) == "1 2 0\n1 0 2\n0 1 1");

    // transposing is the matrix image of swapping the biword rows
    const ptab::IntMatrix md = to_matrix(ptab::dual_biword(b));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) CHECK(md.a[j][i] == m.a[i][j]);

    // explicit bounds pad with zero rows and columns
    const ptab::IntMatrix wide = to_matrix(b, 4, 5);
    CHECK(wide.rows() == 4);
    CHECK(wide.cols() == 5);
    CHECK_THROWS_AS((void)to_matrix(b, 2, 3), ptab::error);

    std::uint64_t state = 555;
    for (int trial = 0; trial < 200; ++trial) {
        const Biword r = ptab::random_biword(state);
        CHECK(from_matrix(to_matrix(r)) == r);
    }
}

TEST_CASE("violations are scanned right to left with multiplicities") {
    const Ptableau t = pt(
        ". . 1 3\n"
        "1 1 . .\n"
        "2 2 3 .");
    // already right-justified: the scan finds the 3 in row 1 (nothing above it,
    // multiplicity 2), then the 3 in row 3 (a 1 above it, multiplicity 1)
    CHECK(ptab::format_layout(justify(t, ptab::Side::Right).grid()) ==
          ". . 1 3\n"
          "1 1 . .\n"
          "2 2 3 .");
    const auto report = violations(t);
    REQUIRE(report.entries.size() == 2);
    CHECK(report.entries[0].cell == ptab::CellRef{3, 1, 4});
    CHECK(report.entries[0].multiplicity == 2);
    CHECK(report.entries[1].cell == ptab::CellRef{3, 3, 3});
    CHECK(report.entries[1].multiplicity == 1);
    CHECK_FALSE(satisfies_word_condition(t));

    // each violation shows up as blanks over a cell of the dual
    const Ptableau d = dual_ptab(t);
    CHECK(d == Ptableau::from_rows({{1, 2, 2}, {3, 3}, {1, 3}}));
    const ptab::Grid dg = justify(d, ptab::Side::Left).grid();
    CHECK(ptab::format_layout(dg) ==
          ". 1 2 2\n"
          ". . 3 3\n"
          "1 3 . .");
    CHECK(blanks_above_cells(d) == 3);  // multiplicities 2 + 1
}

TEST_CASE("the word condition matches emptiness of the violation report") {
    const Ptableau big = pt(
        ". . . . . 1 1 1\n"
        ". . . . 1 . 2 2\n"
        ". 1 1 1 . 2 . .\n"
        "1 2 2 2 2 3 3 3\n"
        ". . . . . 4 4 4");
    CHECK(satisfies_word_condition(big));
    CHECK(violations(big).empty());
    const Ptableau dual_big = dual_ptab(big);
    CHECK(dual_big == Ptableau::from_rows({{1, 1, 1, 2, 3, 3, 3, 4},
                                           {2, 2, 3, 4, 4, 4, 4},
                                           {4, 4, 4},
                                           {5, 5, 5}}));
    CHECK(ptab::is_highest_weight(dual_big));

    std::uint64_t state = 8080;
    for (int trial = 0; trial < 300; ++trial) {
        const Biword b = ptab::random_biword(state);
        const Ptableau t = perf(b);
        const auto report = violations(t);
        const bool word_ok = satisfies_word_condition(t);
        CHECK(word_ok == report.empty());
        CHECK(word_ok == ptab::is_highest_weight(dual_ptab(t)));
        long long mult = 0;
        for (const auto& v : report.entries) mult += v.multiplicity;
        CHECK(mult == blanks_above_cells(dual_ptab(t)));
    }
}
