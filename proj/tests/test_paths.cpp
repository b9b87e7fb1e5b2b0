// Straightening sequences, evacuation, and the Lusztig involution.

#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ptabkit/check.hpp"
#include "ptabkit/crystal.hpp"
#include "ptabkit/duality.hpp"
#include "ptabkit/errors.hpp"
#include "ptabkit/io.hpp"
#include "ptabkit/paths.hpp"
#include "ptabkit/ptableau.hpp"
#include "ptabkit/rsk.hpp"

using ptab::Biword;
using ptab::CrystalOpSequence;
using ptab::LusztigMethod;
using ptab::Ptableau;

namespace {

Ptableau pt(const std::string& text) { return ptab::parse_ptableau(text); }

ptab::errc code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const ptab::error& e) {
        return e.code();
    }
    FAIL("expected a ptab::error");
    return ptab::errc::internal_inconsistency;
}

// the running example: an eleven-cell tableau on three rows
const char* kBiword = "11112334445/33112323223";

Ptableau running_example() { return perf(ptab::parse_biword(kBiword)); }

}  // namespace

TEST_CASE("the straightening table counts contents by row") {
    const Ptableau insertion = ptab_rsk(running_example()).pt;
    REQUIRE(insertion == Ptableau::from_rows({{1, 1}, {1, 1, 2, 2}, {1, 1, 2, 3, 3}}));

    const ptab::AlphaTable table = alpha_table(insertion);
    CHECK(table.alpha == ptab::IntMatrix{{{2, 2, 2}, {0, 2, 1}, {0, 0, 2}}});
    REQUIRE(table.beta.size() == 3);
    CHECK(table.beta[0] == std::vector<long long>{2, 2, 2});
    CHECK(table.beta[1] == std::vector<long long>{2, 4, 3});
    CHECK(table.beta[2] == std::vector<long long>{2, 4, 5});

    const CrystalOpSequence seq = e_star_sequence(insertion);
    CHECK(ptab::format_sequence(seq) == "e1^2 e2^3 e1^2");
    CHECK(seq.length() == 7);

    CHECK(alpha_table(Ptableau()).alpha.rows() == 0);
    CHECK(e_star_sequence(Ptableau()).empty());
    CHECK(code_of([] { (void)e_star_sequence(pt("2")); }) ==
          ptab::errc::word_condition_precondition);
}

TEST_CASE("the straightening sequence raises both tableaux to highest weight") {
    const Ptableau t = running_example();
    const ptab::RskPair pair = ptab_rsk(t);
    const CrystalOpSequence seq = e_star_sequence(pair.pt);

    // on the insertion tableau itself, factor by factor
    const Ptableau after_e1 = apply_sequence(pair.pt, ptab::parse_sequence("e1^2"));
    CHECK(after_e1 == Ptableau::from_rows({{1, 1, 1, 1}, {2, 2}, {1, 1, 2, 3, 3}}));
    const Ptableau after_e2 = apply_sequence(after_e1, ptab::parse_sequence("e2^3"));
    CHECK(after_e2 == Ptableau::from_rows({{1, 1, 1, 1}, {1, 1, 2, 2, 2}, {3, 3}}));
    const Ptableau straightened = apply_sequence(pair.pt, seq);
    CHECK(straightened ==
          Ptableau::from_rows({{1, 1, 1, 1, 1, 1}, {2, 2, 2}, {3, 3}}));
    CHECK(ptab::is_highest_weight(straightened));

    // on the running example, the same sequence lands on the recording tableau
    const Ptableau t_e1 = apply_sequence(t, ptab::parse_sequence("e1^2"));
    CHECK(t_e1 == Ptableau::from_rows({{1, 1, 4, 4}, {2, 3}, {1, 1, 3, 4, 5}}));
    const Ptableau t_e2 = apply_sequence(t_e1, ptab::parse_sequence("e2^3"));
    CHECK(t_e2 == Ptableau::from_rows({{1, 1, 4, 4}, {1, 1, 2, 3, 5}, {3, 4}}));
    CHECK(apply_sequence(t, seq) == pair.tmax);
    CHECK(apply_sequence(t, seq) == to_extreme(t, ptab::Extreme::Highest).node);
}

TEST_CASE("straightening matches the greedy walk on random tableaux") {
    std::uint64_t state = 606;
    for (int trial = 0; trial < 200; ++trial) {
        const Biword b = ptab::random_biword(state);
        const Ptableau t = perf(b);
        const ptab::RskPair pair = ptab_rsk(t);
        const CrystalOpSequence seq = e_star_sequence(pair.pt);
        CHECK(apply_sequence(t, seq) == pair.tmax);
        CHECK(apply_sequence(pair.pt, seq) ==
              to_extreme(pair.pt, ptab::Extreme::Highest).node);
    }
}

TEST_CASE("evacuation slides the highest weight down to the lowest") {
    const Ptableau start = Ptableau::from_rows({{1, 1, 2, 2, 3, 4}, {2, 3, 3, 4}, {3, 4, 5}});
    const Ptableau slid = evacuate(start);
    CHECK(slid == Ptableau::from_rows({{1, 2, 3}, {2, 2, 3, 4}, {1, 3, 3, 4, 4, 5}}));
    CHECK(ptab::is_lowest_weight(slid));
    CHECK(weight(slid) == ptab::Weight{3, 4, 6});  // reverse of (6, 4, 3)

    const Ptableau tmax = ptab_rsk(running_example()).tmax;
    const Ptableau tmin = evacuate(tmax);
    CHECK(tmin == Ptableau::from_rows({{1, 1}, {2, 3, 4}, {1, 1, 3, 4, 4, 5}}));
    CHECK(ptab::is_lowest_weight(tmin));
    CHECK(weight(tmax) == ptab::Weight{6, 3, 2});
    CHECK(weight(tmin) == ptab::Weight{2, 3, 6});

    CHECK(evacuate(pt("1 2")) == pt("1 2"));  // one row: already lowest
    CHECK(evacuate(Ptableau()) == Ptableau());
    CHECK(code_of([] { (void)evacuate(pt(".\n1")); }) ==
          ptab::errc::highest_weight_precondition);
}

TEST_CASE("evacuation agrees with the greedy walk on random components") {
    std::uint64_t state = 11011;
    for (int trial = 0; trial < 200; ++trial) {
        const Biword b = ptab::random_biword(state);
        const Ptableau tmax = ptab_rsk(b).tmax;
        CHECK(evacuate(tmax) == to_extreme(tmax, ptab::Extreme::Lowest).node);
    }
}

TEST_CASE("rotation carries the lowest vertex to the mirror highest") {
    const Ptableau t = running_example();
    const ptab::RskPair pair = ptab_rsk(t);
    const Ptableau tmin = evacuate(pair.tmax);

    const Ptableau mirror_high = rot(tmin, 5);
    CHECK(mirror_high == Ptableau::from_rows({{1, 2, 2, 3, 5, 5}, {2, 3, 4}, {5, 5}}));
    CHECK(ptab::is_highest_weight(mirror_high));

    const Ptableau mirror_node = rsk_inverse(make_rsk_pair(pair.pt, mirror_high));
    CHECK(mirror_node == Ptableau::from_rows({{2, 3}, {1, 3, 4, 5}, {2, 2, 5, 5, 5}}));
    CHECK(rot(mirror_node, 5) ==
          Ptableau::from_rows({{1, 1, 1, 4, 4}, {1, 2, 3, 5}, {3, 4}}));
}

TEST_CASE("the involution agrees across both constructions") {
    const Ptableau t = running_example();
    const Ptableau mirrored = Ptableau::from_rows({{1, 1, 1, 4, 4}, {1, 2, 3, 5}, {3, 4}});

    CHECK(lusztig(t) == mirrored);
    CHECK(lusztig(t, LusztigMethod::Uninsert) == mirrored);
    CHECK(lusztig(t, LusztigMethod::EStar) == mirrored);
    CHECK(lusztig(mirrored) == t);

    CHECK(weight(t) == ptab::Weight{2, 4, 5});
    CHECK(weight(mirrored) == ptab::Weight{5, 4, 2});

    // the complemented straightening sequence drives the EStar construction
    const CrystalOpSequence seq = e_star_sequence(ptab_rsk(t).pt);
    const CrystalOpSequence mirror_seq = reversed_complement(seq, 3);
    CHECK(ptab::format_sequence(mirror_seq) == "e2^2 e1^3 e2^2");
    const Ptableau tmin = evacuate(ptab_rsk(t).tmax);
    CHECK(apply_sequence(tmin, mirror_seq) == mirrored);

    // highest maps to lowest and back
    CHECK(lusztig(ptab_rsk(t).tmax, LusztigMethod::Both, 5) == tmin);
    CHECK(lusztig(tmin, LusztigMethod::Both, 5) == ptab_rsk(t).tmax);

    CHECK(lusztig(Ptableau()) == Ptableau());
}

TEST_CASE("reversed complements expand, flip, and relabel") {
    const CrystalOpSequence seq = ptab::parse_sequence("e1 e2^2 e1");
    CHECK(ptab::format_sequence(reversed_complement(seq, 4)) == "e3 e2^2 e3");
    CHECK(reversed_complement(CrystalOpSequence{}, 3).empty());

    // applying twice restores the original expanded order
    const CrystalOpSequence twice = reversed_complement(reversed_complement(seq, 4), 4);
    CHECK(ptab::format_sequence(twice) == "e1 e2^2 e1");
}

TEST_CASE("involution laws hold on random tableaux") {
    std::uint64_t state = 424242;
    for (int trial = 0; trial < 120; ++trial) {
        const Biword b = ptab::random_biword(state);
        const Ptableau t = perf(b);
        const int m = b.top.n;
        const int n = t.n_rows();

        const Ptableau mirrored = lusztig(t, LusztigMethod::Both, m);
        CHECK(lusztig(mirrored, LusztigMethod::Both, m) == t);
        CHECK(lusztig(t, LusztigMethod::Uninsert, m) ==
              lusztig(t, LusztigMethod::EStar, m));

        const ptab::Weight fwd = weight(t);
        ptab::Weight rev = weight(mirrored);
        std::reverse(rev.begin(), rev.end());
        CHECK(fwd == rev);

        // the defining intertwining: raising mirrors to lowering
        for (int i = 1; i + 1 <= n; ++i) {
            const auto raised = ptab::crystal_ptab(t, i, ptab::Direction::Raise);
            if (!raised) continue;
            CHECK(lusztig(*raised, LusztigMethod::Both, m) ==
                  ptab::crystal_ptab(mirrored, n - i, ptab::Direction::Lower).value());
        }
    }
}
