#include "ptabkit/check.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ptabkit/crystal.hpp"
#include "ptabkit/duality.hpp"
#include "ptabkit/io.hpp"
#include "ptabkit/paths.hpp"
#include "ptabkit/rsk.hpp"

namespace ptab {

std::uint64_t rng_next(std::uint64_t& state) {
    if (state == 0) state = 0x9E3779B97F4A7C15ull;
    state ^= state >> 12;
    state ^= state << 25;
    state ^= state >> 27;
    return state * 0x2545F4914F6CDD1Dull;
}

Biword random_biword(std::uint64_t& state) {
    const int k = int(rng_next(state) % 11);        // 0..10 columns
    const int m = 1 + int(rng_next(state) % 5);     // top alphabet
    const int n = 1 + int(rng_next(state) % 5);     // bottom alphabet
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(std::size_t(k));
    for (int j = 0; j < k; ++j)
        pairs.push_back({1 + int(rng_next(state) % std::uint64_t(m)),
                         1 + int(rng_next(state) % std::uint64_t(n))});
    return standardize(std::move(pairs), m, n);
}

namespace {

struct Ctx {
    const Biword& b;
    std::uint64_t salt;  // per-instance randomness for sampled sub-checks
    long long* assertions;
    bool ok = true;
    std::string failed;

    void require(bool cond, const std::string& prop) {
        ++*assertions;
        if (ok && !cond) {
            ok = false;
            failed = prop;
        }
    }
};

// Equality of tableaux that may disagree on trailing blank rows.
bool same_tableau(const Ptableau& a, const Ptableau& b) {
    auto ra = a.row_multisets();
    auto rb = b.row_multisets();
    while (!ra.empty() && ra.back().empty()) ra.pop_back();
    while (!rb.empty() && rb.back().empty()) rb.pop_back();
    return ra == rb;
}

// The minimal highest-weight tableau with the content distribution of t:
// mu_c copies of c in row c.
Ptableau t_mu_of(const Ptableau& t) {
    const int m = t.max_content();
    std::vector<std::vector<int>> rows(std::size_t(std::max(m, 1)));
    for (const auto& cell : t.cells())
        rows[std::size_t(cell.content) - 1].push_back(cell.content);
    return Ptableau::from_rows(std::move(rows), std::max(t.n_rows(), m));
}

std::vector<long long> shape_of(const Ptableau& t) {
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
}

void suite_rsk(Ctx& ctx) {
    const Biword& b = ctx.b;
    const Ptableau t = perf(b);
    ctx.require(bw(t).top.letters == b.top.letters && bw(t).bottom.letters == b.bottom.letters,
                "bw(perf(b)) recovers b");

    const auto steps = ptab_rsk_steps(b);
    const RskPair pair = ptab_rsk(b);
    ctx.require(satisfies_word_condition(pair.pt), "insertion half satisfies the word condition");
    ctx.require(is_highest_weight(pair.tmax), "recording half is highest weight");
    ctx.require(rsk_inverse(pair) == t, "rsk_inverse(ptab_rsk(T)) == T");

    const SsytPair classic = classic_rsk(b);
    ctx.require(pair.tmax == classic.q, "Tmax equals the classic recording tableau");
    ctx.require(same_tableau(pair.pt, dual_ptab(classic.p)),
                "PT equals the dual of the classic insertion tableau");
    ctx.require(to_extreme(t, Extreme::Highest).node == pair.tmax,
                "Tmax is the highest-weight vertex of T's component");

    const SsytPair swapped = classic_rsk(dual_biword(b));
    ctx.require(same_tableau(swapped.p, classic.q) && same_tableau(swapped.q, classic.p),
                "the classic pair swaps under biword duality");

    Word etas = eta_word(pair.tmax);
    std::vector<int> collected;
    for (const auto& step : steps) collected.push_back(step.eta);
    ctx.require(etas.letters == collected, "eta word reads off the recording tableau");

    // step-by-step: the dual of the insertion half evolves by classic column
    // insertion of the row letters, growing row eta each time
    Ptableau dual_running = dual_ptab(Ptableau::from_rows({}, std::max(b.bottom.n, 1)));
    bool dual_steps_ok = true;
    bool grow_ok = true;
    for (const auto& step : steps) {
        const auto before = shape_of(dual_running);
        dual_running = column_insert(dual_running, step.omega);
        const auto after = shape_of(dual_running);
        int grown_row = 0;
        for (std::size_t r = 0; r < after.size(); ++r)
            if (r >= before.size() || after[r] != before[r]) {
                grown_row = int(r) + 1;
                break;
            }
        if (grown_row != step.eta) grow_ok = false;
        if (!same_tableau(dual_running, dual_ptab(step.pt_after))) dual_steps_ok = false;
    }
    ctx.require(dual_steps_ok, "each insertion step dualizes to a classic column insertion");
    ctx.require(grow_ok, "the classic growth row equals the bumping value");
}

void suite_duality(Ctx& ctx) {
    const Biword& b = ctx.b;
    const Ptableau t = perf(b);
    const int n = t.n_rows();
    const int m = b.top.n;

    ctx.require(same_tableau(dual_ptab(dual_ptab(t)), t), "dual_ptab is an involution");
    ctx.require(dual_ptab(t) == perf(dual_biword(bw(t))),
                "dual_ptab agrees with biword duality");
    ctx.require(rot(rot(t, m), m) == t, "rot is an involution");
    ctx.require(justify(t, Side::Left).n_cols() == justify(t, Side::Right).n_cols(),
                "both justified layouts have the class width");
    ctx.require(dual_ptab(t).n_cols() == t.n_cols(), "duality preserves the width");

    const IntMatrix mat = to_matrix(b);
    Biword back = from_matrix(mat);
    ctx.require(back.top.letters == b.top.letters && back.bottom.letters == b.bottom.letters,
                "from_matrix(to_matrix(b)) == b");
    IntMatrix transposed;
    transposed.a.assign(mat.cols(), std::vector<long long>(mat.rows(), 0));
    for (std::size_t i = 0; i < mat.rows(); ++i)
        for (std::size_t j = 0; j < mat.cols(); ++j) transposed.a[j][i] = mat.a[i][j];
    ctx.require(to_matrix(dual_biword(b)) == transposed,
                "biword duality transposes the matrix");

    // rotation conjugates raising to lowering with complemented index
    if (n >= 2) {
        const int i = 1 + int(rng_next(ctx.salt) % std::uint64_t(n - 1));
        auto lowered = crystal_ptab(t, n - i, Direction::Lower);
        auto raised_rot = crystal_ptab(rot(t, m), i, Direction::Raise);
        ctx.require(lowered.has_value() == raised_rot.has_value(),
                    "rot matches nullity of the mirrored operator");
        if (lowered && raised_rot)
            ctx.require(rot(*lowered, m) == *raised_rot, "rot conjugates lower to raise");
    }

    // the four equivalent descriptions of straightness
    const bool wc = satisfies_word_condition(t);
    const bool no_viol = violations(t).empty();
    const bool dual_hw = is_highest_weight(dual_ptab(t));
    const bool already_straight = to_extreme(t, Extreme::Highest).node == t_mu_of(t);
    ctx.require(wc == no_viol && wc == dual_hw && wc == already_straight,
                "word condition, violations, dual highest weight and straightening agree");

    // violations pair off with under-shot cells of the left-justified dual
    const Grid right = justify(t, Side::Right).grid();
    const int width = right.empty() ? 0 : int(right[0].size());
    const Grid dual_left = justify(dual_ptab(t), Side::Left).grid();
    const int dual_width = dual_left.empty() ? 0 : int(dual_left[0].size());
    bool pairing = width == dual_width;
    long long blanks_total = 0;
    if (pairing)
        for (const auto& v : violations(t).entries) {
            const int j = width - v.cell.col + 1;
            const int s = v.cell.content;  // dual row
            const int k = v.cell.row;      // dual content
            if (s > int(dual_left.size()) || j > dual_width ||
                dual_left[std::size_t(s) - 1][std::size_t(j) - 1] != Box{k}) {
                pairing = false;
                break;
            }
            long long blanks = 0;
            for (int r = s - 1; r >= 1 && !dual_left[std::size_t(r) - 1][std::size_t(j) - 1];
                 --r)
                ++blanks;
            if (blanks != v.multiplicity) {
                pairing = false;
                break;
            }
            blanks_total += blanks;
        }
    ctx.require(pairing, "each violation marks a dual cell under that many blanks");
    // and the pairing is onto: blanks above content across the whole dual
    // are exactly the violation multiplicities
    long long dual_blanks = 0;
    for (int c = 1; c <= dual_width; ++c) {
        int run = 0;
        for (std::size_t r = 0; r < dual_left.size(); ++r) {
            if (!dual_left[r][std::size_t(c) - 1])
                ++run;
            else {
                dual_blanks += run;
                run = 0;
            }
        }
    }
    long long mult_total = 0;
    for (const auto& v : violations(t).entries) mult_total += v.multiplicity;
    ctx.require(dual_blanks == mult_total,
                "violation multiplicities account for every blank above content");
}

void suite_crystal(Ctx& ctx) {
    const Biword& b = ctx.b;
    const Ptableau t = perf(b);
    const int n = t.n_rows();

    for (int i = 1; i < n; ++i) {
        const WordSignature sig = signature(b.bottom, i);
        const EpsPhi ep = eps_phi(t, i);
        ctx.require(ep.eps == sig.eps && ep.phi == sig.phi,
                    "grid eps/phi match the word signature");
        for (Direction dir : {Direction::Raise, Direction::Lower}) {
            auto moved_t = crystal_ptab(t, i, dir);
            auto moved_b = crystal_biword(b, i, dir);
            ctx.require(moved_t.has_value() == moved_b.has_value(),
                        "grid and word operators are null together");
            if (moved_t && moved_b)
                ctx.require(*moved_t == perf(*moved_b), "perf intertwines the operators");
            if (moved_t) {
                auto back = crystal_ptab(*moved_t, i,
                                         dir == Direction::Raise ? Direction::Lower
                                                                 : Direction::Raise);
                ctx.require(back.has_value() && *back == t, "raise and lower invert each other");
                // seminormality: one application shifts the counters by one
                const EpsPhi ep2 = eps_phi(*moved_t, i);
                const long long deps = dir == Direction::Raise ? -1 : 1;
                ctx.require(ep2.eps == ep.eps + deps && ep2.phi == ep.phi - deps,
                            "eps/phi step by one under the operators");
                // weight moves between the two tracked rows only
                Weight before = weight(t), after = weight(*moved_t);
                before[std::size_t(i) - 1] += dir == Direction::Raise ? 1 : -1;
                before[std::size_t(i)] += dir == Direction::Raise ? -1 : 1;
                ctx.require(after == before, "operators move one cell between adjacent rows");
            }
        }
    }

    auto hw = to_extreme(t, Extreme::Highest);
    ctx.require(is_highest_weight(hw.node), "raising terminates at highest weight");
    ctx.require(apply_sequence(t, hw.path) == hw.node, "the recorded path replays");
    auto lw = to_extreme(t, Extreme::Lowest);
    ctx.require(is_lowest_weight(lw.node), "lowering terminates at lowest weight");

    // a valid extension commutes with raising to highest weight: the raised
    // tableau extends by the same content in some row
    const int c = 1 + int(rng_next(ctx.salt) % std::uint64_t(b.top.n));
    const int r = 1 + int(rng_next(ctx.salt) % std::uint64_t(std::max(n, 1)));
    try {
        const Ptableau extended = extend(t, c, r);
        const Ptableau hw_ext = to_extreme(extended, Extreme::Highest).node;
        bool matches = false;
        for (int rr = 1; rr <= hw_ext.n_rows() && !matches; ++rr) {
            try {
                matches = extend(hw.node, c, rr) == hw_ext;
            } catch (const error&) {
            }
        }
        ctx.require(matches, "the highest weight of an extension extends the highest weight");
    } catch (const error& e) {
        ctx.require(e.code() == errc::invalid_extension, "extension only throws its own error");
    }
}

void suite_lusztig(Ctx& ctx) {
    const Biword& b = ctx.b;
    const Ptableau t = perf(b);
    const int n = t.n_rows();
    const int m = b.top.n;

    const RskPair pair = ptab_rsk(b);
    const Ptableau tmin = evacuate(pair.tmax);
    ctx.require(is_lowest_weight(tmin), "evacuation lands on lowest weight");
    ctx.require(tmin == to_extreme(pair.tmax, Extreme::Lowest).node,
                "evacuation agrees with greedy lowering");

    const CrystalOpSequence estar = e_star_sequence(pair.pt);
    ctx.require(apply_sequence(pair.pt, estar) == t_mu_of(pair.pt),
                "the straightening sequence straightens its own tableau");
    ctx.require(apply_sequence(t, estar) == pair.tmax,
                "the straightening sequence raises T to Tmax");

    const Ptableau s_un = lusztig(t, LusztigMethod::Uninsert, m);
    const Ptableau s_es = lusztig(t, LusztigMethod::EStar, m);
    ctx.require(s_un == s_es, "both mirror constructions agree");
    const Ptableau s = lusztig(t, LusztigMethod::Both, m);
    ctx.require(lusztig(s, LusztigMethod::Both, m) == t, "the mirror is an involution");

    Weight wt = weight(t), ws = weight(s);
    std::reverse(wt.begin(), wt.end());
    ctx.require(ws == wt, "the mirror reverses weights");

    // independent path characterization: any raising path to the top,
    // reversed and complemented, lowers the mirror from the bottom
    const auto hw = to_extreme(t, Extreme::Highest);
    ctx.require(apply_sequence(tmin, reversed_complement(hw.path, n)) == s,
                "the mirror satisfies the defining edge-reversal rule");
}

using SuiteFn = void (*)(Ctx&);

const std::vector<std::pair<std::string, SuiteFn>>& all_suites() {
    static const std::vector<std::pair<std::string, SuiteFn>> suites = {
        {"rsk", suite_rsk},
        {"duality", suite_duality},
        {"crystal", suite_crystal},
        {"lusztig", suite_lusztig},
    };
    return suites;
}

// Runs one suite on one instance; exceptions count as failures.
bool run_one(SuiteFn fn, const Biword& b, std::uint64_t salt, long long* assertions,
             std::string* failed) {
    Ctx ctx{b, salt, assertions};
    try {
        fn(ctx);
    } catch (const std::exception& e) {
        ctx.ok = false;
        ctx.failed = std::string("unexpected exception: ") + e.what();
    }
    if (!ctx.ok && failed) *failed = ctx.failed;
    return ctx.ok;
}

Biword drop_column(const Biword& b, std::size_t j) {
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t c = 0; c < b.size(); ++c)
        if (c != j) pairs.push_back({b.top.letters[c], b.bottom.letters[c]});
    return standardize(std::move(pairs), b.top.n, b.bottom.n);
}

}  // namespace

CheckReport run_checks(const CheckOptions& opts, std::ostream& out) {
    std::vector<std::pair<std::string, SuiteFn>> selected;
    for (const auto& entry : all_suites())
        if (opts.suite == "all" || opts.suite == entry.first) selected.push_back(entry);
    if (selected.empty())
        throw error(errc::check_failure, "unknown suite \"" + opts.suite +
                                             "\" (expected all, rsk, duality, crystal or "
                                             "lusztig)");

    CheckReport report;
    for (const auto& [name, fn] : selected) {
        std::uint64_t state = opts.seed;
        for (long long i = 0; i < opts.count; ++i) {
            const Biword b = random_biword(state);
            std::uint64_t salt = rng_next(state);
            ++report.instances;
            std::string failed;
            if (run_one(fn, b, salt, &report.assertions, &failed)) continue;

            // shrink: drop columns while some check in the suite still fails
            Biword witness = b;
            bool improved = true;
            while (improved && witness.size() > 0) {
                improved = false;
                for (std::size_t j = 0; j < witness.size(); ++j) {
                    Biword candidate = drop_column(witness, j);
                    long long scratch = 0;
                    std::string candidate_failed;
                    std::uint64_t candidate_salt = salt;
                    if (!run_one(fn, candidate, candidate_salt, &scratch, &candidate_failed)) {
                        witness = candidate;
                        failed = candidate_failed;
                        improved = true;
                        break;
                    }
                }
            }
            report.ok = false;
            report.failed_suite = name;
            report.failed_property = failed;
            report.reproducer = format_biword(witness);
            out << "FAIL suite=" << name << " property=\"" << failed << "\"\n";
            out << "  seed=" << opts.seed << " instance=" << i << "\n";
            out << "  reproducer: " << report.reproducer << "\n";
            return report;
        }
        if (opts.verbose)
            out << "suite " << name << ": " << opts.count << " instances ok\n";
    }
    out << "checks passed: " << report.instances << " instances, " << report.assertions
        << " assertions\n";
    return report;
}

}  // namespace ptab
