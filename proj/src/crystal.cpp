#include "ptabkit/crystal.hpp"

#include <algorithm>
#include <string>

namespace ptab {

namespace {

// Blanks in row `row` (1-based) of a layout; in a two-row tableau with no
// all-blank columns every such blank faces a cell in the other row.
long long blanks_in_row(const Grid& grid, int row) {
    long long count = 0;
    for (const auto& b : grid[std::size_t(row) - 1])
        if (!b) ++count;
    return count;
}

void check_index(const Ptableau& t, int i) {
    if (i < 1 || i >= t.n_rows())
        throw error(errc::index_out_of_range, "operator index " + std::to_string(i) +
                                                  " outside [1, " + std::to_string(t.n_rows() - 1) +
                                                  "]");
}

}  // namespace

EpsPhi eps_phi(const Ptableau& t, int i) {
    check_index(t, i);
    Ptableau two = restrict_rows(t, i);
    EpsPhi out;
    out.eps = blanks_in_row(justify(two, Side::Left).grid(), 1);
    out.phi = blanks_in_row(justify(two, Side::Right).grid(), 2);
    return out;
}

std::optional<Ptableau> crystal_ptab(const Ptableau& t, int i, Direction dir) {
    check_index(t, i);
    const Ptableau two = restrict_rows(t, i);
    const Side side = dir == Direction::Raise ? Side::Left : Side::Right;
    const Grid two_grid = justify(two, side).grid();
    const int W2 = two_grid.empty() ? 0 : int(two_grid[0].size());

    // In the justified restriction, cells able to move sit in the source row
    // (bottom for raising, top for lowering) facing a blank in the other
    // row.  Raising moves the rightmost such cell up; lowering, mirrored,
    // moves the leftmost such cell down.  The cell is carried over to the
    // full tableau by its rank within its row: ranks count from the left in
    // left-justified layouts and from the right in right-justified ones, so
    // that matching ranks name cells with equal content.
    const int source_row = dir == Direction::Raise ? 2 : 1;
    int rank = 0;
    int chosen_rank = 0;
    auto col_at = [&](int pos) { return side == Side::Left ? pos : W2 - 1 - pos; };
    for (int pos = 0; pos < W2; ++pos) {
        const int c = col_at(pos);
        if (!two_grid[std::size_t(source_row) - 1][std::size_t(c)]) continue;
        ++rank;
        if (!two_grid[std::size_t(3 - source_row) - 1][std::size_t(c)]) chosen_rank = rank;
    }
    if (chosen_rank == 0) return std::nullopt;

    Grid full = justify(t, side).grid();
    const int W = full.empty() ? 0 : int(full[0].size());
    const int from_row = dir == Direction::Raise ? i + 1 : i;
    const int to_row = dir == Direction::Raise ? i : i + 1;
    int seen = 0;
    for (int pos = 0; pos < W; ++pos) {
        const int c = side == Side::Left ? pos : W - 1 - pos;
        if (!full[std::size_t(from_row) - 1][std::size_t(c)]) continue;
        if (++seen < chosen_rank) continue;
        if (full[std::size_t(to_row) - 1][std::size_t(c)])
            throw error(errc::invalid_result,
                        "the moving cell at (" + std::to_string(from_row) + ", " +
                            std::to_string(c + 1) + ") faces an occupied box");
        std::swap(full[std::size_t(from_row) - 1][std::size_t(c)],
                  full[std::size_t(to_row) - 1][std::size_t(c)]);
        break;
    }
    try {
        return justify(Ptableau::validate(std::move(full)), Side::Left);
    } catch (const error& e) {
        throw error(errc::invalid_result,
                    std::string("moved grid failed validation (") + e.what() + ")");
    }
}

bool is_highest_weight(const Ptableau& t) {
    for (int i = 1; i < t.n_rows(); ++i)
        if (eps_phi(t, i).eps != 0) return false;
    return true;
}

bool is_lowest_weight(const Ptableau& t) {
    for (int i = 1; i < t.n_rows(); ++i)
        if (eps_phi(t, i).phi != 0) return false;
    return true;
}

long long CrystalOpSequence::length() const {
    long long total = 0;
    for (const auto& s : steps) total += s.exponent;
    return total;
}

namespace {

void append_step(CrystalOpSequence& seq, int index, Direction dir) {
    if (!seq.steps.empty() && seq.steps.back().index == index && seq.steps.back().dir == dir)
        ++seq.steps.back().exponent;
    else
        seq.steps.push_back({index, dir, 1});
}

template <typename Value, typename Op>
Value apply_sequence_impl(Value value, const CrystalOpSequence& seq, Op&& op) {
    for (std::size_t s = 0; s < seq.steps.size(); ++s) {
        const auto& step = seq.steps[s];
        for (long long rep = 0; rep < step.exponent; ++rep) {
            auto next = op(value, step.index, step.dir);
            if (!next)
                throw error(errc::null_step,
                            std::string(step.dir == Direction::Raise ? "e" : "f") +
                                std::to_string(step.index) + " is null at repetition " +
                                std::to_string(rep + 1) + " of step " + std::to_string(s + 1));
            value = std::move(*next);
        }
    }
    return value;
}

template <typename Value, typename EpsOf, typename Op>
std::pair<Value, CrystalOpSequence> to_extreme_impl(Value value, Extreme which, int index_count,
                                                    EpsOf&& remaining, Op&& op) {
    const Direction dir = which == Extreme::Highest ? Direction::Raise : Direction::Lower;
    CrystalOpSequence path;
    for (;;) {
        int chosen = 0;
        for (int i = 1; i <= index_count; ++i)
            if (remaining(value, i) > 0) { chosen = i; break; }
        if (chosen == 0) break;
        auto next = op(value, chosen, dir);
        if (!next)
            throw error(errc::internal_inconsistency,
                        "operator reported applicable but returned null");
        value = std::move(*next);
        append_step(path, chosen, dir);
    }
    return {std::move(value), std::move(path)};
}

}  // namespace

Ptableau apply_sequence(const Ptableau& t, const CrystalOpSequence& seq) {
    return apply_sequence_impl(t, seq, [](const Ptableau& x, int i, Direction d) {
        return crystal_ptab(x, i, d);
    });
}

Word apply_sequence(const Word& w, const CrystalOpSequence& seq) {
    return apply_sequence_impl(w, seq, [](const Word& x, int i, Direction d) {
        return crystal_word(x, i, d);
    });
}

Biword apply_sequence(const Biword& b, const CrystalOpSequence& seq) {
    return apply_sequence_impl(b, seq, [](const Biword& x, int i, Direction d) {
        return crystal_biword(x, i, d);
    });
}

ExtremeResult to_extreme(const Ptableau& t, Extreme which) {
    auto [node, path] = to_extreme_impl(
        t, which, t.n_rows() - 1,
        [&](const Ptableau& x, int i) {
            auto ep = eps_phi(x, i);
            return which == Extreme::Highest ? ep.eps : ep.phi;
        },
        [](const Ptableau& x, int i, Direction d) { return crystal_ptab(x, i, d); });
    return {std::move(node), std::move(path)};
}

ExtremeWordResult to_extreme(const Word& w, Extreme which) {
    auto [node, path] = to_extreme_impl(
        w, which, std::max(w.n - 1, 0),
        [&](const Word& x, int i) {
            auto sig = signature(x, i);
            return which == Extreme::Highest ? sig.eps : sig.phi;
        },
        [](const Word& x, int i, Direction d) { return crystal_word(x, i, d); });
    return {std::move(node), std::move(path)};
}

ExtremeBiwordResult to_extreme(const Biword& b, Extreme which) {
    auto [node, path] = to_extreme_impl(
        b, which, std::max(b.bottom.n - 1, 0),
        [&](const Biword& x, int i) {
            auto sig = signature(x.bottom, i);
            return which == Extreme::Highest ? sig.eps : sig.phi;
        },
        [](const Biword& x, int i, Direction d) { return crystal_biword(x, i, d); });
    return {std::move(node), std::move(path)};
}

}  // namespace ptab
