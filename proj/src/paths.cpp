#include "ptabkit/paths.hpp"

#include <algorithm>
#include <string>

namespace ptab {

AlphaTable alpha_table(const Ptableau& pt) {
    const int n = pt.n_rows();
    const int m = pt.max_content();
    AlphaTable table;
    table.alpha.a.assign(std::size_t(m), std::vector<long long>(std::size_t(n), 0));
    for (const auto& cell : pt.cells())
        ++table.alpha.a[std::size_t(cell.content) - 1][std::size_t(cell.row) - 1];
    table.beta.assign(std::size_t(n), std::vector<long long>(std::size_t(n), 0));
    for (int s = 1; s <= n; ++s)
        for (int t = 1; t <= n; ++t) {
            long long total = 0;
            for (int i = 1; i <= std::min(s, m); ++i)
                total += table.alpha.a[std::size_t(i) - 1][std::size_t(t) - 1];
            table.beta[std::size_t(s) - 1][std::size_t(t) - 1] = total;
        }
    return table;
}

CrystalOpSequence e_star_sequence(const Ptableau& pt) {
    if (!satisfies_word_condition(pt))
        throw error(errc::word_condition_precondition,
                    "straightening sequences are defined for word-condition tableaux");
    const int n = pt.n_rows();
    AlphaTable table = alpha_table(pt);
    CrystalOpSequence seq;
    for (int l = 1; l <= n - 1; ++l)
        for (int s = 1; s <= n - l; ++s) {
            const long long exponent = table.beta[std::size_t(s) - 1][std::size_t(s + l) - 1];
            if (exponent > 0) seq.steps.push_back({s, Direction::Raise, exponent});
        }
    return seq;
}

CrystalOpSequence reversed_complement(const CrystalOpSequence& seq, int n) {
    std::vector<OpStep> expanded;
    for (const auto& step : seq.steps) {
        if (step.index < 1 || step.index > n - 1)
            throw error(errc::index_out_of_range,
                        "operator index " + std::to_string(step.index) +
                            " cannot be complemented within [1, " + std::to_string(n - 1) + "]");
        for (long long rep = 0; rep < step.exponent; ++rep)
            expanded.push_back({n - step.index, step.dir, 1});
    }
    std::reverse(expanded.begin(), expanded.end());
    CrystalOpSequence out;
    for (const auto& step : expanded) {
        if (!out.steps.empty() && out.steps.back().index == step.index &&
            out.steps.back().dir == step.dir)
            ++out.steps.back().exponent;
        else
            out.steps.push_back(step);
    }
    return out;
}

namespace {

bool filled(const Grid& g, int r, int c) {
    return r >= 1 && c >= 1 && r <= int(g.size()) && c <= int(g[0].size()) &&
           g[std::size_t(r) - 1][std::size_t(c) - 1].has_value();
}

}  // namespace

Ptableau evacuate(const Ptableau& tmax) {
    if (!is_highest_weight(tmax))
        throw error(errc::highest_weight_precondition, "evacuation starts from highest weight");
    Grid g = justify(tmax, Side::Left).grid();
    if (g.empty() || g[0].empty()) return tmax;
    const int R = int(g.size());
    const int W = int(g[0].size());
    for (;;) {
        // first outer corner in row-major order: an empty box whose right and
        // below neighbours are empty or off-grid, with content above or left
        int hr = 0, hc = 0;
        for (int r = 1; r <= R && hr == 0; ++r)
            for (int c = 1; c <= W; ++c) {
                if (filled(g, r, c) || filled(g, r, c + 1) || filled(g, r + 1, c)) continue;
                if (filled(g, r - 1, c) || filled(g, r, c - 1)) {
                    hr = r;
                    hc = c;
                    break;
                }
            }
        if (hr == 0) break;
        // slide the hole inward, taking the larger of the contents above and
        // left of it (ties to the one above), until neither exists
        while (filled(g, hr - 1, hc) || filled(g, hr, hc - 1)) {
            const int up = filled(g, hr - 1, hc) ? *g[std::size_t(hr) - 2][std::size_t(hc) - 1]
                                                 : -1;
            const int left = filled(g, hr, hc - 1) ? *g[std::size_t(hr) - 1][std::size_t(hc) - 2]
                                                   : -1;
            const bool take_up = up >= left;
            const int fr = take_up ? hr - 1 : hr;
            const int fc = take_up ? hc : hc - 1;
            std::swap(g[std::size_t(hr) - 1][std::size_t(hc) - 1],
                      g[std::size_t(fr) - 1][std::size_t(fc) - 1]);
            hr = fr;
            hc = fc;
        }
    }
    return justify(Ptableau::validate(std::move(g)), Side::Left);
}

namespace {

Ptableau lusztig_uninsert(const RskPair& pair, const Ptableau& tmin, int m) {
    return rot(rsk_inverse({pair.pt, rot(tmin, m)}), m);
}

Ptableau lusztig_estar(const RskPair& pair, const Ptableau& tmin, int n) {
    return apply_sequence(tmin, reversed_complement(e_star_sequence(pair.pt), n));
}

}  // namespace

Ptableau lusztig(const Ptableau& t, LusztigMethod method, int m) {
    if (m == 0) m = std::max(t.max_content(), 1);
    if (t.max_content() > m)
        throw error(errc::content_exceeds_alphabet,
                    "content " + std::to_string(t.max_content()) + " exceeds the alphabet bound " +
                        std::to_string(m));
    RskPair pair = ptab_rsk(t);
    Ptableau tmin = evacuate(pair.tmax);
    switch (method) {
        case LusztigMethod::Uninsert:
            return lusztig_uninsert(pair, tmin, m);
        case LusztigMethod::EStar:
            return lusztig_estar(pair, tmin, t.n_rows());
        case LusztigMethod::Both:
            break;
    }
    Ptableau a = lusztig_uninsert(pair, tmin, m);
    Ptableau b = lusztig_estar(pair, tmin, t.n_rows());
    if (a != b)
        throw error(errc::method_disagreement,
                    "un-insertion and straightening produced different mirrors");
    return a;
}

}  // namespace ptab
