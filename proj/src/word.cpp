#include "ptabkit/word.hpp"

#include <algorithm>
#include <string>

namespace ptab {

Word make_word(std::vector<int> letters, int n) {
    int derived = 0;
    for (int l : letters) {
        if (l < 1) throw error(errc::invalid_box, "letters must be positive, got " + std::to_string(l));
        derived = std::max(derived, l);
    }
    if (n == 0) n = derived;
    if (n < derived)
        throw error(errc::bound_violation, "alphabet bound " + std::to_string(n) +
                                               " smaller than letter " + std::to_string(derived));
    return Word{std::move(letters), n};
}

Weight word_weight(const Word& w) {
    Weight wt(std::size_t(std::max(w.n, 0)), 0);
    for (int l : w.letters) ++wt[std::size_t(l) - 1];
    return wt;
}

WordSignature signature(const Word& w, int i) {
    if (i < 1 || i >= std::max(w.n, 1))
        throw error(errc::index_out_of_range, "operator index " + std::to_string(i) +
                                                  " outside [1, " + std::to_string(w.n - 1) + "]");
    WordSignature sig;
    sig.i = i;
    const std::size_t k = w.size();
    sig.ce.resize(k);
    sig.cf.resize(k);
    long long run = 0;
    for (std::size_t j = 0; j < k; ++j) {
        // ce(j) counts the (i+1)'s through position j minus the i's before it
        run += (w.letters[j] == i + 1) ? 1 : 0;
        sig.ce[j] = run;
        run -= (w.letters[j] == i) ? 1 : 0;
    }
    run = 0;
    for (std::size_t j = k; j-- > 0;) {
        run += (w.letters[j] == i) ? 1 : 0;
        sig.cf[j] = run;
        run -= (w.letters[j] == i + 1) ? 1 : 0;
    }
    sig.eps = 0;
    sig.phi = 0;
    for (std::size_t j = 0; j < k; ++j) {
        if (sig.ce[j] > sig.eps) sig.eps = sig.ce[j];
        if (sig.cf[j] > sig.phi) sig.phi = sig.cf[j];
    }
    sig.e_pos = 0;
    sig.f_pos = 0;
    if (sig.eps > 0)
        for (std::size_t j = 0; j < k; ++j)
            if (sig.ce[j] == sig.eps) { sig.e_pos = j + 1; break; }
    if (sig.phi > 0)
        for (std::size_t j = k; j-- > 0;)
            if (sig.cf[j] == sig.phi) { sig.f_pos = j + 1; break; }
    return sig;
}

std::optional<Word> crystal_word(const Word& w, int i, Direction dir) {
    WordSignature sig = signature(w, i);
    std::size_t pos;
    int expect, replace;
    if (dir == Direction::Raise) {
        if (sig.eps == 0) return std::nullopt;
        pos = sig.e_pos;
        expect = i + 1;
        replace = i;
    } else {
        if (sig.phi == 0) return std::nullopt;
        pos = sig.f_pos;
        expect = i;
        replace = i + 1;
    }
    if (pos == 0 || pos > w.size() || w.letters[pos - 1] != expect)
        throw error(errc::internal_inconsistency,
                    "signature selected position " + std::to_string(pos) + " holding " +
                        (pos >= 1 && pos <= w.size() ? std::to_string(w.letters[pos - 1])
                                                     : std::string("nothing")) +
                        ", expected " + std::to_string(expect));
    Word out = w;
    out.letters[pos - 1] = replace;
    out.n = std::max(w.n, replace);
    return out;
}

bool is_standard(const Biword& b) {
    if (b.top.size() != b.bottom.size()) return false;
    for (std::size_t j = 1; j < b.top.size(); ++j) {
        if (b.top.letters[j] < b.top.letters[j - 1]) return false;
        if (b.top.letters[j] == b.top.letters[j - 1] &&
            b.bottom.letters[j] > b.bottom.letters[j - 1])
            return false;
    }
    return true;
}

Biword standardize(std::vector<std::pair<int, int>> pairs, int m, int n) {
    std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second > b.second;
    });
    std::vector<int> top, bottom;
    top.reserve(pairs.size());
    bottom.reserve(pairs.size());
    for (const auto& [t, o] : pairs) {
        top.push_back(t);
        bottom.push_back(o);
    }
    return Biword{make_word(std::move(top), m), make_word(std::move(bottom), n)};
}

Biword make_biword(Word top, Word bottom) {
    Biword b{std::move(top), std::move(bottom)};
    if (b.top.size() != b.bottom.size())
        throw error(errc::standard_form_violation,
                    "top and bottom words differ in length (" + std::to_string(b.top.size()) +
                        " vs " + std::to_string(b.bottom.size()) + ")");
    if (!is_standard(b))
        throw error(errc::standard_form_violation,
                    "columns must be sorted with tops weakly increasing and bottoms weakly "
                    "decreasing under equal tops");
    return b;
}

std::optional<Biword> crystal_biword(const Biword& b, int i, Direction dir) {
    auto moved = crystal_word(b.bottom, i, dir);
    if (!moved) return std::nullopt;
    Biword out{b.top, std::move(*moved)};
    out.bottom.n = std::max(out.bottom.n, b.bottom.n);
    if (!is_standard(out))
        throw error(errc::internal_inconsistency,
                    "crystal operator broke the standard sorting of a biword");
    return out;
}

Biword dual_biword(const Biword& b) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(b.size());
    for (std::size_t j = 0; j < b.size(); ++j)
        pairs.push_back({b.bottom.letters[j], b.top.letters[j]});
    return standardize(std::move(pairs), b.bottom.n, b.top.n);
}

}  // namespace ptab
