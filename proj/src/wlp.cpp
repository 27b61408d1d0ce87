#include "fracfact/wlp.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "fracfact/errors.hpp"

namespace fracfact {

namespace {

constexpr int kMaxBruteP = 26;  // 2^26 words is the brute-force ceiling

/// Null-space basis of the GF(2) map z -> xor of selected columns.
/// Each basis element is a selection mask over the k input columns,
/// stored as ceil(k/64) words. Also reports the pivot structure so
/// cosets (alias chains) can be solved for.
struct NullSpace {
    int k = 0;
    int words_per_mask = 0;
    std::vector<std::uint64_t> basis;         // p rows, row-major
    std::vector<Column> pivot_col;            // reduced column per pivot
    std::vector<std::uint64_t> pivot_track;   // selection mask per pivot

    int p() const { return static_cast<int>(basis.size()) / std::max(words_per_mask, 1); }
};

NullSpace null_space(std::span<const Column> cols) {
    NullSpace ns;
    ns.k = static_cast<int>(cols.size());
    ns.words_per_mask = std::max(1, (ns.k + 63) / 64);
    const int w = ns.words_per_mask;

    // track[i] = selection mask showing which input columns were combined
    std::vector<std::uint64_t> track(w);
    std::vector<Column> pivots;                    // reduced value of each pivot
    std::vector<std::uint64_t> pivot_tracks;       // w words each

    for (int i = 0; i < ns.k; ++i) {
        Column v = cols[i];
        std::fill(track.begin(), track.end(), 0);
        track[i / 64] = 1ULL << (i % 64);
        for (std::size_t j = 0; j < pivots.size(); ++j) {
            Column pv = pivots[j];
            if (std::bit_width(v) == std::bit_width(pv) && v) {
                v ^= pv;
                for (int t = 0; t < w; ++t) track[t] ^= pivot_tracks[j * w + t];
            }
        }
        if (v == 0) {
            ns.basis.insert(ns.basis.end(), track.begin(), track.end());
        } else {
            // keep pivots ordered by decreasing top bit so reduction is a
            // single pass
            std::size_t pos = 0;
            while (pos < pivots.size() && std::bit_width(pivots[pos]) > std::bit_width(v)) ++pos;
            pivots.insert(pivots.begin() + pos, v);
            pivot_tracks.insert(pivot_tracks.begin() + static_cast<long>(pos) * w,
                                track.begin(), track.end());
        }
    }
    ns.pivot_col = std::move(pivots);
    ns.pivot_track = std::move(pivot_tracks);
    return ns;
}

/// Reduce v against the pivot rows; on success returns the selection mask of
/// a particular solution, otherwise nullopt (v outside the column span).
std::optional<std::vector<std::uint64_t>> solve(const NullSpace& ns, Column v) {
    const int w = ns.words_per_mask;
    std::vector<std::uint64_t> sel(w, 0);
    for (std::size_t j = 0; j < ns.pivot_col.size() && v; ++j) {
        if (std::bit_width(v) == std::bit_width(ns.pivot_col[j])) {
            v ^= ns.pivot_col[j];
            for (int t = 0; t < w; ++t) sel[t] ^= ns.pivot_track[j * w + t];
        }
    }
    if (v != 0) return std::nullopt;
    return sel;
}

int popcount_words(const std::uint64_t* words, int n) {
    int c = 0;
    for (int t = 0; t < n; ++t) c += std::popcount(words[t]);
    return c;
}

/// Walk the coset start ^ <basis> in Gray-code order, accumulating a
/// popcount histogram of all 2^p selection masks (including `start`).
std::vector<std::uint64_t> coset_histogram(const NullSpace& ns,
                                           const std::vector<std::uint64_t>& start) {
    const int p = ns.p();
    if (p > kMaxBruteP)
        throw CapabilityError("defining relation has 2^" + std::to_string(p) +
                              " words, beyond the brute-force guard of 2^" +
                              std::to_string(kMaxBruteP) + "; use the polynomial method");
    const int w = ns.words_per_mask;
    std::vector<std::uint64_t> hist(ns.k + 1, 0);
    std::vector<std::uint64_t> cur = start;
    hist[popcount_words(cur.data(), w)]++;
    const std::uint64_t total = 1ULL << p;
    for (std::uint64_t i = 1; i < total; ++i) {
        const int flip = std::countr_zero(i);
        const std::uint64_t* row = ns.basis.data() + static_cast<std::size_t>(flip) * w;
        for (int t = 0; t < w; ++t) cur[t] ^= row[t];
        hist[popcount_words(cur.data(), w)]++;
    }
    return hist;
}

}  // namespace

WordLengthPattern WordLengthPattern::from_u64(const std::vector<std::uint64_t>& counts) {
    std::vector<BigInt> v(counts.begin(), counts.end());
    return WordLengthPattern(std::move(v));
}

BigInt WordLengthPattern::total_words() const {
    BigInt s = 0;
    for (const auto& c : counts_) s += c;
    return s;
}

int WordLengthPattern::resolution() const {
    for (int i = 0; i < k(); ++i)
        if (counts_[i] != 0) return i + 1;
    return 0;
}

std::string WordLengthPattern::to_string() const {
    std::string out = "(";
    for (int i = 0; i < k(); ++i) {
        if (i) out += ',';
        out += counts_[i].str();
    }
    out += ')';
    return out;
}

std::strong_ordering compare_wlp(const WordLengthPattern& a, const WordLengthPattern& b) {
    if (a.k() != b.k())
        throw std::invalid_argument("aberration is defined only for equal numbers of factors");
    for (int i = 0; i < a.k(); ++i) {
        if (a.counts()[i] < b.counts()[i]) return std::strong_ordering::less;
        if (a.counts()[i] > b.counts()[i]) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::vector<std::uint64_t> word_length_histogram(std::span<const Column> cols) {
    auto ns = null_space(cols);
    std::vector<std::uint64_t> start(ns.words_per_mask, 0);
    auto hist = coset_histogram(ns, start);
    hist[0] -= 1;  // drop the identity (empty selection)
    return hist;
}

std::vector<WordMask> defining_relation(const Design& d) {
    if (d.k() > 64)
        throw CapabilityError("materializing words is supported for k <= 64 columns");
    auto ns = null_space(d.columns());
    const int p = ns.p();
    if (p > kMaxBruteP)
        throw CapabilityError("defining relation has 2^" + std::to_string(p) +
                              " words, beyond the brute-force guard of 2^" +
                              std::to_string(kMaxBruteP) + "; use the polynomial method");
    std::vector<WordMask> words;
    words.reserve((1ULL << p) - 1);
    WordMask cur = 0;
    const std::uint64_t total = 1ULL << p;
    for (std::uint64_t i = 1; i < total; ++i) {
        cur ^= ns.basis[std::countr_zero(i)];
        words.push_back(cur);
    }
    std::sort(words.begin(), words.end());
    return words;
}

WordLengthPattern wlp(const Design& d) {
    auto hist = word_length_histogram(d.columns());
    hist.erase(hist.begin());  // drop the length-0 slot
    return WordLengthPattern::from_u64(hist);
}

int resolution(const Design& d) { return wlp(d).resolution(); }

std::strong_ordering compare_aberration(const Design& d1, const Design& d2, int* first_diff) {
    if (d1.k() != d2.k() || d1.m() != d2.m())
        throw std::invalid_argument(
            "aberration comparison requires the same number of factors and runs");
    auto w1 = wlp(d1), w2 = wlp(d2);
    if (first_diff) {
        *first_diff = 0;
        for (int i = 1; i <= w1.k(); ++i)
            if (w1.a(i) != w2.a(i)) {
                *first_diff = i;
                break;
            }
    }
    return compare_wlp(w1, w2);
}

std::vector<std::uint64_t> alias_chain(const Design& d, Column c) {
    if (c >= (1u << d.m()))
        throw std::invalid_argument("alias column must be I or a column of H_m");
    auto ns = null_space(d.columns());
    auto start = solve(ns, c);
    if (!start) return std::vector<std::uint64_t>(d.k() + 1, 0);
    return coset_histogram(ns, *start);
}

std::vector<std::uint64_t> alias_chain_of_factor(const Design& d, int factor) {
    if (factor < 0 || factor >= d.k())
        throw std::invalid_argument("factor index out of range");
    return alias_chain(d, d.columns()[factor]);
}

std::vector<std::vector<std::uint64_t>> letter_frequencies(const Design& d) {
    if (d.k() > 64)
        throw CapabilityError("letter frequencies are supported for k <= 64 columns");
    auto words = defining_relation(d);
    std::vector<std::vector<std::uint64_t>> freq(
        d.k() + 1, std::vector<std::uint64_t>(d.k(), 0));
    for (WordMask word : words) {
        const int len = std::popcount(word);
        while (word) {
            const int j = std::countr_zero(word);
            freq[len][j]++;
            word &= word - 1;
        }
    }
    return freq;
}

ComplementWordStats complement_word_stats(const ColumnSet& d_bar) {
    ComplementWordStats st;
    st.m = d_bar.m();
    st.h = d_bar.size();
    // Every length-3 word of H_m is {x, y, x^y}; visiting pairs x < y with
    // x^y > y touches each word exactly once.
    const Column n = 1u << st.m;
    for (Column x = 1; x < n; ++x)
        for (Column y = x + 1; y < n; ++y) {
            const Column z = x ^ y;
            if (z <= y) continue;
            const int inside = d_bar.contains(x) + d_bar.contains(y) + d_bar.contains(z);
            if (inside == 3) st.a3_bar++;
            if (inside == 2) st.a3_prime_bar++;
            if (inside >= 1) st.eliminated++;
        }
    return st;
}

}  // namespace fracfact
