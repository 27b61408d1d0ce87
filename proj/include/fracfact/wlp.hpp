#ifndef FRACFACT_WLP_HPP
#define FRACFACT_WLP_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fracfact/design.hpp"

namespace fracfact {

/// Exact integer type for word counts and polynomial coefficients. Counts
/// grow like binomial coefficients of 2^{m-1}, so fixed-width integers are
/// not enough beyond small m.
using BigInt = boost::multiprecision::cpp_int;

/// The vector (a_1, ..., a_k): a_i = number of defining-relation words of
/// length i. Trailing zeros are kept so the length always equals k.
class WordLengthPattern {
public:
    WordLengthPattern() = default;
    explicit WordLengthPattern(std::vector<BigInt> counts) : counts_(std::move(counts)) {}
    static WordLengthPattern from_u64(const std::vector<std::uint64_t>& counts);

    int k() const { return static_cast<int>(counts_.size()); }
    const std::vector<BigInt>& counts() const { return counts_; }
    const BigInt& a(int i) const { return counts_.at(i - 1); }  // 1-based, as in a_i

    BigInt total_words() const;
    /// Length of the shortest word; 0 when there are no words at all.
    int resolution() const;

    /// "(0,0,4,14,8,0,4,1,0)"
    std::string to_string() const;

    friend bool operator==(const WordLengthPattern&, const WordLengthPattern&) = default;

private:
    std::vector<BigInt> counts_;
};

/// Lexicographic aberration order on patterns of equal length.
std::strong_ordering compare_wlp(const WordLengthPattern& a, const WordLengthPattern& b);

/// A defining-relation word for designs with k <= 64 columns: bit i selects
/// design column i; the selected columns multiply to I.
using WordMask = std::uint64_t;

/// Histogram of defining-relation word lengths, hist[len] for len = 0..k
/// (hist[0] == 0; the identity is excluded). This is the brute-force
/// counting path used everywhere a raw histogram is enough; wlp() wraps it.
/// Throws CapabilityError when p = k - rank exceeds the 2^26 guard.
std::vector<std::uint64_t> word_length_histogram(std::span<const Column> cols);

/// All 2^p - 1 words of the defining relation, sorted. Materialization is
/// limited to k <= 64 on top of the histogram guard.
std::vector<WordMask> defining_relation(const Design& d);

WordLengthPattern wlp(const Design& d);

int resolution(const Design& d);

/// Which of two same-size designs has smaller aberration; when not equal,
/// first_diff receives the 1-based word length at which the patterns differ.
std::strong_ordering compare_aberration(const Design& d1, const Design& d2,
                                        int* first_diff = nullptr);

/// Effect-length histogram of the alias chain of column c: counts of
/// popcount(z) over all selections z of design columns whose product is c.
/// For c = I this is the defining relation itself plus the empty selection.
/// Returns all zeros when c is outside the design's column span.
std::vector<std::uint64_t> alias_chain(const Design& d, Column c);

/// alias_chain for the design's j-th factor (0-based), i.e. c = column j.
std::vector<std::uint64_t> alias_chain_of_factor(const Design& d, int factor);

/// freq[len][j] = number of times factor j appears in defining-relation
/// words of length len. Row sums satisfy sum_j freq[len][j] == len * a_len.
std::vector<std::vector<std::uint64_t>> letter_frequencies(const Design& d);

/// Length-3 word bookkeeping for a candidate complement d_bar inside H_m:
/// counts of H_m's length-3 words by how they meet d_bar.
struct ComplementWordStats {
    int m = 0;
    long long h = 0;            ///< |d_bar|
    long long a3_bar = 0;       ///< words with all three columns in d_bar
    long long a3_prime_bar = 0; ///< words with exactly two columns in d_bar
    long long eliminated = 0;   ///< words meeting d_bar at all, a(d_bar)
};

ComplementWordStats complement_word_stats(const ColumnSet& d_bar);

}  // namespace fracfact

#endif
