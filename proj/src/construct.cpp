#include "fracfact/construct.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "fracfact/errors.hpp"
#include "fracfact/isomorphism.hpp"

namespace fracfact {

namespace {

constexpr long long kMaxSearchCandidates = 20'000'000;

long long binomial_ll(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long out = 1;
    for (int i = 1; i <= k; ++i) {
        out = out * (n - k + i) / i;
        if (out > (1LL << 62)) return 1LL << 62;  // saturate; only used for guards
    }
    return out;
}

/// Echelonized basis with bookkeeping of which basis columns combine into
/// each row, so arbitrary columns can be rewritten over the basis.
struct TrackedBasis {
    std::vector<Column> rows;             // descending, distinct top bits
    std::vector<std::uint32_t> tracks;    // selection over inserted columns

    bool insert(Column c, int index) {
        Column v = c;
        std::uint32_t t = 1u << index;
        for (std::size_t j = 0; j < rows.size(); ++j)
            if ((v ^ rows[j]) < v) {
                v ^= rows[j];
                t ^= tracks[j];
            }
        if (!v) return false;
        std::size_t pos = 0;
        while (pos < rows.size() && rows[pos] > v) ++pos;
        rows.insert(rows.begin() + pos, v);
        tracks.insert(tracks.begin() + pos, t);
        return true;
    }

    /// Word over the basis columns whose product is c; c must lie in the span.
    std::uint32_t express(Column c) const {
        Column v = c;
        std::uint32_t t = 0;
        for (std::size_t j = 0; j < rows.size(); ++j)
            if ((v ^ rows[j]) < v) {
                v ^= rows[j];
                t ^= tracks[j];
            }
        if (v) throw std::logic_error("column outside basis span");
        return t;
    }
};

std::vector<Column> basic_columns(int m) {
    std::vector<Column> cols(m);
    for (int j = 0; j < m; ++j) cols[j] = 1u << j;
    return cols;
}

/// Design columns in construction order: basics, then the given added
/// columns.
Design assemble_design(int m, std::vector<Column> added) {
    auto cols = basic_columns(m);
    cols.insert(cols.end(), added.begin(), added.end());
    return Design(m, std::move(cols));
}

/// Generators of a basics-first design: one assignment per column past the
/// first m, labeled alphabetically.
GeneratorSet generators_from_construction(const Design& d) {
    GeneratorSet gs;
    gs.m = d.m();
    gs.basis = basic_columns(d.m());
    for (int i = d.m(); i < d.k(); ++i)
        gs.assignments.emplace_back(factor_label(i), d.columns()[i]);
    return gs;
}

std::vector<Column> embedded_images(const Design& d_prime) {
    const Column top = 1u << d_prime.m();
    std::vector<Column> out;
    out.reserve(d_prime.k());
    for (Column c : d_prime.columns()) out.push_back(column_is_odd(c) ? (c | top) : c);
    return out;
}

WordLengthPattern brute_wlp(int m, std::vector<Column> cols) {
    Design d(m, std::move(cols));
    return wlp(d);
}

MaResult ma_rec(int k, int m);

/// MA design with k factors inside H_m when the screening recursion does not
/// apply (k below half); delegates to the complement search.
MaResult ma_subdesign(int k, int m) {
    if (k >= (1 << (m - 1)) && m >= 2) return ma_rec(k, m);
    return min_rank_search(k, m);
}

MaResult ma_rec(int k, int m) {
    const int nh = (1 << m) - 1;
    const int half = 1 << (m - 1);
    MaResult res;

    if (k == nh) {
        // Saturated resolution-III design: all of H_m. Unique at this size,
        // so MA holds trivially.
        std::vector<Column> added;
        for (Column c = 1; c <= static_cast<Column>(nh); ++c)
            if (std::popcount(c) > 1) added.push_back(c);
        std::sort(added.begin(), added.end(), column_display_less);
        res.design = assemble_design(m, std::move(added));
        res.certificate = MaCertificate::Saturated;
        res.certificate_chain = {res.certificate};
        if (m <= 4) {
            res.pattern = wlp(res.design);
        } else {
            // 2^p is out of brute-force range: peel off O_m and compose with
            // the saturated design one level down, which E_m is a copy of.
            MaResult sub = ma_rec((1 << (m - 1)) - 1, m - 1);
            res.pattern = compose_wlpp(m, WlpPolynomial::from_wlp(sub.pattern), half - 1)
                              .to_wlp(k);
        }
        res.generators = generators_from_construction(res.design);
        return res;
    }

    if (k == half) {
        // The unique resolution-IV design O_m (for m = 2 this is the full
        // 2^2 factorial, the only design class with two factors).
        std::vector<Column> added;
        for (Column c = 1; c <= static_cast<Column>(nh); ++c)
            if (column_is_odd(c) && std::popcount(c) > 1) added.push_back(c);
        std::sort(added.begin(), added.end(), column_display_less);
        res.design = assemble_design(m, std::move(added));
        res.certificate = MaCertificate::ResolutionIvUnique;
        res.certificate_chain = {res.certificate};
        res.pattern = m >= 3 ? saturated_wlpp(m).to_wlp(k)
                             : WordLengthPattern(std::vector<BigInt>(k, 0));
        res.generators = generators_from_construction(res.design);
        return res;
    }

    // n/2 < k < n-1: keep O_m and pick the remaining r columns as the image
    // of an MA design with r factors in H_{m-1}.
    const int r = k - half;
    MaResult sub = ma_subdesign(r, m - 1);

    std::vector<Column> added;
    for (Column c = 1; c <= static_cast<Column>(nh); ++c)
        if (column_is_odd(c) && std::popcount(c) > 1) added.push_back(c);
    std::sort(added.begin(), added.end(), column_display_less);
    const auto images = embedded_images(sub.design);
    added.insert(added.end(), images.begin(), images.end());
    res.design = assemble_design(m, std::move(added));

    res.pattern = compose_wlpp(m, WlpPolynomial::from_wlp(sub.pattern), r).to_wlp(k);

    const int h = nh - k;
    const bool pow2_complement = (h & (h + 1)) == 0;  // h = 2^v - 1
    res.certificate = pow2_complement ? MaCertificate::ComplementPow2 : MaCertificate::Recursive;
    res.certificate_chain.push_back(res.certificate);
    res.certificate_chain.insert(res.certificate_chain.end(), sub.certificate_chain.begin(),
                                 sub.certificate_chain.end());
    res.tie_count = sub.tie_count;
    res.generators = generators_from_construction(res.design);
    return res;
}

}  // namespace

std::string GeneratorSet::to_string() const {
    std::string out = "I";
    for (const auto& [label, xi] : assignments) {
        out += '=';
        out += column_to_string(xi);
        out += label;
    }
    return out;
}

Design GeneratorSet::closure_design() const {
    std::vector<Column> cols = basic_columns(m);
    for (const auto& [label, xi] : assignments) cols.push_back(xi);
    return Design(m, std::move(cols));
}

std::string to_string(MaCertificate c) {
    switch (c) {
        case MaCertificate::Saturated: return "saturated";
        case MaCertificate::ResolutionIvUnique: return "resolution-IV-unique";
        case MaCertificate::ComplementPow2: return "complement-2^v-1";
        case MaCertificate::ExhaustiveSearch: return "exhaustive-search";
        case MaCertificate::Recursive: return "recursive";
    }
    return "?";
}

bool MaResult::ma_guaranteed() const {
    if (certificate_chain.empty()) return false;
    return certificate_chain.back() != MaCertificate::Recursive;
}

Design saturated_res_iv(int m) {
    if (m < 3)
        throw std::invalid_argument("the saturated resolution-IV design needs m >= 3");
    return ma_rec(1 << (m - 1), m).design;
}

ColumnSet embed_into_even(const Design& d_prime) {
    return ColumnSet(d_prime.m() + 1, embedded_images(d_prime));
}

MaResult ma_design(int k, long n) {
    if (n < 8 || (n & (n - 1)) != 0)
        throw std::invalid_argument("runs must be a power of two, at least 8");
    const int m = std::countr_zero(static_cast<unsigned long>(n));
    if (m > kMaxBasics)
        throw std::invalid_argument("runs beyond 2^" + std::to_string(kMaxBasics) +
                                    " are not supported");
    if (k < n / 2 || k > n - 1)
        throw std::invalid_argument(
            "factors must satisfy runs/2 <= factors <= runs-1; this tool builds "
            "screening designs with k >= n/2 only (smaller k follows by "
            "complement symmetry)");
    return ma_rec(k, m);
}

MaResult min_rank_search(int k, int m) {
    if (m < 2 || m > kMaxBasics) throw std::invalid_argument("m out of range");
    const int nh = (1 << m) - 1;
    if (k < 1 || k > nh) throw std::invalid_argument("k must be in [1, 2^m-1]");
    const int h = nh - k;
    const int v = min_rank_for_size(h);
    const int jsize = (1 << v) - 1;  // the fixed rank-v subgroup is {1,...,2^v-1}

    const long long n_candidates = binomial_ll(jsize, h);
    if (n_candidates > kMaxSearchCandidates)
        throw CapabilityError("complement search would enumerate " +
                              std::to_string(n_candidates) + " candidates (limit " +
                              std::to_string(kMaxSearchCandidates) + ")");

    std::vector<int> comb(h);
    for (int i = 0; i < h; ++i) comb[i] = i;  // indices into J = {1..jsize}

    std::vector<std::uint64_t> best_hist;
    std::vector<std::vector<Column>> tie_designs;

    std::vector<Column> cols(k);
    auto evaluate = [&]() {
        // design = H_m \ S by a two-pointer sweep (S ascending)
        int ci = 0, si = 0;
        for (Column c = 1; c <= static_cast<Column>(nh); ++c) {
            if (si < h && static_cast<Column>(comb[si] + 1) == c) {
                ++si;
                continue;
            }
            cols[ci++] = c;
        }
        auto hist = word_length_histogram(cols);
        if (best_hist.empty() || hist < best_hist) {
            best_hist = hist;
            tie_designs.clear();
            tie_designs.push_back(cols);
        } else if (hist == best_hist) {
            tie_designs.push_back(cols);
        }
    };

    if (h == 0) {
        evaluate();
    } else {
        while (true) {
            evaluate();
            int i = h - 1;
            while (i >= 0 && comb[i] == jsize - h + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < h; ++j) comb[j] = comb[j - 1] + 1;
        }
    }

    // Reduce ties to isomorphism classes and keep the least canonical form.
    MaResult res;
    res.tie_count = static_cast<long long>(tie_designs.size());
    std::vector<Column> chosen = tie_designs.front();
    if (m <= 5 && tie_designs.size() > 1) {
        std::vector<Design> reps;
        for (auto& t : tie_designs) {
            Design cand(m, t);
            bool known = false;
            for (const auto& rep : reps)
                if (find_isomorphism(cand, rep)) {
                    known = true;
                    break;
                }
            if (!known) reps.push_back(std::move(cand));
        }
        res.tie_count = static_cast<long long>(reps.size());
        ColumnSet best_canon = canonical_form(reps.front());
        for (std::size_t i = 1; i < reps.size(); ++i) {
            ColumnSet c = canonical_form(reps[i]);
            if (c < best_canon) best_canon = c;
        }
        chosen = best_canon.columns();
    }

    res.design = Design(m, std::move(chosen));
    res.pattern = WordLengthPattern::from_u64(
        std::vector<std::uint64_t>(best_hist.begin() + 1, best_hist.end()));
    if (h == 0) res.certificate = MaCertificate::Saturated;
    else if ((h & (h + 1)) == 0) res.certificate = MaCertificate::ComplementPow2;
    else res.certificate = MaCertificate::ExhaustiveSearch;
    res.certificate_chain = {res.certificate};
    if (res.design.rank() == m) res.generators = generators_of(res.design);
    else res.generators.m = m;
    return res;
}

GeneratorSet parse_generators(std::string_view text) {
    std::vector<std::string> tokens;
    std::string cur;
    for (char ch : text) {
        if (ch == '=') {
            tokens.push_back(cur);
            cur.clear();
        } else if (ch != ' ') {
            cur += ch;
        }
    }
    tokens.push_back(cur);
    if (tokens.empty() || tokens[0] != "I")
        throw std::invalid_argument("generator notation must start with I=");
    tokens.erase(tokens.begin());
    if (tokens.empty()) throw std::invalid_argument("no generator words given");

    // Each word is a product of basics plus exactly one added-factor letter;
    // basics occupy positions 0..m-1 of the label sequence, so the highest
    // position in the first word identifies m.
    auto letter_positions = [](const std::string& word) {
        std::vector<int> out;
        for (std::size_t i = 0; i < word.size(); ++i) {
            if (word[i] == '[') {  // "[B26]" form used past Z
                const auto end = word.find(']', i);
                if (end == std::string::npos || word[i + 1] != 'B')
                    throw std::invalid_argument("malformed factor label in \"" + word + "\"");
                out.push_back(std::stoi(word.substr(i + 2, end - i - 2)) - 1);
                i = end;
                continue;
            }
            const auto pos = kFactorLetters.find(word[i]);
            if (pos == std::string_view::npos)
                throw std::invalid_argument(std::string("invalid factor letter '") + word[i] +
                                            "'");
            out.push_back(static_cast<int>(pos));
        }
        return out;
    };

    const auto first = letter_positions(tokens[0]);
    const int m = *std::max_element(first.begin(), first.end());
    if (m < 2 || m > kMaxBasics)
        throw std::invalid_argument("generator words imply an unsupported basic-factor count");

    GeneratorSet gs;
    gs.m = m;
    gs.basis = basic_columns(m);
    for (std::size_t j = 0; j < tokens.size(); ++j) {
        const int label_index = m + static_cast<int>(j);
        const auto positions = letter_positions(tokens[j]);
        Column xi = 0;
        bool label_seen = false;
        for (int pos : positions) {
            if (pos == label_index) {
                if (label_seen)
                    throw std::invalid_argument("repeated added factor in \"" + tokens[j] + "\"");
                label_seen = true;
            } else if (pos < m) {
                const Column bit = 1u << pos;
                if (xi & bit)
                    throw std::invalid_argument("repeated letter in \"" + tokens[j] + "\"");
                xi |= bit;
            } else {
                throw std::invalid_argument("word \"" + tokens[j] + "\" mixes added factors");
            }
        }
        if (!label_seen || xi == 0)
            throw std::invalid_argument("word \"" + tokens[j] +
                                        "\" is not of the form (basic product)(added factor)");
        gs.assignments.emplace_back(factor_label(label_index), xi);
    }
    return gs;
}

GeneratorSet generators_of(const Design& d) {
    const int m = d.m();
    if (d.rank() != m)
        throw std::invalid_argument(
            "design rank is below m; it cannot be written as a fraction on " +
            std::to_string(m) + " basics");

    auto sorted = d.columns();
    std::sort(sorted.begin(), sorted.end());

    GeneratorSet gs;
    gs.m = m;
    TrackedBasis basis;
    std::vector<Column> rest;
    for (Column c : sorted) {
        if (static_cast<int>(gs.basis.size()) < m &&
            basis.insert(c, static_cast<int>(gs.basis.size()))) {
            gs.basis.push_back(c);
        } else {
            rest.push_back(c);
        }
    }

    std::vector<Column> words;
    words.reserve(rest.size());
    for (Column c : rest) words.push_back(basis.express(c));
    std::sort(words.begin(), words.end(), column_display_less);
    for (std::size_t i = 0; i < words.size(); ++i)
        gs.assignments.emplace_back(factor_label(m + static_cast<int>(i)), words[i]);
    return gs;
}

}  // namespace fracfact
