#include "fracfact/design.hpp"

#include <algorithm>
#include <stdexcept>

namespace fracfact {

namespace {

void check_m(int m) {
    if (m < 2 || m > kMaxBasics)
        throw std::invalid_argument("number of basic factors must be in [2, " +
                                    std::to_string(kMaxBasics) + "], got " + std::to_string(m));
}

void check_columns(int m, std::span<const Column> cols) {
    check_m(m);
    const Column limit = (1u << m) - 1u;
    for (Column c : cols) {
        if (c == kIdentity)
            throw std::invalid_argument("the identity column I cannot be a design column");
        if (c > limit)
            throw std::invalid_argument("column " + column_to_string(c) + " uses letters beyond " +
                                        std::to_string(m) + " basic factors");
    }
}

}  // namespace

int gf2_rank(std::span<const Column> cols) {
    Column basis[kMaxBasics] = {};  // basis[j] holds a vector whose top set bit is j
    int rank = 0;
    for (Column c : cols) {
        Column v = c;
        while (v) {
            int top = std::bit_width(v) - 1;
            if (!basis[top]) {
                basis[top] = v;
                ++rank;
                break;
            }
            v ^= basis[top];
        }
    }
    return rank;
}

int min_rank_for_size(long long h) {
    if (h < 0) throw std::invalid_argument("set size must be nonnegative");
    int v = 0;
    while ((1LL << v) - 1 < h) ++v;
    return v;
}

ColumnSet::ColumnSet(int m, std::vector<Column> cols) : m_(m), cols_(std::move(cols)) {
    check_columns(m_, cols_);
    std::sort(cols_.begin(), cols_.end());
    if (std::adjacent_find(cols_.begin(), cols_.end()) != cols_.end())
        throw std::invalid_argument("duplicate column in set");
}

bool ColumnSet::contains(Column c) const {
    return std::binary_search(cols_.begin(), cols_.end(), c);
}

ColumnSet ColumnSet::complement() const {
    std::vector<Column> out;
    out.reserve((1u << m_) - 1 - cols_.size());
    for (Column c = 1; c < (1u << m_); ++c)
        if (!contains(c)) out.push_back(c);
    return ColumnSet(m_, std::move(out));
}

Design::Design(int m, std::vector<Column> cols) : m_(m), cols_(std::move(cols)) {
    check_columns(m_, cols_);
    auto sorted = cols_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("duplicate column in design");
}

bool Design::contains(Column c) const {
    return std::find(cols_.begin(), cols_.end(), c) != cols_.end();
}

ColumnSet Design::as_set() const { return ColumnSet(m_, cols_); }

ColumnSet hamming_set(int m) {
    check_m(m);
    std::vector<Column> cols((1u << m) - 1);
    for (Column c = 1; c < (1u << m); ++c) cols[c - 1] = c;
    return ColumnSet(m, std::move(cols));
}

ColumnSet even_set(int m) {
    check_m(m);
    std::vector<Column> cols;
    cols.reserve((1u << (m - 1)) - 1);
    for (Column c = 1; c < (1u << m); ++c)
        if (column_is_even(c)) cols.push_back(c);
    return ColumnSet(m, std::move(cols));
}

ColumnSet odd_set(int m) {
    check_m(m);
    std::vector<Column> cols;
    cols.reserve(1u << (m - 1));
    for (Column c = 1; c < (1u << m); ++c)
        if (column_is_odd(c)) cols.push_back(c);
    return ColumnSet(m, std::move(cols));
}

ColumnSet subgroup_closure(const ColumnSet& generators) {
    if (generators.empty()) throw std::invalid_argument("subgroup_closure needs generators");
    // Grow span incrementally: adding g doubles the subgroup unless g is
    // already inside.
    std::vector<Column> span = {kIdentity};
    for (Column g : generators.columns()) {
        if (std::find(span.begin(), span.end(), g) != span.end()) continue;
        const std::size_t base = span.size();
        span.reserve(base * 2);
        for (std::size_t i = 0; i < base; ++i) span.push_back(span[i] ^ g);
    }
    span.erase(std::remove(span.begin(), span.end(), kIdentity), span.end());
    return ColumnSet(generators.m(), std::move(span));
}

std::vector<Column> parse_columns(std::string_view text, int& m) {
    std::vector<std::string> words;
    std::string cur;
    for (char ch : text) {
        if (ch == ',') {
            words.push_back(cur);
            cur.clear();
        } else if (ch != ' ' && ch != '\t') {
            cur += ch;
        }
    }
    words.push_back(cur);

    if (m == 0) {
        // Infer the basic-factor count from the highest letter used.
        int highest = -1;
        for (const auto& w : words)
            for (char ch : w) {
                auto pos = kFactorLetters.find(ch);
                if (pos != std::string_view::npos)
                    highest = std::max(highest, static_cast<int>(pos));
            }
        m = std::max(highest + 1, 2);
    }

    std::vector<Column> cols;
    cols.reserve(words.size());
    for (const auto& w : words) {
        if (w.empty()) throw std::invalid_argument("empty column word in \"" + std::string(text) + "\"");
        cols.push_back(parse_column(w, m));
    }
    return cols;
}

Design parse_design(std::string_view text, int m) {
    auto cols = parse_columns(text, m);
    return Design(m, std::move(cols));
}

ColumnSet parse_column_set(std::string_view text, int m) {
    auto cols = parse_columns(text, m);
    return ColumnSet(m, std::move(cols));
}

std::string columns_to_string(std::span<const Column> cols) {
    std::string out;
    for (std::size_t i = 0; i < cols.size(); ++i) {
        if (i) out += ',';
        out += column_to_string(cols[i]);
    }
    return out;
}

std::string to_string(const Design& d) { return columns_to_string(d.columns()); }

std::string to_string(const ColumnSet& s) {
    auto cols = s.columns();
    std::sort(cols.begin(), cols.end(), column_display_less);
    return columns_to_string(cols);
}

}  // namespace fracfact
