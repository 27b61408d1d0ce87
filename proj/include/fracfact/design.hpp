#ifndef FRACFACT_DESIGN_HPP
#define FRACFACT_DESIGN_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fracfact/column.hpp"

namespace fracfact {

/// GF(2) rank of a list of columns (number of independent ones).
int gf2_rank(std::span<const Column> cols);

/// Smallest rank a set of h distinct nonzero columns can have:
/// ceil(log2(h+1)), i.e. the smallest v with h <= 2^v - 1.
int min_rank_for_size(long long h);

/// An unordered, duplicate-free set of columns of H_m, stored in ascending
/// encoding order. Used for complements, subgroups and subsets of E_m.
class ColumnSet {
public:
    ColumnSet() = default;
    /// Validates m, sorts, and rejects duplicates, zero columns and columns
    /// outside H_m.
    ColumnSet(int m, std::vector<Column> cols);

    int m() const { return m_; }
    int size() const { return static_cast<int>(cols_.size()); }
    bool empty() const { return cols_.empty(); }
    bool contains(Column c) const;
    const std::vector<Column>& columns() const { return cols_; }

    int rank() const { return gf2_rank(cols_); }

    /// H_m \ this.
    ColumnSet complement() const;

    friend bool operator==(const ColumnSet&, const ColumnSet&) = default;
    /// Lexicographic on the sorted column list (the canonical-form order).
    friend auto operator<=>(const ColumnSet& a, const ColumnSet& b) {
        return a.cols_ <=> b.cols_;
    }

private:
    int m_ = 0;
    std::vector<Column> cols_;
};

/// A 2^{k-p} design: an ordered, duplicate-free list of k columns of H_m.
/// n = 2^m runs; p = k - rank. Column order is preserved because it fixes
/// factor labels, word masks and design-matrix layout.
class Design {
public:
    Design() = default;
    Design(int m, std::vector<Column> cols);

    int m() const { return m_; }
    int k() const { return static_cast<int>(cols_.size()); }
    long runs() const { return 1L << m_; }
    int rank() const { return gf2_rank(cols_); }
    int p() const { return k() - rank(); }
    const std::vector<Column>& columns() const { return cols_; }
    bool contains(Column c) const;

    ColumnSet as_set() const;
    ColumnSet complement() const { return as_set().complement(); }

    friend bool operator==(const Design&, const Design&) = default;

private:
    int m_ = 0;
    std::vector<Column> cols_;
};

/// All 2^m - 1 nonzero columns generated by m basic factors. 2 <= m <= 16.
ColumnSet hamming_set(int m);

/// The columns with an even / odd number of letters. Together they
/// partition H_m; |even| = 2^{m-1} - 1 and |odd| = 2^{m-1}.
ColumnSet even_set(int m);
ColumnSet odd_set(int m);

/// Closure of a nonempty generator set under the column product, identity
/// excluded: exactly 2^rank - 1 columns.
ColumnSet subgroup_closure(const ColumnSet& generators);

/// Parse "A,BC,BD" into columns (order kept). When m == 0 the number of
/// basics is inferred from the highest letter used.
std::vector<Column> parse_columns(std::string_view text, int& m);

Design parse_design(std::string_view text, int m = 0);
ColumnSet parse_column_set(std::string_view text, int m = 0);

/// Comma-separated words in the order stored.
std::string columns_to_string(std::span<const Column> cols);
std::string to_string(const Design& d);
/// ColumnSets render in display order (length, then alphabetical).
std::string to_string(const ColumnSet& s);

}  // namespace fracfact

#endif
