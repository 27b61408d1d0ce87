#ifndef FRACFACT_MATRIX_HPP
#define FRACFACT_MATRIX_HPP

#include <string>
#include <string_view>
#include <vector>

#include "fracfact/design.hpp"

namespace fracfact {

/// The n x k table of +1/-1 run settings. Rows follow standard order over
/// the basic-factor bits; entry(t, c) = +1 iff popcount(c & t) is even, so
/// row 0 is all +1 and the identity column would be constant +1.
struct DesignMatrix {
    int m = 0;
    std::vector<std::string> labels;
    std::vector<Column> columns;

    long runs() const { return 1L << m; }
    int k() const { return static_cast<int>(columns.size()); }
    int entry(long row, int col) const {
        return std::popcount(static_cast<std::uint32_t>(columns[col] & row)) % 2 == 0 ? 1 : -1;
    }

    /// Header of labels, then one "+1,-1,..." line per run.
    std::string to_csv() const;
};

/// Matrix labeled by the column words themselves.
DesignMatrix design_matrix(const Design& d);
/// Matrix labeled by factor letters (A, B, ..., matching generator output).
DesignMatrix design_matrix_lettered(const Design& d);

/// Rebuild the design from its sign matrix; the inverse of to_csv.
Design parse_matrix_csv(std::string_view csv);

}  // namespace fracfact

#endif
