#include "fracfact/matrix.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace fracfact {

std::string DesignMatrix::to_csv() const {
    std::string out;
    for (int c = 0; c < k(); ++c) {
        if (c) out += ',';
        out += labels[c];
    }
    out += '\n';
    for (long t = 0; t < runs(); ++t) {
        for (int c = 0; c < k(); ++c) {
            if (c) out += ',';
            out += entry(t, c) > 0 ? "+1" : "-1";
        }
        out += '\n';
    }
    return out;
}

DesignMatrix design_matrix(const Design& d) {
    DesignMatrix mx;
    mx.m = d.m();
    mx.columns = d.columns();
    for (Column c : mx.columns) mx.labels.push_back(column_to_string(c));
    return mx;
}

DesignMatrix design_matrix_lettered(const Design& d) {
    DesignMatrix mx;
    mx.m = d.m();
    mx.columns = d.columns();
    for (int i = 0; i < d.k(); ++i) mx.labels.push_back(factor_label(i));
    return mx;
}

Design parse_matrix_csv(std::string_view csv) {
    std::vector<std::vector<int>> rows;
    std::size_t n_cols = 0;
    std::istringstream in{std::string(csv)};
    std::string line;
    bool header_done = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (!header_done) {  // header carries only labels
            header_done = true;
            n_cols = static_cast<std::size_t>(std::count(line.begin(), line.end(), ',')) + 1;
            continue;
        }
        std::vector<int> row;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) {
            if (cell == "+1") row.push_back(1);
            else if (cell == "-1") row.push_back(-1);
            else throw std::invalid_argument("matrix cells must be +1 or -1, got \"" + cell + "\"");
        }
        if (row.size() != n_cols) throw std::invalid_argument("ragged matrix row");
        rows.push_back(std::move(row));
    }
    const long n = static_cast<long>(rows.size());
    if (n < 4 || (n & (n - 1)) != 0)
        throw std::invalid_argument("run count must be a power of two, at least 4");
    const int m = std::countr_zero(static_cast<unsigned long>(n));

    // Recover each column from its signs at the unit rows, then check every
    // entry is consistent with the reconstruction.
    std::vector<Column> cols(n_cols, 0);
    for (std::size_t c = 0; c < n_cols; ++c)
        for (int j = 0; j < m; ++j)
            if (rows[1L << j][c] < 0) cols[c] |= 1u << j;
    for (long t = 0; t < n; ++t)
        for (std::size_t c = 0; c < n_cols; ++c) {
            const int expect =
                std::popcount(static_cast<std::uint32_t>(cols[c] & t)) % 2 == 0 ? 1 : -1;
            if (rows[t][c] != expect)
                throw std::invalid_argument("matrix is not a regular two-level design table");
        }
    return Design(m, std::move(cols));
}

}  // namespace fracfact
