#include "fracfact/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "fracfact/errors.hpp"

namespace fracfact {

namespace {

/// Lexicographic order on equal-size subsets viewed as sorted column lists:
/// the smaller set owns the lowest column where they differ.
bool mask_lex_less(std::uint32_t a, std::uint32_t b) {
    const std::uint32_t x = a ^ b;
    if (!x) return false;
    return ((x & -x) & a) != 0;
}

/// Column permutation tables induced by a generating set of GL(m,2):
/// a basis cycle, a swap and one transvection. Every element of the group
/// is a product of these, so BFS closure over them walks whole orbits.
std::vector<std::vector<Column>> group_generator_tables(int m) {
    const Column nh = (1u << m) - 1;
    std::vector<std::vector<Column>> images;
    std::vector<Column> cyc(m), swp(m), tv(m);
    for (int j = 0; j < m; ++j) {
        cyc[j] = 1u << ((j + 1) % m);
        swp[j] = 1u << j;
        tv[j] = 1u << j;
    }
    std::swap(swp[0], swp[1]);
    tv[0] = 0b11;
    for (const auto& img : {cyc, swp, tv}) {
        std::vector<Column> tbl(nh + 1, 0);
        for (Column v = 1; v <= nh; ++v) {
            const int low = std::countr_zero(v);
            tbl[v] = tbl[v & (v - 1)] ^ img[low];
        }
        images.push_back(std::move(tbl));
    }
    return images;
}

std::uint32_t apply_to_mask(std::uint32_t mask, const std::vector<Column>& tbl) {
    std::uint32_t out = 0;
    while (mask) {
        const int b = std::countr_zero(mask);
        out |= 1u << (tbl[b + 1] - 1);
        mask &= mask - 1;
    }
    return out;
}

/// Rank of a k-subset mask of {0..n-1} among all C(n,k) masks in Gosper
/// (ascending numeric) order: the combinadic index, sum of C(pos_i, i) over
/// the i-th lowest set bit.
std::uint64_t combination_rank(std::uint32_t mask) {
    std::uint64_t r = 0;
    int seen = 0;
    while (mask) {
        const int pos = std::countr_zero(mask);
        ++seen;
        if (pos >= seen) {
            std::uint64_t c = 1;
            for (int i = 1; i <= seen; ++i) c = c * (pos - seen + i) / i;
            r += c;
        }
        mask &= mask - 1;
    }
    return r;
}

std::uint64_t binom_u64(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t out = 1;
    for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

/// Orbit partition of all k-subsets of H_m under GL(m,2), BFS over the
/// generator tables with a combinadic-indexed visited bitmap. Returns the
/// lex-least member of each orbit plus the orbit size.
std::vector<std::pair<std::uint32_t, std::uint64_t>> fixed_size_orbits(int m, int k) {
    const int nh = (1 << m) - 1;
    const auto gens = group_generator_tables(m);
    const std::uint64_t total = binom_u64(nh, k);
    std::vector<bool> visited(total, false);

    std::vector<std::pair<std::uint32_t, std::uint64_t>> out;
    std::uint32_t start = k == 0 ? 0 : (1u << k) - 1;
    std::vector<std::uint32_t> stack;
    if (k == 0) return {{0u, 1u}};

    while (true) {
        const std::uint64_t r0 = combination_rank(start);
        if (!visited[r0]) {
            visited[r0] = true;
            stack.assign(1, start);
            std::uint32_t least = start;
            std::uint64_t size = 0;
            while (!stack.empty()) {
                const std::uint32_t cur = stack.back();
                stack.pop_back();
                ++size;
                if (mask_lex_less(cur, least)) least = cur;
                for (const auto& tbl : gens) {
                    const std::uint32_t img = apply_to_mask(cur, tbl);
                    const std::uint64_t ri = combination_rank(img);
                    if (!visited[ri]) {
                        visited[ri] = true;
                        stack.push_back(img);
                    }
                }
            }
            out.emplace_back(least, size);
        }
        // Gosper's hack: next mask with the same popcount
        const std::uint32_t u = start & -start;
        const std::uint32_t v = start + u;
        if (v >= (1u << nh)) break;
        start = v | (((start ^ v) / u) >> 2);
    }
    return out;
}

}  // namespace

std::vector<Column> mask_to_columns(std::uint32_t mask) {
    std::vector<Column> cols;
    while (mask) {
        const int b = std::countr_zero(mask);
        cols.push_back(static_cast<Column>(b + 1));
        mask &= mask - 1;
    }
    return cols;
}

std::uint32_t columns_to_mask(std::span<const Column> cols) {
    std::uint32_t mask = 0;
    for (Column c : cols) mask |= 1u << (c - 1);
    return mask;
}

ClassSweep sweep_classes(int m) {
    if (m < 2 || m > 4)
        throw CapabilityError("the full subset sweep is limited to m <= 4 (2^15 subsets)");
    const int nh = (1 << m) - 1;
    const auto gens = group_generator_tables(m);

    ClassSweep sw;
    sw.m = m;
    sw.class_of.assign(1u << nh, -1);

    std::vector<std::uint32_t> stack;
    for (std::uint32_t s = 0; s < (1u << nh); ++s) {
        if (sw.class_of[s] >= 0) continue;
        const auto id = static_cast<std::int32_t>(sw.canonical_mask.size());
        stack.assign(1, s);
        sw.class_of[s] = id;
        std::uint32_t least = s;
        std::uint64_t size = 0;
        while (!stack.empty()) {
            const std::uint32_t cur = stack.back();
            stack.pop_back();
            ++size;
            if (mask_lex_less(cur, least)) least = cur;
            for (const auto& tbl : gens) {
                const std::uint32_t img = apply_to_mask(cur, tbl);
                if (sw.class_of[img] < 0) {
                    sw.class_of[img] = id;
                    stack.push_back(img);
                }
            }
        }
        sw.canonical_mask.push_back(least);
        sw.orbit_size.push_back(size);
    }
    return sw;
}

std::vector<ColumnSet> enumerate_classes(int m, std::optional<int> k) {
    if (m < 2 || m > 5) throw CapabilityError("class enumeration is limited to m <= 5");
    if (k && (*k < 1 || *k > (1 << m) - 1))
        throw std::invalid_argument("k must be in [1, 2^m-1]");

    std::vector<std::uint32_t> masks;
    if (m <= 4) {
        auto sw = sweep_classes(m);
        for (std::uint32_t cm : sw.canonical_mask) {
            if (cm == 0) continue;  // the empty design is not a class of interest here
            if (!k || std::popcount(cm) == *k) masks.push_back(cm);
        }
    } else {
        if (!k)
            throw CapabilityError("full enumeration for m = 5 (2^31 subsets) is out of reach; "
                                  "pass a size k <= 7 or k >= 24");
        const int h = (1 << m) - 1 - *k;
        if (*k > 7 && h > 7)
            throw CapabilityError("m = 5 slices need k <= 7 or a complement of at most 7 columns");
        for (auto& [least, size] : fixed_size_orbits(m, *k)) masks.push_back(least);
    }

    std::vector<ColumnSet> out;
    out.reserve(masks.size());
    for (std::uint32_t cm : masks) out.emplace_back(m, mask_to_columns(cm));
    std::sort(out.begin(), out.end(),
              [](const ColumnSet& a, const ColumnSet& b) { return a.columns() < b.columns(); });
    return out;
}

std::vector<int> DesignLattice::nodes_at(int k) const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(nodes.size()); ++i)
        if (nodes[i].k == k) out.push_back(i);
    return out;
}

std::string DesignLattice::edge_list() const {
    auto render = [](const ColumnSet& s) {
        auto cols = s.columns();
        std::sort(cols.begin(), cols.end(), column_display_less);
        std::string out;
        for (std::size_t i = 0; i < cols.size(); ++i) {
            if (i) out += ' ';
            out += column_to_string(cols[i]);
        }
        return out.empty() ? std::string("-") : out;
    };
    std::string out;
    for (const auto& [a, b] : edges) {
        out += std::to_string(nodes[a].k);
        out += ',';
        out += render(nodes[a].canonical);
        out += ',';
        out += render(nodes[b].canonical);
        out += '\n';
    }
    return out;
}

DesignLattice build_lattice(int m) {
    auto sw = sweep_classes(m);
    const int nh = (1 << m) - 1;

    DesignLattice lat;
    lat.m = m;

    // Node per class, sorted by (k, canonical list).
    std::vector<int> order(sw.classes());
    for (int i = 0; i < sw.classes(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const auto ca = mask_to_columns(sw.canonical_mask[a]);
        const auto cb = mask_to_columns(sw.canonical_mask[b]);
        if (ca.size() != cb.size()) return ca.size() < cb.size();
        return ca < cb;
    });
    std::vector<int> node_of_class(sw.classes());
    for (int pos = 0; pos < static_cast<int>(order.size()); ++pos) {
        const int cls = order[pos];
        node_of_class[cls] = pos;
        LatticeNode node;
        node.k = std::popcount(sw.canonical_mask[cls]);
        node.canonical = ColumnSet(m, mask_to_columns(sw.canonical_mask[cls]));
        Design rep(m, node.canonical.columns());
        node.pattern = wlp(rep);
        node.resolution = node.pattern.resolution();
        lat.nodes.push_back(std::move(node));
    }

    // Edges: extend each representative by one column; the class of the
    // extension is representative-independent.
    std::vector<std::pair<int, int>> edges;
    for (int cls = 0; cls < sw.classes(); ++cls) {
        const std::uint32_t mask = sw.canonical_mask[cls];
        for (int b = 0; b < nh; ++b) {
            if (mask >> b & 1) continue;
            const std::uint32_t ext = mask | (1u << b);
            edges.emplace_back(node_of_class[cls], node_of_class[sw.class_of[ext]]);
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    lat.edges = std::move(edges);

    // Aberration minimum per size.
    for (int k = 0; k <= nh; ++k) {
        auto at_k = lat.nodes_at(k);
        int best = -1;
        for (int i : at_k)
            if (best < 0 ||
                compare_wlp(lat.nodes[i].pattern, lat.nodes[best].pattern) == std::strong_ordering::less)
                best = i;
        if (best >= 0) lat.nodes[best].ma = true;
    }
    return lat;
}

}  // namespace fracfact
