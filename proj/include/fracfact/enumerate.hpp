#ifndef FRACFACT_ENUMERATE_HPP
#define FRACFACT_ENUMERATE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fracfact/design.hpp"
#include "fracfact/wlp.hpp"

namespace fracfact {

/// Partition of all 2^(2^m - 1) subsets of H_m into isomorphism classes
/// under GL(m,2), for m <= 4. Subsets are encoded as masks with bit (c-1)
/// for column c.
struct ClassSweep {
    int m = 0;
    std::vector<std::int32_t> class_of;        ///< class id per subset mask
    std::vector<std::uint32_t> canonical_mask; ///< lex-least member per class
    std::vector<std::uint64_t> orbit_size;

    int classes() const { return static_cast<int>(canonical_mask.size()); }
};

ClassSweep sweep_classes(int m);

std::vector<Column> mask_to_columns(std::uint32_t mask);
std::uint32_t columns_to_mask(std::span<const Column> cols);

/// One canonical representative per isomorphism class, sorted by canonical
/// form. Full enumeration for m <= 4 (all nonempty sizes, or one size k);
/// for m = 5 only slices with k <= 7 or k >= 24 are in reach.
std::vector<ColumnSet> enumerate_classes(int m, std::optional<int> k = std::nullopt);

struct LatticeNode {
    int k = 0;
    ColumnSet canonical;
    WordLengthPattern pattern;
    int resolution = 0;
    bool ma = false;  ///< aberration-minimum among the classes of this size
};

/// The inclusion graph of isomorphism classes: one node per class (the empty
/// design included), one edge per "add one column" relation between classes
/// of consecutive sizes.
struct DesignLattice {
    int m = 0;
    std::vector<LatticeNode> nodes;               ///< sorted by (k, canonical)
    std::vector<std::pair<int, int>> edges;       ///< node indices, size k -> k+1

    std::vector<int> nodes_at(int k) const;
    /// "k,parent,child" lines; sets render as space-joined words.
    std::string edge_list() const;
};

DesignLattice build_lattice(int m = 4);

}  // namespace fracfact

#endif
