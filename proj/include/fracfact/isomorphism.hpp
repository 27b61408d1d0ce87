#ifndef FRACFACT_ISOMORPHISM_HPP
#define FRACFACT_ISOMORPHISM_HPP

#include <array>
#include <functional>
#include <optional>
#include <string>

#include "fracfact/design.hpp"

namespace fracfact {

/// Invertible linear column relabeling: an element of GL(m,2) given by the
/// images of the basic columns. Every design equivalence is one of these.
struct LinearMap {
    int m = 0;
    std::array<Column, kMaxBasics> basis_image{};

    Column apply(Column c) const {
        Column out = 0;
        while (c) {
            out ^= basis_image[std::countr_zero(c)];
            c &= c - 1;
        }
        return out;
    }

    std::vector<Column> apply_sorted(std::span<const Column> cols) const;

    static LinearMap identity(int m);
    /// "A->A, B->BCD, C->ACD, D->ABD"
    std::string to_string() const;
};

/// Visit every element of GL(m,2). |GL(5,2)| is just under 10^7, which is
/// the practical ceiling; m <= 5 enforced.
void for_each_linear_map(int m, const std::function<void(const LinearMap&)>& visit);

/// Invertible map sending the column set of d1 onto that of d2, if any.
/// Prunes by the cheap invariants (k, rank, word-length pattern) before
/// searching basis images among d2's columns. m <= 5.
std::optional<LinearMap> find_isomorphism(const Design& d1, const Design& d2);

inline bool are_isomorphic(const Design& d1, const Design& d2) {
    return find_isomorphism(d1, d2).has_value();
}

/// Lexicographically least image of the column set under all of GL(m,2).
/// Equal canonical forms <=> isomorphic designs. m <= 5.
ColumnSet canonical_form(const ColumnSet& s);
ColumnSet canonical_form(const Design& d);

}  // namespace fracfact

#endif
