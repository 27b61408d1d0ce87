#ifndef FRACFACT_CONSTRUCT_HPP
#define FRACFACT_CONSTRUCT_HPP

#include <string>
#include <utility>
#include <vector>

#include "fracfact/design.hpp"
#include "fracfact/wlp.hpp"
#include "fracfact/wlpp.hpp"

namespace fracfact {

/// The canonical fraction description: m basic factors plus one generator
/// word per added factor, I = xi'_1 B_{m+1} = xi'_2 B_{m+2} = ...
struct GeneratorSet {
    int m = 0;
    /// Original design columns relabeled as the basics (size m; identity for
    /// constructed designs).
    std::vector<Column> basis;
    /// One (factor label, word over the new basics) pair per added factor.
    std::vector<std::pair<std::string, Column>> assignments;

    int p() const { return static_cast<int>(assignments.size()); }
    /// "I=ABCE=ABDF=ACDG=BCDH"
    std::string to_string() const;
    /// The design {B_1,...,B_m, xi'_1,...,xi'_p} these generators define.
    Design closure_design() const;
};

/// What justifies the minimum-aberration claim of a construction result.
enum class MaCertificate {
    Saturated,           ///< k = n-1: all of H_m, the only class at that size
    ResolutionIvUnique,  ///< k = n/2: the unique resolution-IV design O_m
    ComplementPow2,      ///< h = 2^v-1 columns removed at minimum rank
    ExhaustiveSearch,    ///< aberration-minimum over every admissible complement
    Recursive,           ///< O_m u e with e an MA design one level down
};

std::string to_string(MaCertificate c);

struct MaResult {
    Design design;
    GeneratorSet generators;  ///< assignments empty when rank < m
    WordLengthPattern pattern;
    MaCertificate certificate = MaCertificate::Saturated;
    /// Certificate at each recursion level, outermost first.
    std::vector<MaCertificate> certificate_chain;
    /// Isomorphism classes tied at the minimum in the innermost search.
    long long tie_count = 1;

    /// The minimum-aberration claim holds whenever the innermost certificate
    /// is one of the four non-recursive kinds; recursion transfers it.
    bool ma_guaranteed() const;
};

/// O_m: the saturated resolution-IV design holding all 2^{m-1} odd columns.
/// It is the unique resolution-IV design with k = n/2, hence MA. m >= 3.
Design saturated_res_iv(int m);

/// Carry a design of H_{m-1} into the even columns E_m of H_m via
/// B'_j -> B_j B_m. Rank, word structure and pattern are preserved.
ColumnSet embed_into_even(const Design& d_prime);

/// Minimum-aberration design with k factors in n = 2^m runs, for the
/// screening range n/2 <= k <= n-1 (m >= 3). Built recursively:
/// k = n-1 -> H_m; k = n/2 -> O_m; otherwise O_m u (embedded MA design with
/// k - n/2 factors one level down), falling back to min_rank_search when the
/// subproblem leaves the screening range.
MaResult ma_design(int k, long n);

/// Aberration-minimum over every complement of minimum rank: fixes one
/// subgroup of rank v_h = ceil(log2(h+1)), enumerates its h-subsets as
/// candidate complements (when v_h = m this degenerates to the full
/// exhaustive search), and keeps the best design. Ties are reduced to
/// isomorphism classes (m <= 5) and broken by least canonical form.
MaResult min_rank_search(int k, int m);

/// Express an arbitrary full-rank design in canonical fraction form: pick m
/// independent columns greedily in ascending column order as the basics and
/// rewrite the remaining columns over them.
GeneratorSet generators_of(const Design& d);

/// Parse generator notation "I=ABCE=ABDF=..." back into a GeneratorSet.
/// The basic-factor count is recovered from the added-factor labels.
GeneratorSet parse_generators(std::string_view text);

}  // namespace fracfact

#endif
