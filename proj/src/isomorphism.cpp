#include "fracfact/isomorphism.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "fracfact/errors.hpp"
#include "fracfact/wlp.hpp"

namespace fracfact {

namespace {

constexpr int kMaxIsoM = 5;  // |GL(6,2)| ~ 2*10^10: out of desk scale

void check_iso_m(int m) {
    if (m > kMaxIsoM)
        throw CapabilityError("isomorphism search is exhaustive over GL(m,2) and limited to m <= " +
                              std::to_string(kMaxIsoM));
}

/// Minimal xor basis: rows kept in descending order with distinct top bits.
struct XorBasis {
    std::vector<Column> rows;

    Column reduce(Column v) const {
        for (Column b : rows) v = std::min(v, v ^ b);
        return v;
    }
    /// Returns false when v was already in the span.
    bool insert(Column v) {
        v = reduce(v);
        if (!v) return false;
        rows.push_back(v);
        std::sort(rows.rbegin(), rows.rend());
        return true;
    }
};

/// DFS over basis images. span_mask has bit x set iff x is in the span of
/// the images chosen so far (identity included).
void gl_dfs(int m, int depth, LinearMap& map, std::uint64_t span_mask,
            const std::function<void(const LinearMap&)>& visit) {
    if (depth == m) {
        visit(map);
        return;
    }
    const Column n = 1u << m;
    for (Column img = 1; img < n; ++img) {
        if (span_mask >> img & 1) continue;  // dependent on earlier images
        map.basis_image[depth] = img;
        std::uint64_t grown = span_mask;
        for (Column x = 0; x < n; ++x)
            if (span_mask >> x & 1) grown |= 1ULL << (x ^ img);
        gl_dfs(m, depth + 1, map, grown, visit);
    }
}

/// Complete an independent list to a full basis of GF(2)^m, preferring the
/// smallest unused columns.
void extend_to_basis(int m, std::vector<Column>& vecs) {
    XorBasis basis;
    for (Column c : vecs) basis.insert(c);
    for (Column c = 1; static_cast<int>(vecs.size()) < m; ++c)
        if (basis.insert(c)) vecs.push_back(c);
}

/// Selection mask s over `vecs` with xor == target, by brute force
/// (|vecs| <= 5 here).
std::uint32_t solve_combination(std::span<const Column> vecs, Column target) {
    const int v = static_cast<int>(vecs.size());
    for (std::uint32_t s = 0; s < (1u << v); ++s) {
        Column x = 0;
        for (int j = 0; j < v; ++j)
            if (s >> j & 1) x ^= vecs[j];
        if (x == target) return s;
    }
    throw std::logic_error("target not in span");
}

}  // namespace

std::vector<Column> LinearMap::apply_sorted(std::span<const Column> cols) const {
    std::vector<Column> out;
    out.reserve(cols.size());
    for (Column c : cols) out.push_back(apply(c));
    std::sort(out.begin(), out.end());
    return out;
}

LinearMap LinearMap::identity(int m) {
    LinearMap t;
    t.m = m;
    for (int j = 0; j < m; ++j) t.basis_image[j] = 1u << j;
    return t;
}

std::string LinearMap::to_string() const {
    std::string out;
    for (int j = 0; j < m; ++j) {
        if (j) out += ", ";
        out += column_to_string(1u << j);
        out += "->";
        out += column_to_string(basis_image[j]);
    }
    return out;
}

void for_each_linear_map(int m, const std::function<void(const LinearMap&)>& visit) {
    if (m < 2) throw std::invalid_argument("need at least 2 basic factors");
    check_iso_m(m);
    LinearMap map;
    map.m = m;
    gl_dfs(m, 0, map, 1ULL, visit);  // span starts as {I}
}

std::optional<LinearMap> find_isomorphism(const Design& d1, const Design& d2) {
    if (d1.m() != d2.m())
        throw std::invalid_argument("designs live in different Hamming sets");
    const int m = d1.m();
    check_iso_m(m);
    if (d1.k() != d2.k()) return std::nullopt;
    if (d1.k() == 0) return LinearMap::identity(m);

    const int v = d1.rank();
    if (v != d2.rank()) return std::nullopt;
    if (wlp(d1) != wlp(d2)) return std::nullopt;  // cheap isomorphism invariant

    // Fix an independent v-tuple inside d1. Any isomorphism is determined on
    // span(d1) by where these land, and their images must be independent
    // columns of d2.
    std::vector<Column> base;
    {
        XorBasis basis;
        for (Column c : d1.columns())
            if (basis.insert(c)) {
                base.push_back(c);
                if (static_cast<int>(base.size()) == v) break;
            }
    }
    std::vector<std::uint32_t> combo(d1.k());
    for (int i = 0; i < d1.k(); ++i) combo[i] = solve_combination(base, d1.columns()[i]);

    const auto& cols2 = d2.columns();
    auto set2 = d2.as_set();

    std::vector<Column> img(v);
    std::optional<LinearMap> found;
    std::function<bool(int, std::uint64_t)> rec = [&](int depth, std::uint64_t span_mask) {
        if (depth == v) {
            for (int i = 0; i < d1.k(); ++i) {
                Column x = 0;
                std::uint32_t s = combo[i];
                while (s) {
                    x ^= img[std::countr_zero(s)];
                    s &= s - 1;
                }
                if (!set2.contains(x)) return false;
            }
            // Extend base -> img to a full GL(m,2) element for the witness.
            LinearMap t;
            t.m = m;
            std::vector<Column> dom = base, rng = img;
            extend_to_basis(m, dom);
            extend_to_basis(m, rng);
            for (int j = 0; j < m; ++j) {
                const std::uint32_t s = solve_combination(dom, 1u << j);
                Column y = 0;
                for (int t2 = 0; t2 < m; ++t2)
                    if (s >> t2 & 1) y ^= rng[t2];
                t.basis_image[j] = y;
            }
            found = t;
            return true;
        }
        for (Column c : cols2) {
            if (span_mask >> c & 1) continue;
            img[depth] = c;
            std::uint64_t grown = span_mask;
            for (Column x = 0; x < (1u << m); ++x)
                if (span_mask >> x & 1) grown |= 1ULL << (x ^ c);
            if (rec(depth + 1, grown)) return true;
        }
        return false;
    };
    rec(0, 1ULL);
    return found;
}

ColumnSet canonical_form(const ColumnSet& s) {
    check_iso_m(s.m());
    if (s.empty()) return s;
    const auto& cols = s.columns();
    std::vector<Column> best = cols;
    std::vector<Column> buf(cols.size());
    for_each_linear_map(s.m(), [&](const LinearMap& t) {
        for (std::size_t i = 0; i < cols.size(); ++i) buf[i] = t.apply(cols[i]);
        std::sort(buf.begin(), buf.end());
        if (buf < best) best = buf;
    });
    return ColumnSet(s.m(), std::move(best));
}

ColumnSet canonical_form(const Design& d) { return canonical_form(d.as_set()); }

}  // namespace fracfact
