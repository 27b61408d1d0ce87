#include "fracfact/verify.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <sstream>

#include "fracfact/construct.hpp"
#include "fracfact/design.hpp"
#include "fracfact/enumerate.hpp"
#include "fracfact/isomorphism.hpp"
#include "fracfact/matrix.hpp"
#include "fracfact/wlp.hpp"
#include "fracfact/wlpp.hpp"

namespace fracfact {

namespace {

BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt num = 1;
    for (long long i = 1; i <= k; ++i) {
        num *= n - k + i;
        num /= i;
    }
    return num;
}

struct Checker {
    VerifyReport report;

    void add(const std::string& name, bool pass, const std::string& detail) {
        report.checks.push_back({name, pass, detail});
    }
};

std::vector<Column> mask_columns(std::uint32_t mask) { return mask_to_columns(mask); }

std::vector<std::uint64_t> hist_of_mask(std::uint32_t mask) {
    return word_length_histogram(mask_columns(mask));
}

/// Exhaustive aberration minimum over all C(2^m-1, k) subsets (m = 4 scale).
struct ExhaustiveMin {
    std::uint32_t best_mask = 0;
    std::vector<std::uint64_t> best_hist;
};

ExhaustiveMin exhaustive_ma(int m, int k) {
    const int nh = (1 << m) - 1;
    ExhaustiveMin out;
    std::uint32_t mask = (1u << k) - 1;
    while (true) {
        auto hist = hist_of_mask(mask);
        if (out.best_hist.empty() || hist < out.best_hist) {
            out.best_hist = std::move(hist);
            out.best_mask = mask;
        }
        const std::uint32_t u = mask & -mask;
        const std::uint32_t v = mask + u;
        if (v >= (1u << nh)) break;
        mask = v | (((mask ^ v) / u) >> 2);
    }
    return out;
}

std::string join_counts(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

// ---- gf2 checks ----

void check_product_parity(Checker& ck) {
    const int m = 4;
    bool ok = true;
    std::string detail = "all pairs of H_4";
    for (Column a = 1; a < (1u << m) && ok; ++a)
        for (Column b = 1; b < (1u << m); ++b) {
            const Column p = column_product(a, b);
            if (a == b && p != kIdentity) { ok = false; break; }
            if (a != b) {
                const bool expect_even = column_is_even(a) == column_is_even(b);
                if (column_is_even(p) != expect_even) {
                    ok = false;
                    detail = column_to_string(a) + " x " + column_to_string(b);
                    break;
                }
            }
        }
    ck.add("gf2/product-parity", ok, detail);
}

void check_rank_closure(Checker& ck, std::mt19937_64& rng) {
    bool ok = true;
    std::string detail = "all subsets of H_3 plus 500 random subsets of H_5";
    auto test_set = [&](int m, const std::vector<Column>& cols) {
        ColumnSet s(m, cols);
        const int r = s.rank();
        if (r > std::min<int>(s.size(), m)) return false;
        if (s.size() > (1 << r) - 1) return false;
        if (!s.empty()) {
            auto closed = subgroup_closure(s);
            if (closed.size() != (1 << r) - 1) return false;
            if (closed.rank() != r) return false;
        }
        return true;
    };
    for (std::uint32_t mask = 0; mask < (1u << 7) && ok; ++mask)
        ok = test_set(3, mask_columns(mask));
    for (int i = 0; i < 500 && ok; ++i) {
        const auto mask = static_cast<std::uint32_t>(rng() & 0x7fffffffu);
        ok = test_set(5, mask_columns(mask));
    }
    ck.add("gf2/rank-and-closure-bounds", ok, detail);
}

void check_odd_even_partition(Checker& ck) {
    bool ok = true;
    for (int m = 2; m <= 6 && ok; ++m) {
        auto ev = even_set(m), od = odd_set(m);
        ok = ev.size() == (1 << (m - 1)) - 1 && od.size() == (1 << (m - 1));
        for (Column c : ev.columns()) ok = ok && !od.contains(c);
        ok = ok && ev.size() + od.size() == hamming_set(m).size();
    }
    ck.add("gf2/odd-even-partition", ok, "m = 2..6");
}

void check_classes_m4(Checker& ck, const ClassSweep& sw) {
    int nonempty = 0;
    for (std::uint32_t cm : sw.canonical_mask)
        if (cm != 0) ++nonempty;
    std::uint64_t total = 0;
    bool divides = true;
    for (std::uint64_t s : sw.orbit_size) {
        total += s;
        if (20160 % s != 0) divides = false;  // |GL(4,2)| = 20160
    }
    const bool ok = nonempty == 45 && total == (1u << 15) && divides;
    ck.add("gf2/isomorphism-classes-m4", ok,
           std::to_string(nonempty) + " nonempty classes, orbit sizes sum to " +
               std::to_string(total));
}

void check_complement_involution(Checker& ck, const ClassSweep& sw) {
    // Complementation must be a well-defined involution on classes.
    const std::uint32_t full = (1u << 15) - 1;
    bool ok = true;
    std::vector<std::int32_t> comp_class(sw.classes(), -1);
    for (std::uint32_t mask = 0; mask <= full && ok; ++mask) {
        const auto cls = sw.class_of[mask];
        const auto cc = sw.class_of[full & ~mask];
        if (comp_class[cls] < 0) comp_class[cls] = cc;
        else if (comp_class[cls] != cc) ok = false;
    }
    for (int c = 0; c < sw.classes() && ok; ++c)
        ok = comp_class[comp_class[c]] == c;
    ck.add("gf2/complement-equivalence-m4", ok, "exhaustive over 2^15 subsets");
}

// ---- wlp checks ----

void check_word_counts_m4(Checker& ck) {
    bool ok = true;
    std::string detail = "sum a_i = 2^p - 1 over all 2^15-1 subsets";
    for (std::uint32_t mask = 1; mask < (1u << 15) && ok; ++mask) {
        auto cols = mask_columns(mask);
        auto hist = word_length_histogram(cols);
        std::uint64_t sum = 0;
        for (std::size_t i = 1; i < hist.size(); ++i) sum += hist[i];
        const int p = static_cast<int>(cols.size()) - gf2_rank(cols);
        if (sum != (1ull << p) - 1) {
            ok = false;
            detail = "failed at subset mask " + std::to_string(mask);
        }
        if (hist[1] != 0) ok = false;  // distinct columns admit no length-1 word
    }
    ck.add("wlp/word-count-m4", ok, detail);
}

void check_chain_structure(Checker& ck) {
    // Main-effect and even-chain regularities of O_m, m = 3..5.
    bool ok_main = true, ok_even = true, ok_balance = true;
    std::string where = "m = 3..5";
    for (int m = 3; m <= 5; ++m) {
        const Design om = saturated_res_iv(m);
        const long long l = 1 << (m - 1);
        auto pattern = wlp(om);

        // every factor's chain: c_{2r+1} = C(l, 2r+1) / l
        for (int j = 0; j < om.k() && ok_main; ++j) {
            auto chain = alias_chain_of_factor(om, j);
            for (long long r = 0; 2 * r + 1 <= l; ++r) {
                const BigInt expect = binomial(l, 2 * r + 1) / l;
                if (BigInt(chain[2 * r + 1]) != expect) {
                    ok_main = false;
                    where = "m=" + std::to_string(m) + " factor " + std::to_string(j);
                    break;
                }
            }
        }

        // all even chains identical and equal to Q_m
        const auto q = even_chain_poly(m);
        std::vector<std::uint64_t> first;
        const auto even_cols = even_set(m).columns();
        for (Column c : even_cols) {
            auto chain = alias_chain(om, c);
            if (first.empty()) first = chain;
            if (chain != first) ok_even = false;
            for (int i = 0; i <= om.k() && ok_even; ++i)
                if (BigInt(chain[i]) != q.coeff(i)) ok_even = false;
        }

        // a_{2r} + (l-1) b_{2r} = C(l, 2r)
        for (long long r = 1; 2 * r <= l && ok_balance; ++r) {
            const BigInt a2r = 2 * r <= pattern.k() ? pattern.a(static_cast<int>(2 * r)) : 0;
            if (a2r + (l - 1) * q.coeff(static_cast<int>(2 * r)) != binomial(l, 2 * r))
                ok_balance = false;
        }
    }
    ck.add("wlp/main-effect-chain-counts", ok_main, where);
    ck.add("wlp/even-chains-identical", ok_even, "m = 3..5, all even columns vs Q_m");
    ck.add("wlp/chain-word-balance", ok_balance, "m = 3..5, all word lengths");
}

void check_letter_frequencies(Checker& ck) {
    bool ok = true;
    std::string where = "O_4 and O_5";
    for (int m = 4; m <= 5 && ok; ++m) {
        const Design om = saturated_res_iv(m);
        const auto freq = letter_frequencies(om);
        const auto pattern = wlp(om);
        const long long l = om.k();
        for (int len = 1; len <= om.k() && ok; ++len) {
            std::uint64_t sum = 0;
            for (int j = 0; j < om.k(); ++j) sum += freq[len][j];
            if (BigInt(sum) != BigInt(len) * pattern.a(len)) ok = false;
            // the chains are balanced, so every letter appears equally often
            for (int j = 1; j < om.k() && ok; ++j)
                if (freq[len][j] != freq[len][0]) ok = false;
            if (ok && pattern.a(len) > 0 && BigInt(freq[len][0]) * l != BigInt(len) * pattern.a(len))
                ok = false;
        }
    }
    ck.add("wlp/letter-frequency-sums", ok, where);
}

void check_wlp_class_invariant(Checker& ck, const ClassSweep& sw) {
    // WLP must be constant on every isomorphism class.
    std::vector<std::vector<std::uint64_t>> class_hist(sw.classes());
    bool ok = true;
    for (std::uint32_t mask = 0; mask < (1u << 15) && ok; ++mask) {
        auto hist = hist_of_mask(mask);
        auto& ref = class_hist[sw.class_of[mask]];
        if (ref.empty()) ref = std::move(hist);
        else if (ref != hist) ok = false;
    }
    ck.add("wlp/isomorphism-invariant-m4", ok, "exhaustive over 2^15 subsets");
}

void check_complement_word_identities(Checker& ck, std::mt19937_64& rng) {
    const int m = 5;
    const long long n = 1 << m;
    // independent census of the length-3 words of H_5
    std::vector<std::array<Column, 3>> triples;
    for (Column x = 1; x < n; ++x)
        for (Column y = x + 1; y < n; ++y) {
            const Column z = x ^ y;
            if (z > y) triples.push_back({x, y, z});
        }
    bool ok = triples.size() == 155;  // C(31,2)/3
    std::string detail = "1000 seeded subsets of H_5";
    for (int trial = 0; trial < 1000 && ok; ++trial) {
        const auto mask = static_cast<std::uint32_t>(rng() & 0x7fffffffu);
        ColumnSet dbar(m, mask_columns(mask));
        const auto st = complement_word_stats(dbar);
        long long elim = 0;
        for (const auto& t : triples)
            if (dbar.contains(t[0]) || dbar.contains(t[1]) || dbar.contains(t[2])) ++elim;
        const long long h = st.h;
        if (st.eliminated != elim ||
            st.eliminated != h * (n - h - 1) / 2 + st.a3_bar ||
            st.a3_prime_bar + 3 * st.a3_bar != h * (h - 1) / 2) {
            ok = false;
            detail = "failed at subset mask " + std::to_string(mask);
        }
    }
    ck.add("wlp/complement-word-identities-h5", ok, detail);
}

// ---- polynomial checks ----

void check_theorem3(Checker& ck, std::mt19937_64& rng) {
    // m = 4: every subset of E_4.
    bool ok4 = true;
    std::string d4 = "all 128 subsets of E_4";
    {
        const auto o4 = saturated_res_iv(4);
        const auto e4 = even_set(4).columns();
        for (std::uint32_t em = 0; em < (1u << e4.size()) && ok4; ++em) {
            std::vector<Column> e_cols;
            for (std::size_t i = 0; i < e4.size(); ++i)
                if (em >> i & 1) e_cols.push_back(e4[i]);
            const int r = static_cast<int>(e_cols.size());
            auto e_hist = word_length_histogram(e_cols);
            e_hist.resize(std::max<std::size_t>(e_hist.size(), 1));
            std::vector<BigInt> pe_c(r + 1, 0);
            pe_c[0] = 1;
            for (int i = 1; i <= r && i < static_cast<int>(e_hist.size()); ++i) pe_c[i] = e_hist[i];
            const WlpPolynomial pe{std::move(pe_c)};

            auto cols = o4.columns();
            cols.insert(cols.end(), e_cols.begin(), e_cols.end());
            const auto brute = wlp(Design(4, cols));
            const auto composed = compose_wlpp(4, pe, r).to_wlp(static_cast<int>(cols.size()));
            if (brute != composed) {
                ok4 = false;
                d4 = "failed at e mask " + std::to_string(em);
            }
        }
    }
    ck.add("wlpp/theorem3-composition-m4", ok4, d4);

    // m = 5: seeded random subsets of E_5.
    bool ok5 = true;
    std::string d5 = "500 seeded subsets of E_5";
    {
        const auto o5 = saturated_res_iv(5);
        const auto e5 = even_set(5).columns();
        for (int trial = 0; trial < 500 && ok5; ++trial) {
            const auto em = static_cast<std::uint32_t>(rng() & ((1u << e5.size()) - 1));
            std::vector<Column> e_cols;
            for (std::size_t i = 0; i < e5.size(); ++i)
                if (em >> i & 1) e_cols.push_back(e5[i]);
            const int r = static_cast<int>(e_cols.size());
            auto e_hist = word_length_histogram(e_cols);
            std::vector<BigInt> pe_c(r + 1, 0);
            pe_c[0] = 1;
            for (int i = 1; i <= r && i < static_cast<int>(e_hist.size()); ++i) pe_c[i] = e_hist[i];
            const WlpPolynomial pe{std::move(pe_c)};

            auto cols = o5.columns();
            cols.insert(cols.end(), e_cols.begin(), e_cols.end());
            const auto brute = wlp(Design(5, cols));
            const auto composed = compose_wlpp(5, pe, r).to_wlp(static_cast<int>(cols.size()));
            if (brute != composed) {
                ok5 = false;
                d5 = "failed at e mask " + std::to_string(em);
            }
        }
    }
    ck.add("wlpp/theorem3-composition-m5", ok5, d5);
}

void check_sk_identity(Checker& ck) {
    bool ok = true;
    for (int m = 3; m <= 6 && ok; ++m) {
        const long long l = 1LL << (m - 1);
        const auto p = saturated_wlpp(m);
        const auto q = even_chain_poly(m);
        for (long long i = 0; i <= l && ok; ++i) {
            const BigInt lhs = p.coeff(static_cast<int>(i)) + (l - 1) * q.coeff(static_cast<int>(i));
            const BigInt rhs = i % 2 == 0 ? binomial(l, i) : 0;
            if (lhs != rhs) ok = false;
        }
    }
    ck.add("wlpp/sk-identity", ok, "m = 3..6, every coefficient");
}

void check_saturated_recurrence(Checker& ck) {
    bool ok = true;
    std::string detail = "recurrence vs brute force, m = 3..5";
    for (int m = 3; m <= 5 && ok; ++m) {
        const auto om = saturated_res_iv(m);
        if (saturated_wlpp(m).to_wlp(om.k()) != wlp(om)) {
            ok = false;
            detail = "mismatch at m=" + std::to_string(m);
        }
    }
    bool shape_ok = true;
    for (int m = 3; m <= 8; ++m) {
        const auto p = saturated_wlpp(m);
        for (int i = 1; i <= p.degree(); i += 2)
            if (p.coeff(i) != 0) shape_ok = false;
        if (p.coeff(2) != 0) shape_ok = false;
    }
    bool sum_ok = true;
    for (int m = 3; m <= 6; ++m) {
        const auto p = saturated_wlpp(m);
        BigInt sum = 0;
        for (int i = 0; i <= p.degree(); ++i) sum += p.coeff(i);
        const long long q = (1LL << (m - 1)) - m;
        if (sum != BigInt(1) << q) sum_ok = false;
    }
    ck.add("wlpp/saturated-recurrence-vs-brute", ok, detail);
    ck.add("wlpp/saturated-resolution-iv-shape", shape_ok, "no odd or u^2 terms, m = 3..8");
    ck.add("wlpp/saturated-word-total", sum_ok, "coefficients sum to 2^q, m = 3..6");
}

// ---- construction checks ----

void check_theorem1_and_ma(Checker& ck, std::map<int, ExhaustiveMin>& exhaustive) {
    bool rank_ok = true, match_ok = true;
    std::string rank_detail = "n=16, k=8..14: exhaustive MA complement has minimum rank";
    std::string match_detail = "ma_design(k,16) meets the exhaustive minimum for every k";
    for (int k = 8; k <= 14; ++k) {
        const auto& ex = exhaustive.at(k);
        auto comp_cols = mask_columns(~ex.best_mask & ((1u << 15) - 1));
        const int h = 15 - k;
        if (gf2_rank(comp_cols) != min_rank_for_size(h)) {
            rank_ok = false;
            rank_detail = "rank mismatch at k=" + std::to_string(k);
        }
        const auto built = ma_design(k, 16);
        auto built_hist = word_length_histogram(built.design.columns());
        if (built_hist != ex.best_hist) {
            match_ok = false;
            match_detail = "pattern mismatch at k=" + std::to_string(k);
        }
    }
    ck.add("construct/theorem1-minimum-rank-complement", rank_ok, rank_detail);
    ck.add("construct/ma-design-matches-exhaustive-n16", match_ok, match_detail);
}

void check_theorem2(Checker& ck, std::map<int, ExhaustiveMin>& exhaustive,
                    const ClassSweep& sw) {
    // The resolution-IV pattern identifies O_4's class uniquely at k=8.
    const auto o4 = saturated_res_iv(4);
    const auto o4_hist = word_length_histogram(o4.columns());
    int k8_with_o4_hist = 0;
    for (std::uint32_t cm : sw.canonical_mask)
        if (std::popcount(cm) == 8 && hist_of_mask(cm) == o4_hist) ++k8_with_o4_hist;
    bool ok = k8_with_o4_hist == 1;
    std::string detail = "every exhaustive MA design for k=9..14 holds a copy of O_4";
    for (int k = 9; k <= 14 && ok; ++k) {
        const std::uint32_t mask = exhaustive.at(k).best_mask;
        const auto cols = mask_columns(mask);
        bool found = false;
        // all 8-subsets of the design's columns
        std::uint32_t sub = (1u << 8) - 1;
        while (!found) {
            std::vector<Column> pick;
            for (int i = 0; i < k; ++i)
                if (sub >> i & 1) pick.push_back(cols[i]);
            if (word_length_histogram(pick) == o4_hist) found = true;
            const std::uint32_t u = sub & -sub;
            const std::uint32_t v = sub + u;
            if (v >= (1u << k)) break;
            sub = v | (((sub ^ v) / u) >> 2);
        }
        if (!found) {
            ok = false;
            detail = "no O_4 copy inside the MA design at k=" + std::to_string(k);
        }
    }
    ck.add("construct/theorem2-contains-O4", ok, detail);
}

void check_theorem4(Checker& ck) {
    bool ok = true;
    std::string detail = "ma_design(8+r,16) minimal over all e in E_4, r = 1..7";
    const auto o4 = saturated_res_iv(4);
    const auto e4 = even_set(4).columns();
    for (int r = 1; r <= 7 && ok; ++r) {
        std::vector<std::uint64_t> best;
        for (std::uint32_t em = 0; em < (1u << 7); ++em) {
            if (std::popcount(em) != r) continue;
            auto cols = o4.columns();
            for (std::size_t i = 0; i < e4.size(); ++i)
                if (em >> i & 1) cols.push_back(e4[i]);
            auto hist = word_length_histogram(cols);
            if (best.empty() || hist < best) best = std::move(hist);
        }
        const auto built = ma_design(8 + r, 16);
        if (word_length_histogram(built.design.columns()) != best) {
            ok = false;
            detail = "suboptimal at r=" + std::to_string(r);
        }
    }
    ck.add("construct/theorem4-best-even-extension", ok, detail);
}

void check_construction_routes(Checker& ck) {
    // The composed pattern must agree with direct counting wherever counting
    // is feasible.
    bool ok = true;
    std::string detail = "n=16 k=8..15 and n=32 k=16..31";
    for (long n : {16L, 32L}) {
        for (int k = static_cast<int>(n / 2); k <= n - 1 && ok; ++k) {
            const auto res = ma_design(k, n);
            const auto counted = wlp(res.design);
            if (counted != res.pattern) {
                ok = false;
                detail = "route mismatch at k=" + std::to_string(k) + ", n=" + std::to_string(n);
            }
        }
    }
    ck.add("construct/pattern-routes-agree", ok, detail);
}

void check_generator_roundtrip(Checker& ck, std::mt19937_64& rng) {
    bool ok = true;
    std::string detail = "d1, d2, O_4, H_4 and 50 random full-rank designs in H_4";
    std::vector<Design> cases = {
        parse_design("A,B,C,D,ABC,ABD,ACD,BCD,ABCD"),
        parse_design("A,BC,BD,CD,ABC,ABD,ACD,BCD,ABCD"),
        saturated_res_iv(4),
        Design(4, hamming_set(4).columns()),
    };
    for (int i = 0; i < 50; ++i) {
        const auto mask = static_cast<std::uint32_t>(rng() & 0x7fffu);
        auto cols = mask_columns(mask);
        if (cols.size() < 4 || gf2_rank(cols) != 4) continue;
        cases.emplace_back(4, cols);
    }
    for (const auto& d : cases) {
        const auto gs = generators_of(d);
        const auto rebuilt = gs.closure_design();
        if (!find_isomorphism(d, rebuilt) || wlp(d) != wlp(rebuilt)) {
            ok = false;
            detail = "round-trip failed for " + to_string(d);
            break;
        }
    }
    ck.add("construct/generator-roundtrip", ok, detail);
}

void check_example_2_28_23(Checker& ck) {
    const auto res = ma_design(28, 32);
    const auto comp = res.design.complement();
    bool ok = comp.size() == 3 && comp.rank() == 2;
    std::string detail = "complement " + to_string(comp) + " of rank " +
                         std::to_string(comp.rank());
    if (ok) {
        const Design comp_design(5, comp.columns());
        const Design ref = parse_design("AB,AC,BC", 5);
        ok = find_isomorphism(comp_design, ref).has_value();
        if (!ok) detail += "; not isomorphic to a rank-2 triple";
    }
    if (ok) {
        ok = wlp(res.design) == res.pattern;  // brute force over 2^23 words
        if (!ok) detail += "; composed pattern disagrees with counting";
    }
    ck.add("construct/ma-2^28-23", ok, detail);
}

// ---- enumeration checks ----

void check_lattice(Checker& ck, const ClassSweep& sw) {
    const auto lat = build_lattice(4);
    bool ok = static_cast<int>(lat.nodes.size()) == 46;
    std::string detail = "46 nodes";

    std::vector<int> per_k(16, 0);
    for (const auto& node : lat.nodes) per_k[node.k]++;
    const std::vector<int> expect = {1, 1, 1, 2, 3, 4, 5, 6, 6, 5, 4, 3, 2, 1, 1, 1};
    if (per_k != expect) {
        ok = false;
        detail = "per-size counts " + join_counts(per_k);
    } else {
        detail += ", sizes " + join_counts(per_k);
    }
    for (int k = 0; k <= 15; ++k)
        if (per_k[k] != per_k[15 - k]) ok = false;

    // exactly one aberration minimum per size
    for (int k = 0; k <= 15 && ok; ++k) {
        int flags = 0;
        for (int i : lat.nodes_at(k)) flags += lat.nodes[i].ma ? 1 : 0;
        if (flags != 1) {
            ok = false;
            detail = "MA flags at k=" + std::to_string(k) + ": " + std::to_string(flags);
        }
    }

    // the circled node: a resolution-IV class at k=8
    bool has_res4 = false;
    for (int i : lat.nodes_at(8))
        if (lat.nodes[i].resolution == 4) has_res4 = true;
    if (!has_res4) {
        ok = false;
        detail = "no resolution-IV node at k=8";
    }

    // edges connect consecutive sizes and children extend parents
    for (const auto& [a, b] : lat.edges)
        if (lat.nodes[a].k + 1 != lat.nodes[b].k) ok = false;

    // orbit sizes partition the subset space
    std::uint64_t total = 0;
    for (auto s : sw.orbit_size) total += s;
    if (total != (1u << 15)) ok = false;

    ck.add("enumerate/lattice-m4", ok, detail);
}

void check_matrix_properties(Checker& ck) {
    bool ok = true;
    std::string detail = "d1 and the 2^12-8 construction";
    const std::vector<Design> cases = {
        parse_design("A,B,C,D,ABC,ABD,ACD,BCD,ABCD"),
        ma_design(12, 16).design,
    };
    for (const auto& d : cases) {
        const auto mx = design_matrix(d);
        const long n = mx.runs();
        // orthogonality of all column pairs
        for (int a = 0; a < mx.k() && ok; ++a)
            for (int b = a + 1; b < mx.k(); ++b) {
                long dot = 0;
                for (long t = 0; t < n; ++t) dot += mx.entry(t, a) * mx.entry(t, b);
                if (dot != 0) {
                    ok = false;
                    detail = "columns not orthogonal in " + to_string(d);
                    break;
                }
            }
        // every defining word multiplies to the all-+1 column
        for (WordMask w : defining_relation(d)) {
            for (long t = 0; t < n && ok; ++t) {
                int prod = 1;
                WordMask ww = w;
                while (ww) {
                    prod *= mx.entry(t, std::countr_zero(ww));
                    ww &= ww - 1;
                }
                if (prod != 1) {
                    ok = false;
                    detail = "word not realized in signs";
                }
            }
        }
    }
    ck.add("matrix/orthogonality-and-words", ok, detail);
}

}  // namespace

VerifyReport verify_all(std::uint64_t seed) {
    Checker ck;
    ck.report.seed = seed;
    std::mt19937_64 rng(seed);

    const ClassSweep sw = sweep_classes(4);
    std::map<int, ExhaustiveMin> exhaustive;
    for (int k = 8; k <= 14; ++k) exhaustive.emplace(k, exhaustive_ma(4, k));

    check_product_parity(ck);
    check_rank_closure(ck, rng);
    check_odd_even_partition(ck);
    check_classes_m4(ck, sw);
    check_complement_involution(ck, sw);

    check_word_counts_m4(ck);
    check_chain_structure(ck);
    check_letter_frequencies(ck);
    check_wlp_class_invariant(ck, sw);
    check_complement_word_identities(ck, rng);

    check_theorem3(ck, rng);
    check_sk_identity(ck);
    check_saturated_recurrence(ck);

    check_theorem1_and_ma(ck, exhaustive);
    check_theorem2(ck, exhaustive, sw);
    check_theorem4(ck);
    check_construction_routes(ck);
    check_generator_roundtrip(ck, rng);
    check_example_2_28_23(ck);

    check_lattice(ck, sw);
    check_matrix_properties(ck);

    return ck.report;
}

}  // namespace fracfact
