// Python bindings for the design toolkit. Columns cross the boundary as
// letter words ("ABC"), designs as lists of words, and patterns as lists of
// Python ints (exact, arbitrary precision).

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fracfact/construct.hpp"
#include "fracfact/design.hpp"
#include "fracfact/enumerate.hpp"
#include "fracfact/errors.hpp"
#include "fracfact/isomorphism.hpp"
#include "fracfact/matrix.hpp"
#include "fracfact/verify.hpp"
#include "fracfact/wlp.hpp"
#include "fracfact/wlpp.hpp"

namespace py = pybind11;
using namespace fracfact;

namespace {

Design make_design(const std::vector<std::string>& words, int m) {
    std::vector<Column> cols;
    int mm = m;
    if (mm == 0) {
        // infer from the highest letter across all words
        std::string joined;
        for (std::size_t i = 0; i < words.size(); ++i) {
            if (i) joined += ',';
            joined += words[i];
        }
        return parse_design(joined, 0);
    }
    cols.reserve(words.size());
    for (const auto& w : words) cols.push_back(parse_column(w, mm));
    return Design(mm, std::move(cols));
}

ColumnSet make_set(const std::vector<std::string>& words, int m) {
    const Design d = make_design(words, m);
    return d.as_set();
}

std::vector<std::string> set_to_words(const ColumnSet& s) {
    auto cols = s.columns();
    std::sort(cols.begin(), cols.end(), column_display_less);
    std::vector<std::string> out;
    out.reserve(cols.size());
    for (Column c : cols) out.push_back(column_to_string(c));
    return out;
}

std::vector<std::string> design_to_words(const Design& d) {
    std::vector<std::string> out;
    out.reserve(d.k());
    for (Column c : d.columns()) out.push_back(column_to_string(c));
    return out;
}

py::int_ bigint_to_py(const BigInt& v) {
    return py::reinterpret_steal<py::int_>(
        PyLong_FromString(v.str().c_str(), nullptr, 10));
}

py::list wlp_to_py(const WordLengthPattern& w) {
    py::list out;
    for (const auto& a : w.counts()) out.append(bigint_to_py(a));
    return out;
}

py::list poly_to_py(const WlpPolynomial& p) {
    py::list out;
    for (int i = 0; i <= p.degree(); ++i) out.append(bigint_to_py(p.coeff(i)));
    return out;
}

WlpPolynomial poly_from_py(const py::sequence& coeffs) {
    std::vector<BigInt> c;
    c.reserve(py::len(coeffs));
    for (auto item : coeffs) c.emplace_back(py::str(item).cast<std::string>());
    return WlpPolynomial(std::move(c));
}

py::dict ma_result_to_py(const MaResult& res) {
    py::dict out;
    out["columns"] = design_to_words(res.design);
    out["generators"] = res.generators.to_string();
    out["wlp"] = wlp_to_py(res.pattern);
    out["resolution"] = res.pattern.resolution();
    out["certificate"] = to_string(res.certificate);
    py::list chain;
    for (MaCertificate c : res.certificate_chain) chain.append(to_string(c));
    out["certificate_chain"] = chain;
    out["tie_count"] = res.tie_count;
    out["ma_guaranteed"] = res.ma_guaranteed();
    return out;
}

}  // namespace

PYBIND11_MODULE(fracfact, mod) {
    mod.doc() = "Two-level fractional factorial designs: word-length patterns, "
                "minimum aberration construction and isomorphism enumeration";

    py::register_exception<CapabilityError>(mod, "CapabilityError", PyExc_RuntimeError);

    mod.def(
        "hamming_set", [](int m) { return set_to_words(hamming_set(m)); }, py::arg("m"),
        "All 2^m - 1 columns generated by m basic factors");
    mod.def(
        "even_set", [](int m) { return set_to_words(even_set(m)); }, py::arg("m"));
    mod.def(
        "odd_set", [](int m) { return set_to_words(odd_set(m)); }, py::arg("m"));

    mod.def(
        "column_product",
        [](const std::string& a, const std::string& b, int m) {
            if (m == 0) {
                int ma = 0;
                parse_columns(a + "," + b, ma);
                m = ma;
            }
            return column_to_string(column_product(parse_column(a, m), parse_column(b, m)));
        },
        py::arg("a"), py::arg("b"), py::arg("m") = 0,
        "Group product of two columns; \"I\" for the identity");

    mod.def(
        "rank",
        [](const std::vector<std::string>& cols, int m) { return make_set(cols, m).rank(); },
        py::arg("columns"), py::arg("m") = 0, "GF(2) rank of a column set");

    mod.def("min_rank_for_size", &min_rank_for_size, py::arg("h"),
            "Smallest possible rank of h distinct nonzero columns");

    mod.def(
        "subgroup_closure",
        [](const std::vector<std::string>& gens, int m) {
            return set_to_words(subgroup_closure(make_set(gens, m)));
        },
        py::arg("generators"), py::arg("m") = 0);

    mod.def(
        "are_isomorphic",
        [](const std::vector<std::string>& d1, const std::vector<std::string>& d2, int m) {
            int mm = m;
            if (mm == 0) mm = std::max(make_design(d1, 0).m(), make_design(d2, 0).m());
            const auto witness = find_isomorphism(make_design(d1, mm), make_design(d2, mm));
            return py::make_tuple(witness.has_value(),
                                  witness ? py::cast(witness->to_string()) : py::none());
        },
        py::arg("design1"), py::arg("design2"), py::arg("m") = 0,
        "(equivalent, witness map) under invertible column relabelings");

    mod.def(
        "canonical_form",
        [](const std::vector<std::string>& cols, int m) {
            return set_to_words(canonical_form(make_set(cols, m)));
        },
        py::arg("columns"), py::arg("m") = 0,
        "Lexicographically least relabeling of the column set (m <= 5)");

    mod.def(
        "defining_relation",
        [](const std::vector<std::string>& cols, int m) {
            const Design d = make_design(cols, m);
            py::list out;
            for (WordMask w : defining_relation(d)) {
                py::list members;
                WordMask ww = w;
                while (ww) {
                    members.append(std::countr_zero(ww));
                    ww &= ww - 1;
                }
                out.append(members);
            }
            return out;
        },
        py::arg("design"), py::arg("m") = 0,
        "Defining-relation words as lists of design column indices");

    mod.def(
        "wlp",
        [](const std::vector<std::string>& cols, int m) {
            return wlp_to_py(wlp(make_design(cols, m)));
        },
        py::arg("design"), py::arg("m") = 0, "Word-length pattern (a_1, ..., a_k)");

    mod.def(
        "resolution",
        [](const std::vector<std::string>& cols, int m) {
            return resolution(make_design(cols, m));
        },
        py::arg("design"), py::arg("m") = 0,
        "Shortest word length; 0 for designs with no words");

    mod.def(
        "compare_aberration",
        [](const std::vector<std::string>& d1, const std::vector<std::string>& d2, int m) {
            int mm = m;
            if (mm == 0) mm = std::max(make_design(d1, 0).m(), make_design(d2, 0).m());
            const auto order = compare_aberration(make_design(d1, mm), make_design(d2, mm));
            return order == std::strong_ordering::less    ? -1
                   : order == std::strong_ordering::greater ? 1
                                                            : 0;
        },
        py::arg("design1"), py::arg("design2"), py::arg("m") = 0,
        "-1 when design1 has smaller aberration, 1 when larger, 0 when equal");

    mod.def(
        "alias_chain",
        [](const std::vector<std::string>& cols, const std::string& c, int m) {
            const Design d = make_design(cols, m);
            const auto hist = alias_chain(d, parse_column(c, d.m()));
            py::dict out;
            for (std::size_t len = 0; len < hist.size(); ++len)
                if (hist[len]) out[py::int_(len)] = hist[len];
            return out;
        },
        py::arg("design"), py::arg("column"), py::arg("m") = 0,
        "Histogram {effect length: count} of the alias chain of a column (or \"I\")");

    mod.def(
        "complement_word_stats",
        [](const std::vector<std::string>& cols, int m) {
            const auto st = complement_word_stats(make_set(cols, m));
            py::dict out;
            out["h"] = st.h;
            out["a3"] = st.a3_bar;
            out["a3_prime"] = st.a3_prime_bar;
            out["eliminated"] = st.eliminated;
            return out;
        },
        py::arg("complement"), py::arg("m") = 0,
        "Length-3 word counts of H_m meeting the given complement set");

    mod.def(
        "saturated_wlpp", [](int m) { return poly_to_py(saturated_wlpp(m)); }, py::arg("m"),
        "Coefficients of P_m, the pattern polynomial of the saturated "
        "resolution-IV design");
    mod.def(
        "even_chain_poly", [](int m) { return poly_to_py(even_chain_poly(m)); }, py::arg("m"),
        "Coefficients of the even alias-chain polynomial Q_m");
    mod.def(
        "compose_wlpp",
        [](int m, const py::sequence& pe, int r) {
            return poly_to_py(compose_wlpp(m, poly_from_py(pe), r));
        },
        py::arg("m"), py::arg("p_e"), py::arg("r"),
        "P for O_m extended by r even columns with pattern polynomial p_e");
    mod.def(
        "poly_to_string",
        [](const py::sequence& coeffs) { return poly_from_py(coeffs).to_string(); },
        py::arg("coeffs"), "Render coefficients as \"1+14u^4+u^8\"");

    mod.def(
        "saturated_res_iv",
        [](int m) { return design_to_words(saturated_res_iv(m)); }, py::arg("m"),
        "O_m: the resolution-IV design of all odd columns");

    mod.def(
        "embed_into_even",
        [](const std::vector<std::string>& cols, int m) {
            return set_to_words(embed_into_even(make_design(cols, m)));
        },
        py::arg("design"), py::arg("m") = 0,
        "Image of a design of H_{m-1} inside the even columns of H_m");

    mod.def(
        "ma_design", [](int k, long n) { return ma_result_to_py(ma_design(k, n)); },
        py::arg("factors"), py::arg("runs"),
        "Minimum-aberration design for runs/2 <= factors <= runs-1");

    mod.def(
        "min_rank_search", [](int k, int m) { return ma_result_to_py(min_rank_search(k, m)); },
        py::arg("k"), py::arg("m"),
        "Aberration minimum over all minimum-rank complements");

    mod.def(
        "generators_of",
        [](const std::vector<std::string>& cols, int m) {
            return generators_of(make_design(cols, m)).to_string();
        },
        py::arg("design"), py::arg("m") = 0, "Generator notation I=...=...");

    mod.def(
        "design_from_generators",
        [](const std::string& text) {
            return design_to_words(parse_generators(text).closure_design());
        },
        py::arg("generators"), "Columns of the fraction written as I=...=...");

    mod.def(
        "enumerate_classes",
        [](int m, std::optional<int> k) {
            py::list out;
            for (const auto& cls : enumerate_classes(m, k)) out.append(set_to_words(cls));
            return out;
        },
        py::arg("m"), py::arg("k") = py::none(),
        "Canonical representative per isomorphism class");

    mod.def(
        "design_matrix",
        [](const std::vector<std::string>& cols, int m) {
            const auto mx = design_matrix(make_design(cols, m));
            py::list rows;
            for (long t = 0; t < mx.runs(); ++t) {
                py::list row;
                for (int c = 0; c < mx.k(); ++c) row.append(mx.entry(t, c));
                rows.append(row);
            }
            return py::make_tuple(mx.labels, rows);
        },
        py::arg("design"), py::arg("m") = 0, "(labels, rows of +1/-1)");

    mod.def(
        "verify_all",
        [](std::uint64_t seed) {
            const auto report = verify_all(seed);
            py::list out;
            for (const auto& c : report.checks)
                out.append(py::make_tuple(c.name, c.pass, c.detail));
            return out;
        },
        py::arg("seed") = kDefaultVerifySeed,
        "Run the self-verification suite; returns (name, pass, detail) tuples");
}
