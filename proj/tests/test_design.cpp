#include <doctest.h>

#include <stdexcept>

#include "fracfact/design.hpp"

using namespace fracfact;

TEST_SUITE_BEGIN("gf2");

TEST_CASE("column text round trip") {
    CHECK(column_to_string(parse_column("ABC", 4)) == "ABC");
    CHECK(column_to_string(parse_column("I", 4)) == "I");
    CHECK(parse_column("A", 2) == 1u);
    CHECK(parse_column("AB", 2) == 3u);
    // J is the 9th letter (I skipped)
    CHECK(parse_column("J", 9) == 1u << 8);
}

TEST_CASE("column parsing rejects bad words") {
    CHECK_THROWS_AS(parse_column("AA", 4), std::invalid_argument);
    CHECK_THROWS_AS(parse_column("AE", 4), std::invalid_argument);  // beyond m
    CHECK_THROWS_AS(parse_column("aB", 4), std::invalid_argument);
    CHECK_THROWS_AS(parse_column("", 4), std::invalid_argument);
    CHECK_THROWS_AS(parse_column("AIB", 4), std::invalid_argument);  // I only stands alone
}

TEST_CASE("column product") {
    const int m = 4;
    // ABC x ABD = CD
    CHECK(column_product(parse_column("ABC", m), parse_column("ABD", m)) ==
          parse_column("CD", m));
    // self product is the identity
    CHECK(column_product(parse_column("ACD", m), parse_column("ACD", m)) == kIdentity);
    // disjoint supports concatenate
    CHECK(column_product(parse_column("A", m), parse_column("BC", m)) == parse_column("ABC", m));
}

TEST_CASE("hamming set") {
    CHECK(hamming_set(2).columns() == std::vector<Column>{1, 2, 3});
    CHECK(hamming_set(4).size() == 15);
    CHECK(hamming_set(5).size() == 31);
    CHECK(to_string(hamming_set(4)) == "A,B,C,D,AB,AC,AD,BC,BD,CD,ABC,ABD,ACD,BCD,ABCD");
    CHECK_THROWS_AS(hamming_set(1), std::invalid_argument);
    CHECK_THROWS_AS(hamming_set(17), std::invalid_argument);
}

TEST_CASE("even and odd sets partition H_m") {
    CHECK(to_string(even_set(4)) == "AB,AC,AD,BC,BD,CD,ABCD");
    CHECK(to_string(odd_set(4)) == "A,B,C,D,ABC,ABD,ACD,BCD");
    CHECK(to_string(even_set(3)) == "AB,AC,BC");
    for (int m = 2; m <= 6; ++m) {
        const auto ev = even_set(m), od = odd_set(m);
        CHECK(ev.size() == (1 << (m - 1)) - 1);
        CHECK(od.size() == (1 << (m - 1)));
        for (Column c : ev.columns()) CHECK(!od.contains(c));
    }
}

TEST_CASE("parity of products") {
    const int m = 4;
    for (Column a = 1; a < (1u << m); ++a)
        for (Column b = 1; b < (1u << m); ++b) {
            if (a == b) continue;
            const Column p = column_product(a, b);
            const bool even_expected = column_is_even(a) == column_is_even(b);
            CHECK(column_is_even(p) == even_expected);
        }
}

TEST_CASE("the column group is abelian with self-inverse elements") {
    for (Column a = 0; a < 16; ++a) {
        CHECK(column_product(a, a) == kIdentity);
        CHECK(column_product(a, kIdentity) == a);
        for (Column b = 0; b < 16; ++b) {
            CHECK(column_product(a, b) == column_product(b, a));
            for (Column c = 0; c < 16; c += 5)
                CHECK(column_product(column_product(a, b), c) ==
                      column_product(a, column_product(b, c)));
        }
    }
}

TEST_CASE("rank examples") {
    CHECK(parse_column_set("AB,AC,BC").rank() == 2);
    CHECK(parse_column_set("AB,AC,ABCD").rank() == 3);
    CHECK(parse_column_set("AB,AC,AD,BC,BD,CD,ABCD").rank() == 3);  // E_4
    CHECK(ColumnSet(4, {}).rank() == 0);
    CHECK(hamming_set(4).rank() == 4);
}

TEST_CASE("rank and size bounds") {
    // |s| <= 2^rank - 1 and rank <= min(|s|, m), across all subsets of H_3
    for (std::uint32_t mask = 0; mask < (1u << 7); ++mask) {
        std::vector<Column> cols;
        for (int b = 0; b < 7; ++b)
            if (mask >> b & 1) cols.push_back(static_cast<Column>(b + 1));
        const ColumnSet s(3, cols);
        CHECK(s.rank() <= std::min<int>(s.size(), 3));
        CHECK(s.size() <= (1 << s.rank()) - 1);
    }
}

TEST_CASE("minimum rank for a set size") {
    CHECK(min_rank_for_size(0) == 0);
    CHECK(min_rank_for_size(3) == 2);
    CHECK(min_rank_for_size(4) == 3);
    CHECK(min_rank_for_size(7) == 3);
    CHECK(min_rank_for_size(8) == 4);
    CHECK_THROWS_AS(min_rank_for_size(-1), std::invalid_argument);
}

TEST_CASE("subgroup closure") {
    CHECK(to_string(subgroup_closure(parse_column_set("A,B"))) == "A,B,AB");
    CHECK(to_string(subgroup_closure(parse_column_set("AB"))) == "AB");
    CHECK(subgroup_closure(parse_column_set("AE,BE,CE,DE")).size() == 15);
    CHECK_THROWS_AS(subgroup_closure(ColumnSet(3, {})), std::invalid_argument);

    // closure size is exactly 2^rank - 1
    for (std::uint32_t mask = 1; mask < (1u << 7); ++mask) {
        std::vector<Column> cols;
        for (int b = 0; b < 7; ++b)
            if (mask >> b & 1) cols.push_back(static_cast<Column>(b + 1));
        const ColumnSet s(3, cols);
        CHECK(subgroup_closure(s).size() == (1 << s.rank()) - 1);
    }
}

TEST_CASE("design invariants") {
    CHECK_THROWS_AS(Design(4, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Design(4, {0}), std::invalid_argument);
    CHECK_THROWS_AS(Design(4, {16}), std::invalid_argument);
    const Design d = parse_design("A,B,C,D,ABC,ABD,ACD,BCD,ABCD");
    CHECK(d.m() == 4);
    CHECK(d.k() == 9);
    CHECK(d.runs() == 16);
    CHECK(d.rank() == 4);
    CHECK(d.p() == 5);
    CHECK(to_string(d) == "A,B,C,D,ABC,ABD,ACD,BCD,ABCD");
}

TEST_CASE("design parse round trip keeps order") {
    const Design d = parse_design("B,AC,A");
    CHECK(d.columns() == std::vector<Column>{2, 5, 1});
    CHECK(parse_design(to_string(d), d.m()) == d);
}

TEST_CASE("complement") {
    const auto dbar = parse_design("A,B,C,D,ABC,ABD,ACD,BCD,ABCD").complement();
    CHECK(to_string(dbar) == "AB,AC,AD,BC,BD,CD");
    CHECK(ColumnSet(3, {}).complement().size() == 7);
}

TEST_SUITE_END();
