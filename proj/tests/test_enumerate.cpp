#include <doctest.h>

#include "fracfact/construct.hpp"
#include "fracfact/enumerate.hpp"
#include "fracfact/errors.hpp"
#include "fracfact/isomorphism.hpp"

using namespace fracfact;

TEST_SUITE_BEGIN("enumerate");

TEST_CASE("class counts for 16 runs") {
    const auto all = enumerate_classes(4);
    CHECK(all.size() == 45);

    CHECK(enumerate_classes(4, 9).size() == 5);
    CHECK(enumerate_classes(4, 3).size() == 2);
    CHECK(enumerate_classes(4, 5).size() == 4);
    CHECK(enumerate_classes(4, 10).size() == 4);

    // complement symmetry of the per-size profile
    for (int k = 1; k <= 14; ++k)
        CHECK(enumerate_classes(4, k).size() == enumerate_classes(4, 15 - k).size());
}

TEST_CASE("representatives are canonical and pairwise distinct") {
    const auto nine = enumerate_classes(4, 9);
    for (const auto& cls : nine) CHECK(canonical_form(cls) == cls);
    for (std::size_t i = 0; i < nine.size(); ++i)
        for (std::size_t j = i + 1; j < nine.size(); ++j) {
            CHECK(nine[i] != nine[j]);
            CHECK(!are_isomorphic(Design(4, nine[i].columns()), Design(4, nine[j].columns())));
        }
}

TEST_CASE("the two three-column classes") {
    const auto three = enumerate_classes(4, 3);
    REQUIRE(three.size() == 2);
    CHECK(are_isomorphic(Design(4, three[0].columns()), parse_design("A,B,AB", 4)));
    CHECK(are_isomorphic(Design(4, three[1].columns()), parse_design("A,B,C", 4)));
}

TEST_CASE("orbit sizes partition the subset space") {
    const auto sw = sweep_classes(4);
    std::uint64_t total = 0;
    for (auto s : sw.orbit_size) {
        total += s;
        CHECK(20160 % s == 0);  // orbit-stabilizer
    }
    CHECK(total == (1u << 15));
    CHECK(sw.classes() == 46);
}

TEST_CASE("sweep canonical masks agree with the exhaustive canonical form") {
    const auto sw = sweep_classes(4);
    // spot-check one orbit per size
    std::vector<bool> seen(16, false);
    for (std::uint32_t cm : sw.canonical_mask) {
        if (cm == 0) continue;
        const int k = std::popcount(cm);
        if (seen[k]) continue;
        seen[k] = true;
        const ColumnSet rep(4, mask_to_columns(cm));
        CHECK(canonical_form(rep) == rep);
    }
}

TEST_CASE("five-run slices of the 32-run space") {
    // three columns: the independent triple and the closed triple
    CHECK(enumerate_classes(5, 3).size() == 2);
    // complement slices reach the same counts by duality
    CHECK(enumerate_classes(5, 28).size() == 2);
    CHECK_THROWS_AS(enumerate_classes(5, 15), CapabilityError);
    CHECK_THROWS_AS(enumerate_classes(5), CapabilityError);
    CHECK_THROWS_AS(enumerate_classes(6, 3), CapabilityError);
}

TEST_CASE("lattice structure") {
    const auto lat = build_lattice(4);
    CHECK(lat.nodes.size() == 46);

    std::vector<int> per_k(16, 0);
    for (const auto& node : lat.nodes) per_k[node.k]++;
    CHECK(per_k == std::vector<int>{1, 1, 1, 2, 3, 4, 5, 6, 6, 5, 4, 3, 2, 1, 1, 1});

    // one aberration minimum per size
    for (int k = 0; k <= 15; ++k) {
        int flags = 0;
        for (int i : lat.nodes_at(k))
            if (lat.nodes[i].ma) ++flags;
        CHECK(flags == 1);
    }

    // the resolution-IV node sits at k = 8 and is the minimum there
    bool found = false;
    for (int i : lat.nodes_at(8))
        if (lat.nodes[i].resolution == 4) {
            found = true;
            CHECK(lat.nodes[i].ma);
        }
    CHECK(found);

    // edges connect consecutive sizes; every non-full node has a child
    for (const auto& [a, b] : lat.edges) CHECK(lat.nodes[a].k + 1 == lat.nodes[b].k);
    for (int i = 0; i < static_cast<int>(lat.nodes.size()); ++i) {
        if (lat.nodes[i].k == 15) continue;
        bool has_child = false;
        for (const auto& [a, b] : lat.edges)
            if (a == i) has_child = true;
        CHECK(has_child);
    }

    // every minimum-aberration node above k=8 extends the resolution-IV node:
    // walk down parent edges along MA nodes
    for (int k = 9; k <= 15; ++k) {
        int ma_node = -1;
        for (int i : lat.nodes_at(k))
            if (lat.nodes[i].ma) ma_node = i;
        REQUIRE(ma_node >= 0);
        const Design d(4, lat.nodes[ma_node].canonical.columns());
        const auto o4 = saturated_res_iv(4);
        // contains a copy of O_4: some 8-subset has its pattern
        bool contains = false;
        const auto& cols = d.columns();
        std::uint32_t sub = (1u << 8) - 1;
        const auto o4_hist = word_length_histogram(o4.columns());
        while (true) {
            std::vector<Column> pick;
            for (int i = 0; i < d.k(); ++i)
                if (sub >> i & 1) pick.push_back(cols[i]);
            if (word_length_histogram(pick) == o4_hist) {
                contains = true;
                break;
            }
            const std::uint32_t u = sub & -sub;
            const std::uint32_t v = sub + u;
            if (v >= (1u << d.k())) break;
            sub = v | (((sub ^ v) / u) >> 2);
        }
        CHECK(contains);
    }
}

TEST_CASE("lattice edge list is stable text") {
    const auto lat = build_lattice(4);
    const auto text = lat.edge_list();
    CHECK(text.find("0,-,A\n") == 0);  // the empty design extends to the single k=1 class
    // each line has exactly two commas
    std::size_t pos = 0;
    for (std::size_t i = 0; i < 5; ++i) {
        const auto end = text.find('\n', pos);
        const auto line = text.substr(pos, end - pos);
        CHECK(std::count(line.begin(), line.end(), ',') == 2);
        pos = end + 1;
    }
}

TEST_SUITE_END();
