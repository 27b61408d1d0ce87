#include <doctest.h>

#include <stdexcept>

#include "fracfact/construct.hpp"
#include "fracfact/wlpp.hpp"
#include "oracles.hpp"

using namespace fracfact;

namespace {

WlpPolynomial poly(std::vector<long long> coeffs) {
    std::vector<BigInt> c(coeffs.begin(), coeffs.end());
    return WlpPolynomial(std::move(c));
}

}  // namespace

TEST_SUITE_BEGIN("wlpp");

TEST_CASE("saturated patterns by recurrence") {
    CHECK(saturated_wlpp(3).to_string() == "1+u^4");
    CHECK(saturated_wlpp(4).to_string() == "1+14u^4+u^8");
    // a_4 = 140 for m=5; full vector frozen from the enumeration oracle
    CHECK(saturated_wlpp(5) ==
          poly({1, 0, 0, 0, 140, 0, 448, 0, 870, 0, 448, 0, 140, 0, 0, 0, 1}));
    CHECK_THROWS_AS(saturated_wlpp(2), std::invalid_argument);
}

TEST_CASE("saturated recurrence agrees with direct enumeration") {
    for (int m = 3; m <= 5; ++m) {
        const auto om = saturated_res_iv(m);
        auto expect = fracfact::testing::subset_enum_wlp(om.columns());
        const auto p = saturated_wlpp(m);
        for (int len = 1; len <= om.k(); ++len) CHECK(p.coeff(len) == BigInt(expect[len]));
    }
}

TEST_CASE("even chain polynomials") {
    CHECK(even_chain_poly(4).to_string() == "4u^2+8u^4+4u^6");
    CHECK(even_chain_poly(3).to_string() == "2u^2");
    CHECK(even_chain_poly(5) ==
          poly({0, 0, 8, 0, 112, 0, 504, 0, 800, 0, 504, 0, 112, 0, 8}));

    // Q_m matches the alias-chain histogram of an even column of O_m
    for (int m = 3; m <= 5; ++m) {
        const auto om = saturated_res_iv(m);
        const auto q = even_chain_poly(m);
        const auto even_cols = even_set(m).columns();
        for (Column c : even_cols) {
            const auto chain = alias_chain(om, c);
            for (std::size_t i = 0; i < chain.size(); ++i)
                CHECK(q.coeff(static_cast<int>(i)) == BigInt(chain[i]));
        }
    }
}

TEST_CASE("pattern polynomial identity with the even-subset sum") {
    for (int m = 3; m <= 6; ++m) {
        const long long l = 1LL << (m - 1);
        const auto p = saturated_wlpp(m);
        const auto q = even_chain_poly(m);
        for (int i = 0; i <= static_cast<int>(l); ++i) {
            BigInt rhs = 0;
            if (i % 2 == 0) {
                rhs = 1;
                for (int t = 1; t <= i; ++t) rhs = rhs * (l - t + 1) / t;
            }
            CHECK(p.coeff(i) + (l - 1) * q.coeff(i) == rhs);
        }
    }
}

TEST_CASE("composition reproduces the worked 2^12-8 polynomial") {
    const auto pd = compose_wlpp(4, poly({1, 0, 0, 0, 1}), 4);
    CHECK(pd.to_string() == "1+16u^3+39u^4+48u^5+48u^6+48u^7+39u^8+16u^9+u^12");
}

TEST_CASE("composition edge cases") {
    // r = 0: P_d = Q + (P - Q) = P_4
    CHECK(compose_wlpp(4, WlpPolynomial::one(), 0) == saturated_wlpp(4));
    // r = 1: P_4 + u Q_4, the 2^9-5 pattern
    const auto pd = compose_wlpp(4, WlpPolynomial::one(), 1);
    CHECK(pd.to_string() == "1+4u^3+14u^4+8u^5+4u^7+u^8");
    CHECK(pd.to_wlp(9).to_string() == "(0,0,4,14,8,0,4,1,0)");

    CHECK_THROWS_AS(compose_wlpp(4, poly({2}), 1), std::invalid_argument);
    CHECK_THROWS_AS(compose_wlpp(4, poly({1, 0, 0, 0, 1}), 2), std::invalid_argument);
    // an impossible P_e/r pairing surfaces as a negative coefficient
    CHECK_THROWS_AS(compose_wlpp(3, poly({1, 0, 50}), 2), std::invalid_argument);
}

TEST_CASE("conversions between patterns and polynomials") {
    const WordLengthPattern w(
        {BigInt(0), BigInt(0), BigInt(0), BigInt(14), BigInt(0), BigInt(0), BigInt(0), BigInt(1)});
    CHECK(WlpPolynomial::from_wlp(w).to_string() == "1+14u^4+u^8");
    CHECK(WlpPolynomial::from_wlp(w).to_wlp(8) == w);

    // zero-length pattern <-> constant 1
    CHECK(WlpPolynomial::from_wlp(WordLengthPattern{}) == WlpPolynomial::one());
    CHECK(WlpPolynomial::one().to_wlp(0).k() == 0);

    // leading zeros are preserved on the pattern side
    CHECK(poly({1, 0, 0, 1}).to_wlp(6).to_string() == "(0,0,1,0,0,0)");
    CHECK_THROWS_AS(poly({2}).to_wlp(3), std::invalid_argument);
    CHECK_THROWS_AS(poly({1, 0, 0, 1}).to_wlp(2), std::invalid_argument);
}

TEST_CASE("polynomial text form") {
    CHECK(WlpPolynomial::one().to_string() == "1");
    CHECK(poly({0}).to_string() == "0");
    CHECK(poly({1, 1}).to_string() == "1+u");
    CHECK(poly({1, 0, -3}).to_string() == "1-3u^2");
    CHECK(poly({0, 0, 4, 0, 8}).to_string() == "4u^2+8u^4");
}

TEST_CASE("word totals") {
    for (int m = 3; m <= 6; ++m) {
        BigInt sum = 0;
        const auto p = saturated_wlpp(m);
        for (int i = 0; i <= p.degree(); ++i) sum += p.coeff(i);
        CHECK(sum == BigInt(1) << ((1 << (m - 1)) - m));
    }
}

TEST_SUITE_END();
