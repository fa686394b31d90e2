#include <gtest/gtest.h>

#include "oracles.hpp"
#include "seaweed/product.hpp"

using namespace seaweed;

namespace {

std::vector<long long> coeffs(const IntSeries& s) {
    std::vector<long long> out;
    for (const auto& c : s.coeffs())
        out.push_back(static_cast<long long>(c));
    return out;
}

// finite product of geometric series 1/(1 - c_j q^e_j), computed densely
std::vector<std::int64_t> inverse_product(const std::vector<std::pair<std::int64_t, std::size_t>>& factors,
                                          std::size_t order) {
    std::vector<std::int64_t> acc(order + 1, 0);
    acc[0] = 1;
    for (auto [c, e] : factors)
        acc = oracle::poly_mul(acc, oracle::geometric(c, e, order), order);
    return acc;
}

}  // namespace

TEST(ExpandProduct, PartitionNumbers) {
    IntSeries s = expand_product(parse_product("1/(q;q)"), 10);
    EXPECT_EQ(coeffs(s), (std::vector<long long>{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42}));
    auto p = oracle::partition_numbers(60);
    IntSeries big = expand_product(parse_product("1/(q;q)"), 60);
    for (std::size_t n = 0; n <= 60; ++n)
        EXPECT_EQ(big.coefficient(n), p[n]);
}

TEST(ExpandProduct, AlternatingOddProduct) {
    IntSeries s = expand_product(alternating_odd_product(), 3);
    EXPECT_EQ(coeffs(s), (std::vector<long long>{1, 1, 1, 0}));
    EXPECT_EQ(s.coefficient(3), 0);
}

TEST(ExpandProduct, TwoColouredPartitions) {
    IntSeries s = expand_product(parse_product("1/(x;x)^2"), 6);
    EXPECT_EQ(coeffs(s), (std::vector<long long>{1, 2, 5, 10, 20, 36, 65}));
    auto two = oracle::two_coloured(40);
    IntSeries big = expand_product(parse_product("1/((q;q)(q;q))"), 40);
    for (std::size_t n = 0; n <= 40; ++n)
        EXPECT_EQ(big.coefficient(n), two[n]);
}

TEST(ExpandProduct, ConstantTermIsOne) {
    for (const char* text : {"1/(q;q)", "(-q,q2;-q2)", "1/(q,-q3;q4)", "(q;q)^3", "1/(q,-q9;q10)"})
        EXPECT_EQ(expand_product(parse_product(text), 5).coefficient(0), 1) << text;
}

TEST(ExpandProduct, AlternatingFormsAgree) {
    // prod 1/(1+(-1)^n q^(2n-1)) split by the parity of n, and as one Pochhammer symbol in -q^2
    IntSeries a = expand_product(alternating_odd_product(), 200);
    EXPECT_EQ(a, expand_product(parse_product("1/((q;q4)(-q3;q4))"), 200));
    EXPECT_EQ(a, expand_product(parse_product("1/(q;-q2)"), 200));
    EXPECT_EQ(a, expand_product(nonneg_conjecture_product(4), 200));
}

TEST(ExpandProduct, MatchesDenseFiniteProductOracle) {
    // 1/(q,-q^3;q^4) to order 30 from explicit geometric series
    std::vector<std::pair<std::int64_t, std::size_t>> factors;
    for (std::size_t e = 1; e <= 30; e += 4)
        factors.emplace_back(1, e);
    for (std::size_t e = 3; e <= 30; e += 4)
        factors.emplace_back(-1, e);
    auto want = inverse_product(factors, 30);
    IntSeries got = expand_product(parse_product("1/(q,-q3;q4)"), 30);
    for (std::size_t n = 0; n <= 30; ++n)
        EXPECT_EQ(got.coefficient(n), want[n]) << n;

    // (-q, q^2; -q^2): factors 1 + (-1)^j q^(2j+1) and 1 - (-1)^j q^(2j+2)
    std::vector<std::int64_t> acc(31, 0);
    acc[0] = 1;
    for (std::size_t j = 0; 2 * j + 1 <= 30; ++j) {
        std::int64_t s = j % 2 ? -1 : 1;
        std::vector<std::int64_t> f(31, 0), g(31, 0);
        f[0] = g[0] = 1;
        f[2 * j + 1] = s;
        if (2 * j + 2 <= 30)
            g[2 * j + 2] = -s;
        acc = oracle::poly_mul(oracle::poly_mul(acc, f, 30), g, 30);
    }
    IntSeries d = expand_product(parse_product("(-q,q2;-q2)"), 30);
    for (std::size_t n = 0; n <= 30; ++n)
        EXPECT_EQ(d.coefficient(n), acc[n]) << n;
}

TEST(ExpandProduct, RejectsBivariateAndBadFamilies) {
    EXPECT_THROW(expand_product(parse_product("1/(tq;q)"), 5), std::invalid_argument);
    FactorFamily bad;
    bad.coefficient = [](std::size_t) { return Integer(1); };
    bad.q_step = 0;
    EXPECT_THROW(ProductSpec({bad}), std::invalid_argument);
    bad.q_step = -2;
    EXPECT_THROW(ProductSpec({bad}), std::invalid_argument);
}

TEST(ParseProduct, Grammar) {
    EXPECT_EQ(parse_product("1/((q;q4)(-q3;q4))").families().size(), 2u);
    EXPECT_EQ(parse_product("1/(q,-q^3;q^4)").families().size(), 2u);
    EXPECT_EQ(parse_product("(x;x)^2").families().size(), 2u);
    EXPECT_EQ(parse_product("(q;q)/(q2;q2)").families().size(), 2u);
    EXPECT_EQ(parse_product("1").families().size(), 0u);
    EXPECT_EQ(parse_product(" 1 / ( q ; q ) ").families().front().power, -1);
    for (const char* bad : {"", "1/", "(q;)", "(q,q)", "1/(q;q", "(t;q)", "(q;q0)", "2/(q;q)", "1/(q;q)x"})
        EXPECT_THROW(parse_product(bad), std::invalid_argument) << bad;
}

TEST(ParseProduct, QuotientIdentity) {
    // (q;q)/(q2;q2) = 1/(-q;q) = (q;q2)
    EXPECT_EQ(expand_product(parse_product("(q;q)/(q2;q2)"), 40), expand_product(parse_product("(q;q2)"), 40));
}

TEST(BivariateProduct, DegreeBoundAndSpecialization) {
    BivariateSeries s = expand_bivariate_product(parse_product("1/(tq,q2;q2)"), 20);
    // t = 1 gives 1/(q;q)
    auto p = oracle::partition_numbers(20);
    for (std::size_t n = 0; n <= 20; ++n) {
        Integer sum = 0;
        for (const auto& c : s.row(n))
            sum += c;
        EXPECT_EQ(sum, p[n]);
    }
    EXPECT_THROW(expand_bivariate_product(parse_product("1/(t2q;q)"), 5), std::invalid_argument);
}
