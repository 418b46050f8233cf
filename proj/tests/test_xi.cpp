#include <gtest/gtest.h>

#include <random>

#include "fitails/xi.hpp"
#include "helpers.hpp"

using namespace fitails;
using testutil::random_injection;

namespace {

XiVector word(const std::string& s, int ell) {
    return XiVector::basis_vector(parse_xi_word(s, ell));
}

XiVector random_vector(std::mt19937& rng, int ell, int n, int terms) {
    std::uniform_int_distribution<int> coef(-5, 5);
    auto basis = xi_basis(ell, n);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    XiVector v(ell, n);
    for (int i = 0; i < terms; ++i) v.add(basis[pick(rng)], coef(rng));
    return v;
}

}  // namespace

TEST(Xi, BasisMatchesExpectedWords) {
    auto b23 = xi_basis(2, 3);
    ASSERT_EQ(b23.size(), 6u);
    const char* expected[] = {"12x1", "1x12", "21x1", "2x11", "x112", "x121"};
    for (int i = 0; i < 6; ++i) EXPECT_EQ(b23[(std::size_t)i].to_string(), expected[i]);

    EXPECT_TRUE(xi_basis(4, 3).empty());
    EXPECT_EQ(xi_basis(0, 3).size(), 6u);
    EXPECT_EQ(xi_basis(0, 3)[0].to_string(), "x1x2x3");
}

TEST(Xi, RankIsFactorial) {
    for (int ell = 0; ell <= 5; ++ell)
        for (int n = 0; n <= 7; ++n) {
            std::size_t expect =
                n >= ell ? static_cast<std::size_t>(to_long_checked(factorial(n), "test")) : 0u;
            EXPECT_EQ(xi_basis(ell, n).size(), expect);
        }
}

TEST(Xi, ActExamples) {
    // losing a fixed letter kills the word
    EXPECT_TRUE(act(Injection(3, {2, 3}), word("12x1", 2)).is_zero());
    // identity acts as identity
    EXPECT_EQ(act(Injection::identity(3), word("12x1", 2)), word("12x1", 2));
    // standardization relabels surviving real letters by order
    EXPECT_EQ(act(Injection(3, {3, 1}), word("x1x2x3", 0)), word("x2x1", 0));
}

TEST(Xi, ActFunctoriality) {
    std::mt19937 rng(101);
    std::uniform_int_distribution<int> size(0, 6);
    for (int ell = 0; ell <= 3; ++ell)
        for (int trial = 0; trial < 60; ++trial) {
            int c = std::max(size(rng), ell), b = std::uniform_int_distribution<int>(0, c)(rng),
                a = std::uniform_int_distribution<int>(0, b)(rng);
            if (c < ell) continue;
            Injection g = random_injection(rng, b, c);
            Injection f = random_injection(rng, a, b);
            XiVector v = random_vector(rng, ell, c, 3);
            EXPECT_EQ(act(f, act(g, v)), act(compose(f, g), v));
        }
}

TEST(Xi, GroupRingCoordsExamples) {
    EXPECT_EQ(group_ring_coords(XiVector::xi(4, 2)), GroupRingElement::identity(4));

    GroupRingElement c = group_ring_coords(word("x11", 1));
    ASSERT_EQ(c.support_size(), 1u);
    EXPECT_EQ(c.terms().begin()->first, Permutation({2, 1}));
}

TEST(Xi, GroupRingCoordsRoundTrip) {
    std::mt19937 rng(55);
    for (int trial = 0; trial < 40; ++trial) {
        int ell = std::uniform_int_distribution<int>(0, 3)(rng);
        int n = std::uniform_int_distribution<int>(ell, 5)(rng);
        XiVector v = random_vector(rng, ell, n, 4);
        EXPECT_EQ(apply_group_ring(group_ring_coords(v), XiVector::xi(n, ell)), v);
    }
    // support size example: coords of (12 - 21) . x1x2
    XiVector v = apply_group_ring(parse_group_ring("12 - 21", 2), XiVector::xi(2, 0));
    EXPECT_EQ(group_ring_coords(v).support_size(), 2u);
}

TEST(Xi, DKernelRanks) {
    const std::size_t expected[] = {1, 0, 1, 2, 9, 44};
    for (int n = 0; n <= 5; ++n) EXPECT_EQ(d_kernel(n).size(), expected[n]) << n;
}

TEST(Xi, DKernelContainsBracketVector) {
    // (123 - 213 - 231 + 321) . x1x2x3 is killed by every face map
    XiVector v = apply_group_ring(parse_group_ring("123 - 213 - 231 + 321", 3),
                                  XiVector::xi(3, 0));
    XiVector expect =
        word("x1x2x3", 0) - word("x2x1x3", 0) - word("x2x3x1", 0) + word("x3x2x1", 0);
    EXPECT_EQ(v, expect);
    for (int i = 1; i <= 3; ++i) EXPECT_TRUE(act(delta(i, 3), v).is_zero());
}

TEST(Xi, WordTextRoundTrip) {
    EXPECT_EQ(parse_xi_word("2x11x2", 2).to_string(), "2x11x2");
    EXPECT_EQ(parse_xi_word("x1x2x3", 0).to_string(), "x1x2x3");
    EXPECT_EQ(XiWord::xi(3, 3).to_string(), "123");
    EXPECT_THROW(parse_xi_word("3x1", 2), std::invalid_argument);   // fixed letter above ell
    EXPECT_THROW(parse_xi_word("11", 2), std::invalid_argument);    // repeated letter
    EXPECT_THROW(parse_xi_word("1x", 1), std::invalid_argument);    // dangling x
    // letters beyond 9 are parenthesized
    std::vector<std::int32_t> ranks(11);
    std::iota(ranks.begin(), ranks.end(), 1);
    XiWord w(10, ranks);
    EXPECT_EQ(w.to_string(), "123456789(10)x1");
    EXPECT_EQ(parse_xi_word(w.to_string(), 10), w);
}
