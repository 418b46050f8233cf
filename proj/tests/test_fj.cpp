#include <gtest/gtest.h>

#include <random>

#include "fitails/fj.hpp"
#include "helpers.hpp"

using namespace fitails;

namespace {

XiVector word(const std::string& s, int ell) {
    return XiVector::basis_vector(parse_xi_word(s, ell));
}

// direct evaluation of "g after f" through the Xi action, no group rings
XiVector evaluate_composite(const FJMorphism& g, const FJMorphism& f, int n) {
    XiVector fx = f.evaluate(n);                      // in Xi(m)_n
    return apply_group_ring(group_ring_coords(fx), g.evaluate(n));
}

}  // namespace

TEST(Fj, BasisCounts) {
    EXPECT_EQ(fj_basis(0, 0, 0).size(), 1u);
    EXPECT_TRUE(fj_basis(1, 0, 1).empty());

    // level-by-level counts: |FI(m,d)| * derangements(d-m)
    for (int ell = 0; ell <= 2; ++ell)
        for (int m = 0; m <= 2; ++m)
            for (int d = std::max(ell, m); d <= 5; ++d) {
                std::size_t at_level = 0;
                for (const auto& b : fj_basis(ell, m, d))
                    if (b.level() == d) ++at_level;
                Int expect = falling_factorial(d, m) * derangements(d - m);
                EXPECT_EQ(Int(at_level), expect) << ell << " " << m << " " << d;
            }

    // the level-4 block for (0,0) is the nine bracket products
    std::size_t level4 = 0;
    for (const auto& b : fj_basis(0, 0, 4))
        if (b.level() == 4) ++level4;
    EXPECT_EQ(level4, 9u);
}

TEST(Fj, BasisValidation) {
    EXPECT_THROW(FJBasisElement(0, 2, 1, Injection(1, {1}), {}), std::invalid_argument);
    EXPECT_THROW(FJBasisElement(4, 2, 4, Injection(4, {3, 1}), {}), std::invalid_argument);
    EXPECT_THROW(FJBasisElement(4, 2, 4, Injection(4, {3, 1}), {{4, 2}}), std::invalid_argument);
    EXPECT_THROW(FJBasisElement(4, 2, 4, Injection(4, {3, 1}), {{2, 3}}), std::invalid_argument);
    EXPECT_NO_THROW(FJBasisElement(4, 2, 4, Injection(4, {3, 1}), {{2, 4}}));
    EXPECT_EQ(FJBasisElement(4, 2, 4, Injection(4, {3, 1}), {{2, 4}}).to_string(),
              "d=4 f=[3,1] blocks=[[2,4]]");
}

TEST(Fj, UMapFixture) {
    EXPECT_EQ(u_map(3, 5, 7).to_string(),
              "12345x1x2 + 1234x15x2 + 1234x1x25 + 123x145x2 + 123x14x25 + 123x1x245");
    EXPECT_EQ(u_map(2, 2, 5), XiVector::xi(5, 2));
    EXPECT_EQ(u_map(4, 4, 4), XiVector::xi(4, 4));

    for (int ell = 0; ell <= 3; ++ell)
        for (int d = ell; d <= 4; ++d)
            for (int n = d; n <= 6; ++n) {
                const XiVector u = u_map(ell, d, n);
                Int count = 0;
                for (const auto& [r, c] : u.terms()) {
                    EXPECT_EQ(c, 1);
                    ++count;
                }
                EXPECT_EQ(count, binomial(n - ell, d - ell));
            }
}

TEST(Fj, UMapDeltaSequence) {
    // u_{ell,d} is a morphism ell -> d: delta_i kills for i <= ell, steps down otherwise
    for (int ell = 0; ell <= 2; ++ell)
        for (int d = ell; d <= 4; ++d)
            for (int n = std::max(d, ell + 1); n <= d + 2; ++n)
                for (int i = 1; i <= n; ++i) {
                    if (n - 1 < d) continue;
                    XiVector moved = act(delta(i, n), u_map(ell, d, n));
                    if (i <= ell)
                        EXPECT_TRUE(moved.is_zero()) << ell << " " << d << " " << n << " " << i;
                    else
                        EXPECT_EQ(moved, u_map(ell, d, n - 1))
                            << ell << " " << d << " " << n << " " << i;
                }
}

TEST(Fj, EvaluateFixtures) {
    // 31[2,4] as a morphism 4 -> 2 at its own level and extended
    FJBasisElement b(4, 2, 4, Injection(4, {3, 1}), {{2, 4}});
    EXPECT_EQ(evaluate_at_level(b, 4).to_string(), "2x11x2 - 2x21x1");
    EXPECT_EQ(evaluate_at_level(b, 6).to_string(), "2x11x2x3x4 - 2x21x1x3x4");

    // the bracket [[1,2],3] as a morphism 3 -> 0 in degree 5
    FJBasisElement br(3, 0, 3, Injection(3, {}), {{1, 2, 3}});
    EXPECT_EQ(evaluate_at_level(br, 5).to_string(),
              "x1x2x3x4x5 - x2x1x3x4x5 - x2x3x1x4x5 + x3x2x1x4x5");

    // identity basis elements evaluate to xi_{n,m}
    for (int m = 0; m <= 3; ++m)
        for (int n = m; n <= m + 3; ++n)
            EXPECT_EQ(evaluate_at_level(FJBasisElement::identity(m), n), XiVector::xi(n, m));

    EXPECT_THROW(evaluate_at_level(b, 3), std::invalid_argument);
}

TEST(Fj, DeltaSequencePropertyForAllBasisElements) {
    // evaluations satisfy the defining recursion of natural transformations
    for (int ell = 0; ell <= 2; ++ell)
        for (int m = 0; m <= 2; ++m)
            for (const auto& b : fj_basis(ell, m, 4)) {
                for (int n = std::max(b.level(), ell) + 1; n <= b.level() + 3; ++n) {
                    XiVector xi_n = evaluate_at_level(b, n);
                    XiVector xi_prev = evaluate_at_level(b, n - 1);
                    for (int i = 1; i <= n; ++i) {
                        XiVector moved = act(delta(i, n), xi_n);
                        if (i <= ell)
                            EXPECT_TRUE(moved.is_zero()) << b.to_string() << " n=" << n << " i=" << i;
                        else
                            EXPECT_EQ(moved, xi_prev) << b.to_string() << " n=" << n << " i=" << i;
                    }
                }
            }
}

TEST(Fj, TruncatedHomExamples) {
    TruncatedHomSpace h002 = truncated_hom(0, 0, 2);
    EXPECT_EQ(h002.lattice_rank(), 2);
    EXPECT_TRUE(lattice_equal(h002, {parse_group_ring("12", 2), parse_group_ring("21", 2)}));

    EXPECT_EQ(truncated_hom(1, 0, 1).lattice_rank(), 0);

    TruncatedHomSpace h012 = truncated_hom(0, 1, 2);
    EXPECT_EQ(h012.lattice_rank(), 1);
    ASSERT_EQ(h012.lattice.size(), 1u);
    EXPECT_EQ(h012.lattice[0], parse_group_ring("12 + 21", 2));
}

TEST(Fj, RankTower) {
    // rank FJ_{<=d} - rank FJ_{<=d-1} = |FI(m,d)| * derangements(d-m)
    for (int ell = 0; ell <= 2; ++ell)
        for (int m = 0; m <= 2; ++m)
            for (int d = std::max(ell, m) + 1; d <= 4; ++d) {
                int big = truncated_hom(ell, m, d).lattice_rank();
                int small = truncated_hom(ell, m, d - 1).lattice_rank();
                Int expect = falling_factorial(d, m) * derangements(d - m);
                EXPECT_EQ(Int(big - small), expect) << ell << " " << m << " " << d;
            }
}

TEST(Fj, LatticeIndependence) {
    // distinct basis elements evaluate to independent lattice vectors
    for (int ell = 0; ell <= 2; ++ell)
        for (int m = 0; m <= 2; ++m)
            for (int d = std::max(ell, m); d <= 4; ++d) {
                TruncatedHomSpace h = truncated_hom(ell, m, d);
                EXPECT_EQ(h.lattice_rank(), h.count()) << ell << " " << m << " " << d;
            }
}

TEST(Fj, ComposeAgreesWithDirectEvaluation) {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        int ell = std::uniform_int_distribution<int>(0, 2)(rng);
        int m = std::uniform_int_distribution<int>(0, 2)(rng);
        int p = std::uniform_int_distribution<int>(0, 2)(rng);
        auto fb = fj_basis(ell, m, std::max(ell, m) + 1);
        auto gb = fj_basis(m, p, std::max(m, p) + 1);
        if (fb.empty() || gb.empty()) continue;
        FJMorphism f = FJMorphism::from_basis(
            fb[std::uniform_int_distribution<std::size_t>(0, fb.size() - 1)(rng)]);
        FJMorphism g = FJMorphism::from_basis(
            gb[std::uniform_int_distribution<std::size_t>(0, gb.size() - 1)(rng)]);
        int n = std::max(f.max_level(), g.max_level()) +
                std::uniform_int_distribution<int>(0, 1)(rng);
        GroupRingElement composed = compose(g, f, n);
        XiVector direct = evaluate_composite(g, f, n);
        EXPECT_EQ(apply_group_ring(composed, XiVector::xi(n, p)), direct)
            << "ell=" << ell << " m=" << m << " p=" << p << " n=" << n;
    }
}

TEST(Fj, ComposeIdentityAndAssociativity) {
    FJBasisElement b(2, 2, 2, Injection(2, {2, 1}), {});
    FJMorphism f = FJMorphism::from_basis(b);
    EXPECT_EQ(compose(FJMorphism::identity(2), f, 3), f.coordinate(3));
    EXPECT_EQ(compose(f, FJMorphism::identity(2), 3), f.coordinate(3));

    std::mt19937 rng(29);
    for (int trial = 0; trial < 20; ++trial) {
        auto pick = [&](int s, int t) {
            auto basis = fj_basis(s, t, std::max(s, t) + 1);
            return FJMorphism::from_basis(
                basis[std::uniform_int_distribution<std::size_t>(0, basis.size() - 1)(rng)]);
        };
        FJMorphism f = pick(0, 1), g = pick(1, 1), h = pick(1, 0);
        int n = 4;
        GroupRingElement left = compose(h, g, n) * f.coordinate(n);
        GroupRingElement right = h.coordinate(n) * compose(g, f, n);
        EXPECT_EQ(left, right);
    }
}

TEST(Fj, QRingSmallDegrees) {
    QRing q0 = q_ring(0);
    EXPECT_EQ(q0.total_rank(), 1);

    QRing q1 = q_ring(1);
    EXPECT_EQ(q1.entry(0, 0).lattice_rank(), 1);
    EXPECT_EQ(q1.entry(0, 1).lattice_rank(), 1);
    EXPECT_EQ(q1.entry(1, 0).lattice_rank(), 0);
    EXPECT_EQ(q1.entry(1, 1).lattice_rank(), 1);
    EXPECT_EQ(q1.total_rank(), 3);

    QRing q2 = q_ring(2);
    EXPECT_EQ(q2.total_rank(), 12);
}

TEST(Fj, QRingProductsStayInLattice) {
    for (int d = 0; d <= 3; ++d) {
        QRing q = q_ring(d);
        EXPECT_NO_THROW({
            auto products = q_ring_products(q);
            // composite coordinates reproduce the group-ring product
            for (const auto& pr : products) {
                const auto& target = q.entry(pr.ell, pr.p);
                GroupRingElement rebuilt(d);
                for (std::size_t i = 0; i < pr.coordinates.size(); ++i) {
                    GroupRingElement scaled = target.lattice[i];
                    scaled *= pr.coordinates[i];
                    rebuilt += scaled;
                }
                GroupRingElement expect = q.entry(pr.m, pr.p).lattice[(std::size_t)pr.right_index] *
                                          q.entry(pr.ell, pr.m).lattice[(std::size_t)pr.left_index];
                EXPECT_EQ(rebuilt, expect);
            }
        });
    }
}
