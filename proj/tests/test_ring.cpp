#include <gtest/gtest.h>

#include "support.hpp"

using namespace qctest;

namespace {

Ideal gen(const Ring& r, std::vector<Element> g) { return Ideal::from_generators(r, g); }

const Ring Z = Ring::integers();
const Ring Gi = Ring::quadratic(-1);
const Ring R5 = Ring::quadratic(-5);
const Ring Gold = Ring::quadratic(5);

Ideal p2() { return gen(R5, {{2, 0}, {1, -1}}); }
Ideal q3() { return gen(R5, {{3, 0}, {1, 1}}); }

} // namespace

TEST(Ring, RejectsNonSquarefreeAndTrivialD) {
    EXPECT_THROW(Ring::quadratic(0), InvalidRing);
    EXPECT_THROW(Ring::quadratic(1), InvalidRing);
    EXPECT_THROW(Ring::quadratic(4), InvalidRing);
    EXPECT_THROW(Ring::quadratic(-12), InvalidRing);
    EXPECT_NO_THROW(Ring::quadratic(-1));
    EXPECT_NO_THROW(Ring::quadratic(6));
}

TEST(Ring, OmegaRule) {
    EXPECT_EQ(Gold.w1(), 1);
    EXPECT_EQ(Gold.w0(), 1);
    EXPECT_EQ(R5.w1(), 0);
    EXPECT_EQ(R5.w0(), -5);
    // w^2 for t the golden ratio is t + 1
    Element t{0, 1};
    EXPECT_EQ(Gold.mul(t, t), (Element{1, 1}));
}

TEST(Ring, ElementNormIsMultiplicative) {
    Rng rng(11);
    for (const auto& r : test_rings())
        for (int i = 0; i < 200; ++i) {
            Element x = random_element(r, rng, 20), y = random_element(r, rng, 20);
            // Field norm from the minimal polynomial: N(a + b w) = a^2 + w1 a b - w0 b^2.
            Int nx = x.a * x.a + r.w1() * x.a * x.b - r.w0() * x.b * x.b;
            EXPECT_EQ(r.norm(x), r.is_integers() ? x.a : nx);
            EXPECT_EQ(r.norm(r.mul(x, y)), r.norm(x) * r.norm(y));
            if (!r.is_integers()) {
                EXPECT_EQ(r.mul(x, r.conj(x)), (Element{r.norm(x), 0}));
            }
        }
}

TEST(Ideal, FromGenerators) {
    Ideal p = p2();
    EXPECT_EQ(p.norm(), 2);
    EXPECT_TRUE(is_prime(p));
    EXPECT_EQ(gen(Z, {{6, 0}, {10, 0}}), Ideal::of_integer(Z, 2));
    Ideal pi = gen(Gi, {{1, 1}});
    EXPECT_EQ(pi * pi, Ideal::of_integer(Gi, 2));
    EXPECT_THROW(gen(R5, {{0, 0}, {0, 0}}), AllGeneratorsZero);
}

TEST(Ideal, HnfIsClosedUnderOmega) {
    Rng rng(12);
    for (const auto& r : test_rings())
        for (int i = 0; i < 50; ++i) {
            Ideal x = random_ideal(r, rng, 500);
            if (!r.is_integers()) {
                for (const auto& e : x.basis()) EXPECT_TRUE(x.contains(r.times_omega(e)));
            }
            EXPECT_GT(x.norm(), 0);
        }
}

TEST(Ideal, FromHnfRejectsNonIdeals) {
    // The lattice {4, 1 + w} is not closed under multiplication by w.
    EXPECT_THROW(Ideal::from_hnf(R5, 4, 1, 1), InvalidArrangement);
}

TEST(Ideal, SumExamples) {
    EXPECT_TRUE((p2() + q3()).is_unit());
    EXPECT_EQ(gen(R5, {{1, 1}}) + p2(), p2());
    EXPECT_EQ(Ideal::of_integer(Z, 4) + Ideal::of_integer(Z, 6), Ideal::of_integer(Z, 2));
    EXPECT_THROW(p2() + Ideal::unit(Gi), RingMismatch);
}

TEST(Ideal, ProductAndIntersectionExamples) {
    Ideal rho = gen(R5, {{1, 1}});
    EXPECT_EQ(p2() * q3(), rho);
    EXPECT_EQ(ideal_intersection(p2(), q3()), rho);
    EXPECT_EQ(p2() * p2(), Ideal::of_integer(R5, 2));
    EXPECT_EQ((p2() * p2()).norm(), 4);
}

TEST(Ideal, NormsMatchResidueCounts) {
    EXPECT_EQ(Ideal::of_integer(Gi, 2).norm(), 4);
    EXPECT_EQ(residues(Ideal::of_integer(Gi, 2)).size(), 4u);
    EXPECT_EQ(q3().norm(), 3);
    EXPECT_EQ(residues(q3()).size(), 3u);
    EXPECT_EQ(Ideal::unit(Gold).norm(), 1);
    Rng rng(13);
    for (const auto& r : test_rings())
        for (int i = 0; i < 40; ++i) {
            Element g = random_nonzero(r, rng, 8);
            EXPECT_EQ(Ideal::principal(r, g).norm(), abs_int(r.norm(g)));
        }
}

TEST(Ideal, ColonExamples) {
    EXPECT_EQ(ideal_colon(Ideal::of_integer(Z, 4), Ideal::of_integer(Z, 2)), Ideal::of_integer(Z, 2));
    EXPECT_EQ(ideal_colon(p2() * q3(), p2()), q3());
    EXPECT_EQ(ideal_colon(q3(), Ideal::unit(R5)), q3());
}

TEST(Ideal, QuotientRequiresDivisibility) {
    EXPECT_EQ(ideal_quotient(p2() * q3(), q3()), p2());
    EXPECT_THROW(ideal_quotient(p2(), q3()), NonIntegralQuotient);
}

TEST(Ideal, FractionalInverse) {
    FractionalIdeal inv = inverse(p2());
    EXPECT_FALSE(inv.is_integral());
    EXPECT_EQ(inv.denominator(), 2);
    EXPECT_TRUE((inv * p2()).is_integral());
    EXPECT_TRUE((inv * p2()).to_integral().is_unit());
    EXPECT_TRUE(inverse(Ideal::unit(R5)).is_integral());
}

TEST(Ideal, Factorization) {
    auto f = factor_ideal(gen(R5, {{1, 1}}));
    ASSERT_EQ(f.factors.size(), 2u);
    EXPECT_EQ(f.factors[0].first, p2());
    EXPECT_EQ(f.factors[1].first, q3());

    auto g = factor_ideal(Ideal::of_integer(Gi, 2));
    ASSERT_EQ(g.factors.size(), 1u);
    EXPECT_EQ(g.factors[0].first, gen(Gi, {{1, 1}}));
    EXPECT_EQ(g.factors[0].second, 2u);

    // 6 sqrt5 = 2 * 3 * sqrt5: 2 and 3 inert, sqrt5 ramified, each to the first power.
    auto h = factor_ideal(gen(Gold, {{-6, 12}}));
    ASSERT_EQ(h.factors.size(), 3u);
    EXPECT_EQ(h.factors[0].first, Ideal::of_integer(Gold, 2));
    EXPECT_EQ(h.factors[1].first, gen(Gold, {{-1, 2}}));
    EXPECT_EQ(h.factors[2].first, Ideal::of_integer(Gold, 3));
    for (const auto& [p, e] : h.factors) EXPECT_EQ(e, 1u);
    EXPECT_EQ(primes_above(Gold, 5).size(), 1u);
    EXPECT_EQ(primes_above(Gold, 2).size(), 1u);
    EXPECT_EQ(primes_above(Gold, 11).size(), 2u);
}

TEST(Ideal, FactorizationRoundTrip) {
    Rng rng(14);
    for (const auto& r : test_rings())
        for (int i = 0; i < 40; ++i) {
            Ideal x = random_ideal(r, rng, 5000);
            auto f = factor_ideal(x);
            EXPECT_EQ(f.product(r), x);
            for (const auto& [p, e] : f.factors) EXPECT_TRUE(is_prime(p));
        }
}

TEST(Ideal, Divisors) {
    EXPECT_EQ(divisors(gen(Gold, {{-6, 12}})).size(), 8u);
    auto d = divisors(gen(R5, {{1, 1}}));
    ASSERT_EQ(d.size(), 4u);
    EXPECT_TRUE(d[0].is_unit());
    EXPECT_EQ(d[1], p2());
    EXPECT_EQ(d[2], q3());
    EXPECT_EQ(d[3], p2() * q3());
    EXPECT_EQ(divisors(Ideal::unit(Gi)).size(), 1u);
}

TEST(Ideal, Residues) {
    auto z5 = residues(Ideal::of_integer(Z, 5));
    ASSERT_EQ(z5.size(), 5u);
    for (Int i = 0; i < 5; ++i) EXPECT_EQ(z5[static_cast<std::size_t>(i)], (Element{i, 0}));
    EXPECT_EQ(residues(p2()).size(), 2u);
    auto g2 = residues(Ideal::of_integer(Gi, 2));
    std::vector<Element> want = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    for (const auto& w : want) EXPECT_NE(std::find(g2.begin(), g2.end(), w), g2.end());
    EXPECT_THROW(residues(Ideal::of_integer(Z, 100), {10}), BudgetExceeded);
}

TEST(Ideal, ResiduesAreDistinctAndComplete) {
    Rng rng(15);
    for (const auto& r : test_rings())
        for (int i = 0; i < 30; ++i) {
            Ideal x = random_ideal(r, rng, 200);
            auto res = residues(x);
            EXPECT_EQ(static_cast<Int>(res.size()), x.norm());
            for (std::size_t u = 0; u < res.size(); ++u) {
                EXPECT_EQ(x.reduce(res[u]), res[u]);
                for (std::size_t v = u + 1; v < res.size(); ++v) EXPECT_FALSE(x.contains(res[u] - res[v]));
            }
            Element y = random_element(r, rng, 1000);
            EXPECT_TRUE(x.contains(y - x.reduce(y)));
        }
}

TEST(Ideal, Ord) {
    Ideal pi = gen(Gi, {{1, 1}});
    EXPECT_EQ(ord_p(Ideal::of_integer(Gi, 2), pi), 2u);
    EXPECT_EQ(ord_p(Ideal::unit(Gi), pi), 0u);
    EXPECT_EQ(ord_p(gen(R5, {{1, 1}}), p2()), 1u);
    EXPECT_THROW(ord_p(Ideal::of_integer(Gi, 2), Ideal::of_integer(Gi, 2)), NotPrime);
}

TEST(Ideal, PrimeNames) {
    EXPECT_EQ(factored_string(Ideal::unit(R5)), "<1>");
    EXPECT_EQ(factored_string(gen(R5, {{1, 1}})), "p2^1*p3_1^1");
    EXPECT_EQ(factored_string(Ideal::of_integer(Gi, 2)), "p2^2");
    EXPECT_EQ(factored_string(gen(Gold, {{-6, 12}})), "p4^1*p5^1*p9^1");
}

TEST(Ideal, IdealsUpToNorm) {
    // Z[t]: norms <= 40 are 1,4,5,9,11,11,16,19,19,20,25,29,29,31,31,36.
    auto v = ideals_up_to_norm(Gold, 40);
    std::vector<Int> norms;
    for (const auto& x : v) norms.push_back(x.norm());
    EXPECT_EQ(norms, (std::vector<Int>{1, 4, 5, 9, 11, 11, 16, 19, 19, 20, 25, 29, 29, 31, 31, 36}));
    // Independent count over Z[i]: ideals of norm n number sum over d | n of chi_4(d).
    auto g = ideals_up_to_norm(Gi, 100);
    Int expect = 0;
    for (Int n = 1; n <= 100; ++n)
        for (Int d = 1; d <= n; ++d)
            if (n % d == 0) expect += d % 4 == 1 ? 1 : d % 4 == 3 ? -1 : 0;
    EXPECT_EQ(static_cast<Int>(g.size()), expect);
}

TEST(IdealProperties, Laws) {
    Rng rng(16);
    Tally t = check_ideal_laws(rng, 240);
    EXPECT_TRUE(t.ok()) << t.summary();
    EXPECT_GE(t.cases, 200u);
}

TEST(IdealProperties, TorsionOfResidueRing) {
    Rng rng(17);
    Tally t = check_torsion_counts(rng, 240);
    EXPECT_TRUE(t.ok()) << t.summary();
}
