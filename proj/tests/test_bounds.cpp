#include <gtest/gtest.h>

#include "chromabound/arrangements.hpp"
#include "chromabound/bounds.hpp"
#include "chromabound/corpus.hpp"
#include "oracles.hpp"

using namespace chromabound;

namespace {

CoeffSequence k3_seq() { return coeff_sequence(IntPolynomial({0, 2, -3, 1}), 3); }
CoeffSequence k4_seq() { return coeff_sequence(IntPolynomial({0, -6, 11, -6, 1}), 6); }

/// Direct summation with the test-side binomial.
BigInt partial_sum_oracle(const CoeffSequence& s, long long q, long long k) {
    BigInt total = 0;
    for (long long i = 0; i <= k; ++i) total += oracle::binom(q, k - i) * s.at(i);
    return total;
}

}  // namespace

TEST(CoeffSequence, Extraction) {
    const auto k3 = k3_seq();
    EXPECT_EQ(k3.n, 3u);
    EXPECT_EQ(k3.r, 2u);
    EXPECT_EQ(k3.a, (std::vector<BigInt>{1, 3, 2}));
    const auto e = coeff_sequence(IntPolynomial::monomial(1, 5), 0);
    EXPECT_EQ(e.r, 0u);
    EXPECT_EQ(e.a, (std::vector<BigInt>{1}));
    const auto k4 = k4_seq();
    EXPECT_EQ(k4.r, 3u);
    EXPECT_EQ(k4.a, (std::vector<BigInt>{1, 6, 11, 6}));
}

TEST(CoeffSequence, RejectsBadShapes) {
    EXPECT_THROW(coeff_sequence(IntPolynomial{}, 0), ValidationError);
    EXPECT_THROW(coeff_sequence(IntPolynomial({0, 2, 3, 1}), 3), ValidationError);
    EXPECT_THROW(coeff_sequence(IntPolynomial({0, 2, -3, 2}), 3), ValidationError);
    EXPECT_THROW(coeff_sequence(IntPolynomial({2, 0, -3, 1}), 3), ValidationError);  // gap
    EXPECT_THROW(coeff_sequence(IntPolynomial({0, 2, -3, 1}), 4), ValidationError);  // a_1 != m
}

TEST(CoeffSequence, AnySingleSignFlipIsRejected) {
    corpus::Rng rng(4);
    auto graphs = corpus::named_graphs();
    for (auto& g : corpus::random_graphs(rng, 40, 6)) graphs.push_back(std::move(g));
    for (const auto& [name, g] : graphs) {
        const auto chi = chromatic_poly(g);
        const std::size_t m = g.edge_count();
        ASSERT_NO_THROW(coeff_sequence(chi, m)) << name;
        auto c = chi.coeffs();
        for (std::size_t p = static_cast<std::size_t>(chi.lowest_power()); p < c.size(); ++p) {
            auto mutated = c;
            mutated[p] = -mutated[p];
            EXPECT_THROW(coeff_sequence(IntPolynomial(mutated), m), ValidationError) << name << " t^" << p;
        }
    }
}

TEST(PartialBinomialSum, NamedValues) {
    EXPECT_EQ(partial_binomial_sum(k4_seq(), 0, 2), 11);
    EXPECT_EQ(partial_binomial_sum(k4_seq(), 2, 3), 34);
    EXPECT_EQ(partial_binomial_sum(k3_seq(), -1, 1), 2);
    EXPECT_THROW(partial_binomial_sum(k3_seq(), 0, -1), PreconditionError);
}

TEST(PartialBinomialSum, AgreesWithOracle) {
    const auto s = k4_seq();
    for (long long q = -6; q <= 6; ++q)
        for (long long k = 0; k <= 10; ++k) EXPECT_EQ(partial_binomial_sum(s, q, k), partial_sum_oracle(s, q, k));
}

TEST(BoundPair, NamedValues) {
    auto b = theorem2_bounds(6, 3, 0, 2);
    EXPECT_EQ(b.lower, 3);
    EXPECT_EQ(b.upper, 15);
    b = theorem2_bounds(6, 3, 2, 3);
    EXPECT_EQ(b.lower, 10);
    EXPECT_EQ(b.upper, 56);
    for (long long q = -4; q <= 4; ++q)
        for (long long k = 0; k <= q + 5; ++k) {
            b = theorem2_bounds(4, 4, q, k);
            EXPECT_EQ(b.lower, b.upper);
        }
}

TEST(BoundPair, OutOfRangeIsAnError) {
    EXPECT_THROW(theorem2_bounds(6, 3, 0, 5), RangeError);
    EXPECT_THROW(theorem2_bounds(6, 3, 0, -1), RangeError);
    EXPECT_THROW(theorem2_bounds(6, 3, -5, 0), RangeError);
    EXPECT_NO_THROW(theorem2_bounds(6, 3, 0, 4));
}

TEST(BoundWindow, K4Window) {
    const auto rep = verify_theorem2(k4_seq(), -3, 3);
    EXPECT_TRUE(rep.all_ok());
    EXPECT_FALSE(rep.all_tight());
    // q = -3 admits k in [0, 1], ..., q = 3 admits k in [0, 7].
    std::size_t expected = 0;
    for (long long q = -3; q <= 3; ++q) expected += static_cast<std::size_t>(q + 3 + 2);
    EXPECT_EQ(rep.records.size(), expected);
}

TEST(BoundWindow, ForestIsTightEverywhere) {
    const auto s = coeff_sequence(chromatic_poly(named::path(5)), 4);
    const auto rep = verify_theorem2(s, -5, 5);
    EXPECT_TRUE(rep.all_ok());
    EXPECT_TRUE(rep.all_tight());
}

TEST(BoundWindow, K3UpperBoundAttained) {
    const auto rep = verify_theorem2(k3_seq(), -1, -1);
    const auto it = std::find_if(rep.records.begin(), rep.records.end(), [](const BoundRecord& r) { return r.k == 1; });
    ASSERT_NE(it, rep.records.end());
    EXPECT_EQ(it->lower, 1);
    EXPECT_EQ(it->value, 2);
    EXPECT_EQ(it->upper, 2);
    EXPECT_TRUE(it->ok);
}

TEST(BoundWindow, KCapAndOutsideProbe) {
    const auto capped = verify_theorem2(k4_seq(), 0, 0, {2, 0});
    EXPECT_EQ(capped.records.size(), 3u);
    const auto probed = verify_theorem2(k4_seq(), 0, 0, {std::nullopt, 3});
    EXPECT_EQ(probed.records.size(), 5u);
    EXPECT_EQ(probed.outside.size(), 3u);
    EXPECT_EQ(probed.outside.front().k, 5);
    EXPECT_THROW(verify_theorem2(k4_seq(), 1, 0), PreconditionError);
}

TEST(AlternatingSums, NamedValues) {
    const auto k4 = corollary5_check(k4_seq());
    EXPECT_TRUE(k4.ok);
    EXPECT_EQ(*k4.a2_lower, 9);
    EXPECT_EQ(*k4.a3_lower, 4);
    const auto k3 = corollary5_check(k3_seq());
    EXPECT_TRUE(k3.ok);
    EXPECT_EQ(*k3.a2_lower, 2);
    EXPECT_FALSE(k3.a3_lower.has_value());
    const auto forest = corollary5_check(coeff_sequence(chromatic_poly(named::path(4)), 3));
    EXPECT_EQ(*forest.a2_lower, 3);
    EXPECT_EQ(*forest.a3_lower, 1);
    for (const auto& v : forest.alternating_sums) EXPECT_GE(v, 0);
}

TEST(AlternatingSums, AlternatingSumMatchesShiftedPartialSum) {
    // The alternating form is the partial sum at q = k - r - 1.
    const auto s = k4_seq();
    const auto rep = corollary5_check(s);
    const long long r = 3;
    for (long long k = 0; k <= r; ++k) {
        BigInt shifted = partial_sum_oracle(s, k - r - 1, k);
        EXPECT_EQ(rep.alternating_sums[static_cast<std::size_t>(k)], shifted) << k;
    }
}

TEST(Delta, NamedValues) {
    EXPECT_EQ(delta(IntPolynomial({2, -3, 1})), IntPolynomial({-2, 1}));
    EXPECT_TRUE(delta(IntPolynomial({7})).is_zero());
    EXPECT_EQ(delta(IntPolynomial({0, 2, -3, 1})), IntPolynomial({0, -2, 1}));
}

TEST(Delta, AgreesWithPointwiseDefinition) {
    const IntPolynomial p{4, -1, 0, 3, -2, 1};
    const auto d = delta(p);
    for (long long t = -5; t <= 6; ++t) {
        if (t == 1) continue;
        EXPECT_EQ(d(t) * (t - 1), p(t) - p(1)) << t;
    }
}

TEST(DeltaIter, NamedValues) {
    EXPECT_EQ(delta_iter(IntPolynomial({2, -3, 1}), 1), IntPolynomial({-2, 1}));
    const IntPolynomial p{3, 1, 4, 1, 5};
    EXPECT_EQ(delta_iter(p, 0), p);
    EXPECT_EQ(delta_iter(IntPolynomial({-6, 11, -6, 1}), 2), IntPolynomial({-4, 1}));
}

TEST(DeltaIter, ClosedFormMatchesIteration) {
    corpus::Rng rng(55);
    auto graphs = corpus::named_graphs();
    for (auto& g : corpus::random_graphs(rng, 40, 6)) graphs.push_back(std::move(g));
    for (const auto& [name, g] : graphs) {
        const auto s = coeff_sequence(chromatic_poly(g), g.edge_count());
        const auto ess = essential_poly(s);
        for (std::size_t j = 0; j <= s.r; ++j) EXPECT_EQ(delta_iter(ess, j), delta_iter_closed_form(s, j)) << name;
    }
    EXPECT_THROW(delta_iter_closed_form(k3_seq(), 3), PreconditionError);
}

TEST(LogConcave, Cases) {
    EXPECT_TRUE(is_logconcave(k4_seq()));
    EXPECT_TRUE(is_logconcave(CoeffSequence{0, 0, 0, {1}}));
    EXPECT_TRUE(is_logconcave(k3_seq()));
    EXPECT_FALSE(is_logconcave(CoeffSequence{3, 1, 2, {1, 1, 5}}));
}

TEST(ForestEquivalence, Cases) {
    auto p4 = forest_equivalence(named::path(4));
    EXPECT_TRUE(p4.matches_m_binomials && p4.matches_r_binomials && p4.forest);
    auto k3 = forest_equivalence(named::complete(3));
    EXPECT_FALSE(k3.matches_m_binomials || k3.matches_r_binomials || k3.forest);
    auto two = forest_equivalence(SimpleGraph(4, {{0, 1}, {2, 3}}));
    EXPECT_TRUE(two.matches_m_binomials && two.matches_r_binomials && two.forest);
}

TEST(TwoSidedBound, HoldsOnMixedCorpus) {
    corpus::Rng rng(101);
    std::vector<CoeffSequence> seqs;
    for (const auto& [name, g] : corpus::named_graphs()) seqs.push_back(coeff_sequence(chromatic_poly(g), g.edge_count()));
    for (const auto& [name, a] : corpus::random_arrangements(rng, 40, 4, 7))
        seqs.push_back(coeff_sequence(char_poly(a), a.size()));
    for (const auto& s : seqs) {
        const auto rep = verify_theorem2(s, -5, 5);
        EXPECT_TRUE(rep.all_ok());
        EXPECT_EQ(rep.all_tight(), s.m == s.r);
        EXPECT_TRUE(corollary5_check(s).ok);
    }
}
