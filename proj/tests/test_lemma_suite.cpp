#include <gtest/gtest.h>

#include <random>

#include "knodeldom/lemma_suite.hpp"

using namespace knodeldom;

namespace {

TEST(LemmaSuite, ExhaustivePairsPassOnCubicGraphs)
{
    for (std::int64_t n = 8; n <= 64; n += 2) {
        for (const auto& r : check_pairs_exhaustive(KnodelGraph(3, n)).list())
            ASSERT_TRUE(r.passed) << r.check << ": " << r.counterexample.value_or("");
    }
}

TEST(LemmaSuite, PairGuard)
{
    EXPECT_THROW(check_pairs_exhaustive(KnodelGraph(3, 1026)), InstanceTooLarge);
}

TEST(LemmaSuite, CountingExhaustiveCoversAllSmallSubsets)
{
    const auto r = check_counting_exhaustive(KnodelGraph(3, 10), 3);
    EXPECT_TRUE(r.degree_sum.passed);
    EXPECT_TRUE(r.gap_bound.passed);
    EXPECT_EQ(r.degree_sum.cases, 2u * (5 + 10 + 10)); // both sides, sizes 1..3 of 5
}

TEST(LemmaSuite, SamplerRespectsSizeAndSide)
{
    std::mt19937_64 rng(3);
    const KnodelGraph g(3, 60);
    int clustered = 0;
    for (int i = 0; i < 4000; ++i) {
        const auto a = sample_subset(g, rng);
        ASSERT_GE(a.size(), 1u);
        ASSERT_LE(a.size(), 12u);
        for (Vertex w : a) {
            ASSERT_TRUE(g.contains(w));
            ASSERT_EQ(w.side, a.front().side);
        }
        const auto seq = cyclic_sequence(g, a);
        if (a.size() >= 3 && std::count(seq.gaps.begin(), seq.gaps.end(), 1) >= static_cast<long>(a.size()) - 1)
            ++clustered;
    }
    EXPECT_GT(clustered, 600); // roughly a quarter of draws are blocks
}

TEST(LemmaSuite, CountingIsDeterministicForASeed)
{
    LemmaSuiteOptions opt{.delta = 3, .n_max = 32, .exhaustive = false, .samples = 500, .seed = 11};
    const auto a = run_lemma_suite(opt);
    const auto b = run_lemma_suite(opt);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_TRUE(a[i].passed) << a[i].check;
        EXPECT_EQ(a[i].cases, b[i].cases);
    }
}

TEST(LemmaSuite, ReportKeepsFirstCounterexample)
{
    VerificationReport r{.check = "x"};
    r.fail("first");
    r.fail("second");
    EXPECT_FALSE(r.passed);
    EXPECT_EQ(*r.counterexample, "first");
}

TEST(LemmaSuite, RejectsEmptyRange)
{
    EXPECT_THROW(run_lemma_suite({.delta = 9, .n_max = 64}), InvalidParameters);
}

} // namespace
