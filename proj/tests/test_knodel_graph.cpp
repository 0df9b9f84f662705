#include <gtest/gtest.h>

#include <random>
#include <set>

#include "knodeldom/knodel_graph.hpp"
#include "oracle.hpp"

using namespace knodeldom;

namespace {

std::set<Vertex> as_set(const std::vector<Vertex>& v) { return {v.begin(), v.end()}; }

TEST(BuildGraph, AcceptsSmallestAndCubicInstances)
{
    const KnodelGraph g(3, 8);
    EXPECT_EQ(g.half(), 4);
    EXPECT_EQ(g.delta(), 3);
    for (Vertex w : g.vertices())
        EXPECT_EQ(g.neighbors(w).size(), 3u);

    const KnodelGraph single(1, 2);
    EXPECT_EQ(single.half(), 1);
    EXPECT_EQ(single.neighbors(u(1)), std::vector<Vertex>{v(1)});
    EXPECT_EQ(single.neighbors(v(1)), std::vector<Vertex>{u(1)});
}

TEST(BuildGraph, RejectsInvalidParameters)
{
    EXPECT_THROW(KnodelGraph(3, 6), InvalidParameters); // floor(log2 6) = 2
    EXPECT_THROW(KnodelGraph(2, 7), InvalidParameters);
    EXPECT_THROW(KnodelGraph(1, 0), InvalidParameters);
    EXPECT_THROW(KnodelGraph(0, 8), InvalidParameters);
    EXPECT_NO_THROW(KnodelGraph(20, 1 << 20));
    EXPECT_THROW(KnodelGraph(21, 1 << 20), InvalidParameters);
}

TEST(Neighbors, MatchesDrawnExamples)
{
    EXPECT_EQ(as_set(KnodelGraph(3, 12).neighbors(u(1))), (std::set<Vertex>{v(1), v(2), v(4)}));
    EXPECT_EQ(KnodelGraph(3, 8).neighbors(u(3)), (std::vector<Vertex>{v(3), v(4), v(2)}));
    EXPECT_THROW(KnodelGraph(3, 8).neighbors(u(5)), OutOfRange);
    EXPECT_THROW(KnodelGraph(3, 8).neighbors(v(0)), OutOfRange);
}

TEST(Neighbors, AgreesWithZeroBasedDefinitionOnAllSmallGraphs)
{
    for (int n = 2; n <= 64; n += 2)
        for (int d = 1; d <= KnodelGraph::floor_log2(n); ++d) {
            const KnodelGraph g(d, n);
            const auto dense = oracle::knodel(d, n);
            for (Vertex a : g.vertices()) {
                const auto hood = as_set(g.neighbors(a));
                ASSERT_EQ(hood.size(), static_cast<std::size_t>(d)) << "regularity";
                for (Vertex b : g.vertices()) {
                    const bool expected = dense.adj[g.ordinal(a)][g.ordinal(b)];
                    ASSERT_EQ(hood.contains(b), expected) << a.to_string() << " " << b.to_string();
                    ASSERT_EQ(g.adjacent(a, b), expected);
                }
                for (Vertex b : hood) {
                    ASSERT_NE(a.side, b.side) << "bipartite";
                    ASSERT_TRUE(as_set(g.neighbors(b)).contains(a)) << "symmetric";
                }
            }
        }
}

TEST(Neighbors, EdgesAreSortedAndComplete)
{
    const KnodelGraph g(3, 10);
    const auto e = g.edges();
    ASSERT_EQ(e.size(), 15u);
    EXPECT_TRUE(std::is_sorted(e.begin(), e.end()));
    EXPECT_EQ(e.front(), (std::pair<std::int64_t, std::int64_t>{1, 1}));
}

TEST(IndexDistance, Examples)
{
    EXPECT_EQ(index_distance(KnodelGraph(3, 10), u(1), u(4)), 2);
    EXPECT_EQ(index_distance(KnodelGraph(3, 8), u(2), u(2)), 0);
    EXPECT_EQ(index_distance(KnodelGraph(3, 20), v(1), v(6)), 5);
    EXPECT_THROW(index_distance(KnodelGraph(3, 8), u(1), v(1)), ContractViolation);
}

TEST(CyclicSequence, Examples)
{
    EXPECT_EQ(cyclic_sequence(KnodelGraph(3, 10), VertexSet{u(1), u(2)}).gaps,
              (std::vector<std::int64_t>{1, 4}));
    EXPECT_EQ(cyclic_sequence(KnodelGraph(3, 12), VertexSet{u(3)}).gaps, (std::vector<std::int64_t>{6}));
    EXPECT_EQ(cyclic_sequence(KnodelGraph(3, 20), VertexSet{u(6), u(1), u(7), u(2)}).gaps,
              (std::vector<std::int64_t>{1, 4, 1, 4}));
    EXPECT_THROW(cyclic_sequence(KnodelGraph(3, 8), VertexSet{}), ContractViolation);
    EXPECT_THROW(cyclic_sequence(KnodelGraph(3, 8), VertexSet{u(1), v(2)}), ContractViolation);
}

// Gaps sum to n/2, and every index distance within A is a run of consecutive
// gaps whose complement sums to n/2 - id.
TEST(CyclicSequence, SumAndRunDecompositionOnRandomSubsets)
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::int64_t n = 2 * std::uniform_int_distribution<std::int64_t>(1, 60)(rng);
        const KnodelGraph g(1, n);
        const Side side = trial % 2 ? Side::U : Side::V;
        VertexSet a;
        for (std::int64_t i = 1; i <= g.half(); ++i)
            if (std::uniform_int_distribution<int>(0, 3)(rng) == 0)
                a.push_back({side, i});
        if (a.empty())
            a.push_back({side, 1});

        const auto seq = cyclic_sequence(g, a);
        ASSERT_EQ(seq.sum(), g.half());
        for (auto gap : seq.gaps)
            ASSERT_GE(gap, 1);

        const auto k = seq.gaps.size();
        for (std::size_t p = 0; p < a.size(); ++p)
            for (std::size_t q = p + 1; q < a.size(); ++q) {
                const std::int64_t id = index_distance(g, a[p], a[q]);
                bool found = false;
                for (std::size_t start = 0; start < k && !found; ++start) {
                    std::int64_t run = 0;
                    for (std::size_t len = 1; len < k && !found; ++len) {
                        run += seq.gaps[(start + len - 1) % k];
                        found = run == id && seq.sum() - run == g.half() - id;
                    }
                }
                ASSERT_TRUE(found || id == 0) << "id=" << id;
            }
    }
}

TEST(DifferenceSet, Examples)
{
    EXPECT_EQ(m_set(3).members(), (std::vector<std::int64_t>{1, 2, 3}));
    EXPECT_TRUE(m_set(1).empty());
    EXPECT_EQ(m_set(4).members(), (std::vector<std::int64_t>{1, 2, 3, 4, 6, 7}));
}

TEST(DifferenceSet, CardinalityIsBinomialAndExtremes)
{
    for (std::int64_t d = 1; d <= 6; ++d) {
        const auto m = m_set(d);
        EXPECT_EQ(static_cast<std::int64_t>(m.size()), d * (d - 1) / 2) << "delta " << d;
        if (d >= 2) {
            EXPECT_EQ(m.members().front(), 1);
            EXPECT_EQ(m.members().back(), (std::int64_t{1} << (d - 1)) - 1);
        }
    }
}

TEST(PowerDiffIdentity, Examples)
{
    EXPECT_TRUE(check_power_diff_identity(2, 8).passed);
    EXPECT_TRUE(check_power_diff_identity(2, 1).passed);
    const auto r = check_power_diff_identity(3, 6);
    EXPECT_TRUE(r.passed);
    EXPECT_EQ(r.cases, 7u * 7 * 7 * 7);
    EXPECT_FALSE(r.counterexample);
    EXPECT_THROW(check_power_diff_identity(1, 4), InvalidParameters);
    EXPECT_THROW(check_power_diff_identity(2, 70), InvalidParameters);
}

TEST(Vertex, CanonicalOrderPutsUBeforeV)
{
    EXPECT_LT(u(5), v(1));
    EXPECT_LT(v(1), v(2));
    EXPECT_EQ(normalized({v(2), u(3), u(1), v(2)}), (VertexSet{u(1), u(3), v(2)}));
    const KnodelGraph g(3, 12);
    EXPECT_EQ(g.vertex(Side::U, 7), u(1));
    EXPECT_EQ(g.vertex(Side::V, 0), v(6));
    EXPECT_EQ(g.from_ordinal(g.ordinal(v(4))), v(4));
}

} // namespace
