#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "knodeldom/io.hpp"

using namespace knodeldom;

namespace {

TEST(VertexText, ParsesTolerantSyntax)
{
    EXPECT_EQ(parse_vertex_set("u1,u2,v1,v2"), (VertexSet{u(1), u(2), v(1), v(2)}));
    EXPECT_EQ(parse_vertex_set("  V3 , u10,U1 "), (VertexSet{u(1), u(10), v(3)}));
    EXPECT_EQ(parse_vertex_set("u 4"), VertexSet{u(4)});
    EXPECT_TRUE(parse_vertex_set("   ").empty());
    EXPECT_THROW(parse_vertex_set("w1"), ParseError);
    EXPECT_THROW(parse_vertex_set("u1,,v2"), ParseError);
    EXPECT_THROW(parse_vertex_set("u1x"), ParseError);
    EXPECT_THROW(parse_vertex("u"), ParseError);
    EXPECT_EQ(format_vertex_set({u(1), v(12)}), "u1,v12");
}

TEST(GraphExport, EdgeListSingleEdge)
{
    std::ostringstream os;
    write_edgelist(KnodelGraph(1, 2), os);
    EXPECT_EQ(os.str(), "u 1 v 1\n");
}

TEST(GraphExport, DimacsHeaderAndNumbering)
{
    std::ostringstream os;
    write_dimacs(KnodelGraph(3, 8), os);
    std::istringstream is(os.str());
    std::string line;
    std::getline(is, line);
    EXPECT_EQ(line.front(), 'c');
    std::getline(is, line);
    EXPECT_EQ(line, "p edge 8 12");
    std::getline(is, line);
    EXPECT_EQ(line, "e 1 5"); // u_1 ~ v_1
    int edges = 1;
    while (std::getline(is, line))
        ++edges;
    EXPECT_EQ(edges, 12);
}

TEST(GraphExport, EdgeListIsSortedWithExpectedCount)
{
    std::ostringstream os;
    write_edgelist(KnodelGraph(3, 10), os);
    std::istringstream is(os.str());
    const auto edges = parse_edgelist(is);
    EXPECT_EQ(edges.size(), 15u);
    EXPECT_TRUE(std::is_sorted(edges.begin(), edges.end()));
}

TEST(GraphExport, JsonMirrorsEdgeList)
{
    const auto j = graph_to_json(KnodelGraph(3, 8));
    EXPECT_EQ(j.at("delta"), 3);
    EXPECT_EQ(j.at("n"), 8);
    EXPECT_EQ(j.at("edge_count"), 12);
    EXPECT_EQ(j.at("edges").size(), 12u);
    EXPECT_EQ(j.at("edges")[0], nlohmann::json({1, 1}));
}

// graph -> edge list -> parse -> graph is the identity.
TEST(GraphExport, EdgeListRoundTripProperty)
{
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 200; ++trial) {
        const std::int64_t n = 2 * std::uniform_int_distribution<std::int64_t>(1, 300)(rng);
        const std::int64_t d = std::uniform_int_distribution<std::int64_t>(1, KnodelGraph::floor_log2(n))(rng);
        const KnodelGraph g(d, n);
        std::ostringstream os;
        write_edgelist(g, os);
        std::istringstream is(os.str());
        const KnodelGraph back = graph_from_edgelist(parse_edgelist(is));
        ASSERT_EQ(back, g);
        ASSERT_EQ(back.edges(), g.edges());
    }
}

TEST(GraphExport, RejectsForeignEdgeLists)
{
    std::istringstream bad_syntax("u 1 w 2\n");
    EXPECT_THROW(parse_edgelist(bad_syntax), ParseError);
    std::istringstream not_knodel("u 1 v 1\nu 2 v 1\n");
    EXPECT_THROW(graph_from_edgelist(parse_edgelist(not_knodel)), InvalidParameters);
}

TEST(RunReport, JsonRoundTripAndSchema)
{
    RunReport r{.command = "solve",
                .parameters = {{"n", 10}, {"delta", 3}},
                .result = to_json(solve_min_total_dominating(KnodelGraph(3, 10)))};
    const auto j = to_json(r);
    EXPECT_EQ(run_report_from_json(nlohmann::json::parse(j.dump())), r);
    EXPECT_EQ(j.at("version"), version);
    EXPECT_EQ(j.at("result").at("witness"), nlohmann::json({"u1", "u2", "v1", "v2"}));
    EXPECT_TRUE(j.at("result").at("elapsed_us").is_number_integer());

    auto broken = j;
    broken.erase("command");
    EXPECT_THROW(run_report_from_json(broken), ParseError);
    broken = j;
    broken["extra"] = 1;
    EXPECT_THROW(run_report_from_json(broken), ParseError);
    broken = j;
    broken["result"] = 3;
    EXPECT_THROW(run_report_from_json(broken), ParseError);
}

} // namespace
