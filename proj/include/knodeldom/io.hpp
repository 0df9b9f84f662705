#pragma once

#include <cctype>
#include <charconv>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "domination.hpp"
#include "errors.hpp"
#include "knodel_graph.hpp"
#include "solver.hpp"
#include "verification.hpp"

namespace knodeldom {

inline constexpr const char* version = "1.0.0";

// ---------------------------------------------------------------------------
// Vertex text syntax: "u<index>" / "v<index>", comma separated, whitespace
// tolerant, case insensitive.

namespace detail {

inline std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

inline std::int64_t parse_int(std::string_view s, std::string_view what)
{
    s = trim(s);
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw ParseError("bad " + std::string(what) + ": '" + std::string(s) + "'");
    return value;
}

} // namespace detail

inline Vertex parse_vertex(std::string_view text)
{
    const std::string_view s = detail::trim(text);
    if (s.empty())
        throw ParseError("empty vertex token");
    const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(s.front())));
    if (c != 'u' && c != 'v')
        throw ParseError("vertex must start with 'u' or 'v': '" + std::string(s) + "'");
    return {c == 'u' ? Side::U : Side::V, detail::parse_int(s.substr(1), "vertex index")};
}

/// Parses "u1, u2 ,V3". An empty or all-blank string yields the empty set.
inline VertexSet parse_vertex_set(std::string_view text)
{
    VertexSet out;
    if (detail::trim(text).empty())
        return out;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        out.push_back(parse_vertex(text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos)));
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return normalized(std::move(out));
}

inline std::string format_vertex_set(const VertexSet& s)
{
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i)
            out += ',';
        out += s[i].to_string();
    }
    return out;
}

// ---------------------------------------------------------------------------
// Graph export. Edge lines are sorted by (i, j) for u_i ~ v_j.

enum class GraphFormat { EdgeList, Dimacs, Json };

inline GraphFormat parse_graph_format(std::string_view s)
{
    if (s == "edgelist")
        return GraphFormat::EdgeList;
    if (s == "dimacs")
        return GraphFormat::Dimacs;
    if (s == "json")
        return GraphFormat::Json;
    throw ParseError("unknown graph format '" + std::string(s) + "'");
}

inline void write_edgelist(const KnodelGraph& g, std::ostream& os)
{
    for (const auto& [i, j] : g.edges())
        os << "u " << i << " v " << j << '\n';
}

/// DIMACS numbering: u_i -> i, v_j -> n/2 + j.
inline void write_dimacs(const KnodelGraph& g, std::ostream& os)
{
    os << "c Knodel graph W_{" << g.delta() << "," << g.n() << "}\n";
    os << "p edge " << g.n() << ' ' << g.edge_count() << '\n';
    for (const auto& [i, j] : g.edges())
        os << "e " << i << ' ' << g.half() + j << '\n';
}

inline nlohmann::json graph_to_json(const KnodelGraph& g)
{
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [i, j] : g.edges())
        edges.push_back({i, j});
    return {{"format", "knodel-edgelist"},
            {"delta", g.delta()},
            {"n", g.n()},
            {"half", g.half()},
            {"edge_count", g.edge_count()},
            {"edges", std::move(edges)}};
}

inline void write_graph(const KnodelGraph& g, GraphFormat f, std::ostream& os)
{
    switch (f) {
    case GraphFormat::EdgeList:
        write_edgelist(g, os);
        break;
    case GraphFormat::Dimacs:
        write_dimacs(g, os);
        break;
    case GraphFormat::Json:
        os << graph_to_json(g).dump(2) << '\n';
        break;
    }
}

using EdgeList = std::vector<std::pair<std::int64_t, std::int64_t>>;

/// Reads "u <i> v <j>" lines; blank lines and lines starting with '#' are skipped.
inline EdgeList parse_edgelist(std::istream& is)
{
    EdgeList out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const std::string_view t = detail::trim(line);
        if (t.empty() || t.front() == '#')
            continue;
        std::istringstream ls{std::string(t)};
        std::string a, b;
        std::int64_t i = 0, j = 0;
        if (!(ls >> a >> i >> b >> j) || a != "u" || b != "v" || !(ls >> std::ws).eof())
            throw ParseError("edge list line " + std::to_string(lineno) + ": '" + std::string(t) + "'");
        out.emplace_back(i, j);
    }
    return out;
}

/// Recovers (delta, n) from an edge list and checks that the edges are exactly
/// those of W_{delta,n}.
inline KnodelGraph graph_from_edgelist(EdgeList edges)
{
    if (edges.empty())
        throw InvalidParameters("empty edge list");
    std::int64_t half = 0;
    for (const auto& [i, j] : edges)
        half = std::max({half, i, j});
    if (static_cast<std::int64_t>(edges.size()) % half != 0)
        throw InvalidParameters("edge count is not a multiple of n/2");
    KnodelGraph g(static_cast<std::int64_t>(edges.size()) / half, 2 * half);
    std::sort(edges.begin(), edges.end());
    if (edges != g.edges())
        throw InvalidParameters("edge list is not the Knödel graph W_{" + std::to_string(g.delta()) +
                                "," + std::to_string(g.n()) + "}");
    return g;
}

// ---------------------------------------------------------------------------
// JSON payloads

inline nlohmann::json to_json(const VertexSet& s)
{
    nlohmann::json a = nlohmann::json::array();
    for (Vertex w : s)
        a.push_back(w.to_string());
    return a;
}

inline nlohmann::json to_json(const DominationReport& r)
{
    return {{"kind", to_string(r.kind)}, {"holds", r.holds}, {"uncovered", to_json(r.uncovered)}};
}

inline nlohmann::json to_json(const SolveResult& r)
{
    return {{"kind", to_string(r.kind)},
            {"optimum", r.optimum},
            {"witness", to_json(r.witness)},
            {"certificate", to_string(r.certificate)},
            {"strategy", to_string(r.strategy)},
            {"nodes_explored", r.nodes_explored},
            {"elapsed_us", r.elapsed.count()}};
}

inline nlohmann::json to_json(const VerificationReport& r)
{
    nlohmann::json j{{"check", r.check}, {"passed", r.passed}, {"cases", r.cases}};
    j["counterexample"] = r.counterexample ? nlohmann::json(*r.counterexample) : nlohmann::json(nullptr);
    return j;
}

/// Envelope for every CLI result:
/// {"command": str, "parameters": {str: any}, "result": object, "version": str}
struct RunReport {
    std::string command;
    nlohmann::json parameters = nlohmann::json::object();
    nlohmann::json result = nlohmann::json::object();
    std::string tool_version = version;

    friend bool operator==(const RunReport&, const RunReport&) = default;
};

inline nlohmann::json to_json(const RunReport& r)
{
    return {{"command", r.command},
            {"parameters", r.parameters},
            {"result", r.result},
            {"version", r.tool_version}};
}

/// Inverse of to_json(RunReport); rejects documents that do not match the schema.
inline RunReport run_report_from_json(const nlohmann::json& j)
{
    if (!j.is_object())
        throw ParseError("run report must be a JSON object");
    auto field = [&](const char* key, nlohmann::json::value_t type) -> const nlohmann::json& {
        if (!j.contains(key) || j.at(key).type() != type)
            throw ParseError(std::string("run report field '") + key + "' missing or mistyped");
        return j.at(key);
    };
    RunReport r;
    r.command = field("command", nlohmann::json::value_t::string).get<std::string>();
    r.parameters = field("parameters", nlohmann::json::value_t::object);
    r.result = field("result", nlohmann::json::value_t::object);
    r.tool_version = field("version", nlohmann::json::value_t::string).get<std::string>();
    if (j.size() != 4)
        throw ParseError("run report has unexpected fields");
    return r;
}

} // namespace knodeldom
