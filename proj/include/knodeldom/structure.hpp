#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "knodel_graph.hpp"
#include "verification.hpp"

namespace knodeldom {

/// Exhaustive pair enumeration is refused above this side size.
inline constexpr std::int64_t pair_guard_half = 512;
/// Exhaustive triple enumeration is refused above this side size.
inline constexpr std::int64_t triple_guard_half = 128;

namespace detail {

inline void require_distinct_same_side(const KnodelGraph& g, Vertex a, Vertex b)
{
    g.require(a);
    g.require(b);
    if (a.side != b.side)
        throw ContractViolation("vertices lie on different sides (" + a.to_string() + ", " +
                                b.to_string() + ")");
    if (a == b)
        throw ContractViolation("vertices must be distinct (" + a.to_string() + ")");
}

} // namespace detail

/// N(a) ∩ N(b), computed by enumerating both neighborhoods.
inline VertexSet common_neighbors(const KnodelGraph& g, Vertex a, Vertex b)
{
    detail::require_distinct_same_side(g, a, b);
    auto na = normalized(g.neighbors(a));
    auto nb = normalized(g.neighbors(b));
    VertexSet out;
    std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(), std::back_inserter(out));
    return out;
}

/// Common-neighbor count implied by whether id and half - id lie in M_delta.
struct IntersectionPrediction {
    bool id_in_m = false;
    bool co_id_in_m = false;
    int predicted_count = 0;

    friend bool operator==(const IntersectionPrediction&, const IntersectionPrediction&) = default;
};

inline IntersectionPrediction predict_intersection(const KnodelGraph& g, const DifferenceSet& m,
                                                   Vertex a, Vertex b)
{
    detail::require_distinct_same_side(g, a, b);
    const std::int64_t id = index_distance(g, a, b);
    IntersectionPrediction p;
    p.id_in_m = m.contains(id);
    p.co_id_in_m = m.contains(g.half() - id);
    p.predicted_count = (p.id_in_m ? 1 : 0) + (p.co_id_in_m ? 1 : 0);
    return p;
}

inline IntersectionPrediction predict_intersection(const KnodelGraph& g, Vertex a, Vertex b)
{
    return predict_intersection(g, m_set(g.delta()), a, b);
}

/// True iff 2^delta < half + 2, i.e. delta < log2(n/2 + 2). In this regime no
/// two same-side vertices share more than one neighbor.
inline bool unique_intersection_regime(const KnodelGraph& g)
{
    return (std::int64_t{1} << g.delta()) < g.half() + 2;
}

/// Checks that no three same-side vertices (on either side) have two or more
/// common neighbors. Throws InstanceTooLarge above triple_guard_half unless
/// lift_guard is set.
inline VerificationReport check_k23_free(const KnodelGraph& g, bool lift_guard = false)
{
    if (!lift_guard && g.half() > triple_guard_half)
        throw InstanceTooLarge("triple enumeration refused for n/2 = " + std::to_string(g.half()) +
                               " > " + std::to_string(triple_guard_half));

    VerificationReport report{.check = "K23-free W_{" + std::to_string(g.delta()) + "," +
                                       std::to_string(g.n()) + "}"};
    const auto h = static_cast<std::size_t>(g.half());
    for (Side side : {Side::U, Side::V}) {
        std::vector<VertexSet> hood(h);
        for (std::size_t i = 0; i < h; ++i)
            hood[i] = normalized(g.neighbors({side, static_cast<std::int64_t>(i) + 1}));

        VertexSet ab;
        VertexSet abc;
        for (std::size_t i = 0; i < h; ++i)
            for (std::size_t j = i + 1; j < h; ++j) {
                ab.clear();
                std::set_intersection(hood[i].begin(), hood[i].end(), hood[j].begin(),
                                      hood[j].end(), std::back_inserter(ab));
                for (std::size_t k = j + 1; k < h; ++k) {
                    ++report.cases;
                    if (ab.size() < 2)
                        continue;
                    abc.clear();
                    std::set_intersection(ab.begin(), ab.end(), hood[k].begin(), hood[k].end(),
                                          std::back_inserter(abc));
                    if (abc.size() >= 2) {
                        report.fail(Vertex{side, static_cast<std::int64_t>(i) + 1}.to_string() +
                                    "," + Vertex{side, static_cast<std::int64_t>(j) + 1}.to_string() +
                                    "," + Vertex{side, static_cast<std::int64_t>(k) + 1}.to_string() +
                                    " share " + std::to_string(abc.size()) + " neighbors");
                        return report;
                    }
                }
            }
    }
    return report;
}

/// Quantities of the neighborhood counting argument for a one-sided set A.
struct CountingReport {
    std::int64_t degree_sum = 0;        // Σ_{v∈N(A)} |N(v) ∩ A|
    std::int64_t neighborhood_size = 0; // |N(A)|
    std::int64_t m_gap_count = 0;       // cyclic-sequence gaps lying in M_delta
    std::int64_t slack = 0;             // delta·|A| − |N(A)|

    friend bool operator==(const CountingReport&, const CountingReport&) = default;
};

inline CountingReport counting_report(const KnodelGraph& g, const DifferenceSet& m,
                                      std::span<const Vertex> a)
{
    require_one_sided(g, a);
    const VertexSet set = normalized(VertexSet(a.begin(), a.end()));

    VertexSet hood;
    hood.reserve(set.size() * static_cast<std::size_t>(g.delta()));
    for (Vertex w : set)
        g.for_each_neighbor(w, [&](Vertex x) { hood.push_back(x); });
    hood = normalized(std::move(hood));

    CountingReport r;
    r.neighborhood_size = static_cast<std::int64_t>(hood.size());
    for (Vertex x : hood)
        g.for_each_neighbor(x, [&](Vertex y) {
            if (std::binary_search(set.begin(), set.end(), y))
                ++r.degree_sum;
        });
    for (std::int64_t gap : cyclic_sequence(g, set).gaps)
        if (m.contains(gap))
            ++r.m_gap_count;
    r.slack = g.delta() * static_cast<std::int64_t>(set.size()) - r.neighborhood_size;
    return r;
}

inline CountingReport counting_report(const KnodelGraph& g, std::span<const Vertex> a)
{
    return counting_report(g, m_set(g.delta()), a);
}

} // namespace knodeldom
