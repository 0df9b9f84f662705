#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "knodel_graph.hpp"
#include "structure.hpp"
#include "verification.hpp"

namespace knodeldom {

inline constexpr std::uint64_t default_seed = 1975;

/// Reports for the pairwise common-neighborhood statements, one per statement.
struct PairReports {
    VerificationReport nonempty_iff_either{.check = "common neighbor exists iff id or half-id in M"};
    VerificationReport two_iff_both{.check = "two common neighbors iff id and half-id in M"};
    VerificationReport one_iff_exactly_one{.check = "one common neighbor iff exactly one of id, half-id in M"};
    VerificationReport prediction{.check = "predicted count equals enumerated count"};
    VerificationReport regime{.check = "at most one common neighbor when 2^delta < n/2 + 2, one iff id in M"};

    void merge(const PairReports& o)
    {
        nonempty_iff_either.merge(o.nonempty_iff_either);
        two_iff_both.merge(o.two_iff_both);
        one_iff_exactly_one.merge(o.one_iff_exactly_one);
        prediction.merge(o.prediction);
        regime.merge(o.regime);
    }

    std::vector<VerificationReport> list() const
    {
        return {nonempty_iff_either, two_iff_both, one_iff_exactly_one, prediction, regime};
    }
};

/// Reports for the neighborhood counting statements on one-sided subsets.
struct CountingReports {
    VerificationReport degree_sum{.check = "sum over N(A) of |N(v) ∩ A| equals delta|A|"};
    VerificationReport gap_bound{.check = "cyclic-sequence gaps in M at most delta|A| - |N(A)|"};

    void merge(const CountingReports& o)
    {
        degree_sum.merge(o.degree_sum);
        gap_bound.merge(o.gap_bound);
    }
};

namespace detail {

inline std::string graph_name(const KnodelGraph& g)
{
    return "W_{" + std::to_string(g.delta()) + "," + std::to_string(g.n()) + "}";
}

inline std::string set_name(const VertexSet& a)
{
    std::string s = "{";
    for (std::size_t i = 0; i < a.size(); ++i)
        s += (i ? "," : "") + a[i].to_string();
    return s + "}";
}

} // namespace detail

/// Checks every pairwise statement for one same-side pair.
inline void check_pair(const KnodelGraph& g, const DifferenceSet& m, Vertex a, Vertex b,
                       PairReports& out)
{
    const auto common = static_cast<int>(common_neighbors(g, a, b).size());
    const IntersectionPrediction p = predict_intersection(g, m, a, b);
    const bool either = p.id_in_m || p.co_id_in_m;
    const bool both = p.id_in_m && p.co_id_in_m;
    const bool exactly_one = p.id_in_m != p.co_id_in_m;

    const auto witness = [&] {
        return detail::graph_name(g) + " " + a.to_string() + "," + b.to_string() +
               ": id=" + std::to_string(index_distance(g, a, b)) +
               " |N∩N|=" + std::to_string(common);
    };

    auto tally = [&](VerificationReport& r, bool ok) {
        ++r.cases;
        if (!ok)
            r.fail(witness());
    };
    tally(out.nonempty_iff_either, (common > 0) == either);
    tally(out.two_iff_both, (common == 2) == both);
    tally(out.one_iff_exactly_one, (common == 1) == exactly_one);
    tally(out.prediction, common == p.predicted_count);
    if (unique_intersection_regime(g))
        tally(out.regime, common <= 1 && (common == 1) == p.id_in_m);
}

/// All same-side pairs on both sides. Guarded at pair_guard_half.
inline PairReports check_pairs_exhaustive(const KnodelGraph& g, bool lift_guard = false)
{
    if (!lift_guard && g.half() > pair_guard_half)
        throw InstanceTooLarge("pair enumeration refused for n/2 = " + std::to_string(g.half()) +
                               " > " + std::to_string(pair_guard_half));
    const DifferenceSet m = m_set(g.delta());
    PairReports out;
    for (Side side : {Side::U, Side::V})
        for (std::int64_t i = 1; i <= g.half(); ++i)
            for (std::int64_t j = i + 1; j <= g.half(); ++j)
                check_pair(g, m, {side, i}, {side, j}, out);
    return out;
}

inline void check_counting(const KnodelGraph& g, const DifferenceSet& m, const VertexSet& a,
                           CountingReports& out)
{
    const CountingReport r = counting_report(g, m, a);
    const auto size = static_cast<std::int64_t>(a.size());
    ++out.degree_sum.cases;
    if (r.degree_sum != g.delta() * size)
        out.degree_sum.fail(detail::graph_name(g) + " A=" + detail::set_name(a) +
                            " degree_sum=" + std::to_string(r.degree_sum));
    ++out.gap_bound.cases;
    if (r.m_gap_count > r.slack)
        out.gap_bound.fail(detail::graph_name(g) + " A=" + detail::set_name(a) +
                           " m_gaps=" + std::to_string(r.m_gap_count) +
                           " slack=" + std::to_string(r.slack));
}

/// Every one-sided subset of size 1..max_size, on both sides.
inline CountingReports check_counting_exhaustive(const KnodelGraph& g, std::int64_t max_size)
{
    const DifferenceSet m = m_set(g.delta());
    CountingReports out;
    const std::int64_t h = g.half();
    VertexSet a;
    for (Side side : {Side::U, Side::V}) {
        // Indices strictly increasing; recursion depth is max_size.
        auto rec = [&](auto&& self, std::int64_t next) -> void {
            if (!a.empty())
                check_counting(g, m, a, out);
            if (static_cast<std::int64_t>(a.size()) == max_size)
                return;
            for (std::int64_t i = next; i <= h; ++i) {
                a.push_back({side, i});
                self(self, i + 1);
                a.pop_back();
            }
        };
        rec(rec, 1);
    }
    return out;
}

/// Random one-sided subset: size uniform in [1, min(half, 12)]; a quarter of
/// the draws are a block of consecutive indices, the rest are uniform without
/// replacement.
template <typename Rng>
VertexSet sample_subset(const KnodelGraph& g, Rng& rng)
{
    const std::int64_t h = g.half();
    const Side side = std::uniform_int_distribution<int>(0, 1)(rng) == 0 ? Side::U : Side::V;
    const std::int64_t size = std::uniform_int_distribution<std::int64_t>(1, std::min<std::int64_t>(h, 12))(rng);
    VertexSet a;
    if (std::uniform_int_distribution<int>(0, 3)(rng) == 0) {
        const std::int64_t start = std::uniform_int_distribution<std::int64_t>(1, h)(rng);
        for (std::int64_t k = 0; k < size; ++k)
            a.push_back(g.vertex(side, start + k));
    } else {
        // Floyd's algorithm
        std::set<std::int64_t> picked;
        for (std::int64_t j = h - size + 1; j <= h; ++j) {
            const std::int64_t t = std::uniform_int_distribution<std::int64_t>(1, j)(rng);
            picked.insert(picked.contains(t) ? j : t);
        }
        for (std::int64_t i : picked)
            a.push_back({side, i});
    }
    return normalized(std::move(a));
}

struct LemmaSuiteOptions {
    std::optional<std::int64_t> delta; // restrict to one delta; all valid deltas otherwise
    std::int64_t n_min = 2;
    std::int64_t n_max = 128;
    bool exhaustive = true;
    std::int64_t triple_n_max = 64;
    std::int64_t counting_n_max = 40;
    std::int64_t counting_max_size = 3;
    std::uint64_t samples = 10000;
    std::uint64_t seed = default_seed;
    bool lift_guard = false;
};

/// Every valid (delta, n) with n even in [n_min, n_max], optionally one delta.
inline std::vector<KnodelGraph> graphs_in_range(std::optional<std::int64_t> delta,
                                                std::int64_t n_min, std::int64_t n_max)
{
    std::vector<KnodelGraph> out;
    for (std::int64_t n = std::max<std::int64_t>(2, n_min + (n_min % 2)); n <= n_max; n += 2)
        for (std::int64_t d = 1; d <= KnodelGraph::floor_log2(n); ++d)
            if (!delta || *delta == d)
                out.emplace_back(d, n);
    return out;
}

/// Runs every structural check over the configured range. Exhaustive mode
/// enumerates pairs, triples and small subsets; random subsets are always
/// sampled on top. Sampled mode replaces enumeration by uniform draws.
inline std::vector<VerificationReport> run_lemma_suite(const LemmaSuiteOptions& opt)
{
    const auto graphs = graphs_in_range(opt.delta, opt.n_min, opt.n_max);
    if (graphs.empty())
        throw InvalidParameters("no valid (delta, n) in the requested range");

    PairReports pairs;
    VerificationReport triples{.check = "no three same-side vertices share two neighbors"};
    CountingReports counting;
    std::mt19937_64 rng(opt.seed);
    auto pick_graph = [&]() -> const KnodelGraph& {
        return graphs[std::uniform_int_distribution<std::size_t>(0, graphs.size() - 1)(rng)];
    };

    if (opt.exhaustive) {
        for (const auto& g : graphs) {
            pairs.merge(check_pairs_exhaustive(g, opt.lift_guard));
            if (g.n() <= opt.triple_n_max)
                triples.merge(check_k23_free(g, opt.lift_guard));
            if (g.n() <= opt.counting_n_max)
                counting.merge(check_counting_exhaustive(g, opt.counting_max_size));
        }
    } else {
        for (std::uint64_t s = 0; s < opt.samples; ++s) {
            const KnodelGraph& g = pick_graph();
            if (g.half() < 2)
                continue;
            const DifferenceSet m = m_set(g.delta());
            const Side side = std::uniform_int_distribution<int>(0, 1)(rng) == 0 ? Side::U : Side::V;
            std::uniform_int_distribution<std::int64_t> idx(1, g.half());
            const std::int64_t i = idx(rng);
            std::int64_t j = idx(rng);
            while (j == i)
                j = idx(rng);
            check_pair(g, m, {side, i}, {side, j}, pairs);

            if (g.half() >= 3) {
                std::int64_t k = idx(rng);
                while (k == i || k == j)
                    k = idx(rng);
                auto c = common_neighbors(g, {side, i}, {side, j});
                auto nk = normalized(g.neighbors({side, k}));
                VertexSet abc;
                std::set_intersection(c.begin(), c.end(), nk.begin(), nk.end(), std::back_inserter(abc));
                ++triples.cases;
                if (abc.size() >= 2)
                    triples.fail(detail::graph_name(g) + " " + detail::set_name(normalized(
                                     {Vertex{side, i}, Vertex{side, j}, Vertex{side, k}})));
            }
        }
    }

    for (std::uint64_t s = 0; s < opt.samples; ++s) {
        const KnodelGraph& g = pick_graph();
        check_counting(g, m_set(g.delta()), sample_subset(g, rng), counting);
    }

    VerificationReport power{.check = "x^a - x^b = x^c - x^d != 0 forces a=c, b=d (x in {2,3}, exponents <= 12)"};
    power.merge(check_power_diff_identity(2, 12));
    power.merge(check_power_diff_identity(3, 12));

    auto out = pairs.list();
    out.push_back(triples);
    out.push_back(counting.degree_sum);
    out.push_back(counting.gap_bound);
    out.push_back(power);
    return out;
}

} // namespace knodeldom
