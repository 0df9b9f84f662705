#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "verification.hpp"

namespace knodeldom {

enum class Side : std::uint8_t { U = 0, V = 1 };

constexpr Side opposite(Side s) noexcept { return s == Side::U ? Side::V : Side::U; }

constexpr char side_letter(Side s) noexcept { return s == Side::U ? 'u' : 'v'; }

/// A vertex u_i or v_i with a 1-based index. Ordering is the canonical
/// vertex order: every U-vertex precedes every V-vertex, then by index.
struct Vertex {
    Side side = Side::U;
    std::int64_t index = 1;

    friend constexpr auto operator<=>(const Vertex&, const Vertex&) = default;

    std::string to_string() const { return side_letter(side) + std::to_string(index); }
};

constexpr Vertex u(std::int64_t i) noexcept { return {Side::U, i}; }
constexpr Vertex v(std::int64_t i) noexcept { return {Side::V, i}; }

/// A vertex set kept sorted in canonical order without duplicates.
using VertexSet = std::vector<Vertex>;

inline VertexSet normalized(VertexSet s)
{
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

/// Knödel graph W_{delta,n}: delta-regular bipartite on sides U, V of size n/2
/// with u_i ~ v_j iff j = i + 2^k - 1 (mod n/2) for some 0 <= k < delta.
///
/// Adjacency is evaluated from the rule on every query; nothing is stored
/// beyond (delta, n).
class KnodelGraph {
public:
    KnodelGraph(std::int64_t delta, std::int64_t n) : delta_(delta), n_(n), half_(n / 2)
    {
        if (n < 2 || n % 2 != 0)
            throw InvalidParameters("n must be even and >= 2 (got " + std::to_string(n) + ")");
        const std::int64_t max_delta = floor_log2(n);
        if (delta < 1 || delta > max_delta)
            throw InvalidParameters("delta must lie in [1, floor(log2 n)] = [1, " +
                                    std::to_string(max_delta) + "] (got " +
                                    std::to_string(delta) + ")");
    }

    static constexpr std::int64_t floor_log2(std::int64_t x) noexcept
    {
        return static_cast<std::int64_t>(std::bit_width(static_cast<std::uint64_t>(x))) - 1;
    }

    std::int64_t delta() const noexcept { return delta_; }
    std::int64_t n() const noexcept { return n_; }
    std::int64_t half() const noexcept { return half_; }
    std::int64_t edge_count() const noexcept { return delta_ * half_; }

    friend bool operator==(const KnodelGraph&, const KnodelGraph&) = default;

    bool contains(Vertex w) const noexcept { return w.index >= 1 && w.index <= half_; }

    /// Maps any integer index onto its representative ((x - 1) mod half) + 1.
    std::int64_t reduce(std::int64_t x) const noexcept
    {
        std::int64_t r = (x - 1) % half_;
        if (r < 0)
            r += half_;
        return r + 1;
    }

    Vertex vertex(Side side, std::int64_t raw_index) const noexcept { return {side, reduce(raw_index)}; }

    void require(Vertex w) const
    {
        if (!contains(w)) [[unlikely]]
            out_of_range(w);
    }

    /// Index of the k-th neighbor (k in [0, delta)) of the vertex with the given
    /// side and index. No range checks.
    std::int64_t neighbor_index(Side side, std::int64_t index, std::int64_t k) const noexcept
    {
        // 2^k - 1 < half for every k < delta, so one wrap suffices.
        const std::int64_t offset = (std::int64_t{1} << k) - 1;
        std::int64_t j;
        if (side == Side::U) {
            j = index - 1 + offset;
            if (j >= half_)
                j -= half_;
        } else {
            j = index - 1 - offset;
            if (j < 0)
                j += half_;
        }
        return j + 1;
    }

    template <typename F>
    void for_each_neighbor(Vertex w, F&& f) const
    {
        const Side other = opposite(w.side);
        for (std::int64_t k = 0; k < delta_; ++k)
            f(Vertex{other, neighbor_index(w.side, w.index, k)});
    }

    /// The delta neighbors of w, listed for k = 0, 1, ..., delta - 1.
    std::vector<Vertex> neighbors(Vertex w) const
    {
        require(w);
        std::vector<Vertex> out;
        out.reserve(static_cast<std::size_t>(delta_));
        for_each_neighbor(w, [&](Vertex x) { out.push_back(x); });
        return out;
    }

    bool adjacent(Vertex a, Vertex b) const
    {
        require(a);
        require(b);
        if (a.side == b.side)
            return false;
        bool hit = false;
        for_each_neighbor(a, [&](Vertex x) { hit = hit || x == b; });
        return hit;
    }

    /// All vertices in canonical order.
    VertexSet vertices() const
    {
        VertexSet out;
        out.reserve(static_cast<std::size_t>(n_));
        for (Side s : {Side::U, Side::V})
            for (std::int64_t i = 1; i <= half_; ++i)
                out.push_back({s, i});
        return out;
    }

    /// Position of w in canonical order, in [0, n).
    std::int64_t ordinal(Vertex w) const noexcept
    {
        return (w.side == Side::U ? 0 : half_) + w.index - 1;
    }

    Vertex from_ordinal(std::int64_t pos) const noexcept
    {
        return pos < half_ ? Vertex{Side::U, pos + 1} : Vertex{Side::V, pos - half_ + 1};
    }

    /// Edge set as pairs (i, j) meaning u_i ~ v_j, sorted by (i, j).
    std::vector<std::pair<std::int64_t, std::int64_t>> edges() const
    {
        std::vector<std::pair<std::int64_t, std::int64_t>> out;
        out.reserve(static_cast<std::size_t>(edge_count()));
        std::vector<std::int64_t> row(static_cast<std::size_t>(delta_));
        for (std::int64_t i = 1; i <= half_; ++i) {
            for (std::int64_t k = 0; k < delta_; ++k)
                row[static_cast<std::size_t>(k)] = neighbor_index(Side::U, i, k);
            std::sort(row.begin(), row.end());
            for (std::int64_t j : row)
                out.emplace_back(i, j);
        }
        return out;
    }

private:
    [[noreturn, gnu::noinline, gnu::cold]] void out_of_range(Vertex w) const
    {
        throw OutOfRange("vertex " + w.to_string() + " outside [1, " + std::to_string(half_) + "]");
    }

    std::int64_t delta_;
    std::int64_t n_;
    std::int64_t half_;
};

/// Cyclic distance min(|i - j|, half - |i - j|) between two same-side vertices.
inline std::int64_t index_distance(const KnodelGraph& g, Vertex a, Vertex b)
{
    g.require(a);
    g.require(b);
    if (a.side != b.side)
        throw ContractViolation("index-distance is only defined within one side (" + a.to_string() +
                                ", " + b.to_string() + ")");
    const std::int64_t d = a.index > b.index ? a.index - b.index : b.index - a.index;
    return std::min(d, g.half() - d);
}

/// Gaps between consecutive indices of a one-sided subset, closing around
/// the cycle: n_j = i_{j+1} - i_j and n_k = half + i_1 - i_k.
struct CyclicSequence {
    std::vector<std::int64_t> gaps;

    std::int64_t sum() const { return std::accumulate(gaps.begin(), gaps.end(), std::int64_t{0}); }

    friend bool operator==(const CyclicSequence&, const CyclicSequence&) = default;
};

/// Validates a nonempty one-sided subset and returns its side.
inline Side require_one_sided(const KnodelGraph& g, std::span<const Vertex> a)
{
    if (a.empty())
        throw ContractViolation("vertex subset must be nonempty");
    const Side side = a.front().side;
    for (Vertex w : a) {
        g.require(w);
        if (w.side != side)
            throw ContractViolation("vertex subset mixes sides (" + a.front().to_string() + ", " +
                                    w.to_string() + ")");
    }
    return side;
}

inline CyclicSequence cyclic_sequence(const KnodelGraph& g, std::span<const Vertex> a)
{
    require_one_sided(g, a);
    std::vector<std::int64_t> idx;
    idx.reserve(a.size());
    for (Vertex w : a)
        idx.push_back(w.index);
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());

    CyclicSequence seq;
    seq.gaps.reserve(idx.size());
    for (std::size_t j = 0; j + 1 < idx.size(); ++j)
        seq.gaps.push_back(idx[j + 1] - idx[j]);
    seq.gaps.push_back(g.half() + idx.front() - idx.back());
    return seq;
}

/// M_delta = { 2^a - 2^b : 0 <= b < a < delta }, the index offsets at which two
/// same-side vertices share a neighbor.
class DifferenceSet {
public:
    explicit DifferenceSet(std::int64_t delta) : delta_(delta)
    {
        if (delta < 1 || delta > 62)
            throw InvalidParameters("difference set needs delta in [1, 62] (got " +
                                    std::to_string(delta) + ")");
        for (std::int64_t a = 1; a < delta; ++a)
            for (std::int64_t b = 0; b < a; ++b)
                members_.push_back((std::int64_t{1} << a) - (std::int64_t{1} << b));
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    }

    std::int64_t delta() const noexcept { return delta_; }
    const std::vector<std::int64_t>& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }

    bool contains(std::int64_t x) const
    {
        return std::binary_search(members_.begin(), members_.end(), x);
    }

private:
    std::int64_t delta_;
    std::vector<std::int64_t> members_;
};

inline DifferenceSet m_set(std::int64_t delta) { return DifferenceSet(delta); }

/// Exhaustively checks that x^a - x^b = x^c - x^d != 0 forces a = c and b = d
/// for all exponents in [0, max_exp].
inline VerificationReport check_power_diff_identity(std::int64_t x, std::int64_t max_exp)
{
    if (x < 2 || max_exp < 1)
        throw InvalidParameters("power-difference check needs x >= 2 and max_exp >= 1");

    std::vector<std::int64_t> pow{1};
    for (std::int64_t e = 1; e <= max_exp; ++e) {
        if (pow.back() > std::numeric_limits<std::int64_t>::max() / x)
            throw InvalidParameters("x^max_exp overflows 64-bit integers");
        pow.push_back(pow.back() * x);
    }

    VerificationReport report{.check = "power-difference uniqueness x=" + std::to_string(x) +
                                       " max_exp=" + std::to_string(max_exp)};
    const auto m = static_cast<std::size_t>(max_exp) + 1;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            for (std::size_t c = 0; c < m; ++c)
                for (std::size_t d = 0; d < m; ++d) {
                    ++report.cases;
                    const std::int64_t lhs = pow[a] - pow[b];
                    if (lhs != 0 && lhs == pow[c] - pow[d] && (a != c || b != d)) {
                        report.fail("(a,b,c,d)=(" + std::to_string(a) + "," + std::to_string(b) +
                                    "," + std::to_string(c) + "," + std::to_string(d) + ")");
                        return report;
                    }
                }
    return report;
}

} // namespace knodeldom
