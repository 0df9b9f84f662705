#pragma once

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "knodel_graph.hpp"

namespace knodeldom {

enum class DominationKind { Dominating, TotalDominating };

inline const char* to_string(DominationKind k)
{
    return k == DominationKind::Dominating ? "dominating" : "total-dominating";
}

struct DominationReport {
    DominationKind kind = DominationKind::TotalDominating;
    bool holds = false;
    VertexSet uncovered; // canonical order
};

/// Streaming coverage check. Vertices are added one at a time; buffers are
/// reused across reset() calls so large sweeps do not reallocate.
class CoverageChecker {
public:
    explicit CoverageChecker(DominationKind kind) : kind_(kind) {}

    void reset(const KnodelGraph& g)
    {
        graph_ = &g;
        for (auto& side : covered_)
            side.assign(static_cast<std::size_t>(g.half()), 0);
        added_ = 0;
    }

    void add(Vertex w)
    {
        const KnodelGraph& g = *graph_;
        g.require(w);
        // Locals keep the byte stores from forcing reloads of the members.
        std::uint8_t* const other = covered_[static_cast<std::size_t>(opposite(w.side))].data();
        const std::int64_t delta = g.delta();
        for (std::int64_t k = 0; k < delta; ++k)
            other[g.neighbor_index(w.side, w.index, k) - 1] = 1;
        if (kind_ == DominationKind::Dominating)
            covered_[static_cast<std::size_t>(w.side)][static_cast<std::size_t>(w.index - 1)] = 1;
        ++added_;
    }

    std::int64_t added() const noexcept { return added_; }

    bool all_covered() const
    {
        for (const auto& side : covered_)
            if (!side.empty() && std::memchr(side.data(), 0, side.size()) != nullptr)
                return false;
        return true;
    }

    DominationReport report() const
    {
        DominationReport r{.kind = kind_};
        for (Side s : {Side::U, Side::V}) {
            const auto& side = covered_[static_cast<std::size_t>(s)];
            for (std::size_t i = 0; i < side.size(); ++i)
                if (!side[i])
                    r.uncovered.push_back({s, static_cast<std::int64_t>(i) + 1});
        }
        r.holds = r.uncovered.empty();
        return r;
    }

private:
    DominationKind kind_;
    const KnodelGraph* graph_ = nullptr;
    std::vector<std::uint8_t> covered_[2];
    std::int64_t added_ = 0;
};

inline DominationReport check_domination(const KnodelGraph& g, std::span<const Vertex> d,
                                         DominationKind kind)
{
    CoverageChecker checker(kind);
    checker.reset(g);
    for (Vertex w : d)
        checker.add(w);
    return checker.report();
}

/// Every vertex of g, members of D included, has a neighbor in D.
inline DominationReport is_total_dominating(const KnodelGraph& g, std::span<const Vertex> d)
{
    return check_domination(g, d, DominationKind::TotalDominating);
}

/// Every vertex of g is in D or has a neighbor in D.
inline DominationReport is_dominating(const KnodelGraph& g, std::span<const Vertex> d)
{
    return check_domination(g, d, DominationKind::Dominating);
}

namespace detail {

inline void require_cubic_order(std::int64_t n)
{
    if (n < 8 || n % 2 != 0)
        throw OutOfDomain("cubic Knödel results need even n >= 8 (got " + std::to_string(n) + ")");
}

} // namespace detail

/// Total domination number of W_{3,n}: 4⌈n/10⌉, minus 2 when n ≡ 2, 4 (mod 10).
inline std::int64_t gamma_t_formula(std::int64_t n)
{
    detail::require_cubic_order(n);
    const std::int64_t r = n % 10;
    return 4 * ((n + 9) / 10) - ((r == 2 || r == 4) ? 2 : 0);
}

/// ⌈n/5⌉: no total dominating set of W_{3,n} has fewer vertices on either side.
///
/// A side part S dominates the opposite side (n/2 vertices) with 3|S| edges, so
/// at most 3|S| - n/2 cyclic-sequence gaps of S fall in M_3 = {1,2,3}; every
/// other gap is at least 4. Summing gaps gives n/2 >= 4|S| - 3(3|S| - n/2),
/// i.e. 5|S| >= n.
inline std::int64_t side_lower_bound(std::int64_t n)
{
    detail::require_cubic_order(n);
    return (n + 4) / 5;
}

/// 2⌈n/5⌉, the lower bound on gamma_t(W_{3,n}) from both sides.
inline std::int64_t counting_lower_bound(std::int64_t n) { return 2 * side_lower_bound(n); }

/// Emits an explicit optimal total dominating set of W_{3,n}: the blocks
/// {u_{5k+b}, v_{5k+b} : k < t, b = 1,2} with t = ⌊n/10⌋, followed by a tail
/// fixed by n mod 10.
///
/// Block k dominates v_{5k+1..5k+5} from U and u_{5k-2..5k+2} from V, so after
/// t blocks the tail must reach v_{5t+1..n/2} and u_{5t-2..n/2-3}. For n ≡ 4,
/// 6, 8 (mod 10) with t >= 1 this forces the V-part of the tail to sit at
/// v_{5t-1}, {v_{5t+1}, v_{5t+2}} and {v_{5t+1}, v_{5t+2}} respectively; the
/// shifted placements v_{5t+2}, {v_{5t+1}, v_{5t+3}}, {v_{5t+2}, v_{5t+4}}
/// leave u_{5t-2}, u_{5t-1}, or {u_{5t-2}, u_{5t}} undominated. The shifted
/// placement is kept for n = 8, where it is valid.
template <typename F>
void for_each_optimal_tds_vertex(std::int64_t n, F&& emit)
{
    detail::require_cubic_order(n);
    const std::int64_t t = n / 10;
    for (std::int64_t k = 0; k < t; ++k)
        for (std::int64_t b = 1; b <= 2; ++b) {
            emit(u(5 * k + b));
            emit(v(5 * k + b));
        }
    const std::int64_t base = 5 * t;
    switch (n % 10) {
    case 0:
        break;
    case 2:
        emit(u(base + 1));
        emit(v(base + 1));
        break;
    case 4:
        emit(u(base + 1));
        emit(v(base - 1));
        break;
    case 6:
        emit(u(base + 1));
        emit(v(base + 1));
        emit(u(base + 2));
        emit(v(base + 2));
        break;
    case 8:
        emit(u(base + 1));
        emit(u(base + 3));
        if (t == 0) {
            emit(v(2));
            emit(v(4));
        } else {
            emit(v(base + 1));
            emit(v(base + 2));
        }
        break;
    }
}

inline VertexSet construct_optimal_tds(std::int64_t n)
{
    VertexSet d;
    d.reserve(static_cast<std::size_t>(gamma_t_formula(n)));
    for_each_optimal_tds_vertex(n, [&](Vertex w) { d.push_back(w); });
    return normalized(std::move(d));
}

struct ConstructionCheck {
    std::int64_t n = 0;
    std::int64_t size = 0;
    std::int64_t formula = 0;
    bool total_dominating = false;

    bool ok() const noexcept { return total_dominating && size == formula; }
};

/// Builds the construction for W_{3,n} and verifies it in O(n). The checker
/// is reused between calls.
inline ConstructionCheck check_construction(std::int64_t n, CoverageChecker& checker)
{
    const KnodelGraph g(3, n);
    checker.reset(g);
    for_each_optimal_tds_vertex(n, [&](Vertex w) { checker.add(w); });
    return {.n = n,
            .size = checker.added(),
            .formula = gamma_t_formula(n),
            .total_dominating = checker.all_covered()};
}

inline ConstructionCheck check_construction(std::int64_t n)
{
    CoverageChecker checker(DominationKind::TotalDominating);
    return check_construction(n, checker);
}

} // namespace knodeldom
