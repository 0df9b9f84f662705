#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "domination.hpp"
#include "errors.hpp"
#include "knodel_graph.hpp"

namespace knodeldom {

enum class Strategy { Pruned, Exhaustive };

/// How optimality was established: the optimum equals the lower bound the
/// search started from (or the construction met the counting bound), or every
/// smaller size was searched and refuted.
enum class Certificate { BoundMatched, Exhausted };

inline const char* to_string(Strategy s) { return s == Strategy::Pruned ? "pruned" : "exhaustive"; }

inline const char* to_string(Certificate c)
{
    return c == Certificate::BoundMatched ? "bound-matched" : "exhausted";
}

/// Default size guards; lifted by SolveOptions::lift_guard.
inline constexpr std::int64_t exhaustive_guard_n = 24;
inline constexpr std::int64_t pruned_guard_n = 40;
/// Exhaustive search packs a subset into one 64-bit word.
inline constexpr std::int64_t exhaustive_hard_limit_n = 64;

struct SolveOptions {
    Strategy strategy = Strategy::Pruned;
    std::uint64_t max_nodes = 0; // 0 = unlimited
    unsigned threads = 1;
    bool lift_guard = false;
    // Pruned total domination with delta = 3: start each side at ⌈n/5⌉ instead
    // of the generic ⌈(n/2)/delta⌉.
    bool use_counting_bound = true;
    // delta = 3: accept the explicit construction without search when its size
    // meets 2⌈n/5⌉.
    bool certify_by_construction = false;
};

struct SolveResult {
    DominationKind kind = DominationKind::TotalDominating;
    std::int64_t optimum = 0;
    VertexSet witness;
    Certificate certificate = Certificate::Exhausted;
    Strategy strategy = Strategy::Pruned;
    std::uint64_t nodes_explored = 0; // approximate when threads > 1
    std::chrono::microseconds elapsed{0};
};

namespace detail {

class NodeBudget {
public:
    explicit NodeBudget(std::uint64_t limit) : limit_(limit) {}

    /// Returns false once the limit has been passed.
    bool charge(std::uint64_t nodes)
    {
        const std::uint64_t total = used_.fetch_add(nodes, std::memory_order_relaxed) + nodes;
        if (limit_ != 0 && total > limit_)
            stopped_.store(true, std::memory_order_relaxed);
        return !stopped();
    }

    bool stopped() const { return stopped_.load(std::memory_order_relaxed); }
    std::uint64_t used() const { return used_.load(std::memory_order_relaxed); }

private:
    std::uint64_t limit_;
    std::atomic<std::uint64_t> used_{0};
    std::atomic<bool> stopped_{false};
};

template <typename F>
void run_workers(unsigned threads, F&& work)
{
    if (threads <= 1) {
        work(0u);
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&work, t] { work(t); });
}

/// Cover sets ordered by size, then lexicographically by canonical ordinals.
inline bool better_cover(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b)
{
    if (a.size() != b.size())
        return a.size() < b.size();
    return a < b;
}

/// Lexicographically first k-subset (in canonical ordinal order) whose masks
/// OR to `full`. Subsets whose first element is c are handled by worker
/// c mod threads; the smallest first element with a hit wins.
inline std::optional<std::vector<std::int64_t>>
first_subset_covering(const std::vector<std::uint64_t>& masks, std::uint64_t full, std::int64_t k,
                      unsigned threads, NodeBudget& budget)
{
    const auto n = static_cast<std::int64_t>(masks.size());
    if (k > n)
        return std::nullopt;
    std::vector<std::optional<std::vector<std::int64_t>>> hit(static_cast<std::size_t>(n));
    std::atomic<std::int64_t> best_first{n};

    run_workers(threads, [&](unsigned worker) {
        std::vector<std::int64_t> chosen;
        std::uint64_t local = 0;
        bool found = false;
        auto rec = [&](auto&& self, std::int64_t start, std::uint64_t acc) -> void {
            if (static_cast<std::int64_t>(chosen.size()) == k) {
                if (++local == 4096) {
                    budget.charge(local);
                    local = 0;
                }
                found = acc == full;
                return;
            }
            const std::int64_t last = n - (k - static_cast<std::int64_t>(chosen.size()));
            for (std::int64_t i = start; i <= last && !found && !budget.stopped(); ++i) {
                chosen.push_back(i);
                self(self, i + 1, acc | masks[static_cast<std::size_t>(i)]);
                if (!found)
                    chosen.pop_back();
            }
        };
        for (std::int64_t c = worker; c <= n - k; c += std::max(1u, threads)) {
            if (c > best_first.load() || budget.stopped())
                break;
            chosen.assign(1, c);
            found = false;
            rec(rec, c + 1, masks[static_cast<std::size_t>(c)]);
            if (found) {
                hit[static_cast<std::size_t>(c)] = chosen;
                std::int64_t cur = best_first.load();
                while (c < cur && !best_first.compare_exchange_weak(cur, c)) {
                }
                break;
            }
        }
        budget.charge(local);
    });

    for (auto& h : hit)
        if (h)
            return h;
    return std::nullopt;
}

/// Set-cover instance: choose candidates whose masks cover all targets.
struct CoverProblem {
    std::size_t targets = 0;
    std::size_t words = 0;
    std::int64_t cap = 0;                         // max targets one candidate covers
    std::vector<std::int64_t> ordinal;            // candidate -> canonical ordinal
    std::vector<std::uint64_t> masks;             // candidate c at [c*words, (c+1)*words)
    std::vector<std::vector<std::uint32_t>> coverers; // target -> candidates, ascending ordinal

    CoverProblem(std::size_t target_count, std::int64_t max_cover)
        : targets(target_count), words((target_count + 63) / 64), cap(max_cover), coverers(target_count)
    {
    }

    void add_candidate(std::int64_t ord, const std::vector<std::size_t>& covered)
    {
        const auto id = static_cast<std::uint32_t>(ordinal.size());
        ordinal.push_back(ord);
        masks.resize(masks.size() + words, 0);
        std::uint64_t* m = &masks[id * words];
        for (std::size_t t : covered) {
            m[t / 64] |= std::uint64_t{1} << (t % 64);
            coverers[t].push_back(id);
        }
    }
};

/// Branch and bound over covers of size <= budget_size: branch on the
/// lowest uncovered target and each of its coverers; prune when the remaining
/// picks cannot cover what is left. Returns the best cover under
/// better_cover(), enumerating the whole tree so ties resolve
/// lexicographically regardless of thread count.
inline std::optional<std::vector<std::int64_t>>
best_cover(const CoverProblem& p, std::int64_t budget_size, unsigned threads, NodeBudget& budget)
{
    const std::size_t w = p.words;
    std::vector<std::uint64_t> root(w, 0);
    if (p.targets % 64 != 0)
        root[w - 1] = ~std::uint64_t{0} << (p.targets % 64);
    const auto total = static_cast<std::int64_t>(p.targets);
    if (total == 0)
        return std::vector<std::int64_t>{};
    if (budget_size <= 0 || budget_size * p.cap < total)
        return std::nullopt;
    budget.charge(1);

    const auto& first = p.coverers[0];
    std::vector<std::optional<std::vector<std::int64_t>>> best(std::max(1u, threads));

    run_workers(threads, [&](unsigned worker) {
        const auto depth_max = static_cast<std::size_t>(budget_size);
        std::vector<std::uint64_t> cov((depth_max + 1) * w);
        std::vector<std::int64_t> chosen;
        std::optional<std::vector<std::int64_t>>& mine = best[worker];
        std::uint64_t local = 0;

        auto rec = [&](auto&& self, std::size_t depth, std::int64_t uncovered) -> void {
            if (++local == 1024) {
                budget.charge(local);
                local = 0;
            }
            if (budget.stopped())
                return;
            if (uncovered == 0) {
                auto s = chosen;
                std::sort(s.begin(), s.end());
                if (!mine || better_cover(s, *mine))
                    mine = std::move(s);
                return;
            }
            const auto left = static_cast<std::int64_t>(depth_max - depth);
            if (left == 0 || left * p.cap < uncovered)
                return;
            const std::uint64_t* here = &cov[depth * w];
            std::size_t x = 0;
            for (std::size_t i = 0; i < w; ++i)
                if (here[i] != ~std::uint64_t{0}) {
                    x = i * 64 + static_cast<std::size_t>(std::countr_one(here[i]));
                    break;
                }
            for (std::uint32_t c : p.coverers[x]) {
                const std::uint64_t* m = &p.masks[c * w];
                std::uint64_t* next = &cov[(depth + 1) * w];
                std::int64_t gained = 0;
                for (std::size_t i = 0; i < w; ++i) {
                    next[i] = here[i] | m[i];
                    gained += std::popcount(next[i]) - std::popcount(here[i]);
                }
                chosen.push_back(p.ordinal[c]);
                self(self, depth + 1, uncovered - gained);
                chosen.pop_back();
            }
        };

        // Root: target 0 is uncovered; its coverers are split across workers.
        for (std::size_t b = worker; b < first.size(); b += std::max(1u, threads)) {
            const std::uint32_t c = first[b];
            const std::uint64_t* m = &p.masks[c * w];
            std::int64_t gained = 0;
            for (std::size_t i = 0; i < w; ++i) {
                cov[w + i] = root[i] | m[i];
                gained += std::popcount(cov[w + i]) - std::popcount(root[i]);
            }
            chosen.assign(1, p.ordinal[c]);
            rec(rec, 1, total - gained);
        }
        budget.charge(local);
    });

    std::optional<std::vector<std::int64_t>> out;
    for (auto& b : best)
        if (b && (!out || better_cover(*b, *out)))
            out = std::move(b);
    return out;
}

inline VertexSet to_vertices(const KnodelGraph& g, const std::vector<std::int64_t>& ordinals)
{
    VertexSet out;
    out.reserve(ordinals.size());
    for (std::int64_t o : ordinals)
        out.push_back(g.from_ordinal(o));
    return normalized(std::move(out));
}

inline void check_guard(const KnodelGraph& g, const SolveOptions& opt)
{
    if (opt.strategy == Strategy::Exhaustive) {
        if (g.n() > exhaustive_hard_limit_n)
            throw InstanceTooLarge("exhaustive search supports n <= " +
                                   std::to_string(exhaustive_hard_limit_n));
        if (!opt.lift_guard && g.n() > exhaustive_guard_n)
            throw InstanceTooLarge("exhaustive search refused for n = " + std::to_string(g.n()) +
                                   " > " + std::to_string(exhaustive_guard_n));
    } else if (!opt.lift_guard && g.n() > pruned_guard_n) {
        throw InstanceTooLarge("pruned search refused for n = " + std::to_string(g.n()) + " > " +
                               std::to_string(pruned_guard_n));
    }
}

/// Closed neighborhood (dominating) or open neighborhood (total) masks indexed
/// by canonical ordinal.
inline std::vector<std::uint64_t> neighborhood_masks(const KnodelGraph& g, DominationKind kind)
{
    std::vector<std::uint64_t> masks(static_cast<std::size_t>(g.n()), 0);
    for (Vertex w : g.vertices()) {
        auto& m = masks[static_cast<std::size_t>(g.ordinal(w))];
        g.for_each_neighbor(w, [&](Vertex x) { m |= std::uint64_t{1} << g.ordinal(x); });
        if (kind == DominationKind::Dominating)
            m |= std::uint64_t{1} << g.ordinal(w);
    }
    return masks;
}

inline SolveResult solve_exhaustive(const KnodelGraph& g, DominationKind kind,
                                    const SolveOptions& opt, NodeBudget& budget)
{
    const auto masks = neighborhood_masks(g, kind);
    const std::uint64_t full = g.n() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.n()) - 1;
    for (std::int64_t k = 1; k <= g.n(); ++k) {
        auto hit = first_subset_covering(masks, full, k, opt.threads, budget);
        if (budget.stopped())
            throw SearchIncomplete(k, kind == DominationKind::Dominating ? g.half() : g.n(),
                                   budget.used());
        if (hit)
            return {.kind = kind,
                    .optimum = k,
                    .witness = to_vertices(g, *hit),
                    .certificate = Certificate::Exhausted,
                    .strategy = Strategy::Exhaustive};
    }
    throw ContractViolation("no covering subset found"); // unreachable: V(g) itself covers
}

/// Candidates on `side` covering the opposite side through open neighborhoods.
inline CoverProblem side_cover_problem(const KnodelGraph& g, Side side)
{
    CoverProblem p(static_cast<std::size_t>(g.half()), g.delta());
    std::vector<std::size_t> covered;
    for (std::int64_t i = 1; i <= g.half(); ++i) {
        covered.clear();
        g.for_each_neighbor({side, i}, [&](Vertex x) { covered.push_back(static_cast<std::size_t>(x.index - 1)); });
        p.add_candidate(g.ordinal({side, i}), covered);
    }
    return p;
}

inline SolveResult solve_total_pruned(const KnodelGraph& g, const SolveOptions& opt, NodeBudget& budget)
{
    const bool cubic = g.delta() == 3 && g.n() >= 8;
    const std::int64_t side_bound = cubic && opt.use_counting_bound
                                        ? side_lower_bound(g.n())
                                        : (g.half() + g.delta() - 1) / g.delta();
    const std::int64_t upper = cubic ? gamma_t_formula(g.n()) : g.n();

    // Total domination splits: D ∩ U must dominate V and D ∩ V must dominate U.
    const CoverProblem problems[2] = {side_cover_problem(g, Side::U), side_cover_problem(g, Side::V)};
    std::map<std::int64_t, std::optional<std::vector<std::int64_t>>> memo[2];
    auto query = [&](int side, std::int64_t s) -> const std::optional<std::vector<std::int64_t>>& {
        auto it = memo[side].find(s);
        if (it == memo[side].end())
            it = memo[side].emplace(s, best_cover(problems[side], s, opt.threads, budget)).first;
        return it->second;
    };

    const std::int64_t first_k = 2 * side_bound;
    for (std::int64_t k = first_k; k <= g.n(); ++k) {
        for (std::int64_t su = side_bound; su <= k - side_bound; ++su) {
            const auto& cu = query(0, su);
            if (budget.stopped())
                throw SearchIncomplete(k, upper, budget.used());
            if (!cu)
                continue;
            const auto& cv = query(1, k - su);
            if (budget.stopped())
                throw SearchIncomplete(k, upper, budget.used());
            if (!cv)
                continue;
            std::vector<std::int64_t> all = *cu;
            all.insert(all.end(), cv->begin(), cv->end());
            return {.kind = DominationKind::TotalDominating,
                    .optimum = static_cast<std::int64_t>(all.size()),
                    .witness = to_vertices(g, all),
                    .certificate = k == first_k ? Certificate::BoundMatched : Certificate::Exhausted,
                    .strategy = Strategy::Pruned};
        }
    }
    throw ContractViolation("no total dominating set found"); // unreachable
}

inline SolveResult solve_dominating_pruned(const KnodelGraph& g, const SolveOptions& opt, NodeBudget& budget)
{
    CoverProblem p(static_cast<std::size_t>(g.n()), g.delta() + 1);
    std::vector<std::size_t> covered;
    for (Vertex w : g.vertices()) {
        covered.assign(1, static_cast<std::size_t>(g.ordinal(w)));
        g.for_each_neighbor(w, [&](Vertex x) { covered.push_back(static_cast<std::size_t>(g.ordinal(x))); });
        p.add_candidate(g.ordinal(w), covered);
    }
    const std::int64_t first_k = (g.n() + g.delta()) / (g.delta() + 1);
    for (std::int64_t k = first_k; k <= g.n(); ++k) {
        auto hit = best_cover(p, k, opt.threads, budget);
        if (budget.stopped())
            throw SearchIncomplete(k, g.half(), budget.used());
        if (hit)
            return {.kind = DominationKind::Dominating,
                    .optimum = static_cast<std::int64_t>(hit->size()),
                    .witness = to_vertices(g, *hit),
                    .certificate = k == first_k ? Certificate::BoundMatched : Certificate::Exhausted,
                    .strategy = Strategy::Pruned};
    }
    throw ContractViolation("no dominating set found"); // unreachable
}

template <typename F>
SolveResult timed(F&& body)
{
    const auto start = std::chrono::steady_clock::now();
    SolveResult r = body();
    r.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
    return r;
}

} // namespace detail

/// Exact total domination number of g with the lexicographically least optimal
/// witness under canonical vertex order.
inline SolveResult solve_min_total_dominating(const KnodelGraph& g, const SolveOptions& opt = {})
{
    return detail::timed([&] {
        if (opt.certify_by_construction && g.delta() == 3 && g.n() >= 8) {
            const auto check = check_construction(g.n());
            if (check.total_dominating && check.size == counting_lower_bound(g.n()))
                return SolveResult{.kind = DominationKind::TotalDominating,
                                   .optimum = check.size,
                                   .witness = construct_optimal_tds(g.n()),
                                   .certificate = Certificate::BoundMatched,
                                   .strategy = opt.strategy};
        }
        detail::check_guard(g, opt);
        detail::NodeBudget budget(opt.max_nodes);
        SolveResult r = opt.strategy == Strategy::Exhaustive
                            ? detail::solve_exhaustive(g, DominationKind::TotalDominating, opt, budget)
                            : detail::solve_total_pruned(g, opt, budget);
        r.nodes_explored = budget.used();
        return r;
    });
}

/// Exact domination number of g, same search engine and tie-breaking.
inline SolveResult solve_min_dominating(const KnodelGraph& g, const SolveOptions& opt = {})
{
    return detail::timed([&] {
        detail::check_guard(g, opt);
        detail::NodeBudget budget(opt.max_nodes);
        SolveResult r = opt.strategy == Strategy::Exhaustive
                            ? detail::solve_exhaustive(g, DominationKind::Dominating, opt, budget)
                            : detail::solve_dominating_pruned(g, opt, budget);
        r.nodes_explored = budget.used();
        return r;
    });
}

} // namespace knodeldom
