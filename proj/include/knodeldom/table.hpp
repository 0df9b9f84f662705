#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "domination.hpp"
#include "errors.hpp"
#include "solver.hpp"

namespace knodeldom {

struct TableRow {
    std::int64_t n = 0;
    std::int64_t n_mod_10 = 0;
    std::int64_t formula = 0;          // gamma_t_formula(n)
    std::int64_t counting_bound = 0;   // 2⌈n/5⌉
    std::int64_t construction_size = 0;
    bool construction_verified = false;
    std::optional<std::int64_t> solver_optimum;
};

/// One row per even n in [n_min, n_max]. With `solve`, instances inside the
/// pruned solver's guard also get a searched optimum.
inline std::vector<TableRow> gamma_t_table(std::int64_t n_min, std::int64_t n_max, bool solve = false,
                                           SolveOptions opt = {})
{
    if (n_min < 8 || n_min % 2 != 0 || n_max % 2 != 0 || n_max < n_min)
        throw OutOfDomain("table bounds must be even with 8 <= n_min <= n_max");

    opt.strategy = Strategy::Pruned;
    opt.certify_by_construction = false;
    std::vector<TableRow> rows;
    CoverageChecker checker(DominationKind::TotalDominating);
    for (std::int64_t n = n_min; n <= n_max; n += 2) {
        const ConstructionCheck c = check_construction(n, checker);
        TableRow row{.n = n,
                     .n_mod_10 = n % 10,
                     .formula = c.formula,
                     .counting_bound = counting_lower_bound(n),
                     .construction_size = c.size,
                     .construction_verified = c.total_dominating};
        if (solve && (opt.lift_guard || n <= pruned_guard_n))
            row.solver_optimum = solve_min_total_dominating(KnodelGraph(3, n), opt).optimum;
        rows.push_back(row);
    }
    return rows;
}

inline nlohmann::json to_json(const TableRow& r)
{
    nlohmann::json j{{"n", r.n},
                     {"n_mod_10", r.n_mod_10},
                     {"gamma_t_formula", r.formula},
                     {"counting_bound", r.counting_bound},
                     {"construction_size", r.construction_size},
                     {"construction_verified", r.construction_verified}};
    j["solver_optimum"] = r.solver_optimum ? nlohmann::json(*r.solver_optimum) : nlohmann::json(nullptr);
    return j;
}

inline void write_table(const std::vector<TableRow>& rows, std::ostream& os)
{
    os << "n\tn%10\tgamma_t\t2ceil(n/5)\t|D|\tverified\tsolver\n";
    for (const auto& r : rows) {
        os << r.n << '\t' << r.n_mod_10 << '\t' << r.formula << '\t' << r.counting_bound << '\t'
           << r.construction_size << '\t' << (r.construction_verified ? "true" : "false") << '\t'
           << (r.solver_optimum ? std::to_string(*r.solver_optimum) : "-") << '\n';
    }
}

} // namespace knodeldom
