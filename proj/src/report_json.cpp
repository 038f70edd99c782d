#include "l1coh/report_json.hpp"

#include <charconv>
#include <cmath>

namespace l1coh {

namespace {

// nlohmann writes NaN as null, which is what a non-computable rhs should be.
ordered_json number(double v) { return std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr); }

} // namespace

ordered_json to_json(const BoundReport& rep) {
    ordered_json conditions = ordered_json::array();
    for (const auto& c : rep.verdict.per_condition) {
        conditions.push_back({{"description", c.description},
                              {"lhs", number(c.lhs)},
                              {"rhs", number(c.rhs)},
                              {"satisfied", c.satisfied}});
    }
    ordered_json coefficients = ordered_json::object();
    for (const auto& [name, value] : rep.coefficients) coefficients[name] = number(value);
    return ordered_json{{"bound", std::string(bound_name(rep.bound))},
                        {"applicable", rep.verdict.applicable},
                        {"conditions", conditions},
                        {"rhs", number(rep.rhs)},
                        {"lhs", number(rep.lhs)},
                        {"gap", number(rep.gap)},
                        {"coefficients", coefficients},
                        {"dropped", rep.dropped}};
}

ordered_json to_json(const CoherenceProfile& prof) {
    return ordered_json{{"ordering", prof.ordering},
                        {"singles", prof.singles},
                        {"tails", prof.tails},
                        {"total", prof.total}};
}

ordered_json to_json(const BoundParams& params) {
    ordered_json out{{"alpha", params.alpha}, {"delta", params.delta}};
    if (const auto* g = std::get_if<GlobalK>(&params.k_mode)) {
        out["k"] = g->k;
    } else {
        out["kn"] = std::get<PerIndexK>(params.k_mode).k;
    }
    if (params.m) out["m"] = *params.m;
    return out;
}

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

} // namespace l1coh
