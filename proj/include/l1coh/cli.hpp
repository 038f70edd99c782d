#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "l1coh/bounds.hpp"

namespace l1coh::cli {

// Exit codes of every verb.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNoBound = 3;

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "name:min:max:steps" with name in {alpha, k, k1, delta}.
struct AxisSpec {
    std::string name;
    double min = 0.0;
    double max = 0.0;
    int steps = 0;
    double value(int i) const;
};
AxisSpec parse_axis(const std::string& text);

// "ID" or "ID@key=value:key=value" with keys delta, k, m. The label is the
// text as given and names the CSV column.
struct BoundSpec {
    std::string label;
    BoundId id = BoundId::Baseline4;
    std::optional<double> delta;
    std::optional<double> k;
    std::optional<int> m;
};
BoundSpec parse_bound_spec(const std::string& text);

struct SweepPlan {
    std::vector<AxisSpec> axes; // one or two
    BoundParams base;
    std::vector<BoundSpec> bounds;
    CoherenceProfile profile;
};
void validate(const SweepPlan& plan);
// Header plus one row per grid point (first axis outermost):
// axis values, rhs_<label> per bound, lhs, then diff_<a>_minus_<b> =
// rhs_a - rhs_b for every pair a before b. "nan" marks a bound that does not
// apply at that point.
std::string sweep_csv(const SweepPlan& plan);

} // namespace l1coh::cli
