#include "l1coh/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "l1coh/config.hpp"
#include "l1coh/error.hpp"
#include "l1coh/scalar_ineq.hpp"

namespace l1coh {

namespace {

std::string num(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

// A chain of N-1 steps peels qubit positions off the front of the register.
// At a descending step the single coherence dominates its tail, at an
// ascending step the tail dominates the single.
enum class Step { Descending, Ascending };

struct Chain {
    std::vector<Step> pattern;
    std::vector<double> kd; // k_n^delta per step
    double alpha = 2.0;
    bool per_index = false;
    bool zero_rule = false; // drop zero singles at descending steps
    std::string k_label;    // how the k factor is printed in condition text
};

std::string single_label(int n) { return "C_" + std::to_string(n); }

std::string tail_label(int n, int total) {
    if (n + 1 == total) return "C_" + std::to_string(total);
    return "C_{" + std::to_string(n + 1) + ".." + std::to_string(total) + "}";
}

std::string k_text(const Chain& c, int n) {
    if (c.k_label.empty()) return "";
    if (c.per_index) {
        // "k^delta" -> "k_n^delta", "k" -> "k_n"
        std::string s = c.k_label;
        const auto caret = s.find('^');
        const std::string sub = "_" + std::to_string(n);
        if (caret == std::string::npos) return s + sub + "*";
        return s.insert(caret, sub) + "*";
    }
    return c.k_label + "*";
}

std::vector<Step> split_pattern(int n_steps, int m) {
    std::vector<Step> pattern(static_cast<std::size_t>(n_steps), Step::Ascending);
    for (int i = 0; i < m && i < n_steps; ++i) pattern[static_cast<std::size_t>(i)] = Step::Descending;
    return pattern;
}

const std::vector<Step> kHybridPattern = {Step::Ascending, Step::Descending};

void finish(BoundReport& rep, const CoherenceProfile& prof, const std::vector<double>& lam, double alpha) {
    double rhs = 0.0;
    for (std::size_t p = 0; p < lam.size(); ++p) rhs += lam[p] * real_pow(prof.singles[p], alpha);
    rep.rhs = rhs;
    rep.lhs = real_pow(prof.total, alpha);
    rep.gap = rep.lhs - rep.rhs;
    rep.verdict.applicable = std::all_of(rep.verdict.per_condition.begin(), rep.verdict.per_condition.end(),
                                         [](const ConditionCheck& c) { return c.satisfied; });
}

void add_condition(BoundReport& rep, const Chain& c, Step step, int n, int total, double single, double tail,
                   double kd) {
    const double slack = config().condition_slack;
    ConditionCheck chk;
    if (step == Step::Descending) {
        chk.description = k_text(c, n) + single_label(n) + " >= " + tail_label(n, total);
        chk.lhs = kd * single;
        chk.rhs = tail;
        chk.satisfied = chk.lhs >= chk.rhs - slack;
    } else {
        chk.description = single_label(n) + " <= " + k_text(c, n) + tail_label(n, total);
        chk.lhs = single;
        chk.rhs = kd * tail;
        chk.satisfied = chk.lhs <= chk.rhs + slack;
    }
    rep.verdict.per_condition.push_back(std::move(chk));
}

// Coefficient chain of the Gamma-based bounds. A descending step contributes
// mult * Omega_n * C_n^a and multiplies mult by Gamma_n; an ascending step
// contributes mult * Gamma_n * C_n^a and multiplies mult by Upsilon_n. The
// last qubit takes the remaining mult.
void walk_gamma(const CoherenceProfile& prof, const Chain& c, BoundReport& rep) {
    const int total = prof.size();
    const double eps = config().zero_coherence;
    std::vector<double> lam(static_cast<std::size_t>(total), 0.0);
    double mult = 1.0;
    bool terminated = false;
    int last_term = total; // positions past this carry no coherence

    if (!c.per_index && !c.kd.empty()) rep.coefficients.emplace_back("Gamma", gamma_of(c.kd.front(), c.alpha));

    for (int p = 0; p + 1 < total; ++p) {
        const int n = p + 1;
        const double single = prof.singles[p];
        const double tail = prof.tails[p];
        const double kd = c.kd[p];
        const Step step = c.pattern[p];

        if (step == Step::Descending && c.zero_rule && single < eps) {
            rep.verdict.per_condition.push_back(
                {single_label(n) + " = 0: term removed, no Gamma factor at this step", single, 0.0, true});
            rep.dropped.push_back(n);
            continue;
        }
        add_condition(rep, c, step, n, total, single, tail, kd);
        if (terminated) continue;

        const std::string idx = std::to_string(n);
        if (tail < eps) {
            // Nothing left behind position n: (C_n + 0)^a = C_n^a.
            lam[p] = mult;
            if (step == Step::Descending) rep.coefficients.emplace_back("Omega_" + idx, 1.0);
            terminated = true;
            last_term = n;
            continue;
        }
        const double gamma = gamma_of(kd, c.alpha);
        if (c.per_index) rep.coefficients.emplace_back("Gamma_" + idx, gamma);
        if (step == Step::Descending) {
            const double omega = 1.0 + tail / single;
            rep.coefficients.emplace_back("Omega_" + idx, omega);
            lam[p] = mult * omega;
            mult *= gamma;
        } else {
            const double upsilon = 1.0 + single / tail;
            rep.coefficients.emplace_back("Upsilon_" + idx, upsilon);
            lam[p] = mult * gamma;
            mult *= upsilon;
        }
    }
    if (!terminated) lam.back() = mult;
    for (int p = 0; p < last_term; ++p) {
        if (std::find(rep.dropped.begin(), rep.dropped.end(), p + 1) == rep.dropped.end()) {
            rep.coefficients.emplace_back("lambda_" + std::to_string(p + 1), lam[p]);
        }
    }
    finish(rep, prof, lam, c.alpha);
}

// Coefficient chain of the Lambda-based comparator schemes: a descending
// step contributes mult * C_n^a and multiplies mult by Lambda_n; an ascending
// step contributes mult * Lambda_n * C_n^a.
void walk_lambda(const CoherenceProfile& prof, const Chain& c, BoundReport& rep) {
    const int total = prof.size();
    std::vector<double> lam(static_cast<std::size_t>(total), 0.0);
    double mult = 1.0;
    if (!c.per_index && !c.kd.empty()) rep.coefficients.emplace_back("Lambda", lambda_of(c.kd.front(), c.alpha));
    for (int p = 0; p + 1 < total; ++p) {
        const int n = p + 1;
        add_condition(rep, c, c.pattern[p], n, total, prof.singles[p], prof.tails[p], c.kd[p]);
        const double lambda = lambda_of(c.kd[p], c.alpha);
        if (c.per_index) rep.coefficients.emplace_back("Lambda_" + std::to_string(n), lambda);
        if (c.pattern[p] == Step::Descending) {
            lam[p] = mult;
            mult *= lambda;
        } else {
            lam[p] = mult * lambda;
        }
    }
    lam.back() = mult;
    for (int p = 0; p < total; ++p) rep.coefficients.emplace_back("lambda_" + std::to_string(p + 1), lam[p]);
    finish(rep, prof, lam, c.alpha);
}

void require_alpha(double alpha, double min_alpha, BoundId id) {
    if (!(alpha >= min_alpha) || !std::isfinite(alpha)) {
        throw Error(ErrorCode::DomainError,
                    std::string(bound_name(id)) + " needs alpha >= " + num(min_alpha) + ", got " + num(alpha));
    }
}

void require_arity(const CoherenceProfile& prof, int min_n, BoundId id) {
    if (prof.size() < min_n) {
        throw Error(ErrorCode::WrongArity, std::string(bound_name(id)) + " needs N >= " + std::to_string(min_n) +
                                               ", got N = " + std::to_string(prof.size()));
    }
}

// k_n^delta for every step, validating ranges. `use_delta` false means the
// scheme ignores delta (k enters to the first power).
std::vector<double> step_kd(const BoundParams& params, int steps, bool use_delta) {
    if (!(params.delta >= 1.0) || !std::isfinite(params.delta)) {
        throw Error(ErrorCode::DomainError, "delta = " + num(params.delta) + " < 1");
    }
    const double delta = use_delta ? params.delta : 1.0;
    std::vector<double> ks;
    if (const auto* g = std::get_if<GlobalK>(&params.k_mode)) {
        ks.assign(static_cast<std::size_t>(steps), g->k);
    } else {
        const auto& per = std::get<PerIndexK>(params.k_mode).k;
        if (static_cast<int>(per.size()) != steps) {
            throw Error(ErrorCode::ArityMismatch, "per-index k needs " + std::to_string(steps) + " values, got " +
                                                      std::to_string(per.size()));
        }
        ks = per;
    }
    std::vector<double> kd;
    for (double k : ks) {
        if (!(k > 0.0 && k <= 1.0)) throw Error(ErrorCode::DomainError, "k = " + num(k) + " not in (0, 1]");
        kd.push_back(real_pow(k, delta));
    }
    return kd;
}

bool is_per_index(const BoundParams& params) { return std::holds_alternative<PerIndexK>(params.k_mode); }

void require_global(const BoundParams& params, BoundId id) {
    if (is_per_index(params)) {
        throw Error(ErrorCode::InvalidParams, std::string(bound_name(id)) + " takes a single global k");
    }
}

// Number of leading positions whose descending condition holds.
int descending_prefix(const CoherenceProfile& prof, const std::vector<double>& kd, bool zero_rule) {
    const double slack = config().condition_slack;
    const double eps = config().zero_coherence;
    int m = 0;
    for (int p = 0; p + 1 < prof.size(); ++p) {
        const bool waived = zero_rule && prof.singles[p] < eps;
        if (!waived && !(kd[p] * prof.singles[p] >= prof.tails[p] - slack)) break;
        ++m;
    }
    return m;
}

BoundReport new_report(BoundId id, const BoundParams& params) {
    BoundReport rep;
    rep.bound = id;
    rep.params = params;
    return rep;
}

BoundReport gamma_chain_bound(BoundId id, const CoherenceProfile& prof, const BoundParams& params,
                              std::vector<Step> pattern, std::vector<double> kd, std::optional<int> m) {
    BoundReport rep = new_report(id, params);
    rep.params.m = m;
    Chain chain;
    chain.pattern = std::move(pattern);
    chain.kd = std::move(kd);
    chain.alpha = params.alpha;
    chain.per_index = is_per_index(params);
    chain.zero_rule = true;
    chain.k_label = "k^delta";
    walk_gamma(prof, chain, rep);
    return rep;
}

BoundReport split_bound(BoundId id, const CoherenceProfile& prof, const BoundParams& params) {
    require_alpha(params.alpha, 2.0, id);
    require_arity(prof, 3, id);
    const int n = prof.size();
    auto kd = step_kd(params, n - 1, true);
    int m = 0;
    if (params.m) {
        m = *params.m;
        if (m < 1 || m > n - 2) {
            throw Error(ErrorCode::InvalidM, "m = " + std::to_string(m) + " not in [1, " + std::to_string(n - 2) + "]");
        }
    } else {
        m = std::clamp(descending_prefix(prof, kd, true), 1, n - 2);
    }
    return gamma_chain_bound(id, prof, params, split_pattern(n - 1, m), std::move(kd), m);
}

} // namespace

std::string_view bound_name(BoundId id) {
    switch (id) {
    case BoundId::Baseline4: return "Baseline4";
    case BoundId::Ref29: return "Ref29";
    case BoundId::Ref30: return "Ref30";
    case BoundId::Ref31: return "Ref31";
    case BoundId::Thm1: return "Thm1";
    case BoundId::Thm2: return "Thm2";
    case BoundId::Cor1: return "Cor1";
    case BoundId::Thm3: return "Thm3";
    case BoundId::Thm4: return "Thm4";
    }
    return "?";
}

std::optional<BoundId> parse_bound_id(std::string_view name) {
    for (BoundId id : kAllBounds) {
        if (bound_name(id) == name) return id;
    }
    return std::nullopt;
}

bool is_new_bound(BoundId id) {
    return id == BoundId::Thm1 || id == BoundId::Thm2 || id == BoundId::Cor1 || id == BoundId::Thm3 ||
           id == BoundId::Thm4;
}

double BoundParams::k_delta_at(int n) const {
    if (const auto* g = std::get_if<GlobalK>(&k_mode)) return real_pow(g->k, delta);
    return real_pow(std::get<PerIndexK>(k_mode).k.at(static_cast<std::size_t>(n - 1)), delta);
}

BoundReport baseline_bound(const CoherenceProfile& prof, double alpha) {
    require_alpha(alpha, 1.0, BoundId::Baseline4);
    BoundParams params;
    params.alpha = alpha;
    BoundReport rep = new_report(BoundId::Baseline4, params);
    std::vector<double> lam(prof.singles.size(), 1.0);
    for (std::size_t p = 0; p < lam.size(); ++p) rep.coefficients.emplace_back("lambda_" + std::to_string(p + 1), 1.0);
    finish(rep, prof, lam, alpha);
    return rep;
}

BoundReport ref_scheme_bound(const CoherenceProfile& prof, const BoundParams& params, BoundId scheme) {
    if (scheme != BoundId::Ref29 && scheme != BoundId::Ref30 && scheme != BoundId::Ref31) {
        throw Error(ErrorCode::InvalidParams, std::string(bound_name(scheme)) + " is not a comparator scheme");
    }
    require_alpha(params.alpha, 1.0, scheme);
    require_arity(prof, 2, scheme);
    const int n = prof.size();

    Chain chain;
    chain.alpha = params.alpha;
    chain.per_index = is_per_index(params) && scheme != BoundId::Ref29;
    if (scheme == BoundId::Ref29) {
        chain.kd.assign(static_cast<std::size_t>(n - 1), 1.0);
    } else {
        chain.kd = step_kd(params, n - 1, scheme == BoundId::Ref31);
        chain.k_label = scheme == BoundId::Ref31 ? "k^delta" : "k";
    }

    auto run = [&](std::vector<Step> pattern, std::optional<int> m) {
        BoundReport rep = new_report(scheme, params);
        rep.params.m = m;
        Chain c = chain;
        c.pattern = std::move(pattern);
        walk_lambda(prof, c, rep);
        return rep;
    };

    if (params.m) {
        const int m = *params.m;
        if (m < 1 || m > n - 1) {
            throw Error(ErrorCode::InvalidM, "m = " + std::to_string(m) + " not in [1, " + std::to_string(n - 1) + "]");
        }
        return run(split_pattern(n - 1, m), m);
    }
    const int prefix = descending_prefix(prof, chain.kd, false);
    std::optional<BoundReport> split;
    if (prefix >= 1) {
        split = run(split_pattern(n - 1, prefix), prefix);
        if (split->verdict.applicable) return *split;
    }
    if (n == 3) {
        BoundReport hybrid = run(kHybridPattern, std::nullopt);
        if (hybrid.verdict.applicable || !split) return hybrid;
    }
    if (split) return *split;
    return run(split_pattern(n - 1, 1), 1);
}

BoundReport thm1_bound(const CoherenceProfile& prof, const BoundParams& params) {
    require_alpha(params.alpha, 2.0, BoundId::Thm1);
    require_arity(prof, 3, BoundId::Thm1);
    require_global(params, BoundId::Thm1);
    const int n = prof.size();
    return gamma_chain_bound(BoundId::Thm1, prof, params, split_pattern(n - 1, n - 1), step_kd(params, n - 1, true),
                             std::nullopt);
}

BoundReport thm2_bound(const CoherenceProfile& prof, const BoundParams& params) {
    require_global(params, BoundId::Thm2);
    return split_bound(BoundId::Thm2, prof, params);
}

BoundReport cor1_bound(const CoherenceProfile& prof, const BoundParams& params) {
    require_alpha(params.alpha, 2.0, BoundId::Cor1);
    if (prof.size() != 3) {
        throw Error(ErrorCode::WrongArity, "Cor1 is a 3-qubit bound, got N = " + std::to_string(prof.size()));
    }
    return gamma_chain_bound(BoundId::Cor1, prof, params, kHybridPattern, step_kd(params, 2, true), std::nullopt);
}

BoundReport thm3_bound(const CoherenceProfile& prof, const BoundParams& params) {
    require_alpha(params.alpha, 2.0, BoundId::Thm3);
    require_arity(prof, 3, BoundId::Thm3);
    const int n = prof.size();
    BoundParams per = params;
    if (const auto* g = std::get_if<GlobalK>(&params.k_mode)) {
        per.k_mode = PerIndexK{std::vector<double>(static_cast<std::size_t>(n - 1), g->k)};
    }
    return gamma_chain_bound(BoundId::Thm3, prof, per, split_pattern(n - 1, n - 1), step_kd(per, n - 1, true),
                             std::nullopt);
}

BoundReport thm4_bound(const CoherenceProfile& prof, const BoundParams& params) {
    require_arity(prof, 3, BoundId::Thm4);
    BoundParams per = params;
    if (const auto* g = std::get_if<GlobalK>(&params.k_mode)) {
        per.k_mode = PerIndexK{std::vector<double>(static_cast<std::size_t>(prof.size() - 1), g->k)};
    }
    return split_bound(BoundId::Thm4, prof, per);
}

BoundReport evaluate_bound(BoundId id, const CoherenceProfile& prof, const BoundParams& params) {
    switch (id) {
    case BoundId::Baseline4: return baseline_bound(prof, params.alpha);
    case BoundId::Ref29:
    case BoundId::Ref30:
    case BoundId::Ref31: return ref_scheme_bound(prof, params, id);
    case BoundId::Thm1: return thm1_bound(prof, params);
    case BoundId::Thm2: return thm2_bound(prof, params);
    case BoundId::Cor1: return cor1_bound(prof, params);
    case BoundId::Thm3: return thm3_bound(prof, params);
    case BoundId::Thm4: return thm4_bound(prof, params);
    }
    throw Error(ErrorCode::InvalidParams, "unknown bound id");
}

std::vector<BoundReport> evaluate_all(const CoherenceProfile& prof, const BoundParams& params,
                                      std::span<const BoundId> ids) {
    std::vector<BoundReport> reports;
    for (BoundId id : ids) {
        try {
            reports.push_back(evaluate_bound(id, prof, params));
        } catch (const Error& e) {
            BoundReport rep = new_report(id, params);
            rep.verdict.applicable = false;
            rep.verdict.per_condition.push_back({e.what(), 0.0, 0.0, false});
            rep.lhs = real_pow(prof.total, std::max(params.alpha, 0.0));
            rep.rhs = std::numeric_limits<double>::quiet_NaN();
            rep.gap = std::numeric_limits<double>::quiet_NaN();
            reports.push_back(std::move(rep));
        }
    }
    std::stable_sort(reports.begin(), reports.end(), [](const BoundReport& a, const BoundReport& b) {
        if (a.verdict.applicable != b.verdict.applicable) return a.verdict.applicable;
        if (a.verdict.applicable) return a.rhs > b.rhs;
        return false;
    });
    return reports;
}

std::vector<BoundReport> evaluate_all(const DensityMatrix& rho, std::span<const int> ordering,
                                      const BoundParams& params, std::span<const BoundId> ids) {
    return evaluate_all(profile(rho, ordering), params, ids);
}

namespace {

// Per-step ratio that k_n^delta must reach for `pattern` to apply; nullopt
// when some ratio exceeds 1. Zero ratios (nothing behind the step, or a
// waived zero single) map to 1.
std::optional<std::vector<double>> boundary_ratios(const CoherenceProfile& prof, const std::vector<Step>& pattern,
                                                   bool zero_rule) {
    const double eps = config().zero_coherence;
    const double slack = config().condition_slack;
    std::vector<double> ratios;
    for (std::size_t p = 0; p < pattern.size(); ++p) {
        const double single = prof.singles[p];
        const double tail = prof.tails[p];
        double r = 0.0;
        if (pattern[p] == Step::Descending) {
            if (single < eps) {
                if (!zero_rule && tail >= eps) return std::nullopt;
                r = 0.0;
            } else {
                r = tail / single;
            }
        } else {
            if (tail < eps) {
                if (single >= eps) return std::nullopt;
                r = 0.0;
            } else {
                r = single / tail;
            }
        }
        if (r > 1.0 + slack) return std::nullopt;
        ratios.push_back(std::min(r, 1.0));
    }
    return ratios;
}

std::vector<double> per_index_k(const std::vector<double>& ratios) {
    std::vector<double> ks;
    for (double r : ratios) ks.push_back(r > 0.0 ? r : 1.0);
    return ks;
}

double global_k(const std::vector<double>& ratios) {
    const double mx = ratios.empty() ? 0.0 : *std::max_element(ratios.begin(), ratios.end());
    return mx > 0.0 ? mx : 1.0;
}

} // namespace

BoundParams best_params(const CoherenceProfile& prof, ParamMode mode, double alpha) {
    const int n = prof.size();
    if (n < 2) throw Error(ErrorCode::WrongArity, "parameter search needs N >= 2");
    auto ratios = boundary_ratios(prof, split_pattern(n - 1, n - 1), true);
    if (!ratios) {
        throw Error(ErrorCode::NoValidParams, "some tail coherence exceeds its single-qubit coherence");
    }
    BoundParams params;
    params.alpha = alpha;
    params.delta = 1.0;
    if (mode == ParamMode::Thm1) {
        params.k_mode = GlobalK{global_k(*ratios)};
    } else {
        params.k_mode = PerIndexK{per_index_k(*ratios)};
    }
    return params;
}

std::optional<BoundParams> tightest_params(const CoherenceProfile& prof, BoundId id, double alpha) {
    const int n = prof.size();
    BoundParams base;
    base.alpha = alpha;
    base.delta = 1.0;
    auto try_eval = [&](const BoundParams& p) -> std::optional<BoundReport> {
        try {
            BoundReport rep = evaluate_bound(id, prof, p);
            if (rep.verdict.applicable) return rep;
        } catch (const Error&) {
        }
        return std::nullopt;
    };

    switch (id) {
    case BoundId::Baseline4: return base;
    case BoundId::Ref29: {
        base.k_mode = GlobalK{1.0};
        if (try_eval(base)) return base;
        return std::nullopt;
    }
    case BoundId::Thm1:
    case BoundId::Thm3: {
        try {
            return best_params(prof, id == BoundId::Thm1 ? ParamMode::Thm1 : ParamMode::Thm3, alpha);
        } catch (const Error&) {
            return std::nullopt;
        }
    }
    default: break;
    }
    if (n < 2) return std::nullopt;

    // Candidate condition patterns for the remaining bounds, each paired with
    // the split index it corresponds to (nullopt for the hybrid pattern).
    std::vector<std::pair<std::vector<Step>, std::optional<int>>> candidates;
    const bool comparator = id == BoundId::Ref30 || id == BoundId::Ref31;
    if (id == BoundId::Cor1) {
        if (n == 3) candidates.emplace_back(kHybridPattern, std::nullopt);
    } else if (comparator) {
        for (int m = 1; m <= n - 1; ++m) candidates.emplace_back(split_pattern(n - 1, m), m);
        if (n == 3) candidates.emplace_back(kHybridPattern, std::nullopt);
    } else {
        for (int m = 1; m <= n - 2; ++m) candidates.emplace_back(split_pattern(n - 1, m), m);
    }

    std::optional<BoundParams> best;
    double best_rhs = -std::numeric_limits<double>::infinity();
    for (const auto& [pattern, m] : candidates) {
        auto ratios = boundary_ratios(prof, pattern, !comparator);
        if (!ratios) continue;
        BoundParams p = base;
        p.m = m;
        if (id == BoundId::Thm4) {
            p.k_mode = PerIndexK{per_index_k(*ratios)};
        } else {
            p.k_mode = GlobalK{global_k(*ratios)};
        }
        auto rep = try_eval(p);
        if (rep && rep->rhs > best_rhs) {
            best_rhs = rep->rhs;
            best = p;
        }
    }
    return best;
}

OrderingResult best_ordering(const SubsetCoherences& table, const BoundParams& params, BoundId id, bool auto_params) {
    const int n = table.n_qubits();
    if (n > 8) throw Error(ErrorCode::TooManyQubits, std::to_string(n) + " qubits; ordering search is capped at 8");
    std::vector<int> ordering = identity_ordering(n);
    std::optional<OrderingResult> best;
    do {
        const CoherenceProfile prof = table.profile(ordering);
        std::optional<BoundParams> p = auto_params ? tightest_params(prof, id, params.alpha) : params;
        if (!p) continue;
        try {
            BoundReport rep = evaluate_bound(id, prof, *p);
            if (rep.verdict.applicable && (!best || rep.rhs > best->report.rhs)) {
                best = OrderingResult{ordering, std::move(rep)};
            }
        } catch (const Error&) {
        }
    } while (std::next_permutation(ordering.begin(), ordering.end()));
    if (best) return *best;

    const std::vector<int> identity = identity_ordering(n);
    BoundReport rep = evaluate_bound(id, table.profile(identity), params);
    rep.verdict.applicable = false;
    rep.verdict.per_condition.push_back({"no qubit ordering satisfies the conditions", 0.0, 0.0, false});
    return OrderingResult{identity, std::move(rep)};
}

OrderingResult best_ordering(const DensityMatrix& rho, const BoundParams& params, BoundId id, bool auto_params) {
    if (rho.n_qubits() > 8) {
        throw Error(ErrorCode::TooManyQubits, std::to_string(rho.n_qubits()) + " qubits; ordering search is capped at 8");
    }
    return best_ordering(SubsetCoherences(rho), params, id, auto_params);
}

} // namespace l1coh
