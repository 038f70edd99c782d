#include "l1coh/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <sstream>
#include <thread>

#include "l1coh/coherence.hpp"
#include "l1coh/config.hpp"
#include "l1coh/error.hpp"
#include "l1coh/report_json.hpp"
#include "l1coh/scalar_ineq.hpp"

namespace l1coh::oracle {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double product(std::span<const double> v, std::size_t first, std::size_t last) {
    double p = 1.0;
    for (std::size_t i = first; i < last; ++i) p *= v[i];
    return p;
}

std::string join(std::span<const double> v) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << format_double(v[i]);
    os << ']';
    return os.str();
}

std::string join(std::span<const int> v) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ']';
    return os.str();
}

void check_lengths(std::span<const double> singles, std::span<const double> tails) {
    if (singles.size() < 2 || tails.size() + 1 != singles.size()) {
        throw Error(ErrorCode::ArityMismatch, "need N >= 2 singles and N-1 tails");
    }
}

PureState random_qubit(std::mt19937_64& rng, double theta) {
    std::uniform_real_distribution<double> phase(0.0, 2.0 * M_PI);
    const double ph = phase(rng);
    return make_pure({Complex(std::cos(theta), 0.0), std::polar(std::sin(theta), ph)});
}

} // namespace

double coherence_oracle(const DensityMatrix& rho) {
    double sum = 0.0;
    for (std::size_t i = 0; i < rho.dim(); ++i) {
        for (std::size_t j = 0; j < rho.dim(); ++j) {
            if (i == j) continue;
            const Complex z = rho(i, j);
            sum += std::sqrt(z.real() * z.real() + z.imag() * z.imag());
        }
    }
    return sum;
}

double gamma_direct(double kd, double alpha) {
    return (std::pow(1.0 + kd, alpha) - kd - 1.0) / std::pow(kd, alpha);
}

double lambda_direct(double kd, double alpha) {
    return (std::pow(1.0 + kd, alpha) - 1.0) / std::pow(kd, alpha);
}

double thm1_rhs(std::span<const double> c, std::span<const double> t, double alpha, double kd) {
    check_lengths(c, t);
    const std::size_t n = c.size();
    const double g = gamma_direct(kd, alpha);
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double omega = i + 1 < n ? 1.0 + t[i] / c[i] : 1.0;
        sum += omega * std::pow(g, static_cast<double>(i)) * std::pow(c[i], alpha);
    }
    return sum;
}

double thm2_rhs(std::span<const double> c, std::span<const double> t, double alpha, double kd, int m) {
    check_lengths(c, t);
    const int n = static_cast<int>(c.size());
    const double g = gamma_direct(kd, alpha);
    // 1-based accessors to keep the sums readable
    auto C = [&](int i) { return c[i - 1]; };
    auto T = [&](int i) { return t[i - 1]; };
    auto ups = [&](int i) { return 1.0 + C(i) / T(i); };
    double sum = 0.0;
    for (int i = 1; i <= m; ++i) sum += std::pow(g, i - 1) * (1.0 + T(i) / C(i)) * std::pow(C(i), alpha);
    sum += std::pow(g, m + 1) * std::pow(C(m + 1), alpha);
    for (int i = m + 2; i <= n - 1; ++i) {
        double u = 1.0;
        for (int j = m + 1; j <= i - 1; ++j) u *= ups(j);
        sum += std::pow(g, m + 1) * u * std::pow(C(i), alpha);
    }
    double u = 1.0;
    for (int j = m + 1; j <= n - 1; ++j) u *= ups(j);
    sum += std::pow(g, m) * u * std::pow(C(n), alpha);
    return sum;
}

double cor1_rhs(double c1, double c2, double c3, double c23, double alpha, double kd1, double kd2) {
    const double g1 = gamma_direct(kd1, alpha);
    const double g2 = gamma_direct(kd2, alpha);
    return (1.0 + c1 / c23) * (1.0 + c3 / c2) * std::pow(c2, alpha) + (1.0 + c1 / c23) * g2 * std::pow(c3, alpha) +
           g1 * std::pow(c1, alpha);
}

double thm3_rhs(std::span<const double> c, std::span<const double> t, double alpha, std::span<const double> kds) {
    check_lengths(c, t);
    const std::size_t n = c.size();
    std::vector<double> g(kds.size());
    for (std::size_t i = 0; i < kds.size(); ++i) g[i] = gamma_direct(kds[i], alpha);
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double omega = i + 1 < n ? 1.0 + t[i] / c[i] : 1.0;
        sum += omega * product(g, 0, i) * std::pow(c[i], alpha);
    }
    return sum;
}

double thm4_rhs(std::span<const double> c, std::span<const double> t, double alpha, std::span<const double> kds,
                int m) {
    check_lengths(c, t);
    const int n = static_cast<int>(c.size());
    std::vector<double> g(kds.size());
    for (std::size_t i = 0; i < kds.size(); ++i) g[i] = gamma_direct(kds[i], alpha);
    auto C = [&](int i) { return c[i - 1]; };
    auto T = [&](int i) { return t[i - 1]; };
    auto G = [&](int i) { return g[i - 1]; };
    auto gprod = [&](int last) {
        double p = 1.0;
        for (int j = 1; j <= last; ++j) p *= G(j);
        return p;
    };
    auto ups = [&](int i) { return 1.0 + C(i) / T(i); };
    double sum = 0.0;
    for (int i = 1; i <= m; ++i) sum += gprod(i - 1) * (1.0 + T(i) / C(i)) * std::pow(C(i), alpha);
    sum += gprod(m + 1) * std::pow(C(m + 1), alpha);
    for (int i = m + 2; i <= n - 1; ++i) {
        double u = 1.0;
        for (int j = m + 1; j <= i - 1; ++j) u *= ups(j);
        sum += gprod(m) * u * G(i) * std::pow(C(i), alpha);
    }
    double u = 1.0;
    for (int j = m + 1; j <= n - 1; ++j) u *= ups(j);
    sum += gprod(m) * u * std::pow(C(n), alpha);
    return sum;
}

double ref_split_rhs(std::span<const double> c, double alpha, double base, int m) {
    const int n = static_cast<int>(c.size());
    double sum = 0.0;
    for (int i = 1; i <= n; ++i) {
        double lambda;
        if (i <= m) {
            lambda = std::pow(base, i - 1);
        } else if (i < n) {
            lambda = std::pow(base, m + 1);
        } else {
            lambda = std::pow(base, m);
        }
        sum += lambda * std::pow(c[i - 1], alpha);
    }
    return sum;
}

double ref_hybrid_rhs(double c1, double c2, double c3, double alpha, double base1, double base2) {
    return std::pow(c2, alpha) + base2 * std::pow(c3, alpha) + base1 * std::pow(c1, alpha);
}

VerifySummary::VerifySummary(double tol) : tolerance(tol), worst_slack(kInf) {}

void VerifySummary::record(const std::string& check, double slack, const std::function<std::string()>& inputs) {
    ++checks_run;
    ++count_by_check[check];
    worst_slack = std::min(worst_slack, slack);
    auto it = worst_by_check.find(check);
    if (it == worst_by_check.end()) {
        worst_by_check.emplace(check, slack);
    } else {
        it->second = std::min(it->second, slack);
    }
    if (!(slack >= -tolerance)) {
        ++violation_count;
        if (violations.size() < kMaxStored) violations.push_back({check, inputs ? inputs() : std::string{}, slack});
    }
}

void VerifySummary::merge(const VerifySummary& other) {
    checks_run += other.checks_run;
    violation_count += other.violation_count;
    for (const auto& v : other.violations) {
        if (violations.size() >= kMaxStored) break;
        violations.push_back(v);
    }
    worst_slack = std::min(worst_slack, other.worst_slack);
    for (const auto& [k, v] : other.worst_by_check) {
        auto it = worst_by_check.find(k);
        if (it == worst_by_check.end()) {
            worst_by_check.emplace(k, v);
        } else {
            it->second = std::min(it->second, v);
        }
    }
    for (const auto& [k, v] : other.count_by_check) count_by_check[k] += v;
    for (const auto& [k, v] : other.applicability) {
        auto& slot = applicability[k];
        slot.first += v.first;
        slot.second += v.second;
    }
    degenerate = degenerate || other.degenerate;
}

nlohmann::ordered_json to_json(const VerifySummary& s) {
    auto num = [](double x) -> nlohmann::ordered_json {
        if (std::isfinite(x)) return x;
        return nullptr;
    };
    nlohmann::ordered_json j;
    j["passed"] = s.passed();
    j["tolerance"] = s.tolerance;
    j["checks_run"] = s.checks_run;
    j["violation_count"] = s.violation_count;
    j["worst_slack"] = num(s.worst_slack);
    nlohmann::ordered_json by = nlohmann::ordered_json::object();
    for (const auto& [k, v] : s.worst_by_check) by[k] = num(v);
    j["worst_by_check"] = by;
    j["count_by_check"] = s.count_by_check;
    nlohmann::ordered_json viol = nlohmann::ordered_json::array();
    for (const auto& v : s.violations) viol.push_back({{"check", v.check}, {"inputs", v.inputs}, {"slack", num(v.slack)}});
    j["violations"] = viol;
    if (!s.applicability.empty()) {
        nlohmann::ordered_json app = nlohmann::ordered_json::object();
        for (const auto& [k, v] : s.applicability) {
            app[k] = {{"applicable", v.first},
                      {"evaluated", v.second},
                      {"rate", v.second ? static_cast<double>(v.first) / static_cast<double>(v.second) : 0.0}};
        }
        j["applicability"] = app;
    }
    j["degenerate"] = s.degenerate;
    return j;
}

void validate(const FuzzConfig& cfg, int min_qubits) {
    if (cfg.n_states < 0) throw Error(ErrorCode::InvalidParams, "n_states must be non-negative");
    if (cfg.n_qubits < min_qubits || cfg.n_qubits > config().max_pure_qubits) {
        throw Error(ErrorCode::InvalidParams, "n_qubits must be in [" + std::to_string(min_qubits) + ", " +
                                                  std::to_string(config().max_pure_qubits) + "]");
    }
    if (!(cfg.tolerance >= 0.0)) throw Error(ErrorCode::InvalidParams, "tolerance must be non-negative");
    for (double a : cfg.alphas) {
        if (!(a >= 2.0) || !std::isfinite(a)) throw Error(ErrorCode::InvalidParams, "alphas must be finite and >= 2");
    }
}

std::uint64_t state_seed(std::uint64_t seed, int index) {
    // splitmix64 finalizer over (seed, index)
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(index) + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::string bound_fuzz_family(int index) {
    switch (index % 4) {
    case 0: return "haar";
    case 1: return "product";
    case 2: return "zero_qubit";
    default: return "block";
    }
}

PureState bound_fuzz_state(int n, std::uint64_t seed, int index) {
    const std::uint64_t s = state_seed(seed, index);
    std::mt19937_64 rng(s);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    switch (index % 4) {
    case 0: return random_pure(n, s);
    case 1: {
        // coherence sin(2 theta) shrinking geometrically along a random order
        std::vector<double> thetas(n);
        double scale = 1.0;
        for (int q = 0; q < n; ++q) {
            thetas[q] = unit(rng) * scale * M_PI / 4.0;
            scale *= 0.25 + 0.75 * unit(rng);
        }
        std::shuffle(thetas.begin(), thetas.end(), rng);
        PureState psi = random_qubit(rng, thetas[0]);
        for (int q = 1; q < n; ++q) psi = tensor(psi, random_qubit(rng, thetas[q]));
        return psi;
    }
    case 2: {
        if (n == 1) return make_pure({1.0, 0.0});
        const int zero_at = (index / 4) % n;
        const PureState zero = make_pure({1.0, 0.0});
        const PureState rest = random_pure(n - 1, s ^ 0x5bd1e995ULL);
        if (zero_at == 0) return tensor(zero, rest);
        // place |0> at position zero_at by re-indexing the amplitudes
        const std::size_t dim = std::size_t{1} << n;
        std::vector<Complex> amps(dim, Complex{});
        const std::size_t bit = qubit_bit(n, zero_at);
        for (std::size_t r = 0; r < rest.dim(); ++r) {
            const std::size_t low = r & (bit - 1);
            const std::size_t high = (r & ~(bit - 1)) << 1;
            amps[high | low] = rest[r];
        }
        return make_pure(std::move(amps));
    }
    default: {
        if (n < 2) return random_pure(n, s);
        PureState psi = random_pure(2, s ^ 0x2545f4914f6cdd1dULL);
        for (int q = 2; q < n; ++q) psi = tensor(psi, random_qubit(rng, unit(rng) * M_PI / 4.0));
        return psi;
    }
    }
}

VerifySummary check_superadditivity(const PureState& psi, double tolerance, const std::string& label) {
    VerifySummary s(tolerance);
    const int n = psi.n_qubits();
    if (n < 2) {
        s.degenerate = true;
        return s;
    }
    const double total = coherence_oracle(density_of(psi));
    double sum = 0.0;
    std::vector<double> singles(n);
    for (int q = 0; q < n; ++q) {
        singles[q] = coherence_oracle(reduced_density(psi, QubitSubset::of({q}, n)));
        sum += singles[q];
    }
    s.record("total_vs_singles", total - sum,
             [&] { return label + " total=" + format_double(total) + " singles=" + join(singles); });
    for (int cut = 1; cut < n; ++cut) {
        const double a = coherence_oracle(reduced_density(psi, QubitSubset::range(0, cut, n)));
        const double b = coherence_oracle(reduced_density(psi, QubitSubset::range(cut, n, n)));
        s.record("bipartition", total - a - b, [&] {
            return label + " cut=" + std::to_string(cut) + " C_AB=" + format_double(total) + " C_A=" + format_double(a) +
                   " C_B=" + format_double(b);
        });
    }
    return s;
}

VerifySummary check_bound_validity(const PureState& psi, std::span<const BoundId> ids, std::span<const double> alphas,
                                   double tolerance, const std::string& label) {
    VerifySummary s(tolerance);
    const int n = psi.n_qubits();
    if (n < 2) {
        s.degenerate = true;
        return s;
    }
    const SubsetCoherences table(psi);
    std::vector<int> ordering = identity_ordering(n);
    do {
        const CoherenceProfile prof = table.profile(ordering);
        for (double alpha : alphas) {
            for (BoundId id : ids) {
                auto& tally = s.applicability[std::string(bound_name(id))];
                ++tally.second;
                const auto tight = tightest_params(prof, id, alpha);
                if (!tight) continue;
                std::vector<BoundParams> trials{*tight};
                if (id != BoundId::Baseline4) {
                    BoundParams relaxed = *tight;
                    relaxed.delta = 2.0;
                    if (auto* g = std::get_if<GlobalK>(&relaxed.k_mode)) {
                        g->k = std::sqrt(0.5 * (g->k + 1.0));
                    } else {
                        for (double& k : std::get<PerIndexK>(relaxed.k_mode).k) k = std::sqrt(0.5 * (k + 1.0));
                    }
                    trials.push_back(relaxed);
                }
                bool counted = false;
                for (const BoundParams& p : trials) {
                    BoundReport rep;
                    try {
                        rep = evaluate_bound(id, prof, p);
                    } catch (const Error&) {
                        continue;
                    }
                    if (!rep.verdict.applicable) continue;
                    if (!counted) {
                        ++tally.first;
                        counted = true;
                    }
                    const double lhs = std::pow(table.total(), alpha);
                    s.record(std::string("bound:") + std::string(bound_name(id)), lhs - rep.rhs, [&] {
                        std::ostringstream os;
                        os << label << " ordering=" << join(std::span<const int>(ordering))
                           << " alpha=" << format_double(alpha) << " params=" << to_json(p).dump()
                           << " rhs=" << format_double(rep.rhs) << " lhs=" << format_double(lhs);
                        return os.str();
                    });
                }
            }
        }
    } while (n <= 4 && std::next_permutation(ordering.begin(), ordering.end()));
    return s;
}

void parallel_for(int count, const std::function<void(int)>& fn) {
    if (count <= 0) return;
    const int hw = std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
    const int workers = std::min(count, hw);
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> pool;
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (int i = w; i < count; i += workers) fn(i);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

VerifySummary parallel_summaries(int count, double tolerance, const std::function<VerifySummary(int)>& fn) {
    std::vector<VerifySummary> parts(static_cast<std::size_t>(std::max(count, 0)), VerifySummary(tolerance));
    parallel_for(count, [&](int i) { parts[i] = fn(i); });
    VerifySummary out(tolerance);
    for (const auto& p : parts) out.merge(p);
    return out;
}

VerifySummary superadditivity_fuzz(const FuzzConfig& cfg) {
    validate(cfg, 1);
    if (cfg.n_qubits == 1) {
        VerifySummary s(cfg.tolerance);
        s.degenerate = true;
        return s;
    }
    VerifySummary out = parallel_summaries(cfg.n_states, cfg.tolerance, [&](int i) {
        const PureState psi = random_pure(cfg.n_qubits, state_seed(cfg.seed, i));
        return check_superadditivity(psi, cfg.tolerance, "state=" + std::to_string(i));
    });
    // Bell pair: C_AB = 1 against two incoherent marginals
    const double r = 1.0 / std::sqrt(2.0);
    const PureState bell = make_pure({r, 0.0, 0.0, r});
    out.merge(check_superadditivity(bell, cfg.tolerance, "bell"));
    return out;
}

VerifySummary bound_validity_fuzz(const FuzzConfig& cfg, std::span<const BoundId> ids) {
    validate(cfg, 2);
    const std::vector<BoundId> id_list(ids.begin(), ids.end());
    return parallel_summaries(cfg.n_states, cfg.tolerance, [&](int i) {
        const PureState psi = bound_fuzz_state(cfg.n_qubits, cfg.seed, i);
        return check_bound_validity(psi, id_list, cfg.alphas, cfg.tolerance,
                                    "state=" + std::to_string(i) + " family=" + bound_fuzz_family(i));
    });
}

VerifySummary lemma_grid_verify(const GridDensity& grid, double tolerance) {
    VerifySummary s(tolerance);
    auto lin = [](double lo, double hi, int steps, int i) {
        return steps <= 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
    };
    for (int ia = 0; ia < grid.lemma1_alpha; ++ia) {
        const double alpha = lin(2.0, 6.0, grid.lemma1_alpha, ia);
        for (int ix = 0; ix < grid.lemma1_x; ++ix) {
            const double x = lin(0.0, 1.0, grid.lemma1_x, ix);
            const SlackVerdict v = lemma1_holds(x, alpha);
            s.record("lemma1", v.slack,
                     [&] { return "x=" + format_double(x) + " alpha=" + format_double(alpha); });
        }
    }
    for (double delta : grid.deltas) {
        for (int ik = 0; ik < grid.k; ++ik) {
            const double k = lin(1.0 / grid.k, 1.0, grid.k, ik);
            for (int ia = 0; ia < grid.alpha; ++ia) {
                const ScalarParams p{lin(2.0, 6.0, grid.alpha, ia), k, delta};
                const double kd = p.k_delta();
                auto where = [&](double x) {
                    return "x=" + format_double(x) + " k=" + format_double(k) + " delta=" + format_double(delta) +
                           " alpha=" + format_double(p.alpha);
                };
                for (int ix = 0; ix < grid.x; ++ix) {
                    const double x = lin(0.0, kd, grid.x, ix);
                    s.record("lemma2", lemma2_holds(x, p).slack, [&] { return where(x); });
                    s.record("ref_inequality", ref31_ineq_holds(x, p).slack, [&] { return where(x); });
                    if (x > 0.0) s.record("dominance", dominance_check(x, p).slack, [&] { return where(x); });
                }
                // both sides agree exactly at the ends of the range
                s.record("lemma2_zero", -std::abs(lemma2_holds(0.0, p).slack), [&] { return where(0.0); });
                s.record("lemma2_saturation", -std::abs(lemma2_holds(kd, p).slack), [&] { return where(kd); });
                s.record("ref_inequality_saturation", -std::abs(ref31_ineq_holds(kd, p).slack),
                         [&] { return where(kd); });
            }
        }
    }
    return s;
}

CoherenceProfile synth_profile(std::mt19937_64& rng, const std::vector<bool>& pattern, const std::vector<double>& kd) {
    if (pattern.size() != kd.size() || pattern.empty()) {
        throw Error(ErrorCode::ArityMismatch, "pattern and k^delta lists must have the same non-zero length");
    }
    const std::size_t steps = pattern.size();
    const std::size_t n = steps + 1;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> singles(n), tails(steps);
    double cur = 0.2 + 0.8 * unit(rng);
    singles[n - 1] = cur;
    for (std::size_t p = steps; p-- > 0;) {
        tails[p] = cur;
        const double u = 0.3 + 0.7 * unit(rng);
        singles[p] = pattern[p] ? cur / (kd[p] * u) : kd[p] * cur * u;
        cur = singles[p] + tails[p] + unit(rng) * singles[p] * tails[p];
    }
    const double scale = 2.0 / cur;
    for (double& v : singles) v *= scale;
    for (double& v : tails) v *= scale;
    tails.back() = singles.back();
    return CoherenceProfile::from_values(std::move(singles), std::move(tails), 2.0);
}

} // namespace l1coh::oracle
