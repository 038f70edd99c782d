#include "l1coh/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

#include "l1coh/coherence.hpp"
#include "l1coh/config.hpp"
#include "l1coh/error.hpp"
#include "l1coh/oracle.hpp"
#include "l1coh/report_json.hpp"
#include "l1coh/scalar_ineq.hpp"
#include "l1coh/state_io.hpp"

namespace l1coh::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct UsageError : Error {
    explicit UsageError(const std::string& what) : Error(ErrorCode::InvalidParams, what) {}
};

double parse_number(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw UsageError(what + ": \"" + text + "\" is not a number");
    }
}

int parse_int(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw UsageError(what + ": \"" + text + "\" is not an integer");
    }
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream is(text);
    while (std::getline(is, cur, sep)) parts.push_back(cur);
    if (!text.empty() && text.back() == sep) parts.emplace_back();
    return parts;
}

std::string text_num(double v) {
    if (!std::isfinite(v)) return format_double(v);
    std::ostringstream os;
    os << std::setprecision(12) << v;
    return os.str();
}

std::string text_list(const std::vector<double>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + text_num(v[i]);
    return s;
}

std::string text_ordering(std::span<const int> ordering) {
    std::string s = "[";
    for (std::size_t i = 0; i < ordering.size(); ++i) s += (i ? "," : "") + std::to_string(ordering[i]);
    return s + "]";
}

void check_k(double k, const std::string& what) {
    if (!(k > 0.0 && k <= 1.0)) throw UsageError(what + " = " + text_num(k) + " is outside (0, 1]");
}

void check_alpha(double a) {
    if (!(a >= 1.0) || !std::isfinite(a)) throw UsageError("alpha = " + text_num(a) + " must be a finite value >= 1");
}

void check_delta(double d) {
    if (!(d >= 1.0) || !std::isfinite(d)) throw UsageError("delta = " + text_num(d) + " must be a finite value >= 1");
}

std::vector<int> parse_ordering(const std::string& text, int n) {
    std::vector<int> ordering;
    for (const auto& part : split(text, ',')) ordering.push_back(parse_int(part, "--ordering"));
    try {
        check_permutation(ordering, n);
    } catch (const Error& e) {
        throw UsageError(std::string("--ordering: ") + e.what());
    }
    return ordering;
}

std::vector<double> parse_k_list(const std::string& text) {
    std::vector<double> ks;
    for (const auto& part : split(text, ',')) {
        const double k = parse_number(part, "--kn");
        check_k(k, "--kn entry");
        ks.push_back(k);
    }
    return ks;
}

BoundId parse_id(const std::string& text) {
    auto id = parse_bound_id(text);
    if (!id) {
        std::string names;
        for (BoundId b : kAllBounds) names += (names.empty() ? "" : ", ") + std::string(bound_name(b));
        throw UsageError("unknown bound \"" + text + "\" (expected one of " + names + ")");
    }
    return *id;
}

void write_output(const std::string& path, const std::string& content, bool force) {
    const std::filesystem::path p(path);
    if (std::filesystem::exists(p) && !force) {
        throw UsageError("refusing to overwrite " + path + " (pass --force)");
    }
    std::ofstream f(p, std::ios::binary | std::ios::trunc);
    if (!f) throw UsageError("cannot open " + path + " for writing");
    f << content;
    if (!f) throw UsageError("failed writing " + path);
}

// Equal-weight Schmidt state with phi = 0, whose total is sometimes quoted as 18/5.
bool is_equal_weight_schmidt(const LoadedState& st) {
    if (!st.schmidt) return false;
    const double l = 1.0 / std::sqrt(5.0);
    for (double v : st.schmidt->lambda) {
        if (std::abs(v - l) > 1e-9) return false;
    }
    return std::abs(st.schmidt->phi) < 1e-12;
}

struct Globals {
    std::optional<double> tolerance;
    bool json = false;
    bool force = false;
};

// ---- coherence ------------------------------------------------------------

struct CoherenceArgs {
    std::string file;
    std::string ordering;
};

int cmd_coherence(const CoherenceArgs& a, const Globals& g, std::ostream& out) {
    const LoadedState st = load_state_file(a.file);
    const int n = st.n_qubits();
    const std::vector<int> ordering = a.ordering.empty() ? identity_ordering(n) : parse_ordering(a.ordering, n);
    const CoherenceProfile prof =
        st.pure() ? profile(*st.pure(), ordering) : profile(std::get<DensityMatrix>(st.state), ordering);
    std::optional<std::string> note;
    if (is_equal_weight_schmidt(st)) {
        note = "a total of 18/5 is sometimes quoted for this state; the sum of off-diagonal moduli is 4 (20 entries of 1/5)";
    }
    if (g.json) {
        ordered_json j{{"kind", st.kind}, {"n_qubits", n}, {"profile", to_json(prof)}};
        if (note) j["note"] = *note;
        out << j.dump(2) << '\n';
        return kExitOk;
    }
    out << "state: " << st.kind << ", " << n << " qubit" << (n == 1 ? "" : "s") << ", ordering "
        << text_ordering(prof.ordering) << '\n';
    out << "total: " << text_num(prof.total) << '\n';
    out << "singles: " << text_list(prof.singles) << '\n';
    out << "tails: " << text_list(prof.tails) << '\n';
    if (note) out << "note: " << *note << '\n';
    return kExitOk;
}

// ---- bounds ---------------------------------------------------------------

struct BoundsArgs {
    std::string file;
    double alpha = 2.0;
    std::optional<double> k;
    std::string kn;
    double delta = 1.0;
    std::optional<int> m;
    std::string ordering;
    std::vector<std::string> bounds;
    bool auto_params = false;
    bool auto_ordering = false;
};

BoundParams base_params(double alpha, std::optional<double> k, const std::string& kn, double delta,
                        std::optional<int> m) {
    check_alpha(alpha);
    check_delta(delta);
    if (k && !kn.empty()) throw UsageError("--k and --kn are mutually exclusive");
    BoundParams p;
    p.alpha = alpha;
    p.delta = delta;
    if (!kn.empty()) {
        p.k_mode = PerIndexK{parse_k_list(kn)};
    } else {
        const double kv = k.value_or(1.0);
        check_k(kv, "--k");
        p.k_mode = GlobalK{kv};
    }
    if (m && *m < 1) throw UsageError("--m must be >= 1");
    p.m = m;
    return p;
}

void print_report(std::ostream& out, const BoundReport& rep, std::span<const int> ordering) {
    out << std::left << std::setw(10) << bound_name(rep.bound) << (rep.verdict.applicable ? "applicable  " : "n/a         ")
        << "rhs " << std::setw(16) << text_num(rep.rhs) << "lhs " << std::setw(16) << text_num(rep.lhs) << "gap "
        << text_num(rep.gap);
    if (!ordering.empty()) out << "  ordering " << text_ordering(ordering);
    out << '\n' << std::right;
    for (const auto& c : rep.verdict.per_condition) {
        out << "    " << c.description;
        if (std::isfinite(c.lhs) || std::isfinite(c.rhs)) out << ": " << text_num(c.lhs) << " vs " << text_num(c.rhs);
        out << (c.satisfied ? "  ok" : "  violated") << '\n';
    }
    if (!rep.dropped.empty()) {
        out << "    dropped positions:";
        for (int d : rep.dropped) out << ' ' << d;
        out << '\n';
    }
}

int cmd_bounds(const BoundsArgs& a, const Globals& g, std::ostream& out) {
    const BoundParams params = base_params(a.alpha, a.k, a.kn, a.delta, a.m);
    std::vector<BoundId> ids;
    for (const auto& b : a.bounds) {
        for (const auto& part : split(b, ',')) ids.push_back(parse_id(part));
    }
    if (ids.empty()) ids.assign(std::begin(kAllBounds), std::end(kAllBounds));

    const LoadedState st = load_state_file(a.file);
    const int n = st.n_qubits();
    if (a.auto_ordering && !a.ordering.empty()) throw UsageError("--ordering and --auto-ordering are mutually exclusive");
    if (a.auto_ordering && n > 8) throw UsageError("--auto-ordering supports at most 8 qubits");
    const std::vector<int> ordering = a.ordering.empty() ? identity_ordering(n) : parse_ordering(a.ordering, n);
    const SubsetCoherences table = st.pure() ? SubsetCoherences(*st.pure()) : SubsetCoherences(st.density());
    const CoherenceProfile prof = table.profile(ordering);

    std::vector<std::pair<BoundReport, std::vector<int>>> results;
    for (BoundId id : ids) {
        if (a.auto_ordering) {
            try {
                OrderingResult r = best_ordering(table, params, id, a.auto_params);
                results.emplace_back(std::move(r.report), std::move(r.ordering));
            } catch (const Error& e) {
                BoundReport rep;
                rep.bound = id;
                rep.params = params;
                rep.rhs = rep.gap = kNaN;
                rep.lhs = std::pow(prof.total, params.alpha);
                rep.verdict.per_condition.push_back({e.what(), kNaN, kNaN, false});
                results.emplace_back(std::move(rep), ordering);
            }
            continue;
        }
        BoundParams p = params;
        if (a.auto_params) {
            if (auto t = tightest_params(prof, id, params.alpha)) p = *t;
        }
        results.emplace_back(evaluate_all(prof, p, std::span<const BoundId>(&id, 1)).front(), ordering);
    }
    std::stable_sort(results.begin(), results.end(), [](const auto& x, const auto& y) {
        if (x.first.verdict.applicable != y.first.verdict.applicable) return x.first.verdict.applicable;
        if (!x.first.verdict.applicable) return false;
        return x.first.rhs > y.first.rhs;
    });

    bool any_applicable = false;
    bool any_requested = false;
    for (const auto& [rep, ord] : results) {
        if (rep.bound == BoundId::Baseline4) continue;
        any_requested = true;
        any_applicable = any_applicable || rep.verdict.applicable;
    }

    if (g.json) {
        ordered_json arr = ordered_json::array();
        for (const auto& [rep, ord] : results) {
            ordered_json j = to_json(rep);
            j["params"] = to_json(rep.params);
            j["ordering"] = ord;
            arr.push_back(j);
        }
        out << ordered_json{{"profile", to_json(prof)}, {"reports", arr}}.dump(2) << '\n';
    } else {
        out << "profile " << text_ordering(prof.ordering) << ": singles " << text_list(prof.singles) << "; tails "
            << text_list(prof.tails) << "; total " << text_num(prof.total) << '\n';
        for (const auto& [rep, ord] : results) {
            print_report(out, rep, a.auto_ordering ? std::span<const int>(ord) : std::span<const int>());
        }
    }
    return any_requested && !any_applicable ? kExitNoBound : kExitOk;
}

// ---- sweep ----------------------------------------------------------------

struct SweepArgs {
    std::string file;
    std::vector<std::string> axes;
    std::vector<std::string> bounds;
    double alpha = 2.0;
    std::optional<double> k;
    std::string kn;
    double delta = 1.0;
    std::optional<int> m;
    std::string ordering;
    std::string out_path;
};

int cmd_sweep(const SweepArgs& a, const Globals& g, std::ostream& out) {
    SweepPlan plan;
    for (const auto& ax : a.axes) plan.axes.push_back(parse_axis(ax));
    for (const auto& b : a.bounds) plan.bounds.push_back(parse_bound_spec(b));
    plan.base = base_params(a.alpha, a.k, a.kn, a.delta, a.m);
    const LoadedState st = load_state_file(a.file);
    const int n = st.n_qubits();
    const std::vector<int> ordering = a.ordering.empty() ? identity_ordering(n) : parse_ordering(a.ordering, n);
    plan.profile = st.pure() ? profile(*st.pure(), ordering) : profile(std::get<DensityMatrix>(st.state), ordering);
    validate(plan);
    const std::string csv = sweep_csv(plan);
    if (a.out_path.empty()) {
        out << csv;
    } else {
        write_output(a.out_path, csv, g.force);
    }
    return kExitOk;
}

// ---- random ---------------------------------------------------------------

struct RandomArgs {
    int n = 1000;
    int qubits = 3;
    std::uint64_t seed = 7;
    std::string out_path;
};

int cmd_random(const RandomArgs& a, const Globals& g, std::ostream& out) {
    if (a.n < 1) throw UsageError("--n must be >= 1");
    if (a.qubits < 2 || a.qubits > 8) throw UsageError("--qubits must be in [2, 8]");
    oracle::FuzzConfig cfg;
    cfg.n_states = a.n;
    cfg.n_qubits = a.qubits;
    cfg.seed = a.seed;
    cfg.tolerance = g.tolerance.value_or(1e-9);

    struct Row {
        oracle::VerifySummary sup, bounds;
        double total = 0.0;
    };
    std::vector<Row> rows(static_cast<std::size_t>(cfg.n_states));
    oracle::parallel_for(cfg.n_states, [&](int i) {
        const PureState haar = random_pure(cfg.n_qubits, oracle::state_seed(cfg.seed, i));
        rows[i].total = l1_coherence(haar);
        rows[i].sup = oracle::check_superadditivity(haar, cfg.tolerance, "state=" + std::to_string(i));
        const PureState structured = oracle::bound_fuzz_state(cfg.n_qubits, cfg.seed, i);
        rows[i].bounds = oracle::check_bound_validity(structured, kAllBounds, cfg.alphas, cfg.tolerance,
                                                      "state=" + std::to_string(i) + " family=" +
                                                          oracle::bound_fuzz_family(i));
    });

    std::ostringstream csv;
    csv << "index,haar_total,superadditivity_checks,superadditivity_worst_slack,bound_family,bound_checks,"
           "bound_worst_slack,violations\n";
    oracle::VerifySummary sup(cfg.tolerance), bnd(cfg.tolerance);
    for (int i = 0; i < cfg.n_states; ++i) {
        const Row& r = rows[i];
        csv << i << ',' << format_double(r.total) << ',' << r.sup.checks_run << ',' << format_double(r.sup.worst_slack)
            << ',' << oracle::bound_fuzz_family(i) << ',' << r.bounds.checks_run << ','
            << format_double(r.bounds.worst_slack) << ',' << (r.sup.violation_count + r.bounds.violation_count) << '\n';
        sup.merge(r.sup);
        bnd.merge(r.bounds);
    }
    // pinned Bell pair
    const double h = 1.0 / std::sqrt(2.0);
    sup.merge(oracle::check_superadditivity(make_pure({h, 0.0, 0.0, h}), cfg.tolerance, "bell"));

    if (a.out_path.empty()) {
        out << csv.str();
    } else {
        write_output(a.out_path, csv.str(), g.force);
    }
    const bool ok = sup.passed() && bnd.passed();
    if (g.json) {
        out << ordered_json{{"superadditivity", oracle::to_json(sup)}, {"bound_validity", oracle::to_json(bnd)}}.dump(2)
            << '\n';
    } else {
        out << "# summary: states=" << cfg.n_states << " qubits=" << cfg.n_qubits << " seed=" << cfg.seed
            << " superadditivity_checks=" << sup.checks_run << " bound_checks=" << bnd.checks_run
            << " violations=" << (sup.violation_count + bnd.violation_count)
            << " worst_slack=" << format_double(std::min(sup.worst_slack, bnd.worst_slack)) << '\n';
    }
    return ok ? kExitOk : kExitVerifyFailed;
}

// ---- verify ---------------------------------------------------------------

PureState example1_state() {
    const double r2 = 1.0 / std::sqrt(2.0), r5 = 1.0 / std::sqrt(5.0), r10 = 1.0 / std::sqrt(10.0);
    return tensor(tensor(make_pure({r2, r2}), make_pure({r5, 2.0 * r5})), make_pure({r10, 3.0 * r10}));
}

double rel_diff(double got, double want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

void golden_checks(oracle::VerifySummary& s) {
    auto pin = [&](const std::string& name, double got, double want) {
        s.record(name, -rel_diff(got, want),
                 [&] { return "got=" + format_double(got) + " want=" + format_double(want); });
    };
    const std::vector<int> id3 = identity_ordering(3);

    const CoherenceProfile e1 = profile(example1_state(), id3);
    pin("example1_C1", e1.singles[0], 1.0);
    pin("example1_C2", e1.singles[1], 0.8);
    pin("example1_C3", e1.singles[2], 0.6);
    pin("example1_C23", e1.tails[0], 47.0 / 25.0);
    pin("example1_C123", e1.total, 119.0 / 25.0);

    BoundParams p;
    p.alpha = 2.0;
    p.delta = 2.0;
    p.k_mode = GlobalK{0.9};
    const double kd = 0.81;
    pin("example1_cor1", cor1_bound(e1, p).rhs,
        oracle::cor1_rhs(e1.singles[0], e1.singles[1], e1.singles[2], e1.tails[0], 2.0, kd, kd));
    pin("example1_ref31", ref_scheme_bound(e1, p, BoundId::Ref31).rhs,
        oracle::ref_hybrid_rhs(e1.singles[0], e1.singles[1], e1.singles[2], 2.0, oracle::lambda_direct(kd, 2.0),
                               oracle::lambda_direct(kd, 2.0)));

    SchmidtSpec spec;
    spec.lambda.fill(1.0 / std::sqrt(5.0));
    const PureState e2 = schmidt_state(spec);
    const CoherenceProfile p2 = profile(e2, id3);
    pin("example2_C1", p2.singles[0], 0.4);
    pin("example2_C2", p2.singles[1], 0.8);
    pin("example2_C3", p2.singles[2], 0.8);
    pin("example2_C23", p2.tails[0], 2.4);
    pin("example2_total", p2.total, oracle::coherence_oracle(density_of(e2)));

    BoundParams q;
    q.alpha = 2.0;
    q.delta = 2.0;
    q.k_mode = PerIndexK{{1.0, 1.0}};
    pin("example2_s2_minus_s1", cor1_bound(p2, q).rhs - ref_scheme_bound(p2, q, BoundId::Ref31).rhs, 4.0 / 15.0);

    const CoherenceProfile small = CoherenceProfile::from_values({1.0, 0.2, 0.1}, {0.32, 0.1}, 1.64);
    const double t3 = thm3_bound(small, best_params(small, ParamMode::Thm3, 2.0)).rhs;
    const double t1 = thm1_bound(small, best_params(small, ParamMode::Thm1, 2.0)).rhs;
    pin("refinement_thm3", t3, 1.69125);
    pin("refinement_thm1", t1, 1.59);
    s.record("refinement_order", t3 - t1, [&] { return "thm3=" + format_double(t3) + " thm1=" + format_double(t1); });

    // uniform k collapses the per-index forms
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const int n = 3 + i % 3;
        const double k = 0.4 + 0.6 * unit(rng);
        const double delta = 1.0 + 2.0 * unit(rng);
        const double alpha = 2.0 + 3.0 * unit(rng);
        const double kdv = std::pow(k, delta);
        BoundParams u;
        u.alpha = alpha;
        u.delta = delta;
        u.k_mode = GlobalK{k};
        const CoherenceProfile desc =
            oracle::synth_profile(rng, std::vector<bool>(n - 1, true), std::vector<double>(n - 1, kdv));
        pin("degeneracy_thm3_thm1", thm3_bound(desc, u).rhs, thm1_bound(desc, u).rhs);
        const int m = 1 + i % (n - 2);
        std::vector<bool> pattern(n - 1, false);
        for (int j = 0; j < m; ++j) pattern[j] = true;
        const CoherenceProfile split = oracle::synth_profile(rng, pattern, std::vector<double>(n - 1, kdv));
        u.m = m;
        pin("degeneracy_thm4_thm2", thm4_bound(split, u).rhs, thm2_bound(split, u).rhs);
        BoundParams one = u;
        one.k_mode = GlobalK{1.0};
        pin("degeneracy_ref31_ref29", ref_scheme_bound(split, one, BoundId::Ref31).rhs,
            ref_scheme_bound(split, one, BoundId::Ref29).rhs);
    }
}

struct VerifyArgs {
    bool self_test = false;
};

int cmd_verify(const VerifyArgs& a, const Globals& g, std::ostream& out) {
    const double tol = g.tolerance.value_or(1e-12);
    oracle::VerifySummary s = oracle::lemma_grid_verify({}, tol);
    golden_checks(s);
    if (a.self_test) {
        // Lemma 1 at x = 0.5, alpha = 3 has slack +0.25; negated it must be caught.
        const double flipped = -lemma1_holds(0.5, 3.0).slack;
        s.record("self_test_flipped_lemma1", flipped, [] { return "x=0.5 alpha=3 (sign flipped)"; });
    }
    if (g.json) {
        out << oracle::to_json(s).dump(2) << '\n';
    } else {
        out << (s.passed() ? "PASS" : "FAIL") << ": " << s.checks_run << " checks, " << s.violation_count
            << " violations, worst slack " << format_double(s.worst_slack) << " (tolerance " << format_double(tol)
            << ")\n";
        for (const auto& [name, worst] : s.worst_by_check) out << "  " << name << ": " << format_double(worst) << '\n';
        for (const auto& v : s.violations) {
            out << "  violation " << v.check << " slack " << format_double(v.slack) << " at " << v.inputs << '\n';
        }
    }
    return s.passed() ? kExitOk : kExitVerifyFailed;
}

} // namespace

// ---- sweep plumbing -------------------------------------------------------

double AxisSpec::value(int i) const {
    if (i == steps - 1) return max;
    return min + (max - min) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

AxisSpec parse_axis(const std::string& text) {
    const auto parts = split(text, ':');
    if (parts.size() != 4) throw UsageError("--axis \"" + text + "\": expected name:min:max:steps");
    AxisSpec ax;
    ax.name = parts[0];
    if (ax.name != "alpha" && ax.name != "k" && ax.name != "k1" && ax.name != "delta") {
        throw UsageError("--axis \"" + text + "\": name must be alpha, k, k1 or delta");
    }
    ax.min = parse_number(parts[1], "--axis min");
    ax.max = parse_number(parts[2], "--axis max");
    ax.steps = parse_int(parts[3], "--axis steps");
    if (ax.steps < 2) throw UsageError("--axis \"" + text + "\": steps must be >= 2");
    if (!(ax.min < ax.max)) throw UsageError("--axis \"" + text + "\": min must be below max");
    if (ax.name == "alpha") check_alpha(ax.min);
    if (ax.name == "delta") check_delta(ax.min);
    if (ax.name == "k" || ax.name == "k1") {
        check_k(ax.min, ax.name + " axis min");
        check_k(ax.max, ax.name + " axis max");
    }
    if (!std::isfinite(ax.max)) throw UsageError("--axis \"" + text + "\": max must be finite");
    return ax;
}

BoundSpec parse_bound_spec(const std::string& text) {
    BoundSpec spec;
    spec.label = text;
    const auto at = text.find('@');
    spec.id = parse_id(text.substr(0, at));
    if (at == std::string::npos) return spec;
    for (const auto& kv : split(text.substr(at + 1), ':')) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw UsageError("bound override \"" + kv + "\": expected key=value");
        const std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
        if (key == "delta") {
            spec.delta = parse_number(val, "delta override");
            check_delta(*spec.delta);
        } else if (key == "k") {
            spec.k = parse_number(val, "k override");
            check_k(*spec.k, "k override");
        } else if (key == "m") {
            spec.m = parse_int(val, "m override");
            if (*spec.m < 1) throw UsageError("m override must be >= 1");
        } else {
            throw UsageError("bound override key \"" + key + "\" (expected delta, k or m)");
        }
    }
    return spec;
}

void validate(const SweepPlan& plan) {
    if (plan.axes.empty() || plan.axes.size() > 2) throw UsageError("a sweep takes one or two --axis options");
    if (plan.axes.size() == 2 && plan.axes[0].name == plan.axes[1].name) throw UsageError("sweep axes must differ");
    if (plan.bounds.empty()) throw UsageError("a sweep needs at least one --bound");
    for (const auto& ax : plan.axes) {
        if (ax.name == "k1" && plan.profile.size() < 2) throw UsageError("k1 axis needs at least 2 qubits");
    }
}

std::string sweep_csv(const SweepPlan& plan) {
    const std::size_t nb = plan.bounds.size();
    std::ostringstream head;
    for (const auto& ax : plan.axes) head << ax.name << ',';
    for (const auto& b : plan.bounds) head << "rhs_" << b.label << ',';
    head << "lhs";
    for (std::size_t i = 0; i < nb; ++i) {
        for (std::size_t j = i + 1; j < nb; ++j) {
            head << ",diff_" << plan.bounds[i].label << "_minus_" << plan.bounds[j].label;
        }
    }
    head << '\n';

    const int outer = plan.axes[0].steps;
    const int inner = plan.axes.size() == 2 ? plan.axes[1].steps : 1;
    const int steps = plan.profile.size() - 1;
    std::vector<std::string> rows(static_cast<std::size_t>(outer) * inner);
    oracle::parallel_for(outer * inner, [&](int idx) {
        BoundParams p = plan.base;
        std::vector<double> axis_values;
        for (std::size_t a = 0; a < plan.axes.size(); ++a) {
            const AxisSpec& ax = plan.axes[a];
            const double v = ax.value(a == 0 ? idx / inner : idx % inner);
            axis_values.push_back(v);
            if (ax.name == "alpha") {
                p.alpha = v;
            } else if (ax.name == "delta") {
                p.delta = v;
            } else if (ax.name == "k") {
                if (auto* g = std::get_if<GlobalK>(&p.k_mode)) {
                    g->k = v;
                } else {
                    auto& ks = std::get<PerIndexK>(p.k_mode).k;
                    std::fill(ks.begin(), ks.end(), v);
                }
            } else {
                if (auto* g = std::get_if<GlobalK>(&p.k_mode)) {
                    p.k_mode = PerIndexK{std::vector<double>(static_cast<std::size_t>(std::max(steps, 1)), g->k)};
                }
                auto& ks = std::get<PerIndexK>(p.k_mode).k;
                if (!ks.empty()) ks[0] = v;
            }
        }
        std::vector<double> rhs(nb, kNaN);
        for (std::size_t b = 0; b < nb; ++b) {
            const BoundSpec& spec = plan.bounds[b];
            BoundParams bp = p;
            if (spec.delta) bp.delta = *spec.delta;
            if (spec.k) bp.k_mode = GlobalK{*spec.k};
            if (spec.m) bp.m = *spec.m;
            try {
                const BoundReport rep = evaluate_bound(spec.id, plan.profile, bp);
                if (rep.verdict.applicable) rhs[b] = rep.rhs;
            } catch (const Error&) {
            }
        }
        std::ostringstream row;
        for (double v : axis_values) row << format_double(v) << ',';
        for (double r : rhs) row << format_double(r) << ',';
        row << format_double(real_pow(plan.profile.total, p.alpha));
        for (std::size_t i = 0; i < nb; ++i) {
            for (std::size_t j = i + 1; j < nb; ++j) row << ',' << format_double(rhs[i] - rhs[j]);
        }
        row << '\n';
        rows[idx] = row.str();
    });
    std::string csv = head.str();
    for (const auto& r : rows) csv += r;
    return csv;
}

// ---- entry point ----------------------------------------------------------

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"l1-norm coherence and superadditivity bound toolkit", "l1coh"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    double tolerance = 0.0;
    auto* tol_opt = app.add_option("--tolerance", tolerance, "Verification tolerance for random and verify");
    app.add_flag("--json", g.json, "Machine-readable output");
    app.add_flag("--force", g.force, "Allow overwriting output files");

    CoherenceArgs ca;
    auto* coh = app.add_subcommand("coherence", "Coherence profile of a state file");
    coh->add_option("file", ca.file, "State file")->required();
    coh->add_option("--ordering", ca.ordering, "Qubit ordering, e.g. 2,0,1");

    BoundsArgs ba;
    auto* bnd = app.add_subcommand("bounds", "Evaluate superadditivity bounds on a state file");
    bnd->add_option("file", ba.file, "State file")->required();
    bnd->add_option("--alpha", ba.alpha, "Power of the coherence (default 2)");
    bnd->add_option("--k", ba.k, "Global k in (0, 1] (default 1)");
    bnd->add_option("--kn", ba.kn, "Per-index k_1,...,k_{N-1}");
    bnd->add_option("--delta", ba.delta, "delta >= 1 (default 1)");
    bnd->add_option("--m", ba.m, "Split index for the split-pattern bounds");
    bnd->add_option("--ordering", ba.ordering, "Qubit ordering, e.g. 2,0,1");
    bnd->add_option("--bound", ba.bounds, "Bounds to evaluate (repeatable or comma separated; default all)");
    bnd->add_flag("--auto-params", ba.auto_params, "Use the tightest valid parameters per bound");
    bnd->add_flag("--auto-ordering", ba.auto_ordering, "Search all qubit orderings per bound");

    SweepArgs sa;
    auto* swp = app.add_subcommand("sweep", "Grid sweep of bound values, written as CSV");
    swp->add_option("file", sa.file, "State file")->required();
    swp->add_option("--axis", sa.axes, "name:min:max:steps with name in alpha, k, k1, delta")->required();
    swp->add_option("--bound", sa.bounds, "ID or ID@key=value:... with keys delta, k, m")->required();
    swp->add_option("--alpha", sa.alpha, "Fixed alpha (default 2)");
    swp->add_option("--k", sa.k, "Fixed global k (default 1)");
    swp->add_option("--kn", sa.kn, "Fixed per-index k list");
    swp->add_option("--delta", sa.delta, "Fixed delta (default 1)");
    swp->add_option("--m", sa.m, "Fixed split index");
    swp->add_option("--ordering", sa.ordering, "Qubit ordering");
    swp->add_option("--out", sa.out_path, "Output CSV path (stdout when omitted)");

    RandomArgs ra;
    auto* rnd = app.add_subcommand("random", "Fuzz superadditivity and bound validity on random states");
    rnd->add_option("--n", ra.n, "Number of states (default 1000)");
    rnd->add_option("--qubits", ra.qubits, "Qubits per state (default 3)");
    rnd->add_option("--seed", ra.seed, "Seed (default 7)");
    rnd->add_option("--out", ra.out_path, "Per-state CSV path (stdout when omitted)");

    VerifyArgs va;
    auto* ver = app.add_subcommand("verify", "Lemma grids and pinned example values");
    ver->add_flag("--self-test", va.self_test, "Inject a sign flip that must be reported");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    if (*tol_opt) {
        if (!(tolerance >= 0.0) || !std::isfinite(tolerance)) {
            err << "error: --tolerance must be a finite non-negative number\n";
            return kExitUsage;
        }
        g.tolerance = tolerance;
    }

    try {
        if (*coh) return cmd_coherence(ca, g, out);
        if (*bnd) return cmd_bounds(ba, g, out);
        if (*swp) return cmd_sweep(sa, g, out);
        if (*rnd) return cmd_random(ra, g, out);
        if (*ver) return cmd_verify(va, g, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace l1coh::cli
