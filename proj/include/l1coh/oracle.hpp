#pragma once

// Independent re-implementations used by the test suites and the verify
// command. Nothing here calls into the coherence or bounds evaluation paths
// it is meant to check; states are built with qstate only.

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "l1coh/bounds.hpp"
#include "l1coh/qstate.hpp"

namespace l1coh::oracle {

// Naive double loop over all i != j of sqrt(re^2 + im^2).
double coherence_oracle(const DensityMatrix& rho);

double gamma_direct(double kd, double alpha);
double lambda_direct(double kd, double alpha);

// Straight-line transcriptions of the displayed lower bounds. singles is
// C_1..C_N, tails is C_{2..N}, .., C_N; kd values are k^delta (per step for
// the per-index forms); m is 1-based.
double thm1_rhs(std::span<const double> singles, std::span<const double> tails, double alpha, double kd);
double thm2_rhs(std::span<const double> singles, std::span<const double> tails, double alpha, double kd, int m);
double cor1_rhs(double c1, double c2, double c3, double c23, double alpha, double kd1, double kd2);
double thm3_rhs(std::span<const double> singles, std::span<const double> tails, double alpha,
                std::span<const double> kds);
// Final summand uses C_N and Gamma_0..Gamma_m; middle summands carry
// Gamma_0..Gamma_m * Upsilon_{m+1}..Upsilon_{n-1} * Gamma_n.
double thm4_rhs(std::span<const double> singles, std::span<const double> tails, double alpha,
                std::span<const double> kds, int m);
// lambda_n = base^(n-1) for n <= m, base^(m+1) for m < n < N, base^m for n = N.
double ref_split_rhs(std::span<const double> singles, double alpha, double base, int m);
// C_2^a + base2 * C_3^a + base1 * C_1^a (ascending at A_1, descending at A_2).
double ref_hybrid_rhs(double c1, double c2, double c3, double alpha, double base1, double base2);

struct Violation {
    std::string check;
    std::string inputs;
    double slack = 0.0;
};

struct VerifySummary {
    double tolerance = 1e-9;
    long checks_run = 0;
    long violation_count = 0;
    std::vector<Violation> violations; // first kMaxStored offenders
    double worst_slack = 0.0;          // +inf until a check runs
    std::map<std::string, double> worst_by_check;
    std::map<std::string, long> count_by_check;
    std::map<std::string, std::pair<long, long>> applicability; // bound -> (applicable, evaluated)
    bool degenerate = false;

    static constexpr std::size_t kMaxStored = 50;

    explicit VerifySummary(double tol = 1e-9);
    void record(const std::string& check, double slack, const std::function<std::string()>& inputs);
    void merge(const VerifySummary& other);
    bool passed() const { return violation_count == 0; }
};

nlohmann::ordered_json to_json(const VerifySummary& s);

struct FuzzConfig {
    int n_states = 1000;
    int n_qubits = 3;
    std::uint64_t seed = 7;
    double tolerance = 1e-9;
    std::vector<double> alphas = {2.0, 2.5, 3.0, 4.0};
};

void validate(const FuzzConfig& cfg, int min_qubits);

// Deterministic per-index sub-seed.
std::uint64_t state_seed(std::uint64_t seed, int index);

// Structured random state for the bound fuzz; the family cycles with the
// index: Haar, product of random qubits with spread coherences, |0> on one
// qubit times a Haar state of the rest, two-qubit Haar block times random
// qubits.
PureState bound_fuzz_state(int n_qubits, std::uint64_t seed, int index);
std::string bound_fuzz_family(int index);

VerifySummary check_superadditivity(const PureState& psi, double tolerance, const std::string& label);
// Every ordering (N <= 4; identity otherwise), every alpha, every id, with
// the boundary parameters and a relaxed variant (k^delta halfway to 1,
// delta = 2).
VerifySummary check_bound_validity(const PureState& psi, std::span<const BoundId> ids,
                                   std::span<const double> alphas, double tolerance, const std::string& label);

VerifySummary superadditivity_fuzz(const FuzzConfig& cfg);
VerifySummary bound_validity_fuzz(const FuzzConfig& cfg, std::span<const BoundId> ids = kAllBounds);

struct GridDensity {
    int lemma1_x = 200;
    int lemma1_alpha = 200;
    int x = 50;     // points in [0, k^delta]
    int k = 50;     // points in (0, 1]
    int alpha = 20; // points in [2, 6]
    std::vector<double> deltas = {1.0, 2.0, 3.0};
};

// Lemma 1, Lemma 2, the comparator inequality and the dominance margin on
// their grids, plus exact-zero checks at x = 0 and x = k^delta.
VerifySummary lemma_grid_verify(const GridDensity& grid = {}, double tolerance = 1e-12);

// Raw profile satisfying `pattern` (true = descending step) for the given
// per-step k^delta; values scaled so the total is 2.
CoherenceProfile synth_profile(std::mt19937_64& rng, const std::vector<bool>& pattern, const std::vector<double>& kd);

// Runs fn(i) for every i in [0, count) on worker threads; the first
// exception thrown by any call is rethrown after all workers finish.
void parallel_for(int count, const std::function<void(int)>& fn);

// Runs fn(i) for i in [0, count) on worker threads and merges the summaries
// in index order, so the result does not depend on scheduling.
VerifySummary parallel_summaries(int count, double tolerance, const std::function<VerifySummary(int)>& fn);

} // namespace l1coh::oracle
