#include <gtest/gtest.h>

#include "l1coh/bounds.hpp"
#include "l1coh/coherence.hpp"
#include "l1coh/error.hpp"
#include "l1coh/oracle.hpp"
#include "test_support.hpp"

using namespace l1coh;
using namespace l1coh::testing;

namespace {

// rhs agreement relative to the magnitude of the rhs
void expect_close(double got, double want, const std::string& what) {
    EXPECT_LE(std::abs(got - want), 1e-12 * std::max(1.0, std::abs(want))) << what << " got " << got << " want " << want;
}

struct Draw {
    int n;
    double alpha;
    std::vector<double> kd;
};

Draw draw(std::mt19937_64& rng, int min_n) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    Draw d;
    d.n = min_n + static_cast<int>(rng() % 3);
    d.alpha = 2.0 + 3.0 * u(rng);
    for (int i = 0; i + 1 < d.n; ++i) d.kd.push_back(0.3 + 0.7 * u(rng));
    return d;
}

BoundParams per_index_from_kd(double alpha, const std::vector<double>& kd) {
    BoundParams p;
    p.alpha = alpha;
    p.delta = 1.0;
    p.k_mode = PerIndexK{kd};
    return p;
}

} // namespace

TEST(CoherenceOracle, Examples) {
    EXPECT_NEAR(oracle::coherence_oracle(density_of(example1_state())), 119.0 / 25.0, 1e-12);
    EXPECT_NEAR(oracle::coherence_oracle(density_of(example2_state())), 4.0, 1e-12);
    EXPECT_EQ(oracle::coherence_oracle(DensityMatrix::from_entries(1, {0.4, 0.0, 0.0, 0.6})), 0.0);
}

TEST(Transcription, Thm1) {
    std::mt19937_64 rng(101);
    for (int i = 0; i < 100; ++i) {
        Draw d = draw(rng, 3);
        const double kd = d.kd[0];
        const CoherenceProfile prof =
            oracle::synth_profile(rng, std::vector<bool>(d.n - 1, true), std::vector<double>(d.n - 1, kd));
        BoundParams p;
        p.alpha = d.alpha;
        p.k_mode = GlobalK{kd};
        const BoundReport r = thm1_bound(prof, p);
        ASSERT_TRUE(r.verdict.applicable);
        expect_close(r.rhs, oracle::thm1_rhs(prof.singles, prof.tails, d.alpha, kd), "thm1");
    }
}

TEST(Transcription, Thm2) {
    std::mt19937_64 rng(202);
    for (int i = 0; i < 100; ++i) {
        Draw d = draw(rng, 3);
        const double kd = d.kd[0];
        const int m = 1 + i % (d.n - 2);
        std::vector<bool> pattern(d.n - 1, false);
        for (int j = 0; j < m; ++j) pattern[j] = true;
        const CoherenceProfile prof = oracle::synth_profile(rng, pattern, std::vector<double>(d.n - 1, kd));
        BoundParams p;
        p.alpha = d.alpha;
        p.k_mode = GlobalK{kd};
        p.m = m;
        const BoundReport r = thm2_bound(prof, p);
        ASSERT_TRUE(r.verdict.applicable);
        expect_close(r.rhs, oracle::thm2_rhs(prof.singles, prof.tails, d.alpha, kd, m), "thm2");
    }
}

TEST(Transcription, Cor1) {
    std::mt19937_64 rng(303);
    for (int i = 0; i < 100; ++i) {
        Draw d = draw(rng, 3);
        const std::vector<double> kd{d.kd[0], d.kd[1]};
        const CoherenceProfile prof = oracle::synth_profile(rng, {false, true}, kd);
        const BoundReport r = cor1_bound(prof, per_index_from_kd(d.alpha, kd));
        ASSERT_TRUE(r.verdict.applicable);
        expect_close(r.rhs,
                     oracle::cor1_rhs(prof.singles[0], prof.singles[1], prof.singles[2], prof.tails[0], d.alpha, kd[0],
                                      kd[1]),
                     "cor1");
    }
}

TEST(Transcription, Thm3) {
    std::mt19937_64 rng(404);
    for (int i = 0; i < 100; ++i) {
        Draw d = draw(rng, 3);
        const CoherenceProfile prof = oracle::synth_profile(rng, std::vector<bool>(d.n - 1, true), d.kd);
        const BoundReport r = thm3_bound(prof, per_index_from_kd(d.alpha, d.kd));
        ASSERT_TRUE(r.verdict.applicable);
        expect_close(r.rhs, oracle::thm3_rhs(prof.singles, prof.tails, d.alpha, d.kd), "thm3");
    }
}

TEST(Transcription, Thm4) {
    std::mt19937_64 rng(505);
    for (int i = 0; i < 100; ++i) {
        Draw d = draw(rng, 3);
        const int m = 1 + i % (d.n - 2);
        std::vector<bool> pattern(d.n - 1, false);
        for (int j = 0; j < m; ++j) pattern[j] = true;
        const CoherenceProfile prof = oracle::synth_profile(rng, pattern, d.kd);
        BoundParams p = per_index_from_kd(d.alpha, d.kd);
        p.m = m;
        const BoundReport r = thm4_bound(prof, p);
        ASSERT_TRUE(r.verdict.applicable);
        expect_close(r.rhs, oracle::thm4_rhs(prof.singles, prof.tails, d.alpha, d.kd, m), "thm4");
    }
}

TEST(Transcription, Thm4CollapsesToThm2Transcription) {
    const std::vector<double> c{1.0, 0.1, 0.3}, t{0.43, 0.3}, kd{0.8, 0.8};
    expect_close(oracle::thm4_rhs(c, t, 2.0, kd, 1), oracle::thm2_rhs(c, t, 2.0, 0.8, 1), "thm4 vs thm2");
    EXPECT_NEAR(oracle::thm2_rhs(c, t, 2.0, 0.8, 1), 1.750625, 1e-12);
}

TEST(Transcription, RefSchemes) {
    std::mt19937_64 rng(606);
    for (int i = 0; i < 100; ++i) {
        Draw d = draw(rng, 3);
        const double kd = d.kd[0];
        const int m = 1 + i % (d.n - 1);
        std::vector<bool> pattern(d.n - 1, false);
        for (int j = 0; j < m; ++j) pattern[j] = true;
        const CoherenceProfile prof = oracle::synth_profile(rng, pattern, std::vector<double>(d.n - 1, kd));
        BoundParams p;
        p.alpha = d.alpha;
        p.k_mode = GlobalK{kd};
        p.m = m;
        const BoundReport r31 = ref_scheme_bound(prof, p, BoundId::Ref31);
        ASSERT_TRUE(r31.verdict.applicable);
        expect_close(r31.rhs, oracle::ref_split_rhs(prof.singles, d.alpha, oracle::lambda_direct(kd, d.alpha), m),
                     "ref31");
        const BoundReport r30 = ref_scheme_bound(prof, p, BoundId::Ref30);
        ASSERT_TRUE(r30.verdict.applicable);
        expect_close(r30.rhs, oracle::ref_split_rhs(prof.singles, d.alpha, oracle::lambda_direct(kd, d.alpha), m),
                     "ref30");
    }
}

TEST(Transcription, RefHybrid) {
    std::mt19937_64 rng(707);
    for (int i = 0; i < 100; ++i) {
        Draw d = draw(rng, 3);
        const std::vector<double> kd{d.kd[0], d.kd[1]};
        const CoherenceProfile prof = oracle::synth_profile(rng, {false, true}, kd);
        const BoundReport r = ref_scheme_bound(prof, per_index_from_kd(d.alpha, kd), BoundId::Ref31);
        ASSERT_TRUE(r.verdict.applicable);
        ASSERT_FALSE(r.params.m.has_value());
        expect_close(r.rhs,
                     oracle::ref_hybrid_rhs(prof.singles[0], prof.singles[1], prof.singles[2], d.alpha,
                                            oracle::lambda_direct(kd[0], d.alpha),
                                            oracle::lambda_direct(kd[1], d.alpha)),
                     "hybrid");
    }
}

TEST(Transcription, Example1PrintedComparator) {
    EXPECT_NEAR(oracle::ref_hybrid_rhs(1.0, 0.8, 0.6, 2.0, 2.2761 / 0.6561, 2.2761 / 0.6561), 5.3580246913580, 1e-12);
    EXPECT_NEAR(oracle::cor1_rhs(1.0, 0.8, 0.6, 1.88, 2.0, 0.81, 0.81), 5.182658, 1e-5);
}

TEST(SynthProfile, SatisfiesRequestedPattern) {
    std::mt19937_64 rng(9);
    const std::vector<bool> pattern{true, false, true};
    const std::vector<double> kd{0.5, 0.6, 0.7};
    for (int i = 0; i < 50; ++i) {
        const CoherenceProfile p = oracle::synth_profile(rng, pattern, kd);
        EXPECT_NEAR(p.total, 2.0, 1e-15);
        for (std::size_t s = 0; s < pattern.size(); ++s) {
            if (pattern[s]) {
                EXPECT_GE(kd[s] * p.singles[s], p.tails[s] - 1e-12);
            } else {
                EXPECT_LE(p.singles[s], kd[s] * p.tails[s] + 1e-12);
            }
        }
    }
}

TEST(VerifySummaryTest, RecordAndMergeAssociative) {
    auto make = [](double a, double b) {
        oracle::VerifySummary s(1e-9);
        s.record("x", a, nullptr);
        s.record("y", b, [] { return std::string("where"); });
        return s;
    };
    const auto a = make(0.5, -1.0), b = make(-0.2, 0.1), c = make(0.0, 2.0);
    oracle::VerifySummary left(1e-9), right(1e-9), bc(1e-9);
    left.merge(a);
    left.merge(b);
    left.merge(c);
    bc.merge(b);
    bc.merge(c);
    right.merge(a);
    right.merge(bc);
    EXPECT_EQ(oracle::to_json(left).dump(), oracle::to_json(right).dump());
    EXPECT_EQ(left.checks_run, 6);
    EXPECT_EQ(left.violation_count, 2);
    EXPECT_EQ(left.worst_slack, -1.0);
    EXPECT_EQ(left.worst_by_check.at("x"), -0.2);
    EXPECT_FALSE(left.passed());
    EXPECT_EQ(left.violations[0].inputs, "where");
}

TEST(VerifySummaryTest, StoredViolationsCapped) {
    oracle::VerifySummary s(0.0);
    for (int i = 0; i < 200; ++i) s.record("bad", -1.0, nullptr);
    EXPECT_EQ(s.violation_count, 200);
    EXPECT_EQ(s.violations.size(), oracle::VerifySummary::kMaxStored);
}

TEST(SuperadditivityFuzz, ZeroViolations) {
    for (int n : {2, 3, 4}) {
        oracle::FuzzConfig cfg;
        cfg.n_states = 300;
        cfg.n_qubits = n;
        const auto s = oracle::superadditivity_fuzz(cfg);
        EXPECT_TRUE(s.passed()) << oracle::to_json(s).dump();
        EXPECT_EQ(s.checks_run, 300 * n + 2);
        EXPECT_FALSE(s.degenerate);
    }
}

TEST(SuperadditivityFuzz, SingleQubitIsDegenerate) {
    oracle::FuzzConfig cfg;
    cfg.n_qubits = 1;
    const auto s = oracle::superadditivity_fuzz(cfg);
    EXPECT_TRUE(s.degenerate);
    EXPECT_EQ(s.checks_run, 0);
    EXPECT_TRUE(s.passed());
}

TEST(SuperadditivityFuzz, BellPinned) {
    const auto s = oracle::check_superadditivity(bell_state(), 1e-9, "bell");
    EXPECT_EQ(s.checks_run, 2);
    EXPECT_NEAR(s.worst_slack, 1.0, 1e-12);
}

TEST(SuperadditivityFuzz, Deterministic) {
    oracle::FuzzConfig cfg;
    cfg.n_states = 200;
    EXPECT_EQ(oracle::to_json(oracle::superadditivity_fuzz(cfg)).dump(),
              oracle::to_json(oracle::superadditivity_fuzz(cfg)).dump());
}

TEST(BoundValidityFuzz, ZeroViolationsWithApplicability) {
    oracle::FuzzConfig cfg;
    cfg.n_states = 200;
    cfg.n_qubits = 3;
    const auto s = oracle::bound_validity_fuzz(cfg);
    EXPECT_TRUE(s.passed()) << oracle::to_json(s).dump();
    for (BoundId id : kAllBounds) {
        const auto& tally = s.applicability.at(std::string(bound_name(id)));
        EXPECT_GT(tally.second, 0);
        EXPECT_GT(tally.first, 0) << bound_name(id);
    }
    EXPECT_EQ(s.applicability.at("Baseline4").first, s.applicability.at("Baseline4").second);
}

TEST(BoundValidityFuzz, ZeroQubitStateGoesThroughRemark) {
    // index 2 of the cycle is |0> on one qubit times a Haar state
    bool saw_drop = false;
    for (int i = 2; i < 200; i += 4) {
        const PureState psi = oracle::bound_fuzz_state(3, 7, i);
        const auto s = oracle::check_bound_validity(psi, kAllBounds, std::vector<double>{2.0, 3.0}, 1e-9, "zero");
        EXPECT_TRUE(s.passed());
        const SubsetCoherences table(psi);
        std::vector<int> ord = identity_ordering(3);
        do {
            const CoherenceProfile prof = table.profile(ord);
            const auto p = tightest_params(prof, BoundId::Thm1, 2.0);
            if (p && !evaluate_bound(BoundId::Thm1, prof, *p).dropped.empty()) saw_drop = true;
        } while (std::next_permutation(ord.begin(), ord.end()));
    }
    EXPECT_TRUE(saw_drop);
}

TEST(BoundValidityFuzz, Deterministic) {
    oracle::FuzzConfig cfg;
    cfg.n_states = 40;
    cfg.n_qubits = 4;
    EXPECT_EQ(oracle::to_json(oracle::bound_validity_fuzz(cfg)).dump(),
              oracle::to_json(oracle::bound_validity_fuzz(cfg)).dump());
}

TEST(LemmaGrid, DefaultPasses) {
    const auto s = oracle::lemma_grid_verify();
    EXPECT_TRUE(s.passed()) << oracle::to_json(s).dump();
    for (const char* check : {"lemma1", "lemma2", "ref_inequality", "dominance"}) {
        EXPECT_GE(s.worst_by_check.at(check), -1e-12) << check;
    }
    EXPECT_EQ(s.worst_by_check.at("lemma2_zero"), 0.0);
    EXPECT_GE(s.worst_by_check.at("lemma2_saturation"), -1e-12);
    EXPECT_GE(s.checks_run, 4 * 10000);
}

TEST(FuzzConfigTest, Validation) {
    oracle::FuzzConfig cfg;
    cfg.n_states = -1;
    EXPECT_THROW(oracle::superadditivity_fuzz(cfg), Error);
    cfg.n_states = 1;
    cfg.n_qubits = 1;
    EXPECT_THROW(oracle::bound_validity_fuzz(cfg), Error);
    cfg.n_qubits = 3;
    cfg.alphas = {1.5};
    EXPECT_THROW(oracle::bound_validity_fuzz(cfg), Error);
}
