#pragma once

namespace l1coh {

// Process-wide numeric knobs. Set once at startup (before any concurrent
// work); every module reads the same instance.
struct Config {
    double structural_tol = 1e-10;    // Hermiticity, trace, diagonal sign
    double input_norm_tol = 1e-6;     // renormalize inputs closer than this to unit norm
    double condition_slack = 1e-9;    // applicability comparisons in bounds
    double zero_coherence = 1e-12;    // coherence treated as exactly zero
    double scalar_slack = 1e-12;      // verdict threshold of the scalar kernels
    int max_pure_qubits = 14;
    int max_density_qubits = 10;
};

const Config& config();
void set_config(const Config& cfg);

} // namespace l1coh
