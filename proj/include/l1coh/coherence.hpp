#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "l1coh/qstate.hpp"

namespace l1coh {

// Sum of moduli of all off-diagonal entries in the computational basis.
double l1_coherence(const DensityMatrix& rho);
// Same quantity for |psi><psi|: (sum_i |a_i|)^2 - sum_i |a_i|^2.
double l1_coherence(const PureState& psi);

// Coherences of one qubit ordering. Position p holds the qubit playing the
// role A_{p+1}; tails[p] is the coherence of positions p+1..N-1 together.
struct CoherenceProfile {
    std::vector<int> ordering;
    std::vector<double> singles;
    std::vector<double> tails; // N-1 entries, tails.back() == singles.back()
    double total = 0.0;

    int size() const { return static_cast<int>(singles.size()); }

    // Builds a profile from raw numbers (no state behind it). Ordering
    // defaults to the identity.
    static CoherenceProfile from_values(std::vector<double> singles, std::vector<double> tails, double total);
};

std::vector<int> identity_ordering(int n);
// Throws InvalidPermutation unless `ordering` is a permutation of [0, n).
void check_permutation(std::span<const int> ordering, int n);

CoherenceProfile profile(const DensityMatrix& rho, std::span<const int> ordering);
CoherenceProfile profile(const PureState& psi, std::span<const int> ordering);

// prod(1 + C(factor)) - 1, the total coherence of a product of the factors.
double product_coherence_check(std::span<const DensityMatrix> factors);

// Coherence of every reduced state of a register, indexed by a bitmask whose
// bit q selects qubit q. Built once, read-only afterwards.
class SubsetCoherences {
public:
    explicit SubsetCoherences(const DensityMatrix& rho);
    explicit SubsetCoherences(const PureState& psi);

    int n_qubits() const { return n_qubits_; }
    double of(std::uint32_t mask) const { return table_.at(mask); }
    double total() const { return table_.back(); }
    CoherenceProfile profile(std::span<const int> ordering) const;

private:
    int n_qubits_ = 0;
    std::vector<double> table_;
};

} // namespace l1coh
