#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace l1coh {

using Complex = std::complex<double>;

// Basis index convention used throughout: qubit q of an n-qubit register is
// bit (n - 1 - q) of the basis index, so qubit 0 is the leftmost tensor factor.
inline constexpr std::size_t qubit_bit(int n_qubits, int q) {
    return std::size_t{1} << (n_qubits - 1 - q);
}

// Strictly increasing set of qubit positions of an n-qubit register.
class QubitSubset {
public:
    // Sorts the input; rejects empty, duplicate and out-of-range indices.
    static QubitSubset of(std::vector<int> indices, int n_qubits);
    static QubitSubset all(int n_qubits);
    // Positions [first, last) of the register.
    static QubitSubset range(int first, int last, int n_qubits);

    std::span<const int> indices() const { return indices_; }
    int size() const { return static_cast<int>(indices_.size()); }
    int n_qubits() const { return n_qubits_; }
    bool contains(int q) const;
    QubitSubset complement() const; // may be empty; only used internally

private:
    QubitSubset(std::vector<int> idx, int n) : indices_(std::move(idx)), n_qubits_(n) {}
    std::vector<int> indices_;
    int n_qubits_ = 0;
};

class PureState {
public:
    int n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return amplitudes_.size(); }
    std::span<const Complex> amplitudes() const { return amplitudes_; }
    const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }

private:
    friend PureState make_pure(std::vector<Complex> amplitudes);
    friend PureState tensor(const PureState& a, const PureState& b);
    PureState(int n, std::vector<Complex> amps) : n_qubits_(n), amplitudes_(std::move(amps)) {}

    int n_qubits_ = 0;
    std::vector<Complex> amplitudes_;
};

// Hermitian, unit-trace, non-negative-diagonal matrix over a qubit register,
// stored dense row-major.
class DensityMatrix {
public:
    // Validates all structural invariants against config().structural_tol.
    static DensityMatrix from_entries(int n_qubits, std::vector<Complex> entries);

    int n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return dim_; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
    std::span<const Complex> entries() const { return entries_; }

    double trace() const;
    double purity() const; // trace(rho^2)

private:
    DensityMatrix(int n, std::vector<Complex> e);

    int n_qubits_ = 0;
    std::size_t dim_ = 0;
    std::vector<Complex> entries_;
};

struct SchmidtSpec {
    std::array<double, 5> lambda{};
    double phi = 0.0;
};

PureState make_pure(std::vector<Complex> amplitudes);
DensityMatrix density_of(const PureState& state);

PureState tensor(const PureState& a, const PureState& b);
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

DensityMatrix partial_trace(const DensityMatrix& rho, const QubitSubset& keep);
// Reduced state of a pure state, computed without forming the full projector.
DensityMatrix reduced_density(const PureState& state, const QubitSubset& keep);

// lambda0|000> + lambda1 e^{i phi}|100> + lambda2|101> + lambda3|110> + lambda4|111>
PureState schmidt_state(const SchmidtSpec& spec);

// Haar-random pure state from normalized i.i.d. complex Gaussian amplitudes.
PureState random_pure(int n_qubits, std::uint64_t seed);

} // namespace l1coh
