#include "l1coh/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "l1coh/config.hpp"
#include "l1coh/error.hpp"

namespace l1coh {

namespace {

std::string fmt_num(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

bool is_power_of_two(std::size_t n) { return n >= 2 && (n & (n - 1)) == 0; }

int log2_exact(std::size_t n) {
    int bits = 0;
    while ((std::size_t{1} << bits) < n) ++bits;
    return bits;
}

void check_density_cap(int n_qubits) {
    if (n_qubits > config().max_density_qubits) {
        throw Error(ErrorCode::DimensionOverflow,
                    std::to_string(n_qubits) + " qubits exceeds the density-matrix cap of " +
                        std::to_string(config().max_density_qubits));
    }
}

// offsets[k] is the contribution of sub-index k (over the qubits of `subset`,
// most significant first) to a full register index.
std::vector<std::size_t> scatter_offsets(std::span<const int> subset, int n_qubits) {
    const std::size_t count = std::size_t{1} << subset.size();
    const int width = static_cast<int>(subset.size());
    std::vector<std::size_t> offsets(count, 0);
    for (std::size_t k = 0; k < count; ++k) {
        std::size_t full = 0;
        for (int r = 0; r < width; ++r) {
            if ((k >> (width - 1 - r)) & 1U) full |= qubit_bit(n_qubits, subset[r]);
        }
        offsets[k] = full;
    }
    return offsets;
}

} // namespace

QubitSubset QubitSubset::of(std::vector<int> indices, int n_qubits) {
    if (indices.empty()) throw Error(ErrorCode::EmptyKeepSet, "qubit subset must be non-empty");
    std::sort(indices.begin(), indices.end());
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (indices[i] < 0 || indices[i] >= n_qubits) {
            throw Error(ErrorCode::IndexOutOfRange, "qubit " + std::to_string(indices[i]) +
                                                        " not in [0, " + std::to_string(n_qubits) + ")");
        }
        if (i > 0 && indices[i] == indices[i - 1]) {
            throw Error(ErrorCode::DuplicateIndex, "qubit " + std::to_string(indices[i]) + " listed twice");
        }
    }
    return QubitSubset(std::move(indices), n_qubits);
}

QubitSubset QubitSubset::all(int n_qubits) { return range(0, n_qubits, n_qubits); }

QubitSubset QubitSubset::range(int first, int last, int n_qubits) {
    std::vector<int> idx;
    for (int q = first; q < last; ++q) idx.push_back(q);
    return of(std::move(idx), n_qubits);
}

bool QubitSubset::contains(int q) const { return std::binary_search(indices_.begin(), indices_.end(), q); }

QubitSubset QubitSubset::complement() const {
    std::vector<int> rest;
    for (int q = 0; q < n_qubits_; ++q) {
        if (!contains(q)) rest.push_back(q);
    }
    return QubitSubset(std::move(rest), n_qubits_);
}

DensityMatrix::DensityMatrix(int n, std::vector<Complex> e)
    : n_qubits_(n), dim_(std::size_t{1} << n), entries_(std::move(e)) {}

DensityMatrix DensityMatrix::from_entries(int n_qubits, std::vector<Complex> entries) {
    if (n_qubits < 1) throw Error(ErrorCode::NonPowerOfTwoLength, "density matrix needs at least one qubit");
    check_density_cap(n_qubits);
    const std::size_t dim = std::size_t{1} << n_qubits;
    if (entries.size() != dim * dim) {
        throw Error(ErrorCode::NonPowerOfTwoLength, "expected " + std::to_string(dim * dim) + " entries, got " +
                                                        std::to_string(entries.size()));
    }
    const double tol = config().structural_tol;
    double tr = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            const Complex& v = entries[i * dim + j];
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
                throw Error(ErrorCode::NonFinite, "entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
            }
            if (j >= i && std::abs(v - std::conj(entries[j * dim + i])) > tol) {
                throw Error(ErrorCode::NotHermitian,
                            "entries (" + std::to_string(i) + "," + std::to_string(j) + ") and (" + std::to_string(j) +
                                "," + std::to_string(i) + ") are not conjugate");
            }
        }
        const Complex& d = entries[i * dim + i];
        if (std::abs(d.imag()) > tol || d.real() < -tol) {
            throw Error(ErrorCode::NegativeDiagonal, "diagonal entry " + std::to_string(i) + " = " +
                                                         fmt_num(d.real()) + (d.imag() >= 0 ? "+" : "") +
                                                         fmt_num(d.imag()) + "i");
        }
        tr += d.real();
    }
    if (std::abs(tr - 1.0) > tol) throw Error(ErrorCode::TraceNotOne, "trace = " + fmt_num(tr));
    return DensityMatrix(n_qubits, std::move(entries));
}

double DensityMatrix::trace() const {
    double tr = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) tr += (*this)(i, i).real();
    return tr;
}

double DensityMatrix::purity() const {
    // trace(rho^2) = sum_ij |rho_ij|^2 for Hermitian rho
    double p = 0.0;
    for (const auto& v : entries_) p += std::norm(v);
    return p;
}

PureState make_pure(std::vector<Complex> amplitudes) {
    if (!is_power_of_two(amplitudes.size())) {
        throw Error(ErrorCode::NonPowerOfTwoLength,
                    "amplitude count " + std::to_string(amplitudes.size()) + " is not a power of two >= 2");
    }
    const int n = log2_exact(amplitudes.size());
    if (n > config().max_pure_qubits) {
        throw Error(ErrorCode::DimensionOverflow, std::to_string(n) + " qubits exceeds the pure-state cap of " +
                                                      std::to_string(config().max_pure_qubits));
    }
    double norm_sq = 0.0;
    for (const auto& a : amplitudes) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) throw Error(ErrorCode::NonFinite, "amplitude");
        norm_sq += std::norm(a);
    }
    const double norm = std::sqrt(norm_sq);
    if (norm == 0.0) throw Error(ErrorCode::ZeroNorm, "all amplitudes are zero");
    if (std::abs(norm - 1.0) > config().input_norm_tol) {
        throw Error(ErrorCode::NormTooFarFromOne, "norm = " + fmt_num(norm));
    }
    for (auto& a : amplitudes) a /= norm;
    return PureState(n, std::move(amplitudes));
}

DensityMatrix density_of(const PureState& state) {
    check_density_cap(state.n_qubits());
    const std::size_t d = state.dim();
    std::vector<Complex> rho(d * d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) rho[i * d + j] = state[i] * std::conj(state[j]);
    }
    return DensityMatrix::from_entries(state.n_qubits(), std::move(rho));
}

PureState tensor(const PureState& a, const PureState& b) {
    const int n = a.n_qubits() + b.n_qubits();
    if (n > config().max_pure_qubits) {
        throw Error(ErrorCode::DimensionOverflow, std::to_string(n) + " qubits exceeds the pure-state cap of " +
                                                      std::to_string(config().max_pure_qubits));
    }
    std::vector<Complex> amps(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < b.dim(); ++j) amps[i * b.dim() + j] = a[i] * b[j];
    }
    return PureState(n, std::move(amps));
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
    const int n = a.n_qubits() + b.n_qubits();
    check_density_cap(n);
    const std::size_t da = a.dim();
    const std::size_t db = b.dim();
    const std::size_t d = da * db;
    std::vector<Complex> out(d * d);
    for (std::size_t i1 = 0; i1 < da; ++i1) {
        for (std::size_t j1 = 0; j1 < da; ++j1) {
            const Complex av = a(i1, j1);
            for (std::size_t i2 = 0; i2 < db; ++i2) {
                for (std::size_t j2 = 0; j2 < db; ++j2) {
                    out[(i1 * db + i2) * d + (j1 * db + j2)] = av * b(i2, j2);
                }
            }
        }
    }
    return DensityMatrix::from_entries(n, std::move(out));
}

DensityMatrix partial_trace(const DensityMatrix& rho, const QubitSubset& keep) {
    const int n = rho.n_qubits();
    if (keep.n_qubits() != n) {
        throw Error(ErrorCode::IndexOutOfRange, "subset is over " + std::to_string(keep.n_qubits()) +
                                                    " qubits, state has " + std::to_string(n));
    }
    const auto keep_off = scatter_offsets(keep.indices(), n);
    const QubitSubset env = keep.complement();
    const auto env_off = scatter_offsets(env.indices(), n);
    const std::size_t dk = keep_off.size();
    std::vector<Complex> out(dk * dk, Complex{});
    for (std::size_t i = 0; i < dk; ++i) {
        for (std::size_t j = 0; j < dk; ++j) {
            Complex acc{};
            for (std::size_t e : env_off) acc += rho(keep_off[i] | e, keep_off[j] | e);
            out[i * dk + j] = acc;
        }
    }
    return DensityMatrix::from_entries(keep.size(), std::move(out));
}

DensityMatrix reduced_density(const PureState& state, const QubitSubset& keep) {
    const int n = state.n_qubits();
    if (keep.n_qubits() != n) {
        throw Error(ErrorCode::IndexOutOfRange, "subset is over " + std::to_string(keep.n_qubits()) +
                                                    " qubits, state has " + std::to_string(n));
    }
    check_density_cap(keep.size());
    const auto keep_off = scatter_offsets(keep.indices(), n);
    const auto env_off = scatter_offsets(keep.complement().indices(), n);
    const std::size_t dk = keep_off.size();
    std::vector<Complex> out(dk * dk, Complex{});
    for (std::size_t i = 0; i < dk; ++i) {
        for (std::size_t j = i; j < dk; ++j) {
            Complex acc{};
            for (std::size_t e : env_off) acc += state[keep_off[i] | e] * std::conj(state[keep_off[j] | e]);
            out[i * dk + j] = acc;
            out[j * dk + i] = std::conj(acc);
        }
        out[i * dk + i] = Complex(out[i * dk + i].real(), 0.0);
    }
    return DensityMatrix::from_entries(keep.size(), std::move(out));
}

PureState schmidt_state(const SchmidtSpec& spec) {
    double norm_sq = 0.0;
    for (double l : spec.lambda) {
        if (!(l >= 0.0) || !std::isfinite(l)) {
            throw Error(ErrorCode::NormalizationViolation, "Schmidt coefficients must be finite and non-negative");
        }
        norm_sq += l * l;
    }
    if (std::abs(norm_sq - 1.0) > config().structural_tol) {
        throw Error(ErrorCode::NormalizationViolation, "sum of squared Schmidt coefficients = " + fmt_num(norm_sq));
    }
    if (!(spec.phi >= 0.0 && spec.phi < 2.0 * std::numbers::pi)) {
        throw Error(ErrorCode::DomainError, "phi = " + fmt_num(spec.phi) + " not in [0, 2pi)");
    }
    std::vector<Complex> amps(8, Complex{});
    amps[0b000] = spec.lambda[0];
    amps[0b100] = spec.lambda[1] * std::polar(1.0, spec.phi);
    amps[0b101] = spec.lambda[2];
    amps[0b110] = spec.lambda[3];
    amps[0b111] = spec.lambda[4];
    return make_pure(std::move(amps));
}

PureState random_pure(int n_qubits, std::uint64_t seed) {
    if (n_qubits < 1) throw Error(ErrorCode::DomainError, "need at least one qubit");
    if (n_qubits > config().max_pure_qubits) {
        throw Error(ErrorCode::DimensionOverflow, std::to_string(n_qubits) + " qubits exceeds the pure-state cap of " +
                                                      std::to_string(config().max_pure_qubits));
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<Complex> amps(std::size_t{1} << n_qubits);
    double norm_sq = 0.0;
    for (auto& a : amps) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        a = Complex(re, im);
        norm_sq += re * re + im * im;
    }
    const double norm = std::sqrt(norm_sq);
    for (auto& a : amps) a /= norm;
    return make_pure(std::move(amps));
}

} // namespace l1coh
