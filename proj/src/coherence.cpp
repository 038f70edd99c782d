#include "l1coh/coherence.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <type_traits>

#include "l1coh/error.hpp"

namespace l1coh {

namespace {

QubitSubset subset_of_mask(std::uint32_t mask, int n) {
    std::vector<int> idx;
    for (int q = 0; q < n; ++q) {
        if (mask & (1U << q)) idx.push_back(q);
    }
    return QubitSubset::of(std::move(idx), n);
}

std::uint32_t mask_of_positions(std::span<const int> ordering, std::size_t first) {
    std::uint32_t mask = 0;
    for (std::size_t p = first; p < ordering.size(); ++p) mask |= 1U << ordering[p];
    return mask;
}

template <typename State>
CoherenceProfile profile_impl(const State& state, std::span<const int> ordering) {
    const int n = state.n_qubits();
    check_permutation(ordering, n);
    CoherenceProfile prof;
    prof.ordering.assign(ordering.begin(), ordering.end());
    for (int p = 0; p < n; ++p) {
        auto keep = QubitSubset::of({ordering[p]}, n);
        if constexpr (std::is_same_v<State, PureState>) {
            prof.singles.push_back(l1_coherence(reduced_density(state, keep)));
        } else {
            prof.singles.push_back(l1_coherence(partial_trace(state, keep)));
        }
    }
    for (int p = 0; p + 1 < n; ++p) {
        if (p + 2 == n) {
            prof.tails.push_back(prof.singles.back());
            continue;
        }
        std::vector<int> rest(ordering.begin() + p + 1, ordering.end());
        auto keep = QubitSubset::of(std::move(rest), n);
        if constexpr (std::is_same_v<State, PureState>) {
            prof.tails.push_back(l1_coherence(reduced_density(state, keep)));
        } else {
            prof.tails.push_back(l1_coherence(partial_trace(state, keep)));
        }
    }
    prof.total = l1_coherence(state);
    return prof;
}

} // namespace

double l1_coherence(const DensityMatrix& rho) {
    const std::size_t d = rho.dim();
    double sum = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) sum += std::abs(rho(i, j)) + std::abs(rho(j, i));
    }
    return sum;
}

double l1_coherence(const PureState& psi) {
    double l1 = 0.0;
    double l2 = 0.0;
    for (const auto& a : psi.amplitudes()) {
        l1 += std::abs(a);
        l2 += std::norm(a);
    }
    return std::max(0.0, l1 * l1 - l2);
}

CoherenceProfile CoherenceProfile::from_values(std::vector<double> singles, std::vector<double> tails, double total) {
    const std::size_t n = singles.size();
    if (n == 0) throw Error(ErrorCode::ArityMismatch, "profile needs at least one single-qubit coherence");
    if (tails.size() + 1 != n) {
        throw Error(ErrorCode::ArityMismatch,
                    std::to_string(n) + " singles need " + std::to_string(n - 1) + " tails, got " +
                        std::to_string(tails.size()));
    }
    auto bad = [](double v) { return !std::isfinite(v) || v < 0.0; };
    if (std::any_of(singles.begin(), singles.end(), bad) || std::any_of(tails.begin(), tails.end(), bad) ||
        bad(total)) {
        throw Error(ErrorCode::DomainError, "coherence values must be finite and non-negative");
    }
    if (n >= 2 && tails.back() != singles.back()) {
        throw Error(ErrorCode::DomainError, "last tail must equal last single");
    }
    CoherenceProfile prof;
    prof.ordering = identity_ordering(static_cast<int>(n));
    prof.singles = std::move(singles);
    prof.tails = std::move(tails);
    prof.total = total;
    return prof;
}

std::vector<int> identity_ordering(int n) {
    std::vector<int> ord(static_cast<std::size_t>(n));
    std::iota(ord.begin(), ord.end(), 0);
    return ord;
}

void check_permutation(std::span<const int> ordering, int n) {
    if (static_cast<int>(ordering.size()) != n) {
        throw Error(ErrorCode::InvalidPermutation,
                    "ordering has " + std::to_string(ordering.size()) + " entries for " + std::to_string(n) + " qubits");
    }
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int q : ordering) {
        if (q < 0 || q >= n || seen[static_cast<std::size_t>(q)]) {
            throw Error(ErrorCode::InvalidPermutation, "ordering is not a permutation of [0, " + std::to_string(n) + ")");
        }
        seen[static_cast<std::size_t>(q)] = true;
    }
}

CoherenceProfile profile(const DensityMatrix& rho, std::span<const int> ordering) {
    return profile_impl(rho, ordering);
}

CoherenceProfile profile(const PureState& psi, std::span<const int> ordering) { return profile_impl(psi, ordering); }

double product_coherence_check(std::span<const DensityMatrix> factors) {
    double prod = 1.0;
    for (const auto& f : factors) prod *= 1.0 + l1_coherence(f);
    return prod - 1.0;
}

SubsetCoherences::SubsetCoherences(const DensityMatrix& rho) : n_qubits_(rho.n_qubits()) {
    const std::uint32_t full = (1U << n_qubits_) - 1U;
    table_.assign(full + 1U, 0.0);
    for (std::uint32_t mask = 1; mask < full; ++mask) {
        table_[mask] = l1_coherence(partial_trace(rho, subset_of_mask(mask, n_qubits_)));
    }
    table_[full] = l1_coherence(rho);
}

SubsetCoherences::SubsetCoherences(const PureState& psi) : n_qubits_(psi.n_qubits()) {
    const std::uint32_t full = (1U << n_qubits_) - 1U;
    table_.assign(full + 1U, 0.0);
    for (std::uint32_t mask = 1; mask < full; ++mask) {
        table_[mask] = l1_coherence(reduced_density(psi, subset_of_mask(mask, n_qubits_)));
    }
    table_[full] = l1_coherence(psi);
}

CoherenceProfile SubsetCoherences::profile(std::span<const int> ordering) const {
    check_permutation(ordering, n_qubits_);
    CoherenceProfile prof;
    prof.ordering.assign(ordering.begin(), ordering.end());
    for (int q : ordering) prof.singles.push_back(table_[1U << q]);
    for (std::size_t p = 0; p + 1 < ordering.size(); ++p) prof.tails.push_back(table_[mask_of_positions(ordering, p + 1)]);
    prof.total = total();
    return prof;
}

} // namespace l1coh
