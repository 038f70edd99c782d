#pragma once

#include <cmath>
#include <string>

#include "l1coh/qstate.hpp"

#ifndef L1COH_DATA_DIR
#define L1COH_DATA_DIR "data"
#endif

namespace l1coh::testing {

inline std::string data_path(const std::string& name) { return std::string(L1COH_DATA_DIR) + "/states/" + name; }

inline PureState plus_state() {
    const double r = 1.0 / std::sqrt(2.0);
    return make_pure({r, r});
}

inline PureState example1_state() {
    const double r2 = 1.0 / std::sqrt(2.0), r5 = 1.0 / std::sqrt(5.0), r10 = 1.0 / std::sqrt(10.0);
    return tensor(tensor(make_pure({r2, r2}), make_pure({r5, 2.0 * r5})), make_pure({r10, 3.0 * r10}));
}

inline PureState example2_state(double phi = 0.0) {
    SchmidtSpec spec;
    spec.lambda.fill(1.0 / std::sqrt(5.0));
    spec.phi = phi;
    return schmidt_state(spec);
}

// Real single-qubit state with l1 coherence c in [0, 1].
inline PureState qubit_with_coherence(double c) {
    return make_pure({(std::sqrt(1.0 + c) + std::sqrt(1.0 - c)) / 2.0, (std::sqrt(1.0 + c) - std::sqrt(1.0 - c)) / 2.0});
}

inline PureState bell_state() {
    const double r = 1.0 / std::sqrt(2.0);
    return make_pure({r, 0.0, 0.0, r});
}

} // namespace l1coh::testing
