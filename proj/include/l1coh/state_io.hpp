#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <variant>

#include "l1coh/qstate.hpp"

namespace l1coh {

// A state as read from a state file: pure kinds (pure, schmidt3, product)
// stay as amplitude vectors, "density" stays a matrix.
struct LoadedState {
    std::variant<PureState, DensityMatrix> state;
    std::string kind;
    std::optional<SchmidtSpec> schmidt; // set for kind == "schmidt3"

    int n_qubits() const;
    DensityMatrix density() const;
    const PureState* pure() const { return std::get_if<PureState>(&state); }
};

// Parses the JSON state format:
//   {"n_qubits": n, "kind": "pure", "amplitudes": [[re, im], ...]}
//   {"n_qubits": n, "kind": "density", "entries": [[[re, im], ...], ...]}
//   {"kind": "schmidt3", "lambda": [l0, l1, l2, l3, l4], "phi": 0.0}
//   {"kind": "product", "factors": [<pure, schmidt3 or product spec>, ...]}
// Throws Error(ParseError) on malformed JSON/shape, or the validation error
// of the state itself.
LoadedState parse_state(const std::string& json_text);
LoadedState load_state_file(const std::filesystem::path& path);

std::string pure_state_json(const PureState& psi);

} // namespace l1coh
