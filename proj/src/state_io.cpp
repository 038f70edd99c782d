#include "l1coh/state_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "l1coh/error.hpp"

namespace l1coh {

using nlohmann::json;

namespace {

Complex parse_complex(const json& v, const std::string& where) {
    if (v.is_number()) return {v.get<double>(), 0.0};
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
        return {v[0].get<double>(), v[1].get<double>()};
    }
    throw Error(ErrorCode::ParseError, where + ": expected [re, im] or a real number");
}

const json& field(const json& obj, const char* name) {
    if (!obj.contains(name)) throw Error(ErrorCode::ParseError, std::string("missing field \"") + name + "\"");
    return obj.at(name);
}

void check_declared_qubits(const json& obj, int actual) {
    if (obj.contains("n_qubits")) {
        const json& n = obj.at("n_qubits");
        if (!n.is_number_integer() || n.get<int>() != actual) {
            throw Error(ErrorCode::ParseError,
                        "n_qubits does not match the data (data has " + std::to_string(actual) + " qubits)");
        }
    }
}

PureState parse_pure_kind(const json& obj);

PureState parse_product(const json& obj) {
    const json& factors = field(obj, "factors");
    if (!factors.is_array() || factors.empty()) throw Error(ErrorCode::ParseError, "factors must be a non-empty array");
    std::optional<PureState> acc;
    for (const auto& f : factors) {
        PureState factor = parse_pure_kind(f);
        acc = acc ? tensor(*acc, factor) : factor;
    }
    check_declared_qubits(obj, acc->n_qubits());
    return *acc;
}

SchmidtSpec parse_schmidt(const json& obj) {
    const json& lam = field(obj, "lambda");
    if (!lam.is_array() || lam.size() != 5) throw Error(ErrorCode::ParseError, "lambda must hold 5 numbers");
    SchmidtSpec spec;
    for (std::size_t i = 0; i < 5; ++i) {
        if (!lam[i].is_number()) throw Error(ErrorCode::ParseError, "lambda entries must be numbers");
        spec.lambda[i] = lam[i].get<double>();
    }
    if (obj.contains("phi")) {
        if (!obj.at("phi").is_number()) throw Error(ErrorCode::ParseError, "phi must be a number");
        spec.phi = obj.at("phi").get<double>();
    }
    return spec;
}

PureState parse_pure_kind(const json& obj) {
    if (!obj.is_object()) throw Error(ErrorCode::ParseError, "state spec must be an object");
    const std::string kind = field(obj, "kind").get<std::string>();
    if (kind == "pure") {
        const json& amps = field(obj, "amplitudes");
        if (!amps.is_array()) throw Error(ErrorCode::ParseError, "amplitudes must be an array");
        std::vector<Complex> v;
        for (std::size_t i = 0; i < amps.size(); ++i) v.push_back(parse_complex(amps[i], "amplitude " + std::to_string(i)));
        PureState psi = make_pure(std::move(v));
        check_declared_qubits(obj, psi.n_qubits());
        return psi;
    }
    if (kind == "schmidt3") {
        PureState psi = schmidt_state(parse_schmidt(obj));
        check_declared_qubits(obj, 3);
        return psi;
    }
    if (kind == "product") return parse_product(obj);
    throw Error(ErrorCode::ParseError, "kind \"" + kind + "\" does not describe a pure state");
}

DensityMatrix parse_density(const json& obj) {
    const json& rows = field(obj, "entries");
    if (!rows.is_array() || rows.empty()) throw Error(ErrorCode::ParseError, "entries must be a non-empty array");
    const std::size_t dim = rows.size();
    std::vector<Complex> entries;
    entries.reserve(dim * dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (!rows[i].is_array() || rows[i].size() != dim) {
            throw Error(ErrorCode::ParseError, "entries must be a square matrix");
        }
        for (std::size_t j = 0; j < dim; ++j) {
            entries.push_back(parse_complex(rows[i][j], "entry (" + std::to_string(i) + "," + std::to_string(j) + ")"));
        }
    }
    int n = 0;
    while ((std::size_t{1} << n) < dim) ++n;
    if ((std::size_t{1} << n) != dim || n == 0) {
        throw Error(ErrorCode::NonPowerOfTwoLength, "matrix dimension " + std::to_string(dim) + " is not a power of two >= 2");
    }
    check_declared_qubits(obj, n);
    return DensityMatrix::from_entries(n, std::move(entries));
}

std::variant<PureState, DensityMatrix> parse_any(const json& doc, const std::string& kind) {
    if (kind == "density") return parse_density(doc);
    return parse_pure_kind(doc);
}

} // namespace

int LoadedState::n_qubits() const {
    return std::visit([](const auto& s) { return s.n_qubits(); }, state);
}

DensityMatrix LoadedState::density() const {
    if (const auto* psi = std::get_if<PureState>(&state)) return density_of(*psi);
    return std::get<DensityMatrix>(state);
}

LoadedState parse_state(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
    try {
        if (!doc.is_object()) throw Error(ErrorCode::ParseError, "top level must be an object");
        const std::string kind = field(doc, "kind").get<std::string>();
        LoadedState out{parse_any(doc, kind), kind, std::nullopt};
        if (kind == "schmidt3") out.schmidt = parse_schmidt(doc);
        return out;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

LoadedState load_state_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_state(buf.str());
}

std::string pure_state_json(const PureState& psi) {
    json amps = json::array();
    for (const auto& a : psi.amplitudes()) amps.push_back({a.real(), a.imag()});
    json doc = {{"n_qubits", psi.n_qubits()}, {"kind", "pure"}, {"amplitudes", amps}};
    return doc.dump();
}

} // namespace l1coh
