#include "holevo/serialize.hpp"

#include <nlohmann/json.hpp>

#include "holevo/errors.hpp"

namespace holevo {

namespace {

using nlohmann::json;

json complex_to_json(const Complex& c) { return json::array({c.real(), c.imag()}); }

Complex complex_from_json(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw ValidationError(std::string(what) + ": expected a complex number as [re, im]");
    }
    return Complex{j[0].get<double>(), j[1].get<double>()};
}

json matrix_to_json(const ComplexMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(complex_to_json(m(i, k)));
        rows.push_back(std::move(row));
    }
    return rows;
}

ComplexMatrix matrix_from_json(const json& j, const char* what) {
    if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty()) {
        throw ValidationError(std::string(what) + ": expected a non-empty matrix");
    }
    const std::size_t rows = j.size();
    const std::size_t cols = j[0].size();
    ComplexMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) {
            throw ValidationError(std::string(what) + ": ragged matrix row");
        }
        for (std::size_t k = 0; k < cols; ++k) m(i, k) = complex_from_json(j[i][k], what);
    }
    return m;
}

json parse_text(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& ex) {
        throw ValidationError(std::string(what) + ": " + ex.what());
    }
}

}  // namespace

std::string pure_state_to_json(const PureState& s) {
    json j;
    json amps = json::array();
    for (const Complex& c : s.amplitudes()) amps.push_back(complex_to_json(c));
    j["amplitudes"] = std::move(amps);
    return j.dump();
}

PureState pure_state_from_json(const std::string& text) {
    const json j = parse_text(text, "pure_state");
    if (!j.contains("amplitudes") || !j["amplitudes"].is_array()) {
        throw ValidationError("pure_state: missing amplitudes");
    }
    std::vector<Complex> amps;
    for (const auto& a : j["amplitudes"]) amps.push_back(complex_from_json(a, "pure_state"));
    return PureState(std::move(amps));
}

std::string density_to_json(const DensityMatrix& rho) {
    json j;
    j["matrix"] = matrix_to_json(rho.matrix());
    return j.dump();
}

DensityMatrix density_from_json(const std::string& text) {
    const json j = parse_text(text, "density");
    if (!j.contains("matrix")) throw ValidationError("density: missing matrix");
    return DensityMatrix(matrix_from_json(j["matrix"], "density"));
}

std::string ensemble_to_json(const Ensemble& e) {
    json entries = json::array();
    for (const auto& entry : e.entries()) {
        entries.push_back(
            {{"probability", entry.probability}, {"state", matrix_to_json(entry.state.matrix())}});
    }
    json j;
    j["entries"] = std::move(entries);
    return j.dump();
}

Ensemble ensemble_from_json(const std::string& text) {
    const json j = parse_text(text, "ensemble");
    if (!j.contains("entries") || !j["entries"].is_array()) {
        throw ValidationError("ensemble: missing entries");
    }
    std::vector<EnsembleEntry> entries;
    for (const auto& entry : j["entries"]) {
        if (!entry.contains("probability") || !entry["probability"].is_number() ||
            !entry.contains("state")) {
            throw ValidationError("ensemble: entry needs probability and state");
        }
        entries.push_back({entry["probability"].get<double>(),
                           DensityMatrix(matrix_from_json(entry["state"], "ensemble"))});
    }
    return Ensemble(std::move(entries));
}

std::string povm_to_json(const POVM& m) {
    json elements = json::array();
    for (const auto& e : m.elements()) elements.push_back(matrix_to_json(e));
    json j;
    j["elements"] = std::move(elements);
    return j.dump();
}

POVM povm_from_json(const std::string& text) {
    const json j = parse_text(text, "povm");
    if (!j.contains("elements") || !j["elements"].is_array()) {
        throw ValidationError("povm: missing elements");
    }
    std::vector<ComplexMatrix> elements;
    for (const auto& e : j["elements"]) elements.push_back(matrix_from_json(e, "povm"));
    return POVM(std::move(elements));
}

}  // namespace holevo
