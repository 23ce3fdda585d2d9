#pragma once

#include <string>

#include "holevo/states.hpp"

namespace holevo {

// JSON forms of the state types, matching the scenario conventions:
// complex numbers as [re, im], matrices as row-major nested arrays.
// Construction on the from_json side revalidates every invariant.

std::string pure_state_to_json(const PureState& s);
PureState pure_state_from_json(const std::string& text);

std::string density_to_json(const DensityMatrix& rho);
DensityMatrix density_from_json(const std::string& text);

std::string ensemble_to_json(const Ensemble& e);
Ensemble ensemble_from_json(const std::string& text);

std::string povm_to_json(const POVM& m);
POVM povm_from_json(const std::string& text);

}  // namespace holevo
