#pragma once

#include <vector>

#include "holevo/interactions.hpp"
#include "holevo/states.hpp"

namespace holevo {

// Outcome of coupling a system pure state to an apparatus mixed state:
// prior_i = |c_i|^2, conditional apparatus states rho_i = V_i rho V_i^dag,
// and the reduced post-interaction apparatus state. The reduced state
// always equals the prior-weighted mixture of the conditionals; evolve
// cross-checks that identity entrywise.
struct MeasurementOutcomeModel {
    std::vector<double> prior;
    std::vector<DensityMatrix> conditional_states;
    DensityMatrix post_state;
};

MeasurementOutcomeModel evolve(const PureState& system, const DensityMatrix& apparatus,
                               const InteractionUnitary& u);

// The {prior_i, rho_i} pairs as an Ensemble, ready for the information
// measures.
Ensemble outcome_ensemble(const MeasurementOutcomeModel& model);

}  // namespace holevo
