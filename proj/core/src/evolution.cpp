#include "holevo/evolution.hpp"

#include <cmath>

#include "holevo/errors.hpp"

namespace holevo {

MeasurementOutcomeModel evolve(const PureState& system, const DensityMatrix& apparatus,
                               const InteractionUnitary& u) {
    if (system.dim() != u.d_sys() || apparatus.dim() != u.d_app()) {
        throw ValidationError("dimension mismatch between states and interaction");
    }
    if (u.max_block_unitarity_defect() > 1e-8) throw NumericalError("non-unitary interaction block");

    // Full joint evolution U (|psi><psi| (x) rho) U^dagger, then trace out
    // the system.
    const ComplexMatrix joint_in = tensor_product(system.projector(), apparatus.matrix());
    const ComplexMatrix full = u.full_matrix();
    const ComplexMatrix joint_out = full * joint_in * full.dagger();
    DensityMatrix post(partial_trace_system(joint_out, u.d_sys(), u.d_app()));

    MeasurementOutcomeModel model{system.probabilities(), {}, std::move(post)};
    model.conditional_states.reserve(u.d_sys());
    for (std::size_t i = 0; i < u.d_sys(); ++i) {
        model.conditional_states.emplace_back(u.block(i) * apparatus.matrix() * u.block(i).dagger());
    }

    // The system off-diagonal blocks drop under the partial trace, so the
    // reduced state must equal the prior-weighted mixture of conditionals.
    ComplexMatrix mixture(u.d_app(), u.d_app());
    for (std::size_t i = 0; i < u.d_sys(); ++i) {
        mixture += Complex{model.prior[i], 0.0} * model.conditional_states[i].matrix();
    }
    if (max_abs_diff(mixture, model.post_state.matrix()) > 1e-10) {
        throw NumericalError("post-interaction state does not match conditional mixture");
    }
    return model;
}

Ensemble outcome_ensemble(const MeasurementOutcomeModel& model) {
    std::vector<EnsembleEntry> entries;
    entries.reserve(model.prior.size());
    for (std::size_t i = 0; i < model.prior.size(); ++i) {
        entries.push_back({model.prior[i], model.conditional_states[i]});
    }
    return Ensemble(std::move(entries));
}

}  // namespace holevo
