#pragma once

#include <cstdint>
#include <vector>

#include "holevo/states.hpp"

namespace holevo {

// All information quantities are in bits (log base 2), with 0 log 0 = 0.

double shannon_entropy(const std::vector<double>& p, double tol = 1e-10);

double von_neumann_entropy(const DensityMatrix& rho);

// chi = S(sum_x p_x rho_x) - sum_x p_x S(rho_x): the upper bound on the
// information any measurement can extract from the ensemble.
double holevo_chi(const Ensemble& e);

// Classical mutual information of the joint distribution
// p(x,y) = p_x tr(E_y rho_x).
double mutual_information(const Ensemble& e, const POVM& m);

struct BoundCertificate {
    double chi_bits;
    double mutual_information_bits;
    double slack_bits;  // chi - I; nonnegative up to rounding for any valid POVM
    double max_pairwise_commutator;
    bool saturated;  // slack <= tol
};

BoundCertificate certify_bound(const Ensemble& e, const POVM& m, double tol);

// The measurement that meets the bound when the ensemble commutes:
// projectors onto a simultaneous eigenbasis. Throws ValidationError
// ("ensemble does not commute") when the max pairwise commutator exceeds
// tol.
POVM common_eigenbasis_povm(const Ensemble& e, double tol);

struct SearchResult {
    POVM best_povm;
    double best_info_bits;
};

// Heuristic maximization of mutual information over rank-1 projective
// measurements: seeded random bases refined by coordinate ascent over
// two-column rotations, plus the simultaneous-eigenbasis candidate when the
// ensemble commutes. Deterministic per (ensemble, restarts, seed); no
// optimality claim for non-commuting ensembles.
SearchResult accessible_information_search(const Ensemble& e, std::size_t restarts, std::uint64_t seed);

}  // namespace holevo
