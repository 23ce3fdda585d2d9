#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "holevo/complex_matrix.hpp"

namespace holevo {

class DensityMatrix;
class Ensemble;
class POVM;

// Self-contained seeded generator. One instance per call site, no global
// state; `fork` derives an independent substream so parallel sweeps stay
// reproducible regardless of execution order.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64() { return engine_(); }
    double uniform();                    // [0, 1)
    double uniform(double lo, double hi);
    double normal();                     // standard normal via Box-Muller
    std::uint64_t seed() const { return seed_; }

    Rng fork(std::uint64_t stream) const;

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

// Haar-distributed unitary: Ginibre matrix orthonormalized column by column.
ComplexMatrix random_unitary(std::size_t d, Rng& rng);

// Flat-Dirichlet probability vector (normalized exponentials).
std::vector<double> random_distribution(std::size_t n, Rng& rng);

std::vector<Complex> random_pure_amplitudes(std::size_t d, Rng& rng);

DensityMatrix random_density_matrix(std::size_t d, Rng& rng);

// Random n-outcome POVM: Ginibre blocks A_y A_y^dagger whitened by the
// inverse square root of their sum.
POVM random_povm(std::size_t d, std::size_t n_outcomes, Rng& rng);

Ensemble random_ensemble(std::size_t d, std::size_t n_states, Rng& rng);

}  // namespace holevo
