#include "holevo/random_gen.hpp"

#include <cmath>
#include <numbers>

#include "holevo/errors.hpp"
#include "holevo/hermitian_eig.hpp"
#include "holevo/states.hpp"

namespace holevo {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

Rng::Rng(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

double Rng::uniform() {
    // 53 significant bits, [0, 1)
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::normal() {
    // Box-Muller; drawn fresh each call so substreams stay stateless.
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Rng Rng::fork(std::uint64_t stream) const { return Rng(splitmix64(seed_ ^ splitmix64(stream + 1))); }

ComplexMatrix random_unitary(std::size_t d, Rng& rng) {
    if (d == 0) throw ValidationError("dimension must be positive");
    // Ginibre columns + modified Gram-Schmidt. The R factor has a positive
    // real diagonal, so the Q factor is Haar-distributed.
    ComplexMatrix g(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) g(i, j) = Complex{rng.normal(), rng.normal()};

    for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t prev = 0; prev < k; ++prev) {
            Complex proj{0.0, 0.0};
            for (std::size_t i = 0; i < d; ++i) proj += std::conj(g(i, prev)) * g(i, k);
            for (std::size_t i = 0; i < d; ++i) g(i, k) -= proj * g(i, prev);
        }
        double norm = 0.0;
        for (std::size_t i = 0; i < d; ++i) norm += std::norm(g(i, k));
        norm = std::sqrt(norm);
        if (norm < 1e-12) throw NumericalError("degenerate ginibre sample");
        for (std::size_t i = 0; i < d; ++i) g(i, k) /= norm;
    }
    return g;
}

std::vector<double> random_distribution(std::size_t n, Rng& rng) {
    std::vector<double> p(n);
    double sum = 0.0;
    for (double& v : p) {
        double u = rng.uniform();
        while (u <= 0.0) u = rng.uniform();
        v = -std::log(u);
        sum += v;
    }
    for (double& v : p) v /= sum;
    return p;
}

std::vector<Complex> random_pure_amplitudes(std::size_t d, Rng& rng) {
    std::vector<Complex> amps(d);
    double norm = 0.0;
    for (Complex& c : amps) {
        c = Complex{rng.normal(), rng.normal()};
        norm += std::norm(c);
    }
    norm = std::sqrt(norm);
    for (Complex& c : amps) c /= norm;
    return amps;
}

DensityMatrix random_density_matrix(std::size_t d, Rng& rng) {
    const auto spectrum = random_distribution(d, rng);
    const auto basis = random_unitary(d, rng);
    return density_from_eigensystem(spectrum, basis, 1e-8);
}

POVM random_povm(std::size_t d, std::size_t n_outcomes, Rng& rng) {
    if (n_outcomes == 0) throw ValidationError("POVM needs at least one outcome");
    std::vector<ComplexMatrix> raw;
    raw.reserve(n_outcomes);
    ComplexMatrix sum(d, d);
    for (std::size_t y = 0; y < n_outcomes; ++y) {
        ComplexMatrix a(d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) a(i, j) = Complex{rng.normal(), rng.normal()};
        ComplexMatrix e = a * a.dagger();
        sum += e;
        raw.push_back(std::move(e));
    }
    // Whiten: E_y <- S^{-1/2} E'_y S^{-1/2} with S the (positive) sum.
    const auto eig = hermitian_eigendecomposition(sum, 1e-8);
    std::vector<double> inv_sqrt(d);
    for (std::size_t k = 0; k < d; ++k) {
        if (eig.eigenvalues[k] < 1e-12) throw NumericalError("singular POVM normalizer");
        inv_sqrt[k] = 1.0 / std::sqrt(eig.eigenvalues[k]);
    }
    const ComplexMatrix s_inv_sqrt = from_eigensystem(inv_sqrt, eig.eigenvectors);
    std::vector<ComplexMatrix> elements;
    elements.reserve(n_outcomes);
    for (auto& e : raw) elements.push_back(s_inv_sqrt * e * s_inv_sqrt);
    return POVM(std::move(elements), 1e-8);
}

Ensemble random_ensemble(std::size_t d, std::size_t n_states, Rng& rng) {
    const auto probs = random_distribution(n_states, rng);
    std::vector<EnsembleEntry> entries;
    entries.reserve(n_states);
    for (std::size_t x = 0; x < n_states; ++x) {
        entries.push_back({probs[x], random_density_matrix(d, rng)});
    }
    return Ensemble(std::move(entries), 1e-8);
}

}  // namespace holevo
