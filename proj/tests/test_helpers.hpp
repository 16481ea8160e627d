#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "absep/linalg.hpp"
#include "absep/matrix.hpp"
#include "absep/spectrum.hpp"

namespace test_helpers {

using absep::Complex;
using absep::ComplexMatrix;
using absep::CVector;

// random probability vector of the given length (flat Dirichlet)
inline std::vector<double> random_simplex(int len, absep::Rng& rng) {
    std::vector<double> v(len);
    double sum = 0.0;
    for (double& x : v) {
        x = -std::log(1.0 - rng.uniform());
        sum += x;
    }
    for (double& x : v) x /= sum;
    return v;
}

inline absep::Spectrum random_state_spectrum(int len, absep::Rng& rng) {
    return absep::Spectrum::state(random_simplex(len, rng));
}

// random density matrix: Haar-rotated random simplex spectrum
inline absep::DensityMatrix random_density(int dim, absep::Rng& rng) {
    const auto spec = random_simplex(dim, rng);
    const ComplexMatrix u = absep::haar_unitary(dim, rng).mat();
    return absep::DensityMatrix(u * ComplexMatrix::diagonal(spec) * u.adjoint());
}

inline double max_entry_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
    return m;
}

// b = mixture of random permutations of a  ⇒  a majorizes b
inline absep::Spectrum majorized_mixture(const absep::Spectrum& a, absep::Rng& rng) {
    const std::size_t n = a.size();
    std::vector<double> b(n, 0.0);
    const int terms = 4;
    std::vector<double> w = random_simplex(terms, rng);
    for (int t = 0; t < terms; ++t) {
        std::vector<std::size_t> perm(n);
        for (std::size_t i = 0; i < n; ++i) perm[i] = i;
        for (std::size_t i = n; i > 1; --i)
            std::swap(perm[i - 1], perm[static_cast<std::size_t>(rng.uniform() * i)]);
        for (std::size_t i = 0; i < n; ++i) b[i] += w[t] * a[perm[i]];
    }
    return absep::Spectrum::state(std::move(b));
}

}  // namespace test_helpers
