#pragma once

#include <cstdint>
#include <random>

#include "absep/matrix.hpp"
#include "absep/partition.hpp"
#include "absep/spectrum.hpp"

namespace absep {

// Seeded random stream with a Box–Muller Gaussian on top of mt19937_64.
// std::normal_distribution is implementation-defined, so it is avoided:
// every draw here is bit-reproducible across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double uniform();            // [0, 1)
    double gaussian();           // N(0, 1)
    Complex complex_gaussian();  // independent N(0,1) real and imaginary parts
    std::uint64_t bits() { return gen_(); }

private:
    std::mt19937_64 gen_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

struct EigenSystem {
    Spectrum values;       // raw, sorted decreasing
    ComplexMatrix vectors; // columns match values: A = V diag(λ) V^†
};

// Eigenvalues of a Hermitian matrix via cyclic Jacobi with complex
// rotations.  Converges when the off-diagonal Frobenius norm drops below
// 1e-12·‖A‖_F; throws after 100 sweeps without convergence.  Output is
// never clamped — callers needing probability spectra go through
// Spectrum::state (see state_spectrum below).
Spectrum hermitian_eigenvalues(const HermitianMatrix& a);
EigenSystem hermitian_eigensystem(const HermitianMatrix& a);

// Eigensolve + clamp for density operators.
Spectrum state_spectrum(const DensityMatrix& rho);

enum class Subsystem { A, B };

// Traces out the named subsystem; B is the minor (fast) tensor index.
HermitianMatrix partial_trace(const HermitianMatrix& rho, Bipartition part, Subsystem traced_out);

// Transposition of the B factor in the computational basis,
// ρ^Γ[(i,j),(k,l)] = ρ[(i,l),(k,j)].  Exact involution.
HermitianMatrix partial_transpose(const HermitianMatrix& rho, Bipartition part);

// Haar-distributed unitary: dim² complex Gaussians, then the QR
// factorization with positive-real diagonal of R (Gram–Schmidt with a
// reorthogonalization pass), then a diagonal phase fix r_ii/|r_ii| — which
// the positive-diagonal convention makes the identity, keeping the measure
// exactly Haar.  Deterministic for a fixed seed.
UnitaryMatrix haar_unitary(int dim, std::uint64_t seed);
UnitaryMatrix haar_unitary(int dim, Rng& rng);

// Haar-uniform pure state of the given dimension.
CVector haar_pure_state(int dim, Rng& rng);

double purity(const HermitianMatrix& rho);  // tr ρ²

// e^{iεH} for Hermitian H, via spectral decomposition.
UnitaryMatrix hermitian_phase_exp(const HermitianMatrix& h, double eps);

HermitianMatrix random_hermitian(int dim, Rng& rng);

}  // namespace absep
