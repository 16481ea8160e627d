#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "absep/channels.hpp"
#include "absep/linalg.hpp"
#include "absep/matrix.hpp"
#include "absep/partition.hpp"

namespace absep {

// Constructive refutation of the absolutely separating property: an input
// state and a unitary under which the rotated channel output has a negative
// partial transpose.  Re-running the pipeline (apply, conjugate, partially
// transpose, eigensolve) reproduces `negativity` to 1e-9.
struct Witness {
    ComplexMatrix input;       // density matrix fed to the channel
    std::string input_recipe;  // how it was built
    UnitaryMatrix unitary;
    Bipartition partition;
    double negativity;         // min eigenvalue of the partial transpose, < -1e-9
};

// Min eigenvalue of ρ^{Γ_B}.  Negative certifies entanglement across the
// partition (and is exact for 2|2 and 2|3).
double ppt_negativity(const HermitianMatrix& rho, Bipartition part);

// Re-runs a witness end to end and returns the recomputed negativity.
double verify_witness(const ChannelSpec& c, const Witness& w);

// Randomized search: cycles input candidates (maximally entangled,
// factorized pure, Haar pure) against Haar unitaries — trial 0 keeps the
// identity unitary so covariant channels are caught immediately — then
// locally refines the best violation with multiplicative perturbations
// U ← e^{iεH} U (ε halved on failure, 200 steps).  Deterministic for a
// fixed seed; returns nothing when no violation below -1e-9 is found,
// which is inconclusive rather than a proof of absolute separability.
std::optional<Witness> random_unitary_witness(const ChannelSpec& c, Bipartition part, int trials,
                                              std::uint64_t seed);

// The explicit 4-qubit counterexample: D_{1/3} ⊗ D_{1/3} on two Bell pairs,
// rotated by the 16×16 unitary acting as the block
//     [[1/√2, -i/√2], [i/√2, -1/√2]]  =  (σ_z + σ_y)/√2
// on basis states 8 and 9 (identity elsewhere), then partially transposed
// across the pair-interleaving 4|4 split (first qubits of each pair vs
// second qubits).  Certifies that a product of two absolutely separating
// maps need not be absolutely separating; negativity < -0.0235.
Witness example5_witness();

// Entanglement recovery after D_0 ⊗ D_{q2}: if the reduced input spectrum
// (λ1, λ2) of tr_A ρ satisfies
//     q2²(λ1-λ2)² > [1 + q2(2λ1-1)][1 + q2(2λ2-1)],
// the two-qubit unitary acting as identity on |ψ_iψ_i⟩ and as the
// phase-split block (e^{±iπ/4}/√2) on the {|ψ1ψ2⟩, |ψ2ψ1⟩} plane of the
// eigenbasis of tr_A ρ recovers entanglement; otherwise no witness exists
// for this construction.
std::optional<Witness> recovery_witness_one_sided(double q2, const DensityMatrix& rho);

}  // namespace absep
