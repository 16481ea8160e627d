#pragma once

#include <optional>
#include <string>
#include <vector>

#include "absep/linalg.hpp"
#include "absep/matrix.hpp"
#include "absep/partition.hpp"
#include "absep/spectrum.hpp"

namespace absep {

enum class Status { Holds, Fails, Undetermined };
std::string to_string(Status s);

// Tri-state result of a state-level criterion.  One-sided tests never claim
// the direction they cannot certify:
//   Holds  — state is absolutely separable      (exact or sufficient test)
//   Fails  — state is not absolutely separable  (exact or necessary test)
// margin is the signed distance to the criterion boundary, positive on the
// Holds side.
struct Verdict {
    Status status = Status::Undetermined;
    std::string criterion;
    double margin = 0.0;
    std::optional<std::vector<double>> witness_spectrum;
    std::string note;
};

// Exact spectral test for absolute separability with respect to 2|n:
//     λ₁ ≤ λ_{2n-1} + 2 √(λ_{2n} λ_{2n-2}),
// eigenvalues in decreasing order.  Necessary and sufficient for every n,
// so the verdict is always Holds or Fails.  Requires an even-length state
// spectrum of length ≥ 4.
Verdict abs_ppt_2n(const Spectrum& s);

// Purity ball Σλ² ≤ 1/(mn-1): sufficient only; boundary included.
Verdict separable_ball(const Spectrum& s, Bipartition part);

// λ₁ ≤ λ_{mn-2} + λ_{mn-1} + λ_{mn}: necessary only.  A violation proves
// the state is too close to pure to be absolutely separable.
Verdict necessary_triple(const Spectrum& s);

// Given a purity μ, the smallest largest-eigenvalue any spectrum of that
// purity can have: (1/k)(1 + √((kμ-1)/(k-1))) for the k with
// 1/k ≤ μ ≤ 1/(k-1); returns 1 for μ = 1.
double min_largest_eigenvalue(double mu, int dim);

// Purity-only necessary test: Fails when even the λ₁-minimizing spectrum of
// purity μ violates the triple condition, i.e. when
//     min λ₁(μ) > 3 √(μ/(mn+8)).
// The weaker hyperbola μ ≤ 9/(mn+8) is checked first and reported under its
// own criterion id when it already decides.
Verdict purity_necessary(double mu, Bipartition part);

// Purity threshold μ₀ above which purity_necessary fails, by bisection.
double purity_necessary_threshold(int mn);

// N-qubit full-separability ball: Σλ² ≤ 2^{-N} (1 + (54/17) 3^{-N}).
// Sufficient for absolute separability w.r.t. the full multipartition
// 2|…|2.  Requires a spectrum of length 2^N.
Verdict nqubit_ball(const Spectrum& s, int nqubits);

// Decision cascade over the individual criteria.  For min(m,n) = 2 the
// exact 2|n test is final; otherwise the ball decides Holds, the necessary
// tests decide Fails, anything else is Undetermined.
Verdict classify_spectrum(const Spectrum& s, const Partition& part);
Verdict classify_state(const DensityMatrix& rho, const Partition& part);

// Three-qubit state diagonal in the GHZ-like basis
//     |G_k⟩ = ((-1)^{k-1} |k₁k₂k₃⟩ + |k̄₁k̄₂k̄₃⟩)/√2,  k-1 = 4k₁+2k₂+k₃,
// with the given weights as eigenvalues.
DensityMatrix ghz_diagonal_state(const Spectrum& weights);
CVector ghz_basis_vector(int k);  // k = 1..8

}  // namespace absep
