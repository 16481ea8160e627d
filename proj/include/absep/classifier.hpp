#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "absep/channels.hpp"
#include "absep/partition.hpp"

namespace absep {

enum class MapStatus { AbsolutelySeparating, NotAbsolutelySeparating, Undetermined };
std::string to_string(MapStatus s);

struct MapWitness {
    std::optional<std::vector<double>> spectrum;  // output spectrum violating a state criterion
    std::string input_recipe;
};

// Verdict for a map against a partition.  One-sided criteria never claim
// the direction they cannot certify; margin is positive on the absolutely
// separating side of the deciding boundary.
struct MapVerdict {
    MapStatus status = MapStatus::Undetermined;
    std::string criterion;
    std::optional<Partition> partition;
    double margin = 0.0;
    std::optional<MapWitness> witness;
    std::string note;
};

// ── Norm-based tests ─────────────────────────────────────────────────────────

// (‖Φ‖_{1→2})² ≤ 1/(mn-1): every output lands in the separability ball.
// Rejects lower-bound-only norm estimates — a not-yet-found higher purity
// could break the conclusion.
MapVerdict ball_sufficient(const NormEstimate& norm, Bipartition part);

// (‖Φ‖_{1→2})² ≤ 2^{-N}(1 + (54/17) 3^{-N}): outputs land in the N-qubit
// full-separability ball.
MapVerdict nqubit_ball_sufficient(const NormEstimate& norm, int nqubits);

// (‖Φ‖_{1→2})² > 9/(mn+8): some output is too pure to be absolutely
// separable.  Any achieved purity works, so lower bounds are accepted.
MapVerdict anti_ball_necessary(const NormEstimate& norm, Bipartition part);

// ── Local depolarizing qubit pairs and chains ────────────────────────────────

// Exact boundary of D_{q1} ⊗ D_{q2} against 2|2, saturated by factorized
// pure inputs: with a = max(|q1|,|q2|), b = min(|q1|,|q2|),
//     AS  ⇔  a(1+b) ≤ √(1-a²)(1-b).
MapVerdict local_dep_2q_exact(double q1, double q2);

// Ball-sufficient region q1² + q2² + q1²q2² ≤ 1/3.
MapVerdict local_dep_2q_sufficient(double q1, double q2);

// Root of 2q³ - 2q² + 3q - 1 in [0.3, 0.5]: the symmetric-noise threshold
// where D_q ⊗ D_q stops being absolutely separating (bisection to 1e-12).
double local_dep_symmetric_threshold();

// D_q^{⊗N} is not absolutely separating w.r.t. any 2^k|2^{N-k} if
// √((1+|q|)/(1-|q|)) > (3+|q|)/(1+|q|) or |q| > 1/N (the two conditions are
// checked independently and OR-ed).  Witness: spectrum of the output on a
// factorized pure input.
MapVerdict nqubit_dep_not_as(double q, int nqubits);

// ── Local unital qubit maps ──────────────────────────────────────────────────

// (1 + max λ²)(1 + max λ'²) ≤ 4/3 ⇒ Υ ⊗ Υ' is AS(2|2).
MapVerdict local_unital_sufficient(const UnitalQubit& u1, const UnitalQubit& u2);

// ∏_k (1 + max_i λ_i^{(k)2}) ≤ 1 + (54/17) 3^{-N} ⇒ AS w.r.t. 2|…|2.
MapVerdict nqubit_unital_sufficient(const std::vector<UnitalQubit>& factors);

// ── Trace/identity/transposition combinations ───────────────────────────────

// Stripe -1 ≤ α+β ≤ mn/(mn-2) together with the ellipse
// (α-β)² + ((mn-3)/(mn-1))(α+β - 2/(mn-3))² ≤ 2(mn-2)/(mn-3): sufficient.
MapVerdict ctit_sufficient(double alpha, double beta, Bipartition part);

// Exact for 2|n.  AS iff one of
//   (i) α,β ≥ 0, α+β ≤ 2;   (ii) α ≥ 0, α²-4 ≤ 4β < 0;
//   (iii) β ≥ 0, β²-4 ≤ 4α < 0;   (iv) α,β < 0, α+β ≥ -1,
// equivalently iff the extremal pure-input output spectrum
//   {1 + (α+β)/2 ± M/2, 1, …, 1}/(2n+α+β),  M = max(|α+β|, |α-β|),
// is positive and passes the exact 2|n spectral test (the margin reported
// here).
MapVerdict ctit_2n_exact(double alpha, double beta, int n);

// max(|α+β|, |α-β|) ≤ 2 is necessary for every partition m|n.
MapVerdict ctit_necessary(double alpha, double beta);

// N-qubit sufficient condition
//   2^N + 2(α+β) + |αβ| + αβ + α² + β² ≤ (2^N+α+β)²/2^N · (1 + (54/17)3^{-N}).
MapVerdict ctit_nqubit(double alpha, double beta, int nqubits);

// ── Bipartite depolarizing family ────────────────────────────────────────────

// Purity-ball sufficient condition with the extremal input picked by the
// sign of α²m + β²n + 2γ(α+β): factorized when ≥ 0 (reduced purity μ = 1),
// maximally entangled when ≤ 0 (μ = 1/min(m,n)); both are tried on the
// measure-zero seam.
MapVerdict bipartite_dep_sufficient(double alpha, double beta, double gamma, Bipartition part);

// Necessary: the output spectra on a factorized pure input and on the
// maximally entangled input must each be positive and pass the
// λ₁ ≤ λ_{mn-2} + λ_{mn-1} + λ_{mn} test.
MapVerdict bipartite_dep_necessary(double alpha, double beta, double gamma, Bipartition part);

// ── General structural results ───────────────────────────────────────────────

// Φ ⊗ Id_n is never absolutely separating: the output on ρ₁ ⊗ |ψ⟩⟨ψ| keeps
// at least m(n-1) ≥ 2 zero eigenvalues, which no absolutely separable
// spectrum can afford.
MapVerdict one_sided_not_as(int inner_dim, int id_dim);

// A unital map composed after an absolutely separating one stays absolutely
// separating (its outputs are majorized by absolutely separable spectra).
MapVerdict unital_concat_preserves(const MapVerdict& first, bool second_is_unital);

// Global depolarizing channels are covariant, so absolute separating and
// entanglement annihilating coincide: D_q is AS(m|n) iff q ≤ 2/(mn+2).
// The NotAS witness is the output spectrum on a maximally entangled input,
// which violates the matching state-level necessary test exactly beyond the
// threshold.
MapVerdict covariant_ea_equivalence(const Depolarizing& c, Bipartition part);

// Φ^{⊗N} is not absolutely separating for some bipartition when
//   N > 8/(d(‖Φ‖₁→₂)² - 1) + 1        (purity route; lower bounds accepted)
// or
//   N > 8((log d + 1)/(log d - h(Φ)))² + 1   (entropy route).
// The tracing map is the unique fixed point of tensor stability and is
// never flagged.
MapVerdict tensor_stability_bound(const NormEstimate& norm, int d, long long n_copies,
                                  bool is_tracing = false);
MapVerdict tensor_stability_bound(const EntropyEstimate& h, int d, long long n_copies,
                                  bool is_tracing = false);

// AS of Φ₁ ⊗ Φ₂ propagates to the factors; the converse never lifts.
std::pair<MapVerdict, MapVerdict> tensor_factor_necessary(const MapVerdict& product);

// ── Dispatcher ───────────────────────────────────────────────────────────────

// Runs the strongest applicable exact test first, then sufficient, then
// necessary tests; the returned verdict names the deciding criterion.  When
// everything stays undetermined and witness_trials > 0, a randomized
// unitary witness search may upgrade the verdict to NotAS.
MapVerdict classify_channel(const ChannelSpec& c, const Partition& part, int witness_trials = 0,
                            std::uint64_t seed = 0);

}  // namespace absep
