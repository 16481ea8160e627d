#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "absep/matrix.hpp"
#include "absep/spectrum.hpp"
#include "absep/state_criteria.hpp"

namespace absep {

class ChannelSpec;

// D_q[X] = q X + (1-q) tr[X] I/d.  Positive for q ∈ [-1/(d-1), 1],
// completely positive for q ∈ [-1/(d²-1), 1].
struct Depolarizing {
    int d;
    double q;
};

// Tensor product of factor maps, factor k acting on the k-th tensor slot.
struct LocalProduct {
    std::vector<ChannelSpec> factors;
};

// Unital qubit map Υ[X] = ½ Σ_j λ_j tr[σ_j X] σ_j with λ₀ = 1.
struct UnitalQubit {
    double l1, l2, l3;
};

// Channel constant on the axes of the d+1 mutually unbiased bases:
//     Φ[ρ] = ((d-1)s+1)/d ρ + (1/d) Σ_J Σ_{j=1}^{d-1} t_J W_J^j ρ (W_J^j)^†,
// with s + Σ t_J = 1, t_J ≥ 0, s ≥ -1/(d-1).  Applying it needs the MUB
// construction and is therefore restricted to prime d; the spectral
// classification criteria are basis-free and work for any d.
struct GeneralizedPauli {
    int d;
    double s;
    std::vector<double> t;  // d+1 axis weights
};

// Φ_αβ[X] = (tr[X] I + α X + β X^⊤) / (d + α + β).
// Positive iff 1+α ≥ 0, 1+β ≥ 0, 1+α+β ≥ 0.
struct TraceIdTranspose {
    int d;
    double alpha, beta;
};

// Combined global/local depolarization on H_m ⊗ H_n:
//   Φ[X] = (I tr X + α I_m ⊗ tr_A X + β (tr_B X) ⊗ I_n + γ X)
//          / (mn + αm + βn + γ).
struct BipartiteDepolarizing {
    int m, n;
    double alpha, beta, gamma;
};

// Tr[X] = tr[X] I/d.
struct TracingMap {
    int d;
};

// Φ ⊗ Id_n: inner map on the A factor, identity on the B factor.
struct OneSided {
    std::shared_ptr<const ChannelSpec> inner;
    int id_dim;
};

class ChannelSpec {
public:
    using Variant = std::variant<Depolarizing, LocalProduct, UnitalQubit, GeneralizedPauli,
                                 TraceIdTranspose, BipartiteDepolarizing, TracingMap, OneSided>;

    explicit ChannelSpec(Variant v);

    int dim() const { return dim_; }
    const Variant& variant() const { return v_; }
    std::string family() const;

    template <class T>
    const T* get_if() const {
        return std::get_if<T>(&v_);
    }

private:
    Variant v_;
    int dim_;
};

// Factories validate dimensions and structural invariants (e.g. the
// generalized Pauli weight normalization); positivity-region checks happen
// in apply(), so classification criteria can still be evaluated at
// out-of-region parameter points during sweeps.
ChannelSpec make_depolarizing(int d, double q);
ChannelSpec make_local_product(std::vector<ChannelSpec> factors);
ChannelSpec make_unital_qubit(double l1, double l2, double l3);
ChannelSpec make_generalized_pauli(int d, double s, std::vector<double> t);
ChannelSpec make_trace_id_transpose(int d, double alpha, double beta);
ChannelSpec make_bipartite_depolarizing(int m, int n, double alpha, double beta, double gamma);
ChannelSpec make_tracing(int d);
ChannelSpec make_one_sided(ChannelSpec inner, int id_dim);

// Throws with the name of the violated bound when the parameters leave the
// positivity region of the family.
void validate_positivity(const ChannelSpec& c);
bool is_positivity_region(const ChannelSpec& c);
bool is_unital(const ChannelSpec& c);

// Linear action on a matching-dimension operator.  Trace preserving to
// 1e-12 and Hermiticity preserving for all families.
ComplexMatrix apply(const ChannelSpec& c, const ComplexMatrix& x);
ComplexMatrix apply(const ChannelSpec& c, const DensityMatrix& rho);

// Column-stacking superoperator: vec(Φ[X]) = S vec(X),
// vec index of entry (r, c) being r + c·d.
ComplexMatrix superoperator_matrix(const ChannelSpec& c);

// Unnormalized Choi operator Σ_ij Φ[E_ij] ⊗ E_ij (trace d for a
// trace-preserving map).
HermitianMatrix choi_matrix(const ChannelSpec& c);

// Holds iff the Choi operator is positive semidefinite (min eigenvalue
// ≥ -1e-9); margin carries the min Choi eigenvalue.
Verdict is_completely_positive(const ChannelSpec& c);

enum class NormMethod { ClosedForm, Numeric };

// Maximal output purity max_ρ tr[(Φ[ρ])²], the squared 1→2 norm.
// A numeric estimate is the best purity an ascent actually achieved, hence
// a certified lower bound only.
struct NormEstimate {
    double value = 0.0;
    NormMethod method = NormMethod::Numeric;
    bool lower_bound_only = false;
};

struct EntropyEstimate {
    double value = 0.0;
    bool upper_bound_only = false;
};

// Closed forms where the family admits one (tracing, depolarizing, unital
// qubit, generalized Pauli axis formula, bipartite depolarizing at its two
// extremal inputs, and products of depolarizing/unital-qubit factors via
// multiplicativity); multi-start coordinate ascent over pure states
// otherwise.
NormEstimate max_output_purity(const ChannelSpec& c, std::uint64_t seed = 0);

// Forces the multi-start ascent even when a closed form exists — the
// independent route used to cross-check every closed form.
NormEstimate max_output_purity_numeric(const ChannelSpec& c, std::uint64_t seed = 0);

// Multi-start minimization of the output von Neumann entropy over pure
// inputs; exact log d for the tracing map.
EntropyEstimate min_output_entropy(const ChannelSpec& c, std::uint64_t seed = 0);

// d+1 mutually unbiased bases of a prime-dimension space; bases[J] holds
// the J-th basis as matrix columns.
struct MubBasis {
    int d;
    std::vector<ComplexMatrix> bases;
};

MubBasis mub_basis(int d);

// The d²-1 orthogonal unitaries W_J^j = Σ_k ω^{jk} |ψ_k^J⟩⟨ψ_k^J|,
// j = 1..d-1 grouped by basis J, satisfying tr[(W_J^j)^† W_K^k] = d δ_JK δ_jk.
std::vector<UnitaryMatrix> weyl_operators(const MubBasis& b);

// Output on the axis state |ψ_k^J⟩: (1-s-t_J) I/d + (s+t_J) |ψ_k^J⟩⟨ψ_k^J|.
// Indices are 0-based: J ∈ [0, d], k ∈ [0, d).
ComplexMatrix axis_output(const GeneralizedPauli& c, int axis_j, int k);

}  // namespace absep
