#include "absep/witness.hpp"

#include <cmath>
#include <stdexcept>

#include "absep/tolerances.hpp"

namespace absep {

double ppt_negativity(const HermitianMatrix& rho, Bipartition part) {
    return hermitian_eigenvalues(partial_transpose(rho, part)).min();
}

double verify_witness(const ChannelSpec& c, const Witness& w) {
    const ComplexMatrix out = apply(c, w.input);
    const ComplexMatrix rotated = conjugate_by(w.unitary.mat(), out);
    return ppt_negativity(HermitianMatrix(rotated), w.partition);
}

namespace {

double rotated_negativity(const ComplexMatrix& out, const ComplexMatrix& u, Bipartition part) {
    return ppt_negativity(HermitianMatrix::trusted(conjugate_by(u, out)), part);
}

// 200 keep-if-better steps of U ← e^{iεH} U with random Hermitian H,
// ε halved after each rejected step starting from 0.1.
void refine_witness(const ChannelSpec& c, Witness& w, Rng& rng) {
    const ComplexMatrix out = apply(c, w.input);
    const int d = c.dim();
    ComplexMatrix u = w.unitary.mat();
    double best = w.negativity;
    double eps = 0.1;
    for (int step = 0; step < 200 && eps > 1e-12; ++step) {
        const HermitianMatrix h = random_hermitian(d, rng);
        const ComplexMatrix candidate = hermitian_phase_exp(h, eps).mat() * u;
        const double neg = rotated_negativity(out, candidate, w.partition);
        if (neg < best) {
            best = neg;
            u = candidate;
        } else {
            eps *= 0.5;
        }
    }
    w.unitary = UnitaryMatrix(std::move(u));
    w.negativity = best;
}

}  // namespace

std::optional<Witness> random_unitary_witness(const ChannelSpec& c, Bipartition part, int trials,
                                              std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("random_unitary_witness: trials must be >= 1");
    if (part.dim() != c.dim())
        throw std::invalid_argument("random_unitary_witness: partition does not match channel dim");
    validate_positivity(c);

    Rng rng(seed);
    const int d = c.dim();

    std::optional<Witness> best;
    for (int trial = 0; trial < trials; ++trial) {
        CVector psi;
        std::string recipe;
        switch (trial % 3) {
            case 0:
                psi = maximally_entangled(part.m, part.n);
                recipe = "maximally entangled input";
                break;
            case 1: {
                const CVector a = haar_pure_state(part.m, rng);
                const CVector b = haar_pure_state(part.n, rng);
                psi = tensor(a, b);
                recipe = "factorized Haar pure input";
                break;
            }
            default:
                psi = haar_pure_state(d, rng);
                recipe = "Haar pure input";
                break;
        }
        const ComplexMatrix input = ComplexMatrix::outer(psi, psi);
        const ComplexMatrix out = apply(c, input);
        const ComplexMatrix u =
            (trial == 0) ? ComplexMatrix::identity(d) : haar_unitary(d, rng).mat();
        const double neg = rotated_negativity(out, u, part);
        if (neg < -kNegativityTol && (!best || neg < best->negativity)) {
            best = Witness{input, recipe, UnitaryMatrix(u), part, neg};
        }
    }
    if (best) refine_witness(c, *best, rng);
    return best;
}

Witness example5_witness() {
    const ChannelSpec channel =
        make_local_product({make_depolarizing(4, 1.0 / 3.0), make_depolarizing(4, 1.0 / 3.0)});

    const CVector bell = bell_phi_plus();
    const CVector psi = tensor(bell, bell);
    const ComplexMatrix input = ComplexMatrix::outer(psi, psi);

    // identity except the 2×2 block (σ_z + σ_y)/√2 on basis states 8 and 9
    const double s = 1.0 / std::sqrt(2.0);
    ComplexMatrix block = ComplexMatrix::identity(16);
    block(7, 7) = s;
    block(7, 8) = Complex(0.0, -s);
    block(8, 7) = Complex(0.0, s);
    block(8, 8) = -s;

    // The 4|4 split that detects the entanglement interleaves the two Bell
    // pairs: A = qubits (1,3), B = qubits (2,4).  Regrouping to that split
    // is the qubit-2 ↔ qubit-3 relabeling, folded into the witness unitary
    // so the standard partial transpose applies.
    ComplexMatrix perm(16, 16);
    for (int i = 0; i < 16; ++i) {
        const int b0 = (i >> 3) & 1, b1 = (i >> 2) & 1, b2 = (i >> 1) & 1, b3 = i & 1;
        const int j = (b0 << 3) | (b2 << 2) | (b1 << 1) | b3;
        perm(j, i) = 1.0;
    }

    Witness w{input, "two Bell pairs, one per depolarized slot", UnitaryMatrix(perm * block),
              Bipartition(4, 4), 0.0};
    w.negativity = verify_witness(channel, w);
    return w;
}

std::optional<Witness> recovery_witness_one_sided(double q2, const DensityMatrix& rho) {
    if (rho.dim() != 4)
        throw std::invalid_argument("recovery_witness_one_sided: two-qubit input required");
    if (std::abs(q2) > 1.0 + kBoundaryTol)
        throw std::invalid_argument("recovery_witness_one_sided: |q2| must be <= 1");

    const EigenSystem red = hermitian_eigensystem(partial_trace(rho.herm(), Bipartition(2, 2), Subsystem::A));
    const double l1 = red.values[0], l2 = red.values[1];
    const double lhs = q2 * q2 * (l1 - l2) * (l1 - l2);
    const double rhs = (1.0 + q2 * (2.0 * l1 - 1.0)) * (1.0 + q2 * (2.0 * l2 - 1.0));
    if (lhs <= rhs + kNegativityTol) return std::nullopt;

    CVector v1(2), v2(2);
    for (int i = 0; i < 2; ++i) {
        v1[i] = red.vectors(i, 0);
        v2[i] = red.vectors(i, 1);
    }
    const CVector v11 = tensor(v1, v1), v22 = tensor(v2, v2);
    const CVector v12 = tensor(v1, v2), v21 = tensor(v2, v1);

    // identity on |ψ_iψ_i⟩, phase-split block on span{|ψ1ψ2⟩, |ψ2ψ1⟩}
    const Complex ep = std::polar(1.0 / std::sqrt(2.0), M_PI / 4.0);
    const Complex em = std::conj(ep);
    ComplexMatrix u = ComplexMatrix::outer(v11, v11) + ComplexMatrix::outer(v22, v22);
    u += ep * (ComplexMatrix::outer(v12, v12) + ComplexMatrix::outer(v21, v21));
    u += em * (ComplexMatrix::outer(v12, v21) + ComplexMatrix::outer(v21, v12));

    const ChannelSpec channel =
        make_local_product({make_depolarizing(2, 0.0), make_depolarizing(2, q2)});
    Witness w{rho.mat(), "two-qubit input with non-degenerate tr_A spectrum", UnitaryMatrix(u),
              Bipartition(2, 2), 0.0};
    w.negativity = verify_witness(channel, w);
    return w;
}

}  // namespace absep
