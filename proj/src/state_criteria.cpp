#include "absep/state_criteria.hpp"

#include <cmath>
#include <stdexcept>

#include "absep/tolerances.hpp"

namespace absep {

std::string to_string(Status s) {
    switch (s) {
        case Status::Holds: return "Holds";
        case Status::Fails: return "Fails";
        default: return "Undetermined";
    }
}

namespace {

void require_state(const Spectrum& s, const char* who) {
    if (!s.is_state()) throw std::invalid_argument(std::string(who) + ": state spectrum required");
}

}  // namespace

Verdict abs_ppt_2n(const Spectrum& s) {
    require_state(s, "abs_ppt_2n");
    const std::size_t len = s.size();
    if (len % 2 != 0 || len < 4)
        throw std::invalid_argument("abs_ppt_2n: spectrum length must be even and >= 4");
    const double lhs = s[0];
    const double rhs = s[len - 2] + 2.0 * std::sqrt(s[len - 1] * s[len - 3]);
    Verdict v;
    v.criterion = "abs-ppt-2n";
    v.margin = rhs - lhs;
    v.status = (v.margin >= -kBoundaryTol) ? Status::Holds : Status::Fails;
    if (v.status == Status::Fails) v.witness_spectrum = s.values();
    return v;
}

Verdict separable_ball(const Spectrum& s, Bipartition part) {
    require_state(s, "separable_ball");
    if (static_cast<int>(s.size()) != part.dim())
        throw std::invalid_argument("separable_ball: spectrum length does not match partition");
    const double bound = 1.0 / (part.dim() - 1.0);
    Verdict v;
    v.criterion = "separable-ball";
    v.margin = bound - s.purity();
    v.status = (v.margin >= -kBoundaryTol) ? Status::Holds : Status::Undetermined;
    return v;
}

Verdict necessary_triple(const Spectrum& s) {
    require_state(s, "necessary_triple");
    const std::size_t len = s.size();
    if (len < 4) throw std::invalid_argument("necessary_triple: spectrum length must be >= 4");
    Verdict v;
    v.criterion = "necessary-triple";
    v.margin = s[len - 3] + s[len - 2] + s[len - 1] - s[0];
    v.status = (v.margin < -kBoundaryTol) ? Status::Fails : Status::Undetermined;
    if (v.status == Status::Fails) v.witness_spectrum = s.values();
    return v;
}

double min_largest_eigenvalue(double mu, int dim) {
    if (dim < 2) throw std::invalid_argument("min_largest_eigenvalue: dim must be >= 2");
    const double lo = 1.0 / dim;
    if (mu < lo - kBoundaryTol || mu > 1.0 + kBoundaryTol)
        throw std::invalid_argument("min_largest_eigenvalue: purity out of [1/dim, 1]");
    if (mu >= 1.0) return 1.0;
    if (mu <= lo) return lo;
    // k with 1/k ≤ μ ≤ 1/(k-1); at breakpoints both brackets agree.
    int k = static_cast<int>(std::ceil(1.0 / mu));
    k = std::max(2, std::min(k, dim));
    return (1.0 + std::sqrt((k * mu - 1.0) / (k - 1.0))) / k;
}

Verdict purity_necessary(double mu, Bipartition part) {
    const int mn = part.dim();
    if (mu < 1.0 / mn - kBoundaryTol || mu > 1.0 + kBoundaryTol)
        throw std::invalid_argument("purity_necessary: purity out of [1/(mn), 1]");
    mu = std::min(1.0, std::max(mu, 1.0 / mn));

    Verdict v;
    // Hyperbola μ ≤ 9/(mn+8): the weaker, dimension-only form.
    const double hyper = 9.0 / (mn + 8.0);
    if (mu > hyper + kBoundaryTol) {
        v.criterion = "purity-hyperbola";
        v.margin = hyper - mu;
        v.status = Status::Fails;
        return v;
    }
    // Exact form: min λ₁(μ) ≤ 3 √(μ/(mn+8)) must hold for absolute
    // separability; its violation already sinks every spectrum of purity μ.
    const double lhs = min_largest_eigenvalue(mu, mn);
    const double rhs = 3.0 * std::sqrt(mu / (mn + 8.0));
    v.criterion = "purity-bound";
    v.margin = rhs - lhs;
    v.status = (v.margin < -kBoundaryTol) ? Status::Fails : Status::Undetermined;
    return v;
}

double purity_necessary_threshold(int mn) {
    if (mn < 4) throw std::invalid_argument("purity_necessary_threshold: mn must be >= 4");
    auto violated = [mn](double mu) {
        return min_largest_eigenvalue(mu, mn) > 3.0 * std::sqrt(mu / (mn + 8.0));
    };
    double lo = 1.0 / mn, hi = 1.0;
    if (!violated(hi)) return 1.0;
    for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
        const double mid = 0.5 * (lo + hi);
        (violated(mid) ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

Verdict nqubit_ball(const Spectrum& s, int nqubits) {
    require_state(s, "nqubit_ball");
    if (nqubits < 2 || s.size() != (std::size_t(1) << nqubits))
        throw std::invalid_argument("nqubit_ball: spectrum length must be 2^N, N >= 2");
    const double bound = std::ldexp(1.0 + (54.0 / 17.0) * std::pow(3.0, -nqubits), -nqubits);
    Verdict v;
    v.criterion = "nqubit-ball";
    v.margin = bound - s.purity();
    v.status = (v.margin >= -kBoundaryTol) ? Status::Holds : Status::Undetermined;
    return v;
}

namespace {

Verdict classify_bipartite(const Spectrum& s, Bipartition part) {
    if (static_cast<int>(s.size()) != part.dim())
        throw std::invalid_argument("classify: spectrum length does not match partition");
    if (std::min(part.m, part.n) == 2) {
        Verdict v = abs_ppt_2n(s);
        return v;  // exact, final
    }
    Verdict ball = separable_ball(s, part);
    if (ball.status == Status::Holds) return ball;
    Verdict triple = necessary_triple(s);
    if (triple.status == Status::Fails) return triple;
    Verdict pur = purity_necessary(s.purity(), part);
    if (pur.status == Status::Fails) return pur;
    Verdict v;
    v.criterion = "inconclusive";
    v.margin = ball.margin;
    v.status = Status::Undetermined;
    return v;
}

Verdict classify_multipartite(const Spectrum& s, const MultiPartition& part) {
    if (static_cast<int>(s.size()) != part.dim())
        throw std::invalid_argument("classify: spectrum length does not match partition");
    if (!part.all_qubits())
        throw std::invalid_argument("classify: only all-qubit multipartitions are supported");
    const int n = part.count();
    Verdict ball = nqubit_ball(s, n);
    if (ball.status == Status::Holds) return ball;
    // Absolute separability under 2|…|2 implies it under the coarse-grained
    // bipartition 2|2^{N-1}, so the exact 2|n test rejects multipartite too.
    Verdict exact = abs_ppt_2n(s);
    if (exact.status == Status::Fails) return exact;
    Verdict pur = purity_necessary(s.purity(), Bipartition(2, part.dim() / 2));
    if (pur.status == Status::Fails) return pur;
    Verdict v;
    v.criterion = "inconclusive";
    v.margin = ball.margin;
    v.status = Status::Undetermined;
    return v;
}

}  // namespace

Verdict classify_spectrum(const Spectrum& s, const Partition& part) {
    require_state(s, "classify_spectrum");
    if (const auto* b = std::get_if<Bipartition>(&part)) return classify_bipartite(s, *b);
    return classify_multipartite(s, std::get<MultiPartition>(part));
}

Verdict classify_state(const DensityMatrix& rho, const Partition& part) {
    return classify_spectrum(state_spectrum(rho), part);
}

CVector ghz_basis_vector(int k) {
    if (k < 1 || k > 8) throw std::invalid_argument("ghz_basis_vector: k must be 1..8");
    CVector v(8, Complex(0.0));
    const int b = k - 1;  // bits k₁k₂k₃ of the first branch
    const double a = 1.0 / std::sqrt(2.0);
    v[b] = (b % 2 == 0) ? a : -a;  // sign (-1)^{k-1}
    v[7 - b] = a;                  // complemented bits
    return v;
}

DensityMatrix ghz_diagonal_state(const Spectrum& weights) {
    if (!weights.is_state() || weights.size() != 8)
        throw std::invalid_argument("ghz_diagonal_state: need a state spectrum of length 8");
    ComplexMatrix rho(8, 8);
    for (int k = 1; k <= 8; ++k) {
        const CVector g = ghz_basis_vector(k);
        const ComplexMatrix p = ComplexMatrix::outer(g, g);
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = 0; j < 8; ++j) rho(i, j) += weights[k - 1] * p(i, j);
    }
    return DensityMatrix(std::move(rho));
}

}  // namespace absep
