#include "absep/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "absep/tolerances.hpp"

namespace absep {

double Rng::uniform() {
    // 53 random bits into [0, 1)
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * M_PI * u2;
    spare_ = r * std::sin(t);
    has_spare_ = true;
    return r * std::cos(t);
}

Complex Rng::complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return Complex(re, im);
}

// ── Cyclic Jacobi for complex Hermitian matrices ─────────────────────────────
//
// Pivot (p,q) with A_pq = m·e^{iφ}: the plane rotation
//     V = [[c, s e^{iφ}], [-s e^{-iφ}, c]]
// with t = s/c solving m t² + (A_qq - A_pp) t - m = 0 (smaller root, the
// numerically stable choice) zeroes A_pq in V^† A V.  Eigenvectors are
// accumulated by right-multiplication, so A = V diag(λ) V^† at convergence.

namespace {

double offdiag_frobenius(const ComplexMatrix& a) {
    double s = 0.0;
    const std::size_t d = a.rows();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) s += 2.0 * std::norm(a(i, j));
    return std::sqrt(s);
}

EigenSystem jacobi(const HermitianMatrix& input, bool want_vectors) {
    ComplexMatrix a = input.mat();
    const std::size_t d = a.rows();
    ComplexMatrix v = want_vectors ? ComplexMatrix::identity(d) : ComplexMatrix();

    const double norm0 = a.frobenius_norm();
    const double target = 1e-12 * norm0;

    constexpr int kMaxSweeps = 100;
    int sweep = 0;
    while (offdiag_frobenius(a) > target && norm0 > 0.0) {
        if (++sweep > kMaxSweeps)
            throw std::runtime_error("hermitian_eigenvalues: Jacobi failed to converge in 100 sweeps");
        for (std::size_t p = 0; p < d; ++p) {
            for (std::size_t q = p + 1; q < d; ++q) {
                const Complex apq = a(p, q);
                const double m = std::abs(apq);
                if (m <= 1e-300) continue;
                const Complex phase = apq / m;  // e^{iφ}
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta = (aqq - app) / (2.0 * m);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                // rows/cols p and q of A
                for (std::size_t k = 0; k < d; ++k) {
                    if (k == p || k == q) continue;
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    const Complex nkp = c * akp - s * std::conj(phase) * akq;
                    const Complex nkq = s * phase * akp + c * akq;
                    a(k, p) = nkp;
                    a(p, k) = std::conj(nkp);
                    a(k, q) = nkq;
                    a(q, k) = std::conj(nkq);
                }
                const double npp = c * c * app - 2.0 * s * c * m + s * s * aqq;
                const double nqq = s * s * app + 2.0 * s * c * m + c * c * aqq;
                a(p, p) = npp;
                a(q, q) = nqq;
                a(p, q) = 0.0;
                a(q, p) = 0.0;

                if (want_vectors) {
                    for (std::size_t k = 0; k < d; ++k) {
                        const Complex vkp = v(k, p);
                        const Complex vkq = v(k, q);
                        v(k, p) = c * vkp - s * std::conj(phase) * vkq;
                        v(k, q) = s * phase * vkp + c * vkq;
                    }
                }
            }
        }
    }

    std::vector<double> lam(d);
    for (std::size_t i = 0; i < d; ++i) lam[i] = a(i, i).real();
    std::vector<std::size_t> order(d);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return lam[i] > lam[j]; });

    std::vector<double> sorted(d);
    for (std::size_t i = 0; i < d; ++i) sorted[i] = lam[order[i]];

    EigenSystem out{Spectrum::raw(std::move(sorted)), ComplexMatrix()};
    if (want_vectors) {
        ComplexMatrix vs(d, d);
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t i = 0; i < d; ++i) vs(i, j) = v(i, order[j]);
        out.vectors = std::move(vs);
    }
    return out;
}

}  // namespace

Spectrum hermitian_eigenvalues(const HermitianMatrix& a) {
    return jacobi(a, false).values;
}

EigenSystem hermitian_eigensystem(const HermitianMatrix& a) {
    return jacobi(a, true);
}

Spectrum state_spectrum(const DensityMatrix& rho) {
    return Spectrum::state(hermitian_eigenvalues(rho.herm()).values());
}

HermitianMatrix partial_trace(const HermitianMatrix& rho, Bipartition part, Subsystem traced_out) {
    const std::size_t m = static_cast<std::size_t>(part.m);
    const std::size_t n = static_cast<std::size_t>(part.n);
    if (rho.dim() != m * n)
        throw std::invalid_argument("partial_trace: dimension mismatch with bipartition");
    const ComplexMatrix& r = rho.mat();
    if (traced_out == Subsystem::B) {
        ComplexMatrix out(m, m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t k = 0; k < m; ++k) {
                Complex s = 0.0;
                for (std::size_t j = 0; j < n; ++j) s += r(i * n + j, k * n + j);
                out(i, k) = s;
            }
        return HermitianMatrix::trusted(std::move(out));
    }
    ComplexMatrix out(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < n; ++l) {
            Complex s = 0.0;
            for (std::size_t i = 0; i < m; ++i) s += r(i * n + j, i * n + l);
            out(j, l) = s;
        }
    return HermitianMatrix::trusted(std::move(out));
}

HermitianMatrix partial_transpose(const HermitianMatrix& rho, Bipartition part) {
    const std::size_t m = static_cast<std::size_t>(part.m);
    const std::size_t n = static_cast<std::size_t>(part.n);
    if (rho.dim() != m * n)
        throw std::invalid_argument("partial_transpose: dimension mismatch with bipartition");
    const ComplexMatrix& r = rho.mat();
    ComplexMatrix out(m * n, m * n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < m; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    out(i * n + j, k * n + l) = r(i * n + l, k * n + j);
    return HermitianMatrix::trusted(std::move(out));
}

UnitaryMatrix haar_unitary(int dim, std::uint64_t seed) {
    Rng rng(seed);
    return haar_unitary(dim, rng);
}

UnitaryMatrix haar_unitary(int dim, Rng& rng) {
    if (dim < 1) throw std::invalid_argument("haar_unitary: dim must be >= 1");
    const std::size_t d = static_cast<std::size_t>(dim);

    // Ginibre ensemble, column-major draw order
    ComplexMatrix g(d, d);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < d; ++i) g(i, j) = rng.complex_gaussian();

    // Modified Gram–Schmidt, twice per column; r_jj > 0 makes the phase
    // normalization diag(r_jj/|r_jj|) = I, i.e. Q itself is Haar.
    ComplexMatrix q(d, d);
    for (std::size_t j = 0; j < d; ++j) {
        CVector col(d);
        for (std::size_t i = 0; i < d; ++i) col[i] = g(i, j);
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t k = 0; k < j; ++k) {
                Complex proj = 0.0;
                for (std::size_t i = 0; i < d; ++i) proj += std::conj(q(i, k)) * col[i];
                for (std::size_t i = 0; i < d; ++i) col[i] -= proj * q(i, k);
            }
        }
        const double nrm = vec_norm(col);
        if (nrm <= 1e-300) throw std::runtime_error("haar_unitary: degenerate Ginibre draw");
        for (std::size_t i = 0; i < d; ++i) q(i, j) = col[i] / nrm;
    }
    return UnitaryMatrix(std::move(q));
}

CVector haar_pure_state(int dim, Rng& rng) {
    if (dim < 1) throw std::invalid_argument("haar_pure_state: dim must be >= 1");
    CVector v(static_cast<std::size_t>(dim));
    for (auto& z : v) z = rng.complex_gaussian();
    normalize(v);
    return v;
}

double purity(const HermitianMatrix& rho) {
    // tr ρ² = Σ_ij |ρ_ij|² for Hermitian ρ
    double s = 0.0;
    for (const auto& z : rho.mat().data()) s += std::norm(z);
    return s;
}

UnitaryMatrix hermitian_phase_exp(const HermitianMatrix& h, double eps) {
    const EigenSystem es = hermitian_eigensystem(h);
    const std::size_t d = h.dim();
    ComplexMatrix ph(d, d);
    for (std::size_t k = 0; k < d; ++k)
        ph(k, k) = std::polar(1.0, eps * es.values[k]);
    return UnitaryMatrix(es.vectors * ph * es.vectors.adjoint());
}

HermitianMatrix random_hermitian(int dim, Rng& rng) {
    const std::size_t d = static_cast<std::size_t>(dim);
    ComplexMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        m(i, i) = rng.gaussian();
        for (std::size_t j = i + 1; j < d; ++j) {
            const Complex z = 0.5 * rng.complex_gaussian();
            m(i, j) = z;
            m(j, i) = std::conj(z);
        }
    }
    return HermitianMatrix::trusted(std::move(m));
}

}  // namespace absep
