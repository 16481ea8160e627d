#include "absep/channels.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "absep/linalg.hpp"
#include "absep/tolerances.hpp"

namespace absep {

namespace {

struct DimVisitor {
    int operator()(const Depolarizing& c) const { return c.d; }
    int operator()(const LocalProduct& c) const {
        int d = 1;
        for (const auto& f : c.factors) d *= f.dim();
        return d;
    }
    int operator()(const UnitalQubit&) const { return 2; }
    int operator()(const GeneralizedPauli& c) const { return c.d; }
    int operator()(const TraceIdTranspose& c) const { return c.d; }
    int operator()(const BipartiteDepolarizing& c) const { return c.m * c.n; }
    int operator()(const TracingMap& c) const { return c.d; }
    int operator()(const OneSided& c) const { return c.inner->dim() * c.id_dim; }
};

bool is_prime(int d) {
    if (d < 2) return false;
    for (int k = 2; k * k <= d; ++k)
        if (d % k == 0) return false;
    return true;
}

}  // namespace

ChannelSpec::ChannelSpec(Variant v) : v_(std::move(v)), dim_(std::visit(DimVisitor{}, v_)) {
    if (dim_ < 1) throw std::invalid_argument("ChannelSpec: dimension must be positive");
}

std::string ChannelSpec::family() const {
    struct V {
        std::string operator()(const Depolarizing&) const { return "depolarizing"; }
        std::string operator()(const LocalProduct&) const { return "local_product"; }
        std::string operator()(const UnitalQubit&) const { return "unital_qubit"; }
        std::string operator()(const GeneralizedPauli&) const { return "generalized_pauli"; }
        std::string operator()(const TraceIdTranspose&) const { return "ctit"; }
        std::string operator()(const BipartiteDepolarizing&) const { return "bipartite_depolarizing"; }
        std::string operator()(const TracingMap&) const { return "tracing"; }
        std::string operator()(const OneSided&) const { return "one_sided"; }
    };
    return std::visit(V{}, v_);
}

ChannelSpec make_depolarizing(int d, double q) {
    if (d < 2) throw std::invalid_argument("depolarizing: d must be >= 2");
    return ChannelSpec(Depolarizing{d, q});
}

ChannelSpec make_local_product(std::vector<ChannelSpec> factors) {
    if (factors.empty()) throw std::invalid_argument("local_product: needs at least one factor");
    return ChannelSpec(LocalProduct{std::move(factors)});
}

ChannelSpec make_unital_qubit(double l1, double l2, double l3) {
    return ChannelSpec(UnitalQubit{l1, l2, l3});
}

ChannelSpec make_generalized_pauli(int d, double s, std::vector<double> t) {
    if (d < 2) throw std::invalid_argument("generalized_pauli: d must be >= 2");
    if (t.size() != static_cast<std::size_t>(d) + 1)
        throw std::invalid_argument("generalized_pauli: need d+1 axis weights");
    double sum = s;
    for (double v : t) {
        if (v < -kBoundaryTol) throw std::invalid_argument("generalized_pauli: axis weights must be >= 0");
        sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw std::invalid_argument("generalized_pauli: s + Σ t_J must equal 1");
    if (s < -1.0 / (d - 1) - kBoundaryTol)
        throw std::invalid_argument("generalized_pauli: s must be >= -1/(d-1)");
    return ChannelSpec(GeneralizedPauli{d, s, std::move(t)});
}

ChannelSpec make_trace_id_transpose(int d, double alpha, double beta) {
    if (d < 2) throw std::invalid_argument("ctit: d must be >= 2");
    return ChannelSpec(TraceIdTranspose{d, alpha, beta});
}

ChannelSpec make_bipartite_depolarizing(int m, int n, double alpha, double beta, double gamma) {
    if (m < 2 || n < 2) throw std::invalid_argument("bipartite_depolarizing: m, n must be >= 2");
    return ChannelSpec(BipartiteDepolarizing{m, n, alpha, beta, gamma});
}

ChannelSpec make_tracing(int d) {
    if (d < 1) throw std::invalid_argument("tracing: d must be >= 1");
    return ChannelSpec(TracingMap{d});
}

ChannelSpec make_one_sided(ChannelSpec inner, int id_dim) {
    if (id_dim < 2) throw std::invalid_argument("one_sided: identity factor must have dim >= 2");
    return ChannelSpec(OneSided{std::make_shared<const ChannelSpec>(std::move(inner)), id_dim});
}

// ── Positivity regions ───────────────────────────────────────────────────────

namespace bd {

// Spectrum of the unnormalized output on a factorized pure input:
// 1+α+β+γ, then 1+α (m-1 times), 1+β (n-1 times), 1 ((m-1)(n-1) times).
std::vector<double> factorized_spectrum(const BipartiteDepolarizing& c) {
    std::vector<double> v;
    v.push_back(1.0 + c.alpha + c.beta + c.gamma);
    v.insert(v.end(), c.m - 1, 1.0 + c.alpha);
    v.insert(v.end(), c.n - 1, 1.0 + c.beta);
    v.insert(v.end(), (c.m - 1) * (c.n - 1), 1.0);
    return v;
}

// Spectrum of the unnormalized output on the maximally entangled input
// (r = min(m,n)): 1+(α+β)/r+γ, then 1+(α+β)/r (r²-1 times), and — when the
// factors differ — 1+β/r or 1+α/r on the remaining mn-r² levels (the
// surviving one-sided term on the orthogonal complement).
std::vector<double> entangled_spectrum(const BipartiteDepolarizing& c) {
    const int r = std::min(c.m, c.n);
    std::vector<double> v;
    v.push_back(1.0 + (c.alpha + c.beta) / r + c.gamma);
    v.insert(v.end(), r * r - 1, 1.0 + (c.alpha + c.beta) / r);
    if (c.m < c.n)
        v.insert(v.end(), c.m * (c.n - c.m), 1.0 + c.beta / r);
    else if (c.n < c.m)
        v.insert(v.end(), c.n * (c.m - c.n), 1.0 + c.alpha / r);
    return v;
}

double denominator(const BipartiteDepolarizing& c) {
    return c.m * c.n + c.alpha * c.m + c.beta * c.n + c.gamma;
}

}  // namespace bd

namespace {

struct PositivityVisitor {
    // returns an error message, or empty when inside the region
    std::string operator()(const Depolarizing& c) const {
        if (c.q > 1.0 + kBoundaryTol) return "depolarizing: q must be <= 1";
        if (c.q < -1.0 / (c.d - 1) - kBoundaryTol) return "depolarizing: q must be >= -1/(d-1)";
        return {};
    }
    std::string operator()(const LocalProduct& c) const {
        for (const auto& f : c.factors) {
            const std::string e = std::visit(PositivityVisitor{}, f.variant());
            if (!e.empty()) return e;
        }
        return {};
    }
    std::string operator()(const UnitalQubit& c) const {
        if (std::max({std::abs(c.l1), std::abs(c.l2), std::abs(c.l3)}) > 1.0 + kBoundaryTol)
            return "unital_qubit: max |λ_i| must be <= 1";
        return {};
    }
    std::string operator()(const GeneralizedPauli&) const {
        return {};  // weight constraints enforced at construction imply a channel
    }
    std::string operator()(const TraceIdTranspose& c) const {
        if (1.0 + c.alpha < -kBoundaryTol) return "ctit: 1 + alpha must be >= 0";
        if (1.0 + c.beta < -kBoundaryTol) return "ctit: 1 + beta must be >= 0";
        if (1.0 + c.alpha + c.beta < -kBoundaryTol) return "ctit: 1 + alpha + beta must be >= 0";
        return {};
    }
    std::string operator()(const BipartiteDepolarizing& c) const {
        if (bd::denominator(c) <= kBoundaryTol)
            return "bipartite_depolarizing: mn + alpha m + beta n + gamma must be > 0";
        for (double v : bd::factorized_spectrum(c))
            if (v < -kBoundaryTol)
                return "bipartite_depolarizing: output on a factorized input has a negative level";
        for (double v : bd::entangled_spectrum(c))
            if (v < -kBoundaryTol)
                return "bipartite_depolarizing: output on the maximally entangled input has a negative level";
        return {};
    }
    std::string operator()(const TracingMap&) const { return {}; }
    std::string operator()(const OneSided& c) const {
        return std::visit(PositivityVisitor{}, c.inner->variant());
    }
};

}  // namespace

void validate_positivity(const ChannelSpec& c) {
    const std::string e = std::visit(PositivityVisitor{}, c.variant());
    if (!e.empty()) throw std::invalid_argument(e);
}

bool is_positivity_region(const ChannelSpec& c) {
    return std::visit(PositivityVisitor{}, c.variant()).empty();
}

bool is_unital(const ChannelSpec& c) {
    struct V {
        bool operator()(const Depolarizing&) const { return true; }
        bool operator()(const LocalProduct& c) const {
            for (const auto& f : c.factors)
                if (!is_unital(f)) return false;
            return true;
        }
        bool operator()(const UnitalQubit&) const { return true; }
        bool operator()(const GeneralizedPauli&) const { return true; }
        bool operator()(const TraceIdTranspose&) const { return true; }
        bool operator()(const BipartiteDepolarizing&) const { return true; }
        bool operator()(const TracingMap&) const { return true; }
        bool operator()(const OneSided& c) const { return is_unital(*c.inner); }
    };
    return std::visit(V{}, c.variant());
}

// ── Mutually unbiased bases (prime d) ────────────────────────────────────────

MubBasis mub_basis(int d) {
    if (!is_prime(d))
        throw std::invalid_argument("mub_basis: unsupported dimension (prime d required)");
    MubBasis out;
    out.d = d;
    out.bases.push_back(ComplexMatrix::identity(d));  // computational basis
    if (d == 2) {
        const double s = 1.0 / std::sqrt(2.0);
        ComplexMatrix x(2, 2), y(2, 2);
        x(0, 0) = s;  x(0, 1) = s;
        x(1, 0) = s;  x(1, 1) = -s;
        y(0, 0) = s;             y(0, 1) = s;
        y(1, 0) = Complex(0, s); y(1, 1) = Complex(0, -s);
        out.bases.push_back(std::move(x));  // σ_x eigenbasis
        out.bases.push_back(std::move(y));  // σ_y eigenbasis
        return out;
    }
    // Odd prime: d quadratic-phase bases, vector b of basis a having
    // components ω^{a j² + b j} / √d.  Cross-basis overlaps are quadratic
    // Gauss sums of magnitude √d.
    const double inv = 1.0 / std::sqrt(static_cast<double>(d));
    for (int a = 0; a < d; ++a) {
        ComplexMatrix basis(d, d);
        for (int b = 0; b < d; ++b)
            for (int j = 0; j < d; ++j) {
                const int e = (a * j * j + b * j) % d;
                basis(j, b) = std::polar(inv, 2.0 * M_PI * e / d);
            }
        out.bases.push_back(std::move(basis));
    }
    return out;
}

std::vector<UnitaryMatrix> weyl_operators(const MubBasis& b) {
    const int d = b.d;
    std::vector<UnitaryMatrix> ws;
    ws.reserve(static_cast<std::size_t>(d + 1) * (d - 1));
    for (int J = 0; J <= d; ++J) {
        for (int j = 1; j < d; ++j) {
            ComplexMatrix w(d, d);
            for (int k = 0; k < d; ++k) {
                CVector col(d);
                for (int i = 0; i < d; ++i) col[i] = b.bases[J](i, k);
                const ComplexMatrix p = ComplexMatrix::outer(col, col);
                const Complex phase = std::polar(1.0, 2.0 * M_PI * j * (k + 1) / d);
                for (int r = 0; r < d; ++r)
                    for (int c = 0; c < d; ++c) w(r, c) += phase * p(r, c);
            }
            ws.emplace_back(std::move(w));
        }
    }
    return ws;
}

// ── apply ────────────────────────────────────────────────────────────────────

namespace {

// Φ acting on one tensor slot of a composite operator, through the factor's
// column-stacking superoperator.
ComplexMatrix apply_on_slot(const ComplexMatrix& superop, const ComplexMatrix& x,
                            int before, int dk, int after) {
    const std::size_t total = static_cast<std::size_t>(before) * dk * after;
    ComplexMatrix out(total, total);
    auto idx = [dk, after](int a, int i, int b) {
        return (static_cast<std::size_t>(a) * dk + i) * after + b;
    };
    for (int a = 0; a < before; ++a)
        for (int a2 = 0; a2 < before; ++a2)
            for (int b = 0; b < after; ++b)
                for (int b2 = 0; b2 < after; ++b2)
                    for (int i = 0; i < dk; ++i)
                        for (int i2 = 0; i2 < dk; ++i2) {
                            Complex s = 0.0;
                            for (int j = 0; j < dk; ++j)
                                for (int j2 = 0; j2 < dk; ++j2)
                                    s += superop(i + i2 * dk, j + j2 * dk) *
                                         x(idx(a, j, b), idx(a2, j2, b2));
                            out(idx(a, i, b), idx(a2, i2, b2)) = s;
                        }
    return out;
}

ComplexMatrix apply_impl(const ChannelSpec& c, const ComplexMatrix& x);

struct ApplyVisitor {
    const ComplexMatrix& x;

    ComplexMatrix operator()(const Depolarizing& c) const {
        ComplexMatrix out = x;
        out *= c.q;
        const Complex t = x.trace() * ((1.0 - c.q) / c.d);
        for (int i = 0; i < c.d; ++i) out(i, i) += t;
        return out;
    }
    ComplexMatrix operator()(const LocalProduct& c) const {
        std::vector<int> dims;
        for (const auto& f : c.factors) dims.push_back(f.dim());
        ComplexMatrix cur = x;
        int before = 1;
        int after = 1;
        for (std::size_t k = 1; k < dims.size(); ++k) after *= dims[k];
        for (std::size_t k = 0; k < c.factors.size(); ++k) {
            cur = apply_on_slot(superoperator_matrix(c.factors[k]), cur, before, dims[k], after);
            before *= dims[k];
            if (k + 1 < dims.size()) after /= dims[k + 1];
        }
        return cur;
    }
    ComplexMatrix operator()(const UnitalQubit& c) const {
        const double l[4] = {1.0, c.l1, c.l2, c.l3};
        ComplexMatrix out(2, 2);
        for (int j = 0; j < 4; ++j) {
            const ComplexMatrix s = pauli(j);
            const Complex w = 0.5 * l[j] * (s * x).trace();
            for (int r = 0; r < 2; ++r)
                for (int cc = 0; cc < 2; ++cc) out(r, cc) += w * s(r, cc);
        }
        return out;
    }
    ComplexMatrix operator()(const GeneralizedPauli& c) const {
        const MubBasis mb = mub_basis(c.d);
        const std::vector<UnitaryMatrix> ws = weyl_operators(mb);
        ComplexMatrix out = x;
        out *= ((c.d - 1.0) * c.s + 1.0) / c.d;
        for (int J = 0; J <= c.d; ++J) {
            if (c.t[J] == 0.0) continue;
            for (int j = 1; j < c.d; ++j) {
                const ComplexMatrix& w = ws[static_cast<std::size_t>(J) * (c.d - 1) + (j - 1)].mat();
                const ComplexMatrix term = w * x * w.adjoint();
                const double coef = c.t[J] / c.d;
                for (std::size_t r = 0; r < out.rows(); ++r)
                    for (std::size_t cc = 0; cc < out.cols(); ++cc) out(r, cc) += coef * term(r, cc);
            }
        }
        return out;
    }
    ComplexMatrix operator()(const TraceIdTranspose& c) const {
        ComplexMatrix out = x.transpose();
        out *= c.beta;
        const ComplexMatrix ax = x;
        for (std::size_t r = 0; r < out.rows(); ++r)
            for (std::size_t cc = 0; cc < out.cols(); ++cc) out(r, cc) += c.alpha * ax(r, cc);
        const Complex t = x.trace();
        for (int i = 0; i < c.d; ++i) out(i, i) += t;
        out *= 1.0 / (c.d + c.alpha + c.beta);
        return out;
    }
    ComplexMatrix operator()(const BipartiteDepolarizing& c) const {
        const int m = c.m, n = c.n;
        // partial traces of a general (possibly non-Hermitian) operator
        ComplexMatrix trA(n, n), trB(m, m);
        for (int j = 0; j < n; ++j)
            for (int l = 0; l < n; ++l) {
                Complex s = 0.0;
                for (int i = 0; i < m; ++i) s += x(i * n + j, i * n + l);
                trA(j, l) = s;
            }
        for (int i = 0; i < m; ++i)
            for (int k = 0; k < m; ++k) {
                Complex s = 0.0;
                for (int j = 0; j < n; ++j) s += x(i * n + j, k * n + j);
                trB(i, k) = s;
            }
        ComplexMatrix out = x;
        out *= c.gamma;
        const Complex t = x.trace();
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) {
                out(i * n + j, i * n + j) += t;
                for (int l = 0; l < n; ++l) out(i * n + j, i * n + l) += c.alpha * trA(j, l);
                for (int k = 0; k < m; ++k) out(i * n + j, k * n + j) += c.beta * trB(i, k);
            }
        out *= 1.0 / bd::denominator(c);
        return out;
    }
    ComplexMatrix operator()(const TracingMap& c) const {
        ComplexMatrix out(c.d, c.d);
        const Complex t = x.trace() / static_cast<double>(c.d);
        for (int i = 0; i < c.d; ++i) out(i, i) = t;
        return out;
    }
    ComplexMatrix operator()(const OneSided& c) const {
        return apply_on_slot(superoperator_matrix(*c.inner), x, 1, c.inner->dim(), c.id_dim);
    }
};

ComplexMatrix apply_impl(const ChannelSpec& c, const ComplexMatrix& x) {
    return std::visit(ApplyVisitor{x}, c.variant());
}

}  // namespace

ComplexMatrix apply(const ChannelSpec& c, const ComplexMatrix& x) {
    if (static_cast<int>(x.rows()) != c.dim() || !x.square())
        throw std::invalid_argument("apply: operator dimension does not match the channel");
    validate_positivity(c);
    return apply_impl(c, x);
}

ComplexMatrix apply(const ChannelSpec& c, const DensityMatrix& rho) {
    return apply(c, rho.mat());
}

ComplexMatrix superoperator_matrix(const ChannelSpec& c) {
    const int d = c.dim();
    ComplexMatrix s(static_cast<std::size_t>(d) * d, static_cast<std::size_t>(d) * d);
    ComplexMatrix unit(d, d);
    for (int jc = 0; jc < d; ++jc)
        for (int jr = 0; jr < d; ++jr) {
            unit(jr, jc) = 1.0;
            const ComplexMatrix out = apply_impl(c, unit);
            unit(jr, jc) = 0.0;
            for (int ic = 0; ic < d; ++ic)
                for (int ir = 0; ir < d; ++ir)
                    s(ir + ic * d, jr + jc * d) = out(ir, ic);
        }
    return s;
}

HermitianMatrix choi_matrix(const ChannelSpec& c) {
    const int d = c.dim();
    ComplexMatrix choi(static_cast<std::size_t>(d) * d, static_cast<std::size_t>(d) * d);
    ComplexMatrix unit(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            unit(i, j) = 1.0;
            const ComplexMatrix out = apply_impl(c, unit);
            unit(i, j) = 0.0;
            for (int r = 0; r < d; ++r)
                for (int cc = 0; cc < d; ++cc)
                    choi(static_cast<std::size_t>(r) * d + i, static_cast<std::size_t>(cc) * d + j) =
                        out(r, cc);
        }
    return HermitianMatrix::trusted(std::move(choi));
}

Verdict is_completely_positive(const ChannelSpec& c) {
    const Spectrum ev = hermitian_eigenvalues(choi_matrix(c));
    Verdict v;
    v.criterion = "choi-positivity";
    v.margin = ev.min();
    v.status = (ev.min() >= -kNegativityTol) ? Status::Holds : Status::Fails;
    return v;
}

// ── Output purity / entropy optimization ─────────────────────────────────────

namespace {

double apply_vec_purity(const ComplexMatrix& superop, const CVector& psi) {
    const std::size_t d = psi.size();
    // vec(|ψ⟩⟨ψ|), column stacking
    CVector in(d * d);
    for (std::size_t cc = 0; cc < d; ++cc)
        for (std::size_t r = 0; r < d; ++r) in[r + cc * d] = psi[r] * std::conj(psi[cc]);
    double s = 0.0;
    for (std::size_t row = 0; row < d * d; ++row) {
        Complex acc = 0.0;
        for (std::size_t col = 0; col < d * d; ++col) acc += superop(row, col) * in[col];
        s += std::norm(acc);
    }
    return s;
}

HermitianMatrix output_state(const ChannelSpec& c, const CVector& psi) {
    return HermitianMatrix::trusted(apply_impl(c, ComplexMatrix::outer(psi, psi)));
}

double output_entropy(const ChannelSpec& c, const CVector& psi) {
    const Spectrum ev = hermitian_eigenvalues(output_state(c, psi));
    double h = 0.0;
    for (double v : ev.values())
        if (v > 0.0) h -= v * std::log(v);
    return h;
}

// Multi-start coordinate ascent on the real/imaginary components of a
// normalized state vector: 64 starts, step halving, stop when the relative
// improvement of a full pass drops below 1e-10 (or after 10^4 passes).
double optimize_over_pure(int dim, const std::function<double(const CVector&)>& objective,
                          bool maximize, int starts, std::uint64_t seed) {
    Rng rng(seed);
    const double sign = maximize ? 1.0 : -1.0;
    double best_overall = -1e300;
    for (int s = 0; s < starts; ++s) {
        CVector psi = haar_pure_state(dim, rng);
        double best = sign * objective(psi);
        double step = 0.5;
        for (int pass = 0; pass < 10000 && step > 1e-9; ++pass) {
            const double before = best;
            bool improved = false;
            for (int coord = 0; coord < 2 * dim; ++coord) {
                for (double delta : {step, -step}) {
                    CVector trial = psi;
                    Complex& z = trial[coord / 2];
                    z += (coord % 2 == 0) ? Complex(delta, 0.0) : Complex(0.0, delta);
                    const double nrm = vec_norm(trial);
                    if (nrm <= 1e-12) continue;
                    for (auto& w : trial) w /= nrm;
                    const double val = sign * objective(trial);
                    if (val > best) {
                        best = val;
                        psi = std::move(trial);
                        improved = true;
                        break;
                    }
                }
            }
            if (!improved)
                step *= 0.5;
            else if (best - before < 1e-10 * std::max(1.0, std::abs(best)))
                break;
        }
        best_overall = std::max(best_overall, best);
    }
    return sign * best_overall;
}

// μ-parametrized output purity of the bipartite depolarizing family on pure
// inputs, μ being the common purity of the two reduced inputs.
double bd_pure_output_purity(const BipartiteDepolarizing& c, double mu) {
    const double den = bd::denominator(c);
    const double num = c.m * c.n +
                       2.0 * (c.alpha * c.m + c.beta * c.n + c.alpha * c.beta + c.gamma) +
                       c.gamma * c.gamma +
                       (c.alpha * c.alpha * c.m + c.beta * c.beta * c.n +
                        2.0 * c.gamma * (c.alpha + c.beta)) *
                           mu;
    return num / (den * den);
}

struct PurityClosedForm {
    // closed-form maximal output purity, or < 0 when not available
    double operator()(const Depolarizing& c) const {
        return (1.0 + (c.d - 1.0) * c.q * c.q) / c.d;
    }
    double operator()(const LocalProduct& c) const {
        double prod = 1.0;
        for (const auto& f : c.factors) {
            // multiplicativity holds factor-wise for depolarizing and unital
            // qubit maps; anything else sends the product to the numeric path
            if (const auto* dep = f.get_if<Depolarizing>())
                prod *= (*this)(*dep);
            else if (const auto* u = f.get_if<UnitalQubit>())
                prod *= (*this)(*u);
            else
                return -1.0;
        }
        return prod;
    }
    double operator()(const UnitalQubit& c) const {
        const double m = std::max({c.l1 * c.l1, c.l2 * c.l2, c.l3 * c.l3});
        return (1.0 + m) / 2.0;
    }
    double operator()(const GeneralizedPauli& c) const {
        double m = 0.0;
        for (double t : c.t) {
            const double a = c.s + t;
            m = std::max(m, a * a);
        }
        return (1.0 + (c.d - 1.0) * m) / c.d;
    }
    double operator()(const TraceIdTranspose&) const { return -1.0; }
    double operator()(const BipartiteDepolarizing& c) const {
        return std::max(bd_pure_output_purity(c, 1.0),
                        bd_pure_output_purity(c, 1.0 / std::min(c.m, c.n)));
    }
    double operator()(const TracingMap& c) const { return 1.0 / c.d; }
    double operator()(const OneSided&) const { return -1.0; }
};

}  // namespace

NormEstimate max_output_purity(const ChannelSpec& c, std::uint64_t seed) {
    validate_positivity(c);
    const double closed = std::visit(PurityClosedForm{}, c.variant());
    if (closed >= 0.0) return NormEstimate{closed, NormMethod::ClosedForm, false};
    return max_output_purity_numeric(c, seed);
}

NormEstimate max_output_purity_numeric(const ChannelSpec& c, std::uint64_t seed) {
    validate_positivity(c);
    const ComplexMatrix s = superoperator_matrix(c);
    double val = optimize_over_pure(
        c.dim(), [&](const CVector& psi) { return apply_vec_purity(s, psi); }, true, 64, seed);
    val = std::min(1.0, std::max(val, 1.0 / c.dim()));
    return NormEstimate{val, NormMethod::Numeric, true};
}

EntropyEstimate min_output_entropy(const ChannelSpec& c, std::uint64_t seed) {
    validate_positivity(c);
    const double logd = std::log(static_cast<double>(c.dim()));
    if (c.get_if<TracingMap>()) return EntropyEstimate{logd, false};
    double val = optimize_over_pure(
        c.dim(), [&](const CVector& psi) { return output_entropy(c, psi); }, false, 32, seed);
    val = std::min(logd, std::max(val, 0.0));
    return EntropyEstimate{val, true};
}

ComplexMatrix axis_output(const GeneralizedPauli& c, int axis_j, int k) {
    if (axis_j < 0 || axis_j > c.d || k < 0 || k >= c.d)
        throw std::invalid_argument("axis_output: axis index out of range");
    const MubBasis mb = mub_basis(c.d);
    CVector col(c.d);
    for (int i = 0; i < c.d; ++i) col[i] = mb.bases[axis_j](i, k);
    const double w = c.s + c.t[axis_j];
    ComplexMatrix out = ComplexMatrix::outer(col, col);
    out *= w;
    for (int i = 0; i < c.d; ++i) out(i, i) += (1.0 - w) / c.d;
    return out;
}

}  // namespace absep
