#include "absep/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "absep/linalg.hpp"
#include "absep/state_criteria.hpp"
#include "absep/tolerances.hpp"
#include "absep/witness.hpp"

namespace absep {

std::string to_string(MapStatus s) {
    switch (s) {
        case MapStatus::AbsolutelySeparating: return "AbsolutelySeparating";
        case MapStatus::NotAbsolutelySeparating: return "NotAbsolutelySeparating";
        default: return "Undetermined";
    }
}

namespace {

MapVerdict make_verdict(MapStatus st, std::string criterion, double margin) {
    MapVerdict v;
    v.status = st;
    v.criterion = std::move(criterion);
    v.margin = margin;
    return v;
}

double nqubit_ball_bound(int nqubits) {
    return std::ldexp(1.0 + (54.0 / 17.0) * std::pow(3.0, -nqubits), -nqubits);
}

}  // namespace

MapVerdict ball_sufficient(const NormEstimate& norm, Bipartition part) {
    if (norm.lower_bound_only)
        throw std::invalid_argument("ball_sufficient: needs an upper-bound-valid norm estimate");
    const double bound = 1.0 / (part.dim() - 1.0);
    MapVerdict v = make_verdict(norm.value <= bound + kBoundaryTol
                                    ? MapStatus::AbsolutelySeparating
                                    : MapStatus::Undetermined,
                                "ball-sufficient", bound - norm.value);
    v.partition = part;
    return v;
}

MapVerdict nqubit_ball_sufficient(const NormEstimate& norm, int nqubits) {
    if (norm.lower_bound_only)
        throw std::invalid_argument("nqubit_ball_sufficient: needs an upper-bound-valid norm estimate");
    if (nqubits < 2) throw std::invalid_argument("nqubit_ball_sufficient: N must be >= 2");
    const double bound = nqubit_ball_bound(nqubits);
    MapVerdict v = make_verdict(norm.value <= bound + kBoundaryTol
                                    ? MapStatus::AbsolutelySeparating
                                    : MapStatus::Undetermined,
                                "nqubit-ball-sufficient", bound - norm.value);
    v.partition = MultiPartition::qubits(nqubits);
    return v;
}

MapVerdict anti_ball_necessary(const NormEstimate& norm, Bipartition part) {
    const double bound = 9.0 / (part.dim() + 8.0);
    MapVerdict v = make_verdict(norm.value > bound + kBoundaryTol
                                    ? MapStatus::NotAbsolutelySeparating
                                    : MapStatus::Undetermined,
                                "anti-ball-necessary", bound - norm.value);
    v.partition = part;
    if (v.status == MapStatus::NotAbsolutelySeparating)
        v.witness = MapWitness{std::nullopt, "pure input achieving output purity above 9/(mn+8)"};
    return v;
}

MapVerdict local_dep_2q_exact(double q1, double q2) {
    if (std::abs(q1) > 1.0 + kBoundaryTol || std::abs(q2) > 1.0 + kBoundaryTol)
        throw std::invalid_argument("local_dep_2q_exact: |q| must be <= 1 (positivity)");
    const double a = std::max(std::abs(q1), std::abs(q2));
    const double b = std::min(std::abs(q1), std::abs(q2));
    const double margin = std::sqrt(std::max(0.0, 1.0 - a * a)) * (1.0 - b) - a * (1.0 + b);
    MapVerdict v = make_verdict(margin >= -kBoundaryTol ? MapStatus::AbsolutelySeparating
                                                        : MapStatus::NotAbsolutelySeparating,
                                "local-dep-exact", margin);
    v.partition = Bipartition(2, 2);
    if (v.status == MapStatus::NotAbsolutelySeparating) {
        std::vector<double> spec = {(1 + a) * (1 + b) / 4, (1 + a) * (1 - b) / 4,
                                    (1 - a) * (1 + b) / 4, (1 - a) * (1 - b) / 4};
        std::sort(spec.begin(), spec.end(), std::greater<double>());
        v.witness = MapWitness{std::move(spec), "factorized pure input |phi> (x) |chi>"};
    }
    return v;
}

MapVerdict local_dep_2q_sufficient(double q1, double q2) {
    const double margin = 1.0 / 3.0 - (q1 * q1 + q2 * q2 + q1 * q1 * q2 * q2);
    MapVerdict v = make_verdict(margin >= -kBoundaryTol ? MapStatus::AbsolutelySeparating
                                                        : MapStatus::Undetermined,
                                "local-dep-sufficient", margin);
    v.partition = Bipartition(2, 2);
    return v;
}

double local_dep_symmetric_threshold() {
    auto f = [](double q) { return 2 * q * q * q - 2 * q * q + 3 * q - 1; };
    double lo = 0.3, hi = 0.5;
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) > 0.0 ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

MapVerdict nqubit_dep_not_as(double q, int nqubits) {
    if (nqubits < 2) throw std::invalid_argument("nqubit_dep_not_as: N must be >= 2");
    const double a = std::abs(q);
    if (a > 1.0 + kBoundaryTol)
        throw std::invalid_argument("nqubit_dep_not_as: |q| must be <= 1");
    const double ratio_fire =
        (a >= 1.0) ? 1.0
                   : std::sqrt((1.0 + a) / (1.0 - a)) - (3.0 + a) / (1.0 + a);
    const double simple_fire = a - 1.0 / nqubits;
    const double margin = -std::max(ratio_fire, simple_fire);
    MapVerdict v = make_verdict(margin < -kBoundaryTol ? MapStatus::NotAbsolutelySeparating
                                                       : MapStatus::Undetermined,
                                "nqubit-dep-necessary", margin);
    v.partition = MultiPartition::qubits(nqubits);
    if (v.status == MapStatus::NotAbsolutelySeparating) {
        std::vector<double> spec;
        spec.reserve(std::size_t(1) << nqubits);
        for (int j = 0; j <= nqubits; ++j) {
            const double val = std::pow(1.0 + a, nqubits - j) * std::pow(1.0 - a, j) /
                               std::ldexp(1.0, nqubits);
            double binom = 1.0;
            for (int i = 0; i < j; ++i) binom = binom * (nqubits - i) / (i + 1);
            spec.insert(spec.end(), static_cast<std::size_t>(std::lround(binom)), val);
        }
        std::sort(spec.begin(), spec.end(), std::greater<double>());
        v.witness = MapWitness{std::move(spec), "factorized pure input |psi>^(x)N"};
    }
    return v;
}

namespace {
double max_lambda_sq(const UnitalQubit& u) {
    return std::max({u.l1 * u.l1, u.l2 * u.l2, u.l3 * u.l3});
}
}  // namespace

MapVerdict local_unital_sufficient(const UnitalQubit& u1, const UnitalQubit& u2) {
    const double margin = 4.0 / 3.0 - (1.0 + max_lambda_sq(u1)) * (1.0 + max_lambda_sq(u2));
    MapVerdict v = make_verdict(margin >= -kBoundaryTol ? MapStatus::AbsolutelySeparating
                                                        : MapStatus::Undetermined,
                                "local-unital-sufficient", margin);
    v.partition = Bipartition(2, 2);
    return v;
}

MapVerdict nqubit_unital_sufficient(const std::vector<UnitalQubit>& factors) {
    if (factors.size() < 2)
        throw std::invalid_argument("nqubit_unital_sufficient: need at least 2 factors");
    const int n = static_cast<int>(factors.size());
    double prod = 1.0;
    for (const auto& u : factors) prod *= 1.0 + max_lambda_sq(u);
    const double margin = 1.0 + (54.0 / 17.0) * std::pow(3.0, -n) - prod;
    MapVerdict v = make_verdict(margin >= -kBoundaryTol ? MapStatus::AbsolutelySeparating
                                                        : MapStatus::Undetermined,
                                "nqubit-unital-sufficient", margin);
    v.partition = MultiPartition::qubits(n);
    return v;
}

MapVerdict ctit_sufficient(double alpha, double beta, Bipartition part) {
    const double mn = part.dim();
    const double sum = alpha + beta;
    const double stripe = std::min(sum + 1.0, mn / (mn - 2.0) - sum);
    const double ell = 2.0 * (mn - 2.0) / (mn - 3.0) -
                       ((alpha - beta) * (alpha - beta) +
                        (mn - 3.0) / (mn - 1.0) * std::pow(sum - 2.0 / (mn - 3.0), 2));
    const double margin = std::min(stripe, ell);
    MapVerdict v = make_verdict(margin >= -kBoundaryTol ? MapStatus::AbsolutelySeparating
                                                        : MapStatus::Undetermined,
                                "ctit-sufficient", margin);
    v.partition = part;
    return v;
}

MapVerdict ctit_2n_exact(double alpha, double beta, int n) {
    if (n < 2) throw std::invalid_argument("ctit_2n_exact: n must be >= 2");
    const double denom = 2.0 * n + alpha + beta;
    MapVerdict v;
    v.criterion = "ctit-2n-exact";
    v.partition = Bipartition(2, n);
    if (denom <= kBoundaryTol) {
        v.status = MapStatus::NotAbsolutelySeparating;
        v.margin = denom - 1.0;
        v.note = "degenerate normalization";
        v.witness = MapWitness{std::nullopt, "pure input"};
        return v;
    }
    const double big = std::max(std::abs(alpha + beta), std::abs(alpha - beta));
    const double half = 0.5 * (alpha + beta);
    std::vector<double> spec(2 * static_cast<std::size_t>(n), 1.0 / denom);
    spec.front() = (1.0 + half + 0.5 * big) / denom;
    spec.back() = (1.0 + half - 0.5 * big) / denom;

    const std::size_t len = spec.size();
    if (spec.back() < -kBoundaryTol) {
        v.status = MapStatus::NotAbsolutelySeparating;
        v.margin = spec.back();
        v.note = "output positivity violated";
    } else {
        v.margin = spec[len - 2] + 2.0 * std::sqrt(std::max(0.0, spec[len - 1]) * spec[len - 3]) -
                   spec[0];
        v.status = (v.margin >= -kBoundaryTol) ? MapStatus::AbsolutelySeparating
                                               : MapStatus::NotAbsolutelySeparating;
    }
    if (v.status == MapStatus::NotAbsolutelySeparating)
        v.witness = MapWitness{spec, "pure input with extremal overlap against its transpose"};
    return v;
}

MapVerdict ctit_necessary(double alpha, double beta) {
    const double big = std::max(std::abs(alpha + beta), std::abs(alpha - beta));
    const double margin = 2.0 - big;
    MapVerdict v = make_verdict(margin < -kBoundaryTol ? MapStatus::NotAbsolutelySeparating
                                                       : MapStatus::Undetermined,
                                "ctit-necessary", margin);
    if (v.status == MapStatus::NotAbsolutelySeparating)
        v.witness = MapWitness{std::nullopt, "pure input with extremal overlap against its transpose"};
    return v;
}

MapVerdict ctit_nqubit(double alpha, double beta, int nqubits) {
    if (nqubits < 2) throw std::invalid_argument("ctit_nqubit: N must be >= 2");
    const double d = std::ldexp(1.0, nqubits);
    const double sum = alpha + beta;
    MapVerdict v;
    v.criterion = "ctit-nqubit-sufficient";
    v.partition = MultiPartition::qubits(nqubits);
    if (d + sum <= kBoundaryTol) {
        v.status = MapStatus::Undetermined;
        v.margin = d + sum - 1.0;
        return v;
    }
    const double lhs = d + 2.0 * sum + std::abs(alpha * beta) + alpha * beta + alpha * alpha +
                       beta * beta;
    const double rhs = (d + sum) * (d + sum) / d * (1.0 + (54.0 / 17.0) * std::pow(3.0, -nqubits));
    v.margin = rhs - lhs;
    v.status = (v.margin >= -kBoundaryTol) ? MapStatus::AbsolutelySeparating
                                           : MapStatus::Undetermined;
    return v;
}

MapVerdict bipartite_dep_sufficient(double alpha, double beta, double gamma, Bipartition part) {
    const int m = part.m, n = part.n;
    const double mn = part.dim();
    MapVerdict v;
    v.criterion = "bipartite-dep-sufficient";
    v.partition = part;
    const double den = mn + alpha * m + beta * n + gamma;
    if (den <= kBoundaryTol) {
        v.status = MapStatus::Undetermined;
        v.margin = den - 1.0;
        v.note = "degenerate normalization";
        return v;
    }
    const double indicator = alpha * alpha * m + beta * beta * n + 2.0 * gamma * (alpha + beta);
    const double rhs = std::pow(alpha * m + beta * n + gamma + 1.0, 2) / (mn - 1.0);

    double margin = -std::numeric_limits<double>::infinity();
    if (indicator >= -kBoundaryTol) {
        // factorized inputs are extremal (μ = 1)
        const double lhs = std::pow(alpha + beta + gamma, 2) + alpha * alpha * (m - 1) +
                           beta * beta * (n - 1) - 1.0;
        margin = std::max(margin, rhs - lhs);
        v.note = "factorized extremal input";
    }
    if (indicator <= kBoundaryTol) {
        // maximally entangled inputs are extremal (μ = 1/min(m,n))
        double m2;
        if (m == n) {
            m2 = std::abs(gamma + n * (alpha + beta) + n * n) - (n * n - 1.0) * std::abs(gamma);
        } else {
            const double lhs = gamma * gamma + 2.0 * alpha * beta - 1.0 +
                               indicator / std::min(m, n);
            m2 = rhs - lhs;
        }
        if (m2 > margin) {
            margin = m2;
            v.note = "maximally entangled extremal input";
        }
    }
    v.margin = margin;
    v.status = (margin >= -kBoundaryTol) ? MapStatus::AbsolutelySeparating
                                         : MapStatus::Undetermined;
    return v;
}

MapVerdict bipartite_dep_necessary(double alpha, double beta, double gamma, Bipartition part) {
    const int m = part.m, n = part.n;
    const int r = std::min(m, n);
    MapVerdict v;
    v.criterion = "bipartite-dep-necessary";
    v.partition = part;
    const double den = m * n + alpha * m + beta * n + gamma;
    if (den <= kBoundaryTol) {
        v.status = MapStatus::NotAbsolutelySeparating;
        v.margin = den - 1.0;
        v.note = "degenerate normalization";
        v.witness = MapWitness{std::nullopt, "any pure input"};
        return v;
    }

    std::vector<double> fact;
    fact.push_back(1.0 + alpha + beta + gamma);
    fact.insert(fact.end(), m - 1, 1.0 + alpha);
    fact.insert(fact.end(), n - 1, 1.0 + beta);
    fact.insert(fact.end(), static_cast<std::size_t>(m - 1) * (n - 1), 1.0);

    std::vector<double> ent;
    ent.push_back(1.0 + (alpha + beta) / r + gamma);
    ent.insert(ent.end(), static_cast<std::size_t>(r) * r - 1, 1.0 + (alpha + beta) / r);
    if (m < n)
        ent.insert(ent.end(), static_cast<std::size_t>(m) * (n - m), 1.0 + beta / r);
    else if (n < m)
        ent.insert(ent.end(), static_cast<std::size_t>(n) * (m - n), 1.0 + alpha / r);

    double margin = std::numeric_limits<double>::infinity();
    const char* recipes[2] = {"factorized pure input", "maximally entangled input"};
    std::optional<MapWitness> witness;
    for (int which = 0; which < 2; ++which) {
        std::vector<double>& spec = which == 0 ? fact : ent;
        for (double& x : spec) x /= den;
        std::sort(spec.begin(), spec.end(), std::greater<double>());
        const std::size_t len = spec.size();
        const double triple =
            spec[len - 3] + spec[len - 2] + spec[len - 1] - spec[0];
        const double local = std::min(triple, spec.back());
        if (local < margin) {
            margin = local;
            if (local < -kBoundaryTol) witness = MapWitness{spec, recipes[which]};
        }
    }
    v.margin = margin;
    v.status = (margin < -kBoundaryTol) ? MapStatus::NotAbsolutelySeparating
                                        : MapStatus::Undetermined;
    v.witness = std::move(witness);
    return v;
}

MapVerdict one_sided_not_as(int inner_dim, int id_dim) {
    if (inner_dim < 2 || id_dim < 2)
        throw std::invalid_argument("one_sided_not_as: dims must be >= 2");
    MapVerdict v = make_verdict(MapStatus::NotAbsolutelySeparating, "one-sided", 0.0);
    v.partition = Bipartition(inner_dim, id_dim);
    v.note = "unconditional";
    v.witness = MapWitness{
        std::nullopt,
        "rho_1 (x) |psi><psi|: the output keeps at least " + std::to_string(inner_dim * (id_dim - 1)) +
            " zero eigenvalues"};
    return v;
}

MapVerdict unital_concat_preserves(const MapVerdict& first, bool second_is_unital) {
    if (first.status == MapStatus::AbsolutelySeparating && second_is_unital) {
        MapVerdict v = make_verdict(MapStatus::AbsolutelySeparating, "majorization", first.margin);
        v.partition = first.partition;
        v.note = "unital map after an absolutely separating one";
        return v;
    }
    return make_verdict(MapStatus::Undetermined, "majorization", 0.0);
}

MapVerdict covariant_ea_equivalence(const Depolarizing& c, Bipartition part) {
    if (part.dim() != c.d)
        throw std::invalid_argument("covariant_ea_equivalence: partition does not match channel dim");
    const double threshold = 2.0 / (c.d + 2.0);
    MapVerdict v = make_verdict(c.q <= threshold + kBoundaryTol
                                    ? MapStatus::AbsolutelySeparating
                                    : MapStatus::NotAbsolutelySeparating,
                                "covariant-ea", threshold - c.q);
    v.partition = part;
    if (v.status == MapStatus::NotAbsolutelySeparating) {
        std::vector<double> spec(c.d, (1.0 - c.q) / c.d);
        spec[0] += c.q;
        v.witness = MapWitness{std::move(spec), "maximally entangled input, identity unitary"};
    }
    return v;
}

namespace {

MapVerdict stability_from_bound(double bound, long long n_copies, const char* criterion) {
    MapVerdict v = make_verdict(static_cast<double>(n_copies) > bound
                                    ? MapStatus::NotAbsolutelySeparating
                                    : MapStatus::Undetermined,
                                criterion, bound - static_cast<double>(n_copies));
    if (v.status == MapStatus::NotAbsolutelySeparating)
        v.witness = MapWitness{std::nullopt, "rho^(x)N with rho the output-extremal input"};
    return v;
}

}  // namespace

MapVerdict tensor_stability_bound(const NormEstimate& norm, int d, long long n_copies,
                                  bool is_tracing) {
    if (d < 2 || n_copies < 1)
        throw std::invalid_argument("tensor_stability_bound: d >= 2 and N >= 1 required");
    if (is_tracing) {
        MapVerdict v = make_verdict(MapStatus::Undetermined, "tensor-stability-purity",
                                    std::numeric_limits<double>::infinity());
        v.note = "tracing map is tensor-stable for every N";
        return v;
    }
    const double excess = d * norm.value - 1.0;
    if (excess <= 0.0)
        return make_verdict(MapStatus::Undetermined, "tensor-stability-purity",
                            std::numeric_limits<double>::infinity());
    return stability_from_bound(8.0 / excess + 1.0, n_copies, "tensor-stability-purity");
}

MapVerdict tensor_stability_bound(const EntropyEstimate& h, int d, long long n_copies,
                                  bool is_tracing) {
    if (d < 2 || n_copies < 1)
        throw std::invalid_argument("tensor_stability_bound: d >= 2 and N >= 1 required");
    const double logd = std::log(static_cast<double>(d));
    if (is_tracing || h.value >= logd)
        return make_verdict(MapStatus::Undetermined, "tensor-stability-entropy",
                            std::numeric_limits<double>::infinity());
    const double ratio = (logd + 1.0) / (logd - h.value);
    return stability_from_bound(8.0 * ratio * ratio + 1.0, n_copies, "tensor-stability-entropy");
}

std::pair<MapVerdict, MapVerdict> tensor_factor_necessary(const MapVerdict& product) {
    if (product.status == MapStatus::AbsolutelySeparating) {
        MapVerdict f = make_verdict(MapStatus::AbsolutelySeparating, "tensor-factor",
                                    product.margin);
        f.note = "inherited from the absolutely separating product";
        return {f, f};
    }
    // Nothing lifts the other way: factors can each be absolutely
    // separating while the product is not.
    MapVerdict u = make_verdict(MapStatus::Undetermined, "tensor-factor", 0.0);
    return {u, u};
}

// ── Dispatcher ───────────────────────────────────────────────────────────────

namespace {

bool all_qubit_depolarizing(const LocalProduct& lp, std::vector<double>& qs) {
    qs.clear();
    for (const auto& f : lp.factors) {
        const auto* d = f.get_if<Depolarizing>();
        if (!d || d->d != 2) return false;
        qs.push_back(d->q);
    }
    return true;
}

bool all_unital_qubit(const LocalProduct& lp, std::vector<UnitalQubit>& us) {
    us.clear();
    for (const auto& f : lp.factors) {
        const auto* u = f.get_if<UnitalQubit>();
        if (!u) return false;
        us.push_back(*u);
    }
    return true;
}

// Bipartite NotAS pulls back to any multipartition refining the bipartition.
MapVerdict restrict_to_not_as(MapVerdict v, const Partition& part) {
    if (v.status != MapStatus::NotAbsolutelySeparating)
        return make_verdict(MapStatus::Undetermined, v.criterion, v.margin);
    v.partition = part;
    v.note = "entangled across a coarse-grained bipartition";
    return v;
}

void append_norm_tests(std::vector<MapVerdict>& out, const ChannelSpec& c, const Partition& part,
                       std::uint64_t seed) {
    const NormEstimate norm = max_output_purity(c, seed);
    if (const auto* b = std::get_if<Bipartition>(&part)) {
        if (!norm.lower_bound_only) out.push_back(ball_sufficient(norm, *b));
        out.push_back(anti_ball_necessary(norm, *b));
    } else {
        const auto& mp = std::get<MultiPartition>(part);
        if (mp.all_qubits()) {
            if (!norm.lower_bound_only) out.push_back(nqubit_ball_sufficient(norm, mp.count()));
            // a bipartite anti-ball violation refutes the multipartition too
            out.push_back(
                restrict_to_not_as(anti_ball_necessary(norm, Bipartition(2, mp.dim() / 2)), part));
        }
    }
}

std::vector<MapVerdict> family_tests(const ChannelSpec& c, const Partition& part,
                                     std::uint64_t seed) {
    std::vector<MapVerdict> tests;
    const auto* bip = std::get_if<Bipartition>(&part);
    const auto* multi = std::get_if<MultiPartition>(&part);

    if (const auto* dep = c.get_if<Depolarizing>()) {
        if (bip) {
            tests.push_back(covariant_ea_equivalence(*dep, *bip));  // exact
        } else if (multi && multi->all_qubits()) {
            tests.push_back(restrict_to_not_as(
                covariant_ea_equivalence(*dep, Bipartition(2, multi->dim() / 2)), part));
            tests.push_back(nqubit_ball_sufficient(max_output_purity(c), multi->count()));
        }
        return tests;
    }

    if (const auto* lp = c.get_if<LocalProduct>()) {
        std::vector<double> qs;
        std::vector<UnitalQubit> us;
        if (all_qubit_depolarizing(*lp, qs)) {
            if (bip && bip->m == 2 && bip->n == 2 && qs.size() == 2) {
                tests.push_back(local_dep_2q_exact(qs[0], qs[1]));  // exact
                tests.push_back(local_dep_2q_sufficient(qs[0], qs[1]));
            } else {
                const bool uniform =
                    std::all_of(qs.begin(), qs.end(), [&](double q) { return q == qs[0]; });
                if (multi && multi->all_qubits()) {
                    tests.push_back(nqubit_ball_sufficient(max_output_purity(c), multi->count()));
                    if (uniform)
                        tests.push_back(nqubit_dep_not_as(qs[0], static_cast<int>(qs.size())));
                } else if (bip && uniform) {
                    tests.push_back(restrict_to_not_as(
                        nqubit_dep_not_as(qs[0], static_cast<int>(qs.size())), part));
                }
            }
        } else if (all_unital_qubit(*lp, us)) {
            if (bip && bip->m == 2 && bip->n == 2 && us.size() == 2)
                tests.push_back(local_unital_sufficient(us[0], us[1]));
            else if (multi && multi->all_qubits())
                tests.push_back(nqubit_unital_sufficient(us));
        }
        append_norm_tests(tests, c, part, seed);
        return tests;
    }

    if (const auto* ct = c.get_if<TraceIdTranspose>()) {
        if (bip) {
            if (std::min(bip->m, bip->n) == 2) {
                tests.push_back(ctit_2n_exact(ct->alpha, ct->beta, std::max(bip->m, bip->n)));
            } else {
                tests.push_back(ctit_sufficient(ct->alpha, ct->beta, *bip));
                tests.push_back(ctit_necessary(ct->alpha, ct->beta));
            }
        } else if (multi && multi->all_qubits()) {
            tests.push_back(ctit_nqubit(ct->alpha, ct->beta, multi->count()));
            tests.push_back(restrict_to_not_as(
                ctit_2n_exact(ct->alpha, ct->beta, multi->dim() / 2), part));
        }
        return tests;
    }

    if (const auto* bd = c.get_if<BipartiteDepolarizing>()) {
        if (!bip || bip->m != bd->m || bip->n != bd->n)
            throw std::invalid_argument(
                "classify_channel: bipartite depolarizing maps are classified against their own m|n");
        tests.push_back(bipartite_dep_sufficient(bd->alpha, bd->beta, bd->gamma, *bip));
        tests.push_back(bipartite_dep_necessary(bd->alpha, bd->beta, bd->gamma, *bip));
        return tests;
    }

    if (const auto* os = c.get_if<OneSided>()) {
        if (bip && bip->m == os->inner->dim() && bip->n == os->id_dim) {
            tests.push_back(one_sided_not_as(os->inner->dim(), os->id_dim));
            return tests;
        }
    }

    // tracing, generalized Pauli, mismatched one-sided: norm-based tests
    append_norm_tests(tests, c, part, seed);
    return tests;
}

}  // namespace

MapVerdict classify_channel(const ChannelSpec& c, const Partition& part, int witness_trials,
                            std::uint64_t seed) {
    if (partition_dim(part) != c.dim())
        throw std::invalid_argument("classify_channel: partition does not match channel dimension");

    std::vector<MapVerdict> tests = family_tests(c, part, seed);
    for (auto& t : tests) {
        if (t.status != MapStatus::Undetermined) {
            t.partition = part;
            return t;
        }
    }

    std::string search_note;
    if (witness_trials > 0) {
        const Bipartition search = std::holds_alternative<Bipartition>(part)
                                       ? std::get<Bipartition>(part)
                                       : Bipartition(2, partition_dim(part) / 2);
        try {
            if (auto w = random_unitary_witness(c, search, witness_trials, seed)) {
                MapVerdict v = make_verdict(MapStatus::NotAbsolutelySeparating, "random-witness",
                                            w->negativity);
                v.partition = part;
                const Spectrum out =
                    hermitian_eigenvalues(HermitianMatrix::trusted(apply(c, w->input)));
                v.witness =
                    MapWitness{out.values(), w->input_recipe + ", rotated by the found unitary"};
                v.note = "negativity " + std::to_string(w->negativity);
                return v;
            }
            search_note = "no violation over " + std::to_string(witness_trials) + " trials";
        } catch (const std::invalid_argument& e) {
            // channels that cannot be applied (e.g. generalized Pauli in a
            // non-prime dimension) are still classifiable; the search is
            // simply unavailable
            search_note = std::string("witness search unavailable: ") + e.what();
        }
    }

    MapVerdict v = make_verdict(MapStatus::Undetermined,
                                tests.empty() ? "inconclusive" : tests.front().criterion,
                                tests.empty() ? 0.0 : tests.front().margin);
    v.partition = part;
    v.note = search_note;
    return v;
}

}  // namespace absep
