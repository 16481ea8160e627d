// Acceptance suite: one pass/fail line per criterion, exit 0 only when all
// criteria pass.  Each criterion pins its tolerances in code.

#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "absep/classifier.hpp"
#include "absep/demo.hpp"
#include "absep/json_io.hpp"
#include "absep/linalg.hpp"
#include "absep/state_criteria.hpp"
#include "absep/sweep.hpp"
#include "absep/witness.hpp"
#include "test_helpers.hpp"

using namespace absep;

namespace {

struct Criterion {
    std::string name;
    std::function<bool(std::string&)> run;
};

bool check(bool cond, std::string& detail, const std::string& msg) {
    if (!cond && detail.empty()) detail = msg;
    return cond;
}

// ── 1. symmetric two-qubit depolarizing threshold ───────────────────────────
bool crit_threshold(std::string& detail) {
    const double qs = local_dep_symmetric_threshold();
    std::ostringstream os;
    os << "q* = " << qs;
    detail = os.str();
    bool ok = std::abs(2 * qs * qs * qs - 2 * qs * qs + 3 * qs - 1) <= 1e-11;
    ok = ok && std::abs(qs - 0.3966) <= 5e-5;  // 4 published decimals
    ok = ok && local_dep_2q_exact(qs - 1e-6, qs - 1e-6).status ==
                   MapStatus::AbsolutelySeparating;
    ok = ok && local_dep_2q_exact(qs + 1e-6, qs + 1e-6).status ==
                   MapStatus::NotAbsolutelySeparating;
    return ok;
}

// ── 2. sufficient ⊆ exact on a 400×400 grid, contact points on both ─────────
bool crit_region_nesting_2q(std::string& detail) {
    const int steps = 400;
    const double width = 2.0 / steps;
    auto center = [&](int i) { return -1.0 + (i + 0.5) * width; };
    int violations = 0;
    for (int i = 0; i < steps; ++i)
        for (int j = 0; j < steps; ++j) {
            const bool suff =
                local_dep_2q_sufficient(center(i), center(j)).status ==
                MapStatus::AbsolutelySeparating;
            const bool exact = local_dep_2q_exact(center(i), center(j)).status ==
                               MapStatus::AbsolutelySeparating;
            if (suff && !exact) ++violations;
        }

    // both margins must change sign within the 3×3 cell neighborhood of
    // every contact point (±1/√5, ±1/3)
    int contact_misses = 0;
    for (double sx : {1.0, -1.0})
        for (double sy : {1.0, -1.0}) {
            const double px = sx / std::sqrt(5.0), py = sy / 3.0;
            const int ci = static_cast<int>((px + 1.0) / width);
            const int cj = static_cast<int>((py + 1.0) / width);
            double emin = 1e9, emax = -1e9, smin = 1e9, smax = -1e9;
            for (int di = -1; di <= 1; ++di)
                for (int dj = -1; dj <= 1; ++dj) {
                    const double x = center(ci + di), y = center(cj + dj);
                    const double em = local_dep_2q_exact(x, y).margin;
                    const double sm = local_dep_2q_sufficient(x, y).margin;
                    emin = std::min(emin, em);
                    emax = std::max(emax, em);
                    smin = std::min(smin, sm);
                    smax = std::max(smax, sm);
                }
            if (!(emin < 0 && emax > 0 && smin < 0 && smax > 0)) ++contact_misses;
        }

    std::ostringstream os;
    os << violations << " nesting violations, " << contact_misses << " contact misses";
    detail = os.str();
    return violations == 0 && contact_misses == 0;
}

// ── 3. four-qubit counterexample ─────────────────────────────────────────────
bool crit_example5(std::string& detail) {
    const Witness w = example5_witness();
    const ChannelSpec c = make_local_product(
        {make_depolarizing(4, 1.0 / 3.0), make_depolarizing(4, 1.0 / 3.0)});
    bool ok = w.negativity < -0.0235;
    ok = ok && std::abs(verify_witness(c, w) - w.negativity) <= 1e-9;

    // same pipeline with the entangling block removed (pure relabeling)
    ComplexMatrix perm(16, 16);
    for (int i = 0; i < 16; ++i) {
        const int b0 = (i >> 3) & 1, b1 = (i >> 2) & 1, b2 = (i >> 1) & 1, b3 = i & 1;
        perm((b0 << 3) | (b2 << 2) | (b1 << 1) | b3, i) = 1.0;
    }
    Witness plain{w.input, w.input_recipe, UnitaryMatrix(perm), w.partition, 0.0};
    plain.negativity = verify_witness(c, plain);
    ok = ok && plain.negativity >= -1e-9;

    std::ostringstream os;
    os << "negativity " << w.negativity << ", unrotated " << plain.negativity;
    detail = os.str();
    return ok;
}

// ── 4. extremal 2|4 spectrum ────────────────────────────────────────────────
bool crit_extremal_spectrum(std::string& detail) {
    const Spectrum w = Spectrum::state({11.0 / 48, 11.0 / 48, 23.0 / 144, 11.0 / 144, 11.0 / 144,
                                        11.0 / 144, 11.0 / 144, 11.0 / 144});
    const Verdict direct = abs_ppt_2n(w);
    bool ok = check(direct.status == Status::Holds, detail, "spectrum did not hold");
    ok = ok && check(std::abs(direct.margin) <= 1e-12, detail, "margin above 1e-12");
    const Verdict via_matrix = classify_state(ghz_diagonal_state(w), Bipartition(2, 4));
    ok = ok && check(via_matrix.status == Status::Holds, detail, "matrix route did not hold");
    if (detail.empty()) {
        std::ostringstream os;
        os << "margin " << direct.margin;
        detail = os.str();
    }
    return ok;
}

// ── 5. two-qubit purity bound ───────────────────────────────────────────────
bool crit_purity_bound(std::string& detail) {
    bool ok = purity_necessary(0.537, Bipartition(2, 2)).status == Status::Fails;
    ok = ok && purity_necessary(0.535, Bipartition(2, 2)).status != Status::Fails;

    Rng rng(101);
    int accepted = 0, failures = 0;
    while (accepted < 10000) {
        const Spectrum s = test_helpers::random_state_spectrum(4, rng);
        if (s.purity() <= 0.536) continue;
        ++accepted;
        const bool rejected =
            necessary_triple(s).status == Status::Fails ||
            purity_necessary(s.purity(), Bipartition(2, 2)).status == Status::Fails;
        if (!rejected) ++failures;
    }
    std::ostringstream os;
    os << failures << " undetected high-purity spectra of 10000";
    detail = os.str();
    return ok && failures == 0;
}

// ── 6. transpose-only point is AS for 2|n ───────────────────────────────────
bool crit_werner_holevo(std::string& detail) {
    bool ok = true;
    for (int n = 2; n <= 8; ++n)
        ok = ok && ctit_2n_exact(0.0, -1.0, n).status == MapStatus::AbsolutelySeparating;
    ok = ok && ctit_necessary(0.0, -1.0).status == MapStatus::Undetermined;
    detail = "n = 2..8";
    return ok;
}

// ── 7. global depolarizing exactness and witness ────────────────────────────
bool crit_global_depolarizing(std::string& detail) {
    const Bipartition part(2, 2);
    bool ok = covariant_ea_equivalence(Depolarizing{4, 1.0 / 3.0}, part).status ==
              MapStatus::AbsolutelySeparating;
    ok = ok && covariant_ea_equivalence(Depolarizing{4, 1.0 / 3.0 + 1e-6}, part).status ==
                   MapStatus::NotAbsolutelySeparating;

    const auto w = random_unitary_witness(make_depolarizing(4, 0.34), part, 1, 1);
    ok = ok && w.has_value();
    if (w) {
        // oracle: min PT eigenvalue of the q-depolarized Bell state
        ok = ok && w->negativity <= -0.004;
        ok = ok && std::abs(w->negativity - (1.0 - 3 * 0.34) / 4.0) <= 1e-9;
        std::ostringstream os;
        os << "negativity " << w->negativity;
        detail = os.str();
    }
    return ok;
}

// ── 8. closed forms against the numeric optimizer ───────────────────────────
bool crit_norm_oracle(std::string& detail) {
    Rng rng(103);
    double worst = 0.0;
    int draws = 0;
    auto compare = [&](const ChannelSpec& c, std::uint64_t seed) {
        const NormEstimate closed = max_output_purity(c);
        if (closed.method != NormMethod::ClosedForm) return false;
        const NormEstimate numeric = max_output_purity_numeric(c, seed);
        worst = std::max(worst, std::abs(closed.value - numeric.value));
        ++draws;
        return std::abs(closed.value - numeric.value) <= 1e-6;
    };

    bool ok = true;
    for (int it = 0; it < 50 && ok; ++it) {
        // unital qubit pairs
        ok = compare(make_local_product({make_unital_qubit(rng.uniform() * 2 - 1,
                                                           rng.uniform() * 2 - 1,
                                                           rng.uniform() * 2 - 1),
                                         make_unital_qubit(rng.uniform() * 2 - 1,
                                                           rng.uniform() * 2 - 1,
                                                           rng.uniform() * 2 - 1)}),
                     1000 + it);
        // qubit depolarizing pairs
        ok = ok && compare(make_local_product({make_depolarizing(2, rng.uniform() * 2 - 1),
                                               make_depolarizing(2, rng.uniform() * 2 - 1)}),
                           2000 + it);
        // generalized Pauli channels on prime dims
        {
            const int d = (it % 2 == 0) ? 2 : 3;
            std::vector<double> w = test_helpers::random_simplex(d + 2, rng);
            const double s = w.back();
            w.pop_back();
            ok = ok && compare(make_generalized_pauli(d, s, w), 3000 + it);
        }
        // bipartite depolarizing inside the positivity region
        {
            double a, b, g;
            do {
                a = rng.uniform() * 1.3 - 0.3;
                b = rng.uniform() * 1.3 - 0.3;
                g = rng.uniform() * 2.3 - 0.3;
            } while (!is_positivity_region(make_bipartite_depolarizing(2, 2, a, b, g)));
            ok = ok && compare(make_bipartite_depolarizing(2, 2, a, b, g), 4000 + it);
        }
    }
    std::ostringstream os;
    os << draws << " comparisons, worst gap " << worst;
    detail = os.str();
    return ok;
}

// ── 9. tensor stability bounds ──────────────────────────────────────────────
bool crit_tensor_stability(std::string& detail) {
    bool ok = true;
    // tracing map: never flagged (the bound degenerates at norm² = 1/d)
    const NormEstimate tracing = max_output_purity(make_tracing(3));
    for (long long n = 2; n <= 1000000 && ok; n = n * 10 + 1)
        ok = tensor_stability_bound(tracing, 3, n, true).status == MapStatus::Undetermined;
    ok = ok &&
         tensor_stability_bound(tracing, 3, 1000000, true).status == MapStatus::Undetermined;

    // identity qubit map: N > 9
    const NormEstimate idn{1.0, NormMethod::ClosedForm, false};
    ok = ok && tensor_stability_bound(idn, 2, 9).status == MapStatus::Undetermined;
    ok = ok && tensor_stability_bound(idn, 2, 10).status == MapStatus::NotAbsolutelySeparating;

    // any map with norm² > 1/d is flagged at the computed finite N
    for (const ChannelSpec& c : {make_depolarizing(2, 0.5), make_unital_qubit(0.3, 0.2, 0.1),
                                 make_generalized_pauli(3, 0.2, {0.2, 0.2, 0.2, 0.2})}) {
        const NormEstimate norm = max_output_purity(c);
        ok = ok && norm.value > 1.0 / c.dim();
        const double bound = 8.0 / (c.dim() * norm.value - 1.0) + 1.0;
        const long long flagged = static_cast<long long>(std::floor(bound)) + 1;
        ok = ok && tensor_stability_bound(norm, c.dim(), flagged).status ==
                       MapStatus::NotAbsolutelySeparating;
        ok = ok && tensor_stability_bound(norm, c.dim(), flagged - 1).status ==
                       MapStatus::Undetermined;
    }
    detail = "tracing stable to 1e6; identity flips at N = 10";
    return ok;
}

// ── 10. Φ_αβ region nesting at mn = 8 ───────────────────────────────────────
bool crit_ctit_nesting(std::string& detail) {
    const int steps = 300;
    int violations = 0;
    for (int i = 0; i < steps; ++i)
        for (int j = 0; j < steps; ++j) {
            const double a = -1.5 + (i + 0.5) * 4.5 / steps;
            const double b = -1.5 + (j + 0.5) * 4.5 / steps;
            const bool suff =
                ctit_sufficient(a, b, Bipartition(2, 4)).status == MapStatus::AbsolutelySeparating;
            const bool exact = ctit_2n_exact(a, b, 4).status == MapStatus::AbsolutelySeparating;
            const bool nec_violated = ctit_necessary(a, b).status ==
                                      MapStatus::NotAbsolutelySeparating;
            if ((suff && !exact) || (exact && nec_violated)) ++violations;
        }
    std::ostringstream os;
    os << violations << " violating cells of " << steps * steps;
    detail = os.str();
    return violations == 0;
}

// ── 11. property suites ─────────────────────────────────────────────────────
bool crit_property_suites(std::string& detail) {
    Rng rng(104);
    bool ok = true;

    // eigenvalue sum = trace
    for (int it = 0; it < 1000 && ok; ++it) {
        const int dim = 2 + static_cast<int>(rng.uniform() * 7);
        const HermitianMatrix a = random_hermitian(dim, rng);
        ok = std::abs(hermitian_eigenvalues(a).sum() - a.trace_real()) <= 1e-9;
    }
    ok = check(ok, detail, "eigenvalue sum vs trace");

    // partial transpose involution (exact)
    for (int it = 0; it < 1000 && ok; ++it) {
        const DensityMatrix rho = test_helpers::random_density(6, rng);
        const HermitianMatrix twice =
            partial_transpose(partial_transpose(rho.herm(), Bipartition(2, 3)), Bipartition(2, 3));
        ok = test_helpers::max_entry_diff(twice.mat(), rho.mat()) == 0.0;
    }
    ok = check(ok, detail, "partial transpose involution");

    // Haar unitarity residual
    for (int it = 0; it < 1000 && ok; ++it)
        ok = haar_unitary(2 + it % 7, rng).mat().unitarity_defect() <= 1e-10;
    ok = check(ok, detail, "haar unitarity");

    // spectrum invariance under conjugation
    for (int it = 0; it < 1000 && ok; ++it) {
        const int dim = 2 + it % 5;
        const DensityMatrix rho = test_helpers::random_density(dim, rng);
        const UnitaryMatrix u = haar_unitary(dim, rng);
        const Spectrum before = hermitian_eigenvalues(rho.herm());
        const Spectrum after =
            hermitian_eigenvalues(HermitianMatrix::trusted(conjugate_by(u.mat(), rho.mat())));
        for (std::size_t i = 0; i < before.size() && ok; ++i)
            ok = std::abs(before[i] - after[i]) <= 1e-9;
    }
    ok = check(ok, detail, "conjugation invariance");

    // majorization: unital post-processing keeps the exact 2|n property
    int pairs = 0;
    for (int it = 0; it < 4000 && pairs < 1000 && ok; ++it) {
        const double t = 0.6 * rng.uniform();
        std::vector<double> mix = test_helpers::random_simplex(8, rng);
        for (double& x : mix) x = (1.0 - t) / 8.0 + t * x;
        const Spectrum a = Spectrum::state(std::move(mix));
        if (abs_ppt_2n(a).status != Status::Holds) continue;
        ++pairs;
        const Spectrum b = test_helpers::majorized_mixture(a, rng);
        ok = majorizes(a, b) && abs_ppt_2n(b).status == Status::Holds;
    }
    ok = check(ok && pairs >= 1000, detail, "majorization surrogate");

    if (detail.empty()) detail = "5 suites x 1000 instances";
    return ok;
}

// ── 12. sweep determinism ───────────────────────────────────────────────────
bool crit_determinism(std::string& detail) {
    SweepSpec spec = preset_sweep("figure3");
    spec.axes[0].steps = 40;  // keep the acceptance run quick; byte-identity
    spec.axes[1].steps = 40;  // is independent of the grid size
    spec.seed = 11;
    std::ostringstream a, b;
    run_sweep(spec, a, SweepFormat::Csv);
    run_sweep(spec, b, SweepFormat::Csv);
    const bool ok = a.str() == b.str() && !a.str().empty();
    detail = ok ? "byte-identical CSV" : "outputs differ";
    return ok;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"1 two-qubit depolarizing threshold q*", crit_threshold},
        {"2 sufficient-vs-exact nesting and contact points", crit_region_nesting_2q},
        {"3 four-qubit counterexample reproduction", crit_example5},
        {"4 extremal 2|4 spectrum", crit_extremal_spectrum},
        {"5 two-qubit purity bound", crit_purity_bound},
        {"6 transpose-only point AS for 2|n", crit_werner_holevo},
        {"7 global depolarizing exactness", crit_global_depolarizing},
        {"8 norm closed forms vs numeric optimizer", crit_norm_oracle},
        {"9 tensor stability bounds", crit_tensor_stability},
        {"10 trace/id/transpose region nesting", crit_ctit_nesting},
        {"11 property suites", crit_property_suites},
        {"12 sweep determinism", crit_determinism},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        if (!ok) ++failed;
        std::printf("%s  criterion %s%s%s\n", ok ? "PASS" : "FAIL", c.name.c_str(),
                    detail.empty() ? "" : "  — ", detail.c_str());
    }
    if (failed) std::printf("%d criteria FAILED\n", failed);
    else std::printf("all %zu criteria passed\n", criteria.size());
    return failed == 0 ? 0 : 1;
}
