#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "absep/linalg.hpp"
#include "absep/state_criteria.hpp"
#include "test_helpers.hpp"

using namespace absep;

namespace {
Spectrum extremal_2x4_weights() {
    return Spectrum::state({11.0 / 48, 11.0 / 48, 23.0 / 144, 11.0 / 144, 11.0 / 144, 11.0 / 144,
                            11.0 / 144, 11.0 / 144});
}
}  // namespace

TEST_CASE("exact 2|n test") {
    CHECK(abs_ppt_2n(Spectrum::state({0.25, 0.25, 0.25, 0.25})).status == Status::Holds);
    CHECK(abs_ppt_2n(Spectrum::state({1.0, 0.0, 0.0, 0.0})).status == Status::Fails);

    // the purity-extremal 2|4 spectrum saturates the bound: 11/48 = 3·11/144
    const Verdict v = abs_ppt_2n(extremal_2x4_weights());
    CHECK(v.status == Status::Holds);
    CHECK(std::abs(v.margin) <= 1e-12);

    CHECK_THROWS_AS(abs_ppt_2n(Spectrum::state({0.5, 0.3, 0.2})), std::invalid_argument);
}

TEST_CASE("separable ball") {
    CHECK(separable_ball(Spectrum::state({0.25, 0.25, 0.25, 0.25}), Bipartition(2, 2)).status ==
          Status::Holds);
    CHECK(separable_ball(Spectrum::state({1, 0, 0, 0}), Bipartition(2, 2)).status ==
          Status::Undetermined);
    // boundary purity exactly 1/(mn-1) is inside
    const Spectrum boundary = Spectrum::state({0.2, 0.2, 0.2, 0.2, 0.2, 0.0});
    const Verdict v = separable_ball(boundary, Bipartition(2, 3));
    CHECK(v.status == Status::Holds);
    CHECK(std::abs(v.margin) <= 1e-15);
    CHECK_THROWS_AS(separable_ball(boundary, Bipartition(2, 2)), std::invalid_argument);
}

TEST_CASE("triple necessary test") {
    CHECK(necessary_triple(Spectrum::state({1, 0, 0, 0})).status == Status::Fails);
    CHECK(necessary_triple(Spectrum::state({0.25, 0.25, 0.25, 0.25})).status ==
          Status::Undetermined);
    CHECK(necessary_triple(Spectrum::state({0.4, 0.2, 0.2, 0.2})).status == Status::Undetermined);
    CHECK_THROWS_AS(necessary_triple(Spectrum::state({0.6, 0.4})), std::invalid_argument);
}

TEST_CASE("minimal largest eigenvalue at fixed purity") {
    // uniform on k levels
    for (int k = 2; k <= 6; ++k)
        CHECK(min_largest_eigenvalue(1.0 / k, 8) == doctest::Approx(1.0 / k).epsilon(1e-12));
    CHECK(min_largest_eigenvalue(1.0, 4) == 1.0);

    // frozen value: (1 + √0.1)/2 at μ = 0.55, dim 4
    CHECK(min_largest_eigenvalue(0.55, 4) == doctest::Approx(0.6581138830084189).epsilon(1e-12));

    CHECK_THROWS_AS(min_largest_eigenvalue(0.1, 4), std::invalid_argument);

    SUBCASE("oracle: grid minimization over the k-level family") {
        // spectra (λ1 ×(k-1), 1-(k-1)λ1, 0…) with purity μ; bisect λ1 per k
        const double mu = 0.55;
        const int dim = 4;
        double best = 1.0;
        for (int k = 2; k <= dim; ++k) {
            double lo = 1.0 / k, hi = 1.0;
            for (int it = 0; it < 200; ++it) {
                const double l1 = 0.5 * (lo + hi);
                const double rest = 1.0 - (k - 1) * l1;
                if (rest < 0) {
                    hi = l1;
                    continue;
                }
                const double pur = (k - 1) * l1 * l1 + rest * rest;
                (pur > mu ? hi : lo) = l1;
            }
            const double l1 = 0.5 * (lo + hi);
            const double rest = 1.0 - (k - 1) * l1;
            const double pur = (k - 1) * l1 * l1 + rest * rest;
            if (rest >= -1e-12 && rest <= l1 + 1e-9 && std::abs(pur - mu) <= 1e-9)
                best = std::min(best, l1);
        }
        CHECK(min_largest_eigenvalue(mu, dim) == doctest::Approx(best).epsilon(1e-9));
    }

    SUBCASE("oracle: random spectra never undercut the bound") {
        Rng rng(77);
        for (int it = 0; it < 2000; ++it) {
            const Spectrum s = test_helpers::random_state_spectrum(4, rng);
            CHECK(s[0] >= min_largest_eigenvalue(s.purity(), 4) - 1e-9);
        }
    }
}

TEST_CASE("purity-only necessary test") {
    // two-qubit threshold (√3-1)² ≈ 0.536
    CHECK(purity_necessary(0.55, Bipartition(2, 2)).status == Status::Fails);
    CHECK(purity_necessary(0.535, Bipartition(2, 2)).status == Status::Undetermined);
    CHECK(purity_necessary(0.25, Bipartition(2, 2)).status == Status::Undetermined);
    CHECK(purity_necessary_threshold(4) ==
          doctest::Approx((std::sqrt(3.0) - 1.0) * (std::sqrt(3.0) - 1.0)).epsilon(1e-10));

    // hyperbola fires first when μ > 9/(mn+8)
    const Verdict h = purity_necessary(9.0 / 14.0 + 1e-3, Bipartition(2, 3));
    CHECK(h.status == Status::Fails);
    CHECK(h.criterion == "purity-hyperbola");

    CHECK_THROWS_AS(purity_necessary(1.2, Bipartition(2, 2)), std::invalid_argument);
    CHECK_THROWS_AS(purity_necessary(0.1, Bipartition(2, 2)), std::invalid_argument);
}

TEST_CASE("N-qubit ball") {
    // N = 2: bound is (1 + 6/17)/4 ≈ 0.338 > 1/4
    CHECK(nqubit_ball(Spectrum::state({0.25, 0.25, 0.25, 0.25}), 2).status == Status::Holds);
    CHECK(nqubit_ball(Spectrum::state({1, 0, 0, 0, 0, 0, 0, 0}), 3).status ==
          Status::Undetermined);
    CHECK_THROWS_AS(nqubit_ball(Spectrum::state({0.5, 0.3, 0.2}), 2), std::invalid_argument);

    // boundary included: spectrum (a, b, b, b) with purity exactly at the bound
    const double bound = 0.25 * (1.0 + (54.0 / 17.0) / 9.0);
    const double a = (1.0 + std::sqrt(3.0 * (4.0 * bound - 1.0))) / 4.0;
    const double b = (1.0 - a) / 3.0;
    const Verdict v = nqubit_ball(Spectrum::state({a, b, b, b}), 2);
    CHECK(v.status == Status::Holds);
    CHECK(std::abs(v.margin) <= 1e-12);
}

TEST_CASE("GHZ-diagonal construction") {
    // uniform weights give the maximally mixed state
    const DensityMatrix umix = ghz_diagonal_state(Spectrum::state(std::vector<double>(8, 0.125)));
    CHECK(test_helpers::max_entry_diff(umix.mat(), ComplexMatrix::identity(8) * Complex(0.125)) <=
          1e-12);

    // single weight gives the corresponding pure basis state
    const DensityMatrix g1 = ghz_diagonal_state(Spectrum::state({1, 0, 0, 0, 0, 0, 0, 0}));
    CHECK(purity(g1.herm()) == doctest::Approx(1.0).epsilon(1e-12));
    const CVector v1 = ghz_basis_vector(1);
    CHECK(std::abs(inner(v1, mat_vec(g1.mat(), v1)) - Complex(1.0)) <= 1e-12);

    // basis orthonormality
    for (int k = 1; k <= 8; ++k)
        for (int l = 1; l <= 8; ++l) {
            const Complex ip = inner(ghz_basis_vector(k), ghz_basis_vector(l));
            CHECK(std::abs(ip - (k == l ? Complex(1.0) : Complex(0.0))) <= 1e-12);
        }

    // eigensolving the extremal-weights construction returns exactly those weights
    const Spectrum w = extremal_2x4_weights();
    const Spectrum ev = state_spectrum(ghz_diagonal_state(w));
    for (std::size_t i = 0; i < 8; ++i) CHECK(std::abs(ev[i] - w[i]) <= 1e-10);
}

TEST_CASE("classification cascade") {
    // maximally mixed holds for any partition; pure fails
    for (const Partition& part :
         {Partition(Bipartition(2, 2)), Partition(Bipartition(3, 3)),
          Partition(MultiPartition::qubits(3))}) {
        const int d = partition_dim(part);
        std::vector<double> unif(d, 1.0 / d);
        CHECK(classify_spectrum(Spectrum::state(unif), part).status == Status::Holds);
        std::vector<double> pure(d, 0.0);
        pure[0] = 1.0;
        CHECK(classify_spectrum(Spectrum::state(pure), part).status == Status::Fails);
    }

    // GHZ-diagonal state with the extremal spectrum: AS w.r.t. 2|4
    const Verdict v = classify_state(ghz_diagonal_state(extremal_2x4_weights()), Bipartition(2, 4));
    CHECK(v.status == Status::Holds);
    CHECK(v.criterion == "abs-ppt-2n");

    // the same spectrum is not inside the 2|2|2 full-separability ball
    const Verdict mv = classify_spectrum(extremal_2x4_weights(), MultiPartition::qubits(3));
    CHECK(mv.status == Status::Undetermined);
}

TEST_CASE("classification is spectrum-only: invariant under conjugation") {
    Rng rng(21);
    for (int it = 0; it < 50; ++it) {
        const DensityMatrix rho = test_helpers::random_density(4, rng);
        const UnitaryMatrix u = haar_unitary(4, rng);
        const DensityMatrix rotated(conjugate_by(u.mat(), rho.mat()));
        const Verdict a = classify_state(rho, Bipartition(2, 2));
        const Verdict b = classify_state(rotated, Bipartition(2, 2));
        CHECK(a.status == b.status);
        CHECK(a.criterion == b.criterion);
        CHECK(std::abs(a.margin - b.margin) <= 1e-9);
    }
}

TEST_CASE("exactness chain on random 8-level spectra") {
    Rng rng(22);
    int holds = 0;
    for (int it = 0; it < 10000; ++it) {
        const Spectrum s = test_helpers::random_state_spectrum(8, rng);
        const bool exact_holds = abs_ppt_2n(s).status == Status::Holds;
        const bool triple_fails = necessary_triple(s).status == Status::Fails;
        const bool purity_fails =
            purity_necessary(s.purity(), Bipartition(2, 4)).status == Status::Fails;
        if (exact_holds) {
            ++holds;
            CHECK_FALSE(triple_fails);
        }
        if (!triple_fails) CHECK_FALSE(purity_fails);
    }
    CHECK(holds > 0);  // the sample exercises both branches
}

TEST_CASE("ball is inside the exact 2|n set") {
    Rng rng(23);
    for (int it = 0; it < 10000; ++it) {
        const Spectrum s = test_helpers::random_state_spectrum(8, rng);
        if (separable_ball(s, Bipartition(2, 4)).status == Status::Holds)
            CHECK(abs_ppt_2n(s).status == Status::Holds);
    }
}

TEST_CASE("majorization closes the exact 2|n set downward") {
    Rng rng(24);
    int tested = 0;
    for (int it = 0; it < 1000; ++it) {
        // blend toward the maximally mixed spectrum so a sizeable fraction
        // of the sample actually lies in the exact 2|4 set
        const double t = 0.6 * rng.uniform();
        std::vector<double> mix = test_helpers::random_simplex(8, rng);
        for (double& x : mix) x = (1.0 - t) / 8.0 + t * x;
        const Spectrum a = Spectrum::state(std::move(mix));
        if (abs_ppt_2n(a).status != Status::Holds) continue;
        ++tested;
        const Spectrum b = test_helpers::majorized_mixture(a, rng);
        REQUIRE(majorizes(a, b));
        CHECK(abs_ppt_2n(b).status == Status::Holds);
    }
    CHECK(tested > 100);
}
