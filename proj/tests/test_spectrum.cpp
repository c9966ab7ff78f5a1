#include "doctest.h"

#include "mie/errors.hpp"
#include "mie/spectrum.hpp"

#include <cmath>
#include <random>

using namespace mie;

TEST_CASE("nu_product") {
    CHECK(nu_product(coulomb(-1.0), 0, 3) == 0.0);
    CHECK(nu_product(coulomb(-1.0), 2, 3) == 6.0);
    CHECK(nu_product(PotentialParams{5.0, -1.0, 0.0}, 0, 3) == 10.0);
    CHECK(nu_product(PotentialParams{5.0, -1.0, 0.0, 2.0, 0.5}, 1, 4) == doctest::Approx(3.0 + 80.0));
}

TEST_CASE("k_ell_N roots") {
    CHECK(k_ell_N(coulomb(-1.0), 0, 3) == 1.0);
    CHECK(k_ell_N(coulomb(-1.0), 2, 5) == 5.0);
    const double k = k_ell_N(PotentialParams{5.0, -1.0, 0.0}, 0, 3);
    CHECK(k == doctest::Approx((1.0 + std::sqrt(41.0)) / 2.0).epsilon(1e-15));
    CHECK(std::abs(k * k - k - 10.0) <= 1e-12);
}

TEST_CASE("k_ell_N error kinds") {
    // 2MA/hbar^2 = -2 makes (N-2)^2 + 4 nu(nu+1) negative for N = 3, ell = 0
    try {
        k_ell_N(PotentialParams{-1.0, -1.0, 0.0}, 0, 3);
        FAIL("expected FallToCenter");
    } catch (const bound_state_error& e) {
        CHECK(e.kind() == ChannelStatus::fall_to_center);
    }
    // exactly zero discriminant is accepted with a flag
    const BoundState s = make_bound_state(PotentialParams{-0.125, -1.0, 0.0}, {0, 0, 3});
    CHECK(s.borderline);
    CHECK(s.k == doctest::Approx(0.5));
    CHECK(channel_status(coulomb(-1.0), {0, 0, 2}) == ChannelStatus::borderline);
    CHECK(channel_status(coulomb(-1.0), {0, 1, 2}) == ChannelStatus::ok);
    CHECK(channel_status(coulomb(-1.0), {0, 0, 1}) == ChannelStatus::invalid_numbers);
    CHECK(channel_status(coulomb(-1.0), {-1, 0, 3}) == ChannelStatus::invalid_numbers);
}

TEST_CASE("k_ell_N quadratic residual and the A = 0 closed form") {
    std::mt19937 gen(7);
    std::uniform_real_distribution<double> a_dist(-0.2, 30.0);
    for (int trial = 0; trial < 200; ++trial) {
        const PotentialParams p{a_dist(gen), -1.0, 0.0};
        for (int dim = 2; dim <= 8; ++dim)
            for (int ell = 0; ell <= 4; ++ell) {
                if (channel_status(p, {0, ell, dim}) == ChannelStatus::fall_to_center) continue;
                const double k = k_ell_N(p, ell, dim);
                const double nn = nu_product(p, ell, dim);
                CHECK(std::abs(k * k - (dim - 2.0) * k - nn) <= 1e-10 * std::max(1.0, nn));
                CHECK(k >= 0.0);
            }
    }
    for (int dim = 2; dim <= 12; ++dim)
        for (int ell = 0; ell <= 10; ++ell)
            CHECK(std::abs(k_ell_N(coulomb(-1.0), ell, dim) - (ell + dim - 2.0)) <= 1e-12);
}

TEST_CASE("epsilon") {
    CHECK(epsilon(coulomb(-1.0), {0, 0, 3}) == 1.0);
    CHECK(epsilon(coulomb(-1.0), {1, 0, 3}) == 0.5);
    const double k = (1.0 + std::sqrt(41.0)) / 2.0;
    CHECK(epsilon(kratzer_fues(5.0, 1.0), {0, 0, 3}) == doctest::Approx(20.0 / (2.0 * k)).epsilon(1e-15));
    CHECK(epsilon(kratzer_fues(5.0, 1.0), {0, 0, 3}) == doctest::Approx(2.7016).epsilon(1e-4));
    try {
        epsilon(PotentialParams{0.0, 0.0, 0.0}, {0, 0, 3});
        FAIL("expected NoBoundStates");
    } catch (const bound_state_error& e) {
        CHECK(e.kind() == ChannelStatus::no_bound_states);
    }
}

TEST_CASE("energy") {
    for (int n = 0; n <= 4; ++n)
        for (int ell = 0; ell <= 3; ++ell)
            CHECK(energy(coulomb(-1.0), {n, ell, 3}) ==
                  doctest::Approx(-0.5 / ((n + ell + 1.0) * (n + ell + 1.0))).epsilon(1e-15));
    const double k = (1.0 + std::sqrt(41.0)) / 2.0;
    const double e = energy(kratzer_fues(5.0, 1.0), {0, 0, 3});
    CHECK(e == doctest::Approx(-50.0 / (k * k)).epsilon(1e-14));
    CHECK(e == doctest::Approx(-3.6492).epsilon(1e-4));

    // E -> C as n grows
    const PotentialParams shifted{2.0, -3.0, 1.25};
    CHECK(std::abs(energy(shifted, {100000, 0, 3}) - 1.25) < 1e-9);
}

TEST_CASE("bound state invariants and the energy-epsilon identity") {
    for (const PotentialParams& p : {coulomb(-1.0), kratzer_fues(5.0, 1.0), kratzer_fues(1.0, 2.0, 1.7, 0.8),
                                     modified_kratzer(2.0, 1.0), PotentialParams{0.4, -2.5, -1.0, 3.0, 1.3}})
        for (int dim = 2; dim <= 6; ++dim)
            for (int ell = 0; ell <= 3; ++ell)
                for (int n = 0; n <= 5; ++n) {
                    const BoundState s = make_bound_state(p, {n, ell, dim});
                    CHECK(s.k >= 0.0);
                    CHECK(2.0 * s.k + 3.0 - dim > 0.0);
                    CHECK(s.eps > 0.0);
                    CHECK(s.energy < p.C);
                    const double via_eps = p.C - p.hbar * p.hbar * s.eps * s.eps / (2.0 * p.M);
                    CHECK(std::abs(s.energy - via_eps) <= 1e-12 * std::abs(s.energy));
                    CHECK(s.alpha == doctest::Approx(2.0 * s.k + 2.0 - dim));
                }
}

TEST_CASE("interdimensional degeneracy E(n, ell, N) = E(n, ell + 1, N - 2)") {
    for (const PotentialParams& p : {coulomb(-1.0), kratzer_fues(5.0, 1.0), PotentialParams{0.7, -1.3, 0.2, 1.4, 0.9}})
        for (int dim = 4; dim <= 9; ++dim)
            for (int ell = 0; ell <= 4; ++ell)
                for (int n = 0; n <= 5; ++n) {
                    const double a = energy(p, {n, ell, dim});
                    const double b = energy(p, {n, ell + 1, dim - 2});
                    CHECK(std::abs(a - b) <= 1e-12 * std::abs(a));
                }
}

TEST_CASE("monotonicity in n and ell") {
    for (const PotentialParams& p : {coulomb(-1.0), kratzer_fues(5.0, 1.0), kratzer_fues(0.5, 3.0)})
        for (int dim = 2; dim <= 6; ++dim)
            for (int ell = 0; ell <= 4; ++ell)
                for (int n = 0; n <= 6; ++n) {
                    CHECK(energy(p, {n + 1, ell, dim}) > energy(p, {n, ell, dim}));
                    CHECK(energy(p, {n, ell + 1, dim}) > energy(p, {n, ell, dim}));
                }
}

TEST_CASE("spectrum_table") {
    const auto rows = spectrum_table(coulomb(-1.0), 1, 1, 3);
    REQUIRE(rows.size() == 4);
    const auto find = [&](int n, int ell) {
        for (const auto& r : rows)
            if (r.q.n == n && r.q.ell == ell) return r;
        FAIL("row missing");
        return rows.front();
    };
    CHECK(find(0, 1).energy == doctest::Approx(-0.125));
    CHECK(find(1, 0).energy == doctest::Approx(-0.125));

    for (const auto& r : spectrum_table(PotentialParams{0.0, 1.0, 0.0}, 2, 2, 3)) {
        CHECK(r.status == ChannelStatus::no_bound_states);
        CHECK(std::isnan(r.energy));
    }
    CHECK(spectrum_table(coulomb(-1.0), 0, 0, 3).size() == 1);

    // N = 5 rows reappear in the N = 3 table one ell higher
    const auto t3 = spectrum_table(kratzer_fues(5.0, 1.0), 3, 3, 3);
    const auto t5 = spectrum_table(kratzer_fues(5.0, 1.0), 3, 2, 5);
    for (const auto& r5 : t5)
        for (const auto& r3 : t3)
            if (r3.q.n == r5.q.n && r3.q.ell == r5.q.ell + 1)
                CHECK(std::abs(r3.energy - r5.energy) <= 1e-12 * std::abs(r5.energy));
}
