#include "doctest.h"

#include "mie/errors.hpp"
#include "mie/potential.hpp"
#include "mie/spectrum.hpp"

#include <cmath>

using namespace mie;

TEST_CASE("eval_potential arithmetic") {
    CHECK(eval_potential(PotentialParams{0, 0, 5}, 2.0) == 5.0);
    CHECK(eval_potential(PotentialParams{1, -2, 0}, 1.0) == -1.0);
    CHECK(eval_potential(kratzer_fues(5.0, 1.0), 1.0) == doctest::Approx(-5.0));
    CHECK_THROWS_AS(eval_potential(PotentialParams{}, 0.0), mie::domain_error);
    CHECK_THROWS_AS(eval_potential(PotentialParams{}, -1.0), mie::domain_error);
}

TEST_CASE("eval_mie_general") {
    const MiePreset kf{5.0, 1.3, 2.0, 1.0};
    CHECK(eval_mie_general(kf, 1.3) == doctest::Approx(-5.0).epsilon(1e-15));

    // decays monotonically to zero past the minimum for positive exponents
    const MiePreset lj{2.0, 1.0, 12.0, 6.0};
    double prev = eval_mie_general(lj, 2.0);
    for (double r = 3.0; r < 1e4; r *= 1.5) {
        const double v = eval_mie_general(lj, r);
        CHECK(std::abs(v) < std::abs(prev));
        prev = v;
    }
    CHECK(std::abs(eval_mie_general(lj, 1e6)) < 1e-30);

    CHECK_THROWS_AS(eval_mie_general(kf, 0.0), mie::domain_error);
    CHECK_THROWS_AS(eval_mie_general(MiePreset{1.0, 1.0, 2.0, 2.0}, 1.0), mie::domain_error);
    CHECK_THROWS_AS(eval_mie_general(MiePreset{-1.0, 1.0, 2.0, 1.0}, 1.0), mie::domain_error);
}

TEST_CASE("general Mie with (2, 1) is the Kratzer-Fues potential") {
    for (double D0 : {0.5, 5.0})
        for (double r0 : {0.7, 1.0, 2.5}) {
            const MiePreset m{D0, r0, 2.0, 1.0};
            const PotentialParams p = kratzer_fues(D0, r0);
            for (double r = 0.01 * r0; r <= 100.0 * r0; r *= 1.1) {
                const double a = eval_mie_general(m, r);
                const double b = eval_potential(p, r);
                CHECK(std::abs(a - b) <= 1e-12 * std::abs(b));
            }
        }
}

TEST_CASE("kratzer_fues parameter map") {
    const PotentialParams a = kratzer_fues(1.0, 1.0);
    CHECK(a.A == 1.0);
    CHECK(a.B == -2.0);
    CHECK(a.C == 0.0);
    const PotentialParams b = kratzer_fues(5.0, 2.0);
    CHECK(b.A == 20.0);
    CHECK(b.B == -20.0);
    CHECK(b.C == 0.0);
    CHECK(kratzer_fues(0.3, 7.0).B < 0.0);
    CHECK_THROWS_AS(kratzer_fues(0.0, 1.0), mie::domain_error);
    CHECK_THROWS_AS(kratzer_fues(1.0, -1.0), mie::domain_error);
    CHECK_THROWS_AS(kratzer_fues(1.0, 1.0, 0.0), mie::domain_error);
}

TEST_CASE("modified_kratzer conventions") {
    const PotentialParams lit = modified_kratzer(1.0, 1.0, 1.0, 1.0, KratzerConvention::inverted);
    const PotentialParams std_ = modified_kratzer(1.0, 1.0);
    CHECK(lit.A == -1.0);
    CHECK(lit.B == 2.0);
    CHECK(lit.C == -1.0);
    CHECK(std_.A == 1.0);
    CHECK(std_.B == -2.0);
    CHECK(std_.C == 1.0);
    CHECK(eval_potential(lit, 1.0) == doctest::Approx(0.0));
    CHECK(eval_potential(std_, 1.0) == doctest::Approx(0.0));
    // the inverted convention equals -D0 ((r - r0)/r)^2 pointwise
    for (double r = 0.1; r < 20.0; r += 0.37)
        CHECK(eval_potential(lit, r) == doctest::Approx(-std::pow((r - 1.0) / r, 2)));

    CHECK(channel_status(std_, {0, 0, 3}) == ChannelStatus::ok);
    // the attractive 1/r^2 term collapses low ell; higher ell sees a repulsive Coulomb tail
    CHECK(channel_status(lit, {0, 0, 3}) == ChannelStatus::fall_to_center);
    CHECK(channel_status(lit, {0, 2, 3}) == ChannelStatus::no_bound_states);
    CHECK_THROWS_AS(modified_kratzer(-1.0, 1.0), mie::domain_error);
}

TEST_CASE("standard modified Kratzer is non-negative with its zero at r0") {
    const double D0 = 3.0, r0 = 1.7;
    const PotentialParams p = modified_kratzer(D0, r0);
    for (double r = 0.05; r < 50.0; r *= 1.03) {
        const double v = eval_potential(p, r);
        CHECK(v >= -1e-15);
        if (std::abs(r - r0) > 1e-3) CHECK(v > 0.0);
    }
    CHECK(std::abs(eval_potential(p, r0)) <= 1e-14);
}

TEST_CASE("coulomb preset") {
    const PotentialParams p = coulomb(-1.0);
    CHECK(p.A == 0.0);
    CHECK(p.B == -1.0);
    CHECK(p.C == 0.0);
    CHECK(eval_potential(p, 2.0) == -0.5);
}

TEST_CASE("AnyPotential helpers") {
    const AnyPotential three = PotentialParams{1.0, -2.0, 0.5, 2.0, 0.5};
    const AnyPotential general = MieSystem{{5.0, 1.0, 4.0, 2.0}, 1.5, 1.0};
    CHECK(mass_of(three) == 2.0);
    CHECK(hbar_of(three) == 0.5);
    CHECK(asymptote_of(three) == 0.5);
    CHECK(asymptote_of(general) == 0.0);
    CHECK(eval_potential(general, 1.0) == doctest::Approx(-5.0));
    double a = 0.0;
    CHECK(inverse_square_coefficient(three, a));
    CHECK(a == 1.0);
    CHECK_FALSE(inverse_square_coefficient(general, a));
    CHECK(inverse_square_coefficient(AnyPotential{MieSystem{{5.0, 2.0, 2.0, 1.0}}}, a));
    CHECK(a == doctest::Approx(20.0));
}
