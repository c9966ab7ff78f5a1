#include "doctest.h"

#include "mie/errors.hpp"
#include "mie/wavefunction.hpp"

#include <cmath>
#include <vector>

using namespace mie;

namespace {

// Composite Simpson on [0, r_max] of R^2 r^{N-1}, independent of the
// Gauss-Laguerre path used by norm_check.
double simpson_norm(const BoundState& s, double r_max, int panels) {
    const double h = r_max / panels;
    double sum = 0.0;
    for (int i = 1; i < panels; ++i) {
        const double r = i * h;
        const double v = eval_radial(s, r);
        sum += (i % 2 ? 4.0 : 2.0) * v * v * std::pow(r, s.q.dim - 1);
    }
    const double v = eval_radial(s, r_max);
    sum += v * v * std::pow(r_max, s.q.dim - 1);
    return sum * h / 3.0;
}

std::vector<PotentialParams> sample_potentials() {
    return {coulomb(-1.0), kratzer_fues(5.0, 1.0), kratzer_fues(1.0, 2.0, 1.7, 0.8),
            modified_kratzer(2.0, 1.0), PotentialParams{0.4, -2.5, -1.0, 3.0, 1.3}};
}

} // namespace

TEST_CASE("hydrogen closed forms") {
    const BoundState g = make_bound_state(coulomb(-1.0), {0, 0, 3});
    CHECK(g.zeta == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(eval_radial(g, 1.0) == doctest::Approx(2.0 * std::exp(-1.0)).epsilon(1e-14));

    const BoundState s2 = make_bound_state(coulomb(-1.0), {1, 0, 3});
    const BoundState p2 = make_bound_state(coulomb(-1.0), {0, 1, 3});
    for (double r = 0.05; r < 30.0; r += 0.731) {
        CHECK(eval_radial(g, r) == doctest::Approx(2.0 * std::exp(-r)).epsilon(1e-13));
        CHECK(eval_radial(s2, r) ==
              doctest::Approx((1.0 - r / 2.0) * std::exp(-r / 2.0) / std::sqrt(2.0)).epsilon(1e-12));
        CHECK(eval_radial(p2, r) ==
              doctest::Approx(r * std::exp(-r / 2.0) / (2.0 * std::sqrt(6.0))).epsilon(1e-13));
    }
    CHECK_THROWS_AS(eval_radial(g, 0.0), mie::domain_error);
    CHECK_THROWS_AS(eval_radial(g, -1.0), mie::domain_error);
}

TEST_CASE("norm_check is one for the corrected constant") {
    for (const PotentialParams& p : sample_potentials())
        for (int dim = 2; dim <= 5; ++dim)
            for (int ell = 0; ell <= 2; ++ell)
                for (int n = 0; n <= 6; ++n) {
                    const BoundState s = make_bound_state(p, {n, ell, dim});
                    CHECK(std::abs(norm_check(s) - 1.0) <= 1e-10);
                }
}

TEST_CASE("norm_check agrees with an independent Simpson integral") {
    for (const PotentialParams& p : {coulomb(-1.0), kratzer_fues(5.0, 1.0)})
        for (int dim : {3, 4})
            for (int n = 0; n <= 3; ++n) {
                const BoundState s = make_bound_state(p, {n, 1, dim});
                const double r_max = decay_y(s, 1e-20) / (2.0 * s.eps);
                CHECK(simpson_norm(s, r_max, 20000) == doctest::Approx(1.0).epsilon(1e-9));
            }
}

TEST_CASE("norm_check sees a scaled constant") {
    BoundState s = make_bound_state(kratzer_fues(5.0, 1.0), {2, 1, 3});
    s.log_zeta += std::log(2.0);
    s.zeta *= 2.0;
    CHECK(norm_check(s) == doctest::Approx(4.0).epsilon(1e-10));
}

TEST_CASE("the alternative closed-form constant fails beyond the ground state") {
    // the two forms coincide at n = 0 when Gamma(alpha + 1) = 1, as for hydrogen s states
    const BoundState g = make_bound_state(coulomb(-1.0), {0, 0, 3});
    CHECK(log_norm_constant(g, NormalizationForm::gamma_variant) ==
          doctest::Approx(log_norm_constant(g)).epsilon(1e-14));
    for (const PotentialParams& p : {coulomb(-1.0), kratzer_fues(5.0, 1.0)}) {
        for (int n = 1; n <= 4; ++n) {
            BoundState s = make_bound_state(p, {n, 0, 3});
            s.log_zeta = log_norm_constant(s, NormalizationForm::gamma_variant);
            s.zeta = std::exp(s.log_zeta);
            CHECK(std::abs(norm_check(s) - 1.0) > 1e-3);
        }
    }
}

TEST_CASE("Laguerre and Kummer evaluation paths agree") {
    for (const PotentialParams& p : sample_potentials())
        for (int dim = 2; dim <= 5; ++dim)
            for (int n = 0; n <= 6; ++n) {
                const BoundState s = make_bound_state(p, {n, 1, dim});
                const double y_end = decay_y(s, 1e-10);
                for (double y = 0.01; y < y_end; y *= 1.07) {
                    const double r = y / (2.0 * s.eps);
                    const SignedLog a = log_radial(s, r);
                    const SignedLog b = log_radial_laguerre(s, r);
                    // skip points bracketing a node, where the log is ill conditioned
                    const int lo = log_radial(s, r / 1.01).sign, hi = log_radial(s, r * 1.01).sign;
                    if (lo != a.sign || hi != a.sign) continue;
                    CHECK(a.sign == b.sign);
                    CHECK(std::abs(a.log_abs - b.log_abs) <= 1e-11 * std::max(1.0, std::abs(a.log_abs)));
                }
            }
}

TEST_CASE("orthogonality across n") {
    for (const PotentialParams& p : {coulomb(-1.0), kratzer_fues(5.0, 1.0), PotentialParams{0.4, -2.5, -1.0, 3.0, 1.3}})
        for (int dim : {2, 3, 5})
            for (int ell = 0; ell <= 2; ++ell)
                for (int a = 0; a <= 3; ++a)
                    for (int b = a + 1; b <= 4; ++b) {
                        const BoundState sa = make_bound_state(p, {a, ell, dim});
                        const BoundState sb = make_bound_state(p, {b, ell, dim});
                        CHECK(std::abs(overlap(sa, sb, OverlapMeasure::r_space)) <= 1e-10);
                        CHECK(std::abs(overlap(sa, sb, OverlapMeasure::y_laguerre)) <= 1e-10);
                    }
    // with the full Jacobian in the shared variable the cosine does not vanish
    const BoundState s0 = make_bound_state(kratzer_fues(5.0, 1.0), {0, 0, 3});
    const BoundState s1 = make_bound_state(kratzer_fues(5.0, 1.0), {1, 0, 3});
    CHECK(std::abs(overlap(s0, s1, OverlapMeasure::y_jacobian)) > 1e-3);
    CHECK(overlap(s0, s0, OverlapMeasure::r_space) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(overlap(s1, s1, OverlapMeasure::y_jacobian) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(overlap(s0, make_bound_state(kratzer_fues(5.0, 1.0), {0, 1, 3}), OverlapMeasure::r_space),
                    mie::domain_error);
}

TEST_CASE("closed form satisfies the radial equation") {
    const RadialGrid grid(0.1, 20.0, 2000);
    for (const PotentialParams& p : {coulomb(-1.0), kratzer_fues(5.0, 1.0)})
        for (int dim = 2; dim <= 5; ++dim)
            for (int ell = 0; ell <= 2; ++ell)
                for (int n = 0; n <= 3; ++n) {
                    const BoundState s = make_bound_state(p, {n, ell, dim});
                    if (p.A == 0.0) CHECK(ode_residual(s, grid).relative <= 1e-6);
                    CHECK(ode_residual(s, default_residual_grid(s)).relative <= 1e-6);
                }
}

TEST_CASE("ODE residual shrinks at fourth order") {
    const BoundState s = make_bound_state(kratzer_fues(5.0, 1.0), {2, 1, 3});
    const double r0 = 0.3, r1 = 6.0;
    double prev = 0.0;
    for (int level = 0; level < 3; ++level) {
        const int count = 400 * (1 << level) + 1;
        const double res = ode_residual(s, RadialGrid(r0, r1, count)).relative;
        if (level > 0) {
            const double order = std::log2(prev / res);
            CHECK(order == doctest::Approx(4.0).epsilon(0.1));
        }
        prev = res;
    }
}

TEST_CASE("residual refinement ending on the default grid is fourth order") {
    for (const PotentialParams& p : {coulomb(-1.0), kratzer_fues(5.0, 1.0)})
        for (int dim : {2, 3, 5})
            for (int ell = 0; ell <= 2; ++ell)
                for (int n : {0, 3, 5}) {
                    const BoundState s = make_bound_state(p, {n, ell, dim});
                    const ResidualConvergence rc = residual_convergence(s, default_residual_grid(s));
                    REQUIRE(rc.orders.size() == 2);
                    for (double o : rc.orders) CHECK(o == doctest::Approx(4.0).epsilon(0.05));
                }
    const BoundState s = make_bound_state(coulomb(-1.0), {0, 0, 3});
    CHECK_THROWS_AS(residual_convergence(s, RadialGrid(0.1, 1.0, 20)), mie::domain_error);
}

TEST_CASE("ODE residual edge cases") {
    const BoundState s = make_bound_state(coulomb(-1.0), {0, 0, 3});
    const RadialGrid grid(0.1, 10.0, 200);
    const SampledFunction zero{grid, std::vector<double>(grid.nodes().size(), 0.0)};
    CHECK(ode_residual(s, zero).relative == 0.0);
    CHECK(ode_residual(s, zero).residual.max_abs() == 0.0);
    // a function from another channel is not a solution
    const BoundState other = make_bound_state(coulomb(-1.0), {1, 0, 3});
    CHECK(ode_residual(s, sample_radial(other, grid)).relative > 1e-2);
    CHECK_THROWS_AS(ode_residual(s, RadialGrid(0.1, 100.0, 100)), mie::resolution_error);
}

TEST_CASE("node count equals n") {
    for (const PotentialParams& p : sample_potentials())
        for (int dim = 2; dim <= 5; ++dim)
            for (int n = 0; n <= 8; ++n)
                CHECK(node_count(make_bound_state(p, {n, 2, dim})) == n);
    const std::vector<double> v{1.0, -1.0, 0.0, -2.0, 3.0, 0.0, 0.0, 4.0};
    CHECK(count_sign_changes(v) == 2);
}

TEST_CASE("analytic y-derivative matches finite differences") {
    const BoundState s = make_bound_state(kratzer_fues(5.0, 1.0), {3, 1, 4});
    for (double y = 0.5; y < 40.0; y += 0.77) {
        const double h = 1e-5 * y;
        const double fd = (eval_radial_y(s, y + h) - eval_radial_y(s, y - h)) / (2.0 * h);
        CHECK(radial_y_derivative(s, y) == doctest::Approx(fd).epsilon(1e-7).scale(std::exp(s.log_zeta)));
    }
}
