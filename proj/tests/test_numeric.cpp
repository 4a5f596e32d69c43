#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <confmech/darboux.hpp>
#include <confmech/numeric.hpp>

#include <cmath>

using namespace confmech;

namespace {

constexpr double kTol = 5e-3;

GridSpec grid_n(int points) { return GridSpec{1.2e-3, 12.0, points}; }

}  // namespace

TEST_CASE("half-line oscillator levels from the finite-difference stencil") {
    auto levels = solve(oscillator_op(), grid_n(2000), 3);
    CHECK(std::abs(levels[0] - 3.0) < kTol);
    CHECK(std::abs(levels[1] - 7.0) < kTol);
    CHECK(std::abs(levels[2] - 11.0) < kTol);
}

TEST_CASE("graded conformal well levels") {
    // x^2 + 2/x^2 + 2, the one-seed transformed potential
    auto levels = solve(dcka_potential(Scheme({1})), grid_n(2000), 3);
    CHECK(std::abs(levels[0] - 7.0) < kTol);
    CHECK(std::abs(levels[1] - 11.0) < kTol);
    CHECK(std::abs(levels[2] - 15.0) < kTol);
}

TEST_CASE("solver is deterministic for fixed inputs") {
    auto a = solve(isotonic_op(2), grid_n(1000), 4);
    auto b = solve(isotonic_op(2), grid_n(1000), 4);
    CHECK(a == b);
}

TEST_CASE("centered stencil converges at second order") {
    std::vector<GridSpec> grids = {grid_n(2000), grid_n(4000)};
    auto well = [](double x) { return x * x; };
    auto r1 = convergence_study(well, grids);
    CHECK(r1.observed_order > 1.8);
    CHECK(r1.observed_order < 2.2);
    // the extrapolation strips the stencil error and exposes the inner-wall
    // offset, about 2.26 * x_min for states vanishing only linearly at 0
    CHECK(std::abs(r1.extrapolated - 3.0) < kTol);

    SchrodingerOp iso = isotonic_op(2);
    auto r2 = convergence_study([&](double x) { return iso.potential_at(x); }, grids);
    CHECK(r2.observed_order > 1.8);
    CHECK(r2.observed_order < 2.2);

    SchrodingerOp golden = dcka_potential(Scheme({-3, -7}));
    auto r3 = convergence_study([&](double x) { return golden.potential_at(x); }, grids);
    CHECK(r3.observed_order > 1.8);
    CHECK(r3.observed_order < 2.2);
    CHECK(std::abs(r3.extrapolated - 3.0) < 1e-4);
}

TEST_CASE("five-seed spectrum survives the independent eigensolver") {
    auto rep = verify_spectrum(Scheme({1, 4, 5, 10, 11}), GridSpec{}, 6);
    REQUIRE(rep.predicted.size() == 6);
    CHECK(rep.predicted[0] == 7.0);
    CHECK(rep.predicted[1] == 15.0);
    CHECK(rep.predicted[2] == 19.0);
    CHECK(rep.predicted[3] == 27.0);
    CHECK(rep.predicted[4] == 31.0);
    CHECK(rep.predicted[5] == 35.0);
    CHECK(rep.max_abs_error < kTol);
    CHECK(rep.converged);
    CHECK(rep.counts_match);
}

TEST_CASE("two-seed reflected spectrum survives the independent eigensolver") {
    auto rep = verify_spectrum(Scheme({-3, -7}), GridSpec{}, 6);
    REQUIRE(rep.predicted.size() == 6);
    CHECK(rep.predicted[0] == 3.0);
    CHECK(rep.predicted[5] == 23.0);
    CHECK(rep.max_abs_error < kTol);
    CHECK(rep.converged);
    CHECK(rep.counts_match);
}

TEST_CASE("gapped single-valence spectrum survives the independent eigensolver") {
    for (const Scheme& s : {Scheme({1, 4, 5}), Scheme({1, 5, 6})}) {
        CAPTURE(s.to_string());
        auto rep = verify_spectrum(s, GridSpec{}, 6);
        REQUIRE(rep.predicted.size() == 6);
        CHECK(rep.predicted[0] == 7.0);
        CHECK(rep.predicted[1] == 15.0);
        CHECK(rep.predicted[5] == 31.0);
        CHECK(rep.max_abs_error < kTol);
        CHECK(rep.converged);
        CHECK(rep.counts_match);
    }
}

TEST_CASE("solver rejects bad grids and bad potentials") {
    auto well = [](double x) { return x * x; };
    CHECK_THROWS_AS(solve(well, GridSpec{0.0, 12.0, 4000}, 1), std::invalid_argument);
    CHECK_THROWS_AS(solve(well, GridSpec{2.0, 1.0, 4000}, 1), std::invalid_argument);
    CHECK_THROWS_AS(solve(well, GridSpec{1e-3, 12.0, 499}, 1), std::invalid_argument);
    CHECK_THROWS_AS(solve(well, grid_n(1000), 0), std::invalid_argument);
    auto blows_up = [](double x) {
        return x > 6.0 ? std::numeric_limits<double>::infinity() : x * x;
    };
    CHECK_THROWS_AS(solve(blows_up, grid_n(1000), 1), std::domain_error);
    auto nan_pot = [](double) { return std::nan(""); };
    CHECK_THROWS_AS(solve(nan_pot, grid_n(1000), 1), std::domain_error);

    CHECK_THROWS_AS(convergence_study(well, {grid_n(2000)}), std::invalid_argument);
    std::vector<GridSpec> mismatched = {grid_n(2000), GridSpec{1e-2, 12.0, 4000}};
    CHECK_THROWS_AS(convergence_study(well, mismatched), std::invalid_argument);
}
