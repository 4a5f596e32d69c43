#pragma once

#include <confmech/diffop.hpp>
#include <confmech/scheme.hpp>

#include <functional>
#include <vector>

namespace confmech {

// Uniform half-line window with Dirichlet walls at both ends. points counts
// interior nodes. The inner wall stands in for the power-law vanishing at
// the origin (it selects the odd sector when the potential extends evenly),
// so x_min must sit well below the first oscillation of every tracked state.
struct GridSpec {
    double x_min = 1.2e-3;
    double x_max = 12.0;
    int points = 4000;
};

// k lowest eigenvalues of -d^2/dx^2 + V on the window, from the centered
// second-order stencil. Bisection on Sturm counts of the symmetric
// tridiagonal matrix; deterministic for fixed inputs. Throws on a grid
// violating 0 < x_min < x_max or points < 500, and on a non-finite
// potential sample.
std::vector<double> solve(const std::function<double(double)>& V, const GridSpec& grid, int k);
std::vector<double> solve(const SchrodingerOp& op, const GridSpec& grid, int k);

struct ConvergenceReport {
    std::vector<double> per_grid;   // tracked eigenvalue, grids sorted by resolution
    double extrapolated = 0.0;      // second-order limit from the two finest grids
    double observed_order = 0.0;    // from the last three grids
};

// Tracks one eigenvalue across refinements of the same window. With exactly
// two grids a third at doubled resolution is added so the order becomes
// measurable.
ConvergenceReport convergence_study(const std::function<double(double)>& V,
                                    std::vector<GridSpec> grids, int index = 0);

struct SpectralReport {
    std::vector<double> computed;
    std::vector<double> predicted;  // input convention, same as the operator
    double max_abs_error = 0.0;
    bool converged = false;   // half-resolution Richardson estimate within tolerance
    bool counts_match = false;  // eigenvalue count below every gap equals the band count
};

// Solves the transformed potential of the scheme and compares the k lowest
// levels against the predicted model.
SpectralReport verify_spectrum(const Scheme& s, const GridSpec& grid, int k);

}  // namespace confmech
