#include <confmech/numeric.hpp>

#include <confmech/darboux.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace confmech {

namespace {

constexpr int kMaxBisectionSteps = 200;
// Richardson error estimate accepted as converged; half the level tolerance
// the spectral cross-checks run at.
constexpr double kConvergedTol = 2.5e-3;

void validate(const GridSpec& grid) {
    if (!(grid.x_min > 0.0) || !(grid.x_min < grid.x_max))
        throw std::invalid_argument("grid window must satisfy 0 < x_min < x_max");
    if (grid.points < 500) throw std::invalid_argument("grid needs at least 500 points");
}

// Eigenvalues of the discretized operator below lambda, by the sign count of
// the shifted LDL^T pivots.
int sturm_count(const std::vector<double>& diag, double off_sq, double lambda) {
    int count = 0;
    double d = diag[0] - lambda;
    for (size_t i = 0;;) {
        if (d == 0.0) d = -std::numeric_limits<double>::min();
        if (d < 0.0) ++count;
        if (++i == diag.size()) break;
        d = diag[i] - lambda - off_sq / d;
    }
    return count;
}

double grid_step(const GridSpec& grid) { return (grid.x_max - grid.x_min) / (grid.points + 1); }

}  // namespace

std::vector<double> solve(const std::function<double(double)>& V, const GridSpec& grid, int k) {
    validate(grid);
    if (k < 1 || k > grid.points) throw std::invalid_argument("eigenvalue count out of range");
    const double h = grid_step(grid);
    const double inv_h2 = 1.0 / (h * h);
    std::vector<double> diag(grid.points);
    for (int i = 0; i < grid.points; ++i) {
        double v = V(grid.x_min + (i + 1) * h);
        if (!std::isfinite(v)) throw std::domain_error("potential sample is not finite");
        diag[i] = 2.0 * inv_h2 + v;
    }
    // off-diagonal is -1/h^2 throughout; only its square enters the pivots
    const double off_sq = inv_h2 * inv_h2;
    auto [lo_it, hi_it] = std::minmax_element(diag.begin(), diag.end());
    const double lo_bound = *lo_it - 2.0 * inv_h2;
    const double hi_bound = *hi_it + 2.0 * inv_h2;

    std::vector<double> out(k);
    for (int j = 0; j < k; ++j) {
        double lo = lo_bound, hi = hi_bound;
        int steps = 0;
        while (hi - lo > 1e-12 * std::max(1.0, std::abs(hi))) {
            if (++steps > kMaxBisectionSteps)
                throw std::runtime_error("eigenvalue bisection did not converge");
            double mid = 0.5 * (lo + hi);
            if (sturm_count(diag, off_sq, mid) >= j + 1)
                hi = mid;
            else
                lo = mid;
        }
        out[j] = 0.5 * (lo + hi);
    }
    return out;
}

std::vector<double> solve(const SchrodingerOp& op, const GridSpec& grid, int k) {
    return solve([&op](double x) { return op.potential_at(x); }, grid, k);
}

ConvergenceReport convergence_study(const std::function<double(double)>& V,
                                    std::vector<GridSpec> grids, int index) {
    if (grids.size() < 2) throw std::invalid_argument("convergence study needs two grids");
    std::sort(grids.begin(), grids.end(),
              [](const GridSpec& a, const GridSpec& b) { return a.points < b.points; });
    for (const GridSpec& g : grids)
        if (g.x_min != grids[0].x_min || g.x_max != grids[0].x_max)
            throw std::invalid_argument("convergence grids must share the window");
    if (grids.size() == 2) {
        GridSpec finer = grids.back();
        finer.points *= 2;
        grids.push_back(finer);
    }
    ConvergenceReport rep;
    for (const GridSpec& g : grids) rep.per_grid.push_back(solve(V, g, index + 1)[index]);

    const size_t n = grids.size();
    const double h1 = grid_step(grids[n - 2]), h2 = grid_step(grids[n - 1]);
    const double e0 = rep.per_grid[n - 3], e1 = rep.per_grid[n - 2], e2 = rep.per_grid[n - 1];
    rep.extrapolated = e2 + (e2 - e1) * h2 * h2 / (h1 * h1 - h2 * h2);
    const double d01 = std::abs(e0 - e1), d12 = std::abs(e1 - e2);
    if (d12 > 0.0 && d01 > 0.0) rep.observed_order = std::log(d01 / d12) / std::log(h1 / h2);
    return rep;
}

SpectralReport verify_spectrum(const Scheme& s, const GridSpec& grid, int k) {
    const SchrodingerOp op = dcka_potential(s);
    const SpectrumModel model = predict_spectrum(s);

    SpectralReport rep;
    // physical levels in the input convention, lowest k
    for (const Band& b : model.bands) {
        for (int j = 0; !b.count || j < *b.count; ++j) {
            if (static_cast<int>(rep.predicted.size()) == k) break;
            rep.predicted.push_back(rat_to_double(Rat(b.lowest + model.rep_shift)) + 4.0 * j);
        }
        if (static_cast<int>(rep.predicted.size()) == k) break;
    }

    rep.computed = solve(op, grid, k);
    for (int j = 0; j < k && j < static_cast<int>(rep.predicted.size()); ++j)
        rep.max_abs_error = std::max(rep.max_abs_error, std::abs(rep.computed[j] - rep.predicted[j]));

    GridSpec coarse = grid;
    coarse.points = std::max(500, grid.points / 2);
    if (coarse.points != grid.points) {
        std::vector<double> rough = solve(op, coarse, k);
        const double h1 = grid_step(coarse), h2 = grid_step(grid);
        const double factor = h2 * h2 / (h1 * h1 - h2 * h2);
        rep.converged = true;
        for (int j = 0; j < k; ++j)
            rep.converged =
                rep.converged && std::abs(rep.computed[j] - rough[j]) * factor < kConvergedTol;
    }

    // count check: between consecutive bands no level may stray into the gap
    rep.counts_match = true;
    int cumulative = 0;
    for (size_t bi = 0; bi + 1 < model.bands.size(); ++bi) {
        cumulative += model.bands[bi].count.value();
        double band_top = rat_to_double(Rat(model.bands[bi].lowest + model.rep_shift)) +
                          4.0 * (model.bands[bi].count.value() - 1);
        double next_bottom = rat_to_double(Rat(model.bands[bi + 1].lowest + model.rep_shift));
        double midgap = 0.5 * (band_top + next_bottom);
        int below = 0;
        for (double e : rep.computed)
            if (e < midgap) ++below;
        if (static_cast<int>(rep.computed.size()) >= cumulative)
            rep.counts_match = rep.counts_match && below == cumulative;
    }
    return rep;
}

}  // namespace confmech
