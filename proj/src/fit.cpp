#include "phasefront/fit.hpp"

#include <algorithm>
#include <cmath>

#include "phasefront/errors.hpp"
#include "phasefront/numerics.hpp"

namespace phasefront {

namespace {

// Strongest Whittaker penalty whose weighted residual stays inside the noise
// budget. The pointwise noise scale comes from second differences (variance
// 6 sigma^2 for white noise), so clean columns are left nearly untouched while
// noisy ones are smoothed hard enough for stable curvature estimates.
std::vector<double> smooth_column(const std::vector<double>& y) {
    const std::size_t n = y.size();
    if (n < 8) return y;
    std::vector<double> e(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i)
        e[i] = std::abs(y[i - 1] - 2.0 * y[i] + y[i + 1]) / std::sqrt(6.0);
    e[0] = e[1];
    e[n - 1] = e[n - 2];
    double scale = 1.0;
    for (double v : y) scale = std::max(scale, std::abs(v));
    std::vector<double> sig(n);
    std::vector<double> buf;
    const std::size_t w = 7;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t a = i > w ? i - w : 0;
        const std::size_t b = std::min(n - 1, i + w);
        buf.assign(e.begin() + a, e.begin() + b + 1);
        std::nth_element(buf.begin(), buf.begin() + buf.size() / 2, buf.end());
        sig[i] = std::max(1.4826 * buf[buf.size() / 2], 1e-14 * scale);
    }
    auto wrss = [&](double lam) {
        const auto z = num::whittaker_smooth(y, lam);
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double r = (z[i] - y[i]) / sig[i];
            s += r * r;
        }
        return s;
    };
    // Twice the noise floor: at the bias/variance balance point the residual
    // energy splits about evenly between noise and smoothing bias.
    const double budget = 2.0 * static_cast<double>(n);
    double lo = 1e-6, hi = 1e12;
    if (wrss(lo) > budget) return y;
    for (int it = 0; it < 60; ++it) {
        const double mid = std::sqrt(lo * hi);
        (wrss(mid) <= budget ? lo : hi) = mid;
    }
    return num::whittaker_smooth(y, lo);
}

void validate(const IsothermDataset& d, const char* which) {
    if (d.V.size() < 8 || d.P.size() != d.V.size())
        throw ConfigError(std::string("fit_alpha_f: ") + which +
                          " needs >= 8 matching (V, P) samples");
    for (std::size_t i = 1; i < d.V.size(); ++i)
        if (!(d.V[i] > d.V[i - 1]))
            throw ConfigError(std::string("fit_alpha_f: ") + which +
                              " volumes must be strictly increasing");
}

} // namespace

EosSpec fit_alpha_f(const IsothermDataset& d1, const IsothermDataset& d2,
                    const FitOptions& opt) {
    validate(d1, "first dataset");
    validate(d2, "second dataset");
    if (d1.T == d2.T)
        throw ConfigError("fit_alpha_f: datasets must have distinct temperatures");

    // canonical order (higher T first) so the result is symmetric bitwise
    const IsothermDataset& da = d1.T > d2.T ? d1 : d2;
    const IsothermDataset& db = d1.T > d2.T ? d2 : d1;

    const double lo = std::max(da.V.front(), db.V.front());
    const double hi = std::min(da.V.back(), db.V.back());
    if (!(lo < hi)) throw ConfigError("fit_alpha_f: datasets share no volume window");

    std::vector<double> grid;
    if (opt.smooth || opt.grid_points > 0) {
        int n = opt.grid_points > 0
                    ? opt.grid_points
                    : static_cast<int>(std::max(da.V.size(), db.V.size()));
        n = std::max(n, 16);
        grid = num::linspace(lo, hi, n);
    } else {
        grid.reserve(da.V.size() + db.V.size());
        for (double v : da.V)
            if (v >= lo && v <= hi) grid.push_back(v);
        for (double v : db.V)
            if (v >= lo && v <= hi) grid.push_back(v);
        std::sort(grid.begin(), grid.end());
        const double tol = 1e-12 * (hi - lo);
        grid.erase(std::unique(grid.begin(), grid.end(),
                               [tol](double a, double b) { return b - a <= tol; }),
                   grid.end());
    }
    if (grid.size() < 8) throw ConfigError("fit_alpha_f: overlap window holds too few samples");

    const num::Pchip ca(da.V, da.P), cb(db.V, db.P);
    std::vector<double> Pa(grid.size()), Pb(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        Pa[i] = ca(grid[i]);
        Pb[i] = cb(grid[i]);
    }
    std::vector<double> alpha(grid.size()), f(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double dP = Pa[i] - Pb[i];
        const double scale = std::max({1.0, std::abs(Pa[i]), std::abs(Pb[i])});
        if (std::abs(dP) <= 1e-12 * scale)
            throw ConfigError("fit_alpha_f: singular system (P1 = P2) at V = " +
                              std::to_string(grid[i]));
        alpha[i] = (da.T - db.T) / dP;
        f[i] = da.T - alpha[i] * Pa[i];
    }
    if (opt.smooth) {
        // Smooth the derived columns, not the raw isotherms: alpha and f vary far
        // more gently than P, so the curvature bias of the penalty stays small.
        if (opt.lambda > 0.0) {
            alpha = num::whittaker_smooth(alpha, opt.lambda);
            f = num::whittaker_smooth(f, opt.lambda);
        } else {
            alpha = smooth_column(alpha);
            f = smooth_column(f);
        }
    }
    return tabulated_spec(std::move(grid), std::move(alpha), std::move(f));
}

IsothermCurve predict_isotherm(const EosSpec& fitted, double T) {
    if (!fitted.table)
        throw ConfigError("predict_isotherm: spec carries no tabulated grid");
    const TabulatedData& tab = *fitted.table;
    IsothermCurve curve;
    curve.V = tab.V;
    curve.P.resize(tab.V.size());
    for (std::size_t i = 0; i < tab.V.size(); ++i) {
        if (!(tab.alpha[i] > 0.0))
            throw ConfigError("predict_isotherm: nonpositive alpha in the table");
        curve.P[i] = (T - tab.f[i]) / tab.alpha[i];
    }
    return curve;
}

} // namespace phasefront
