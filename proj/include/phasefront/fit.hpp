#pragma once

#include <vector>

#include "phasefront/eos.hpp"

namespace phasefront {

/// Measured isotherm: (V, P) samples at a fixed temperature.
/// V strictly increasing, at least 8 samples.
struct IsothermDataset {
    double T = 0.0;
    std::vector<double> V, P;
};

struct FitOptions {
    /// Penalized smoothing of the derived alpha and f columns; off by default
    /// (exact input curves assumed).
    bool smooth = false;
    /// Fixed smoothing penalty; <= 0 picks the strongest penalty whose
    /// residual stays inside the noise level estimated from the data.
    double lambda = 0.0;
    /// Shared-grid size. 0 keeps the union of the sample abscissae inside the
    /// overlap window (smoothing forces a uniform grid of this many points,
    /// defaulting to the larger sample count).
    int grid_points = 0;
};

/// Reconstruct the state surface from two isotherms: at each shared V,
/// alpha(V) = (T1 - T2)/(P1(V) - P2(V)) and f(V) = T1 - alpha(V) P1(V).
/// Both curves are first interpolated onto the shared grid with a monotone
/// cubic. Returns a tabulated EosSpec restricted to the overlap window;
/// symmetric in its arguments.
EosSpec fit_alpha_f(const IsothermDataset& d1, const IsothermDataset& d2,
                    const FitOptions& opt = {});

struct IsothermCurve {
    std::vector<double> V, P;
};

/// P(V) = (T - f(V))/alpha(V) on the tabulated grid of a fitted spec.
IsothermCurve predict_isotherm(const EosSpec& fitted, double T);

} // namespace phasefront
