#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace phasefront::num {

using Fn = std::function<double(double)>;

std::vector<double> linspace(double a, double b, int n);

/// Geometric spacing; requires a, b > 0.
std::vector<double> logspace(double a, double b, int n);

/// Root of f in [lo, hi]; f(lo) and f(hi) must have opposite signs.
double bracket_root(const Fn& f, double lo, double hi, double rel_tol = 1e-15);

/// Scan consecutive grid values of f and return the bracketing intervals
/// where the sign changes (or where f hits zero exactly).
std::vector<std::pair<double, double>> sign_change_brackets(const Fn& f,
                                                            const std::vector<double>& grid);

/// Recursive Simpson quadrature with absolute tolerance `tol`.
/// Accumulates in long double so the tolerance is meaningful near 1e-12.
double adaptive_simpson(const Fn& f, double a, double b, double tol, int max_depth = 50);

/// Adaptive Gauss-Kronrod quadrature, relative tolerance.
double integrate_gk(const Fn& f, double a, double b, double rel_tol = 1e-12, int max_depth = 14);

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double slope_stderr = 0.0;
};

/// Least-squares straight line through (x, y).
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

/// Real roots of z^3 + c2 z^2 + c1 z + c0, ascending. A double root is
/// reported twice, a triple root three times.
std::vector<double> cubic_real_roots(double c2, double c1, double c0);

/// Natural cubic spline through strictly increasing abscissae.
/// deriv(k, x) supports k = 0..3; the third derivative is piecewise constant.
class CubicSpline {
public:
    CubicSpline() = default;
    CubicSpline(std::vector<double> x, std::vector<double> y);
    double operator()(double x) const { return deriv(0, x); }
    double deriv(int k, double x) const;
    double x_min() const { return x_.front(); }
    double x_max() const { return x_.back(); }

private:
    std::vector<double> x_, y_, m_; // m_: second derivatives at the knots
    std::size_t locate(double x) const;
};

/// Monotone (shape-preserving) piecewise-cubic Hermite interpolant.
class Pchip {
public:
    Pchip() = default;
    Pchip(std::vector<double> x, std::vector<double> y);
    double operator()(double x) const;
    double deriv(double x) const;
    double x_min() const { return x_.front(); }
    double x_max() const { return x_.back(); }

private:
    std::vector<double> x_, y_, d_; // d_: endpoint slopes per Fritsch-Carlson
    std::size_t locate(double x) const;
};

/// Whittaker smoother on a uniform grid: minimizes
/// sum (z - y)^2 + lambda * sum (second difference of z)^2.
/// lambda <= 0 selects the penalty by generalized cross-validation.
std::vector<double> whittaker_smooth(const std::vector<double>& y, double lambda = 0.0);

/// FNV-1a 64-bit hash, used for reproducibility stamps in output headers.
std::uint64_t fnv1a(const std::string& s);

} // namespace phasefront::num
