#include "phasefront/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/roots.hpp>

#include "phasefront/errors.hpp"

namespace phasefront::num {

std::vector<double> linspace(double a, double b, int n) {
    if (n < 2) throw ConfigError("linspace: need at least two points");
    std::vector<double> v(static_cast<std::size_t>(n));
    const double h = (b - a) / (n - 1);
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = a + h * i;
    v.back() = b;
    return v;
}

std::vector<double> logspace(double a, double b, int n) {
    if (a <= 0.0 || b <= 0.0) throw ConfigError("logspace: bounds must be positive");
    auto v = linspace(std::log(a), std::log(b), n);
    for (auto& x : v) x = std::exp(x);
    v.front() = a;
    v.back() = b;
    return v;
}

double bracket_root(const Fn& f, double lo, double hi, double rel_tol) {
    if (!(lo < hi)) throw ConfigError("bracket_root: empty interval");
    double flo = f(lo), fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw ConvergenceError("bracket_root: endpoints do not straddle a root");
    boost::math::tools::eps_tolerance<double> tol(
        static_cast<unsigned>(std::max(1.0, -std::log2(rel_tol))));
    std::uintmax_t iters = 200;
    auto r = boost::math::tools::toms748_solve(f, lo, hi, flo, fhi, tol, iters);
    return 0.5 * (r.first + r.second);
}

std::vector<std::pair<double, double>> sign_change_brackets(const Fn& f,
                                                            const std::vector<double>& grid) {
    std::vector<std::pair<double, double>> out;
    if (grid.size() < 2) return out;
    double prev = f(grid.front());
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const double cur = f(grid[i]);
        if (prev == 0.0)
            out.emplace_back(grid[i - 1], grid[i - 1]);
        else if (cur != 0.0 && (prev > 0.0) != (cur > 0.0))
            out.emplace_back(grid[i - 1], grid[i]);
        prev = cur;
    }
    if (prev == 0.0) out.emplace_back(grid.back(), grid.back());
    return out;
}

namespace {

long double simpson_panel(double a, double fa, double b, double fb, double fm) {
    return (static_cast<long double>(b) - a) / 6.0L *
           (static_cast<long double>(fa) + 4.0L * fm + fb);
}

long double simpson_rec(const Fn& f, double a, double fa, double b, double fb, double m, double fm,
                        long double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const long double left = simpson_panel(a, fa, m, fm, flm);
    const long double right = simpson_panel(m, fm, b, fb, frm);
    const long double delta = left + right - whole;
    if (depth <= 0 || std::abs(static_cast<double>(delta)) <= 15.0 * tol)
        return left + right + delta / 15.0L;
    return simpson_rec(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           simpson_rec(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

} // namespace

double adaptive_simpson(const Fn& f, double a, double b, double tol, int max_depth) {
    if (a == b) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a), fb = f(b), fm = f(m);
    const long double whole = simpson_panel(a, fa, b, fb, fm);
    return static_cast<double>(simpson_rec(f, a, fa, b, fb, m, fm, whole, tol, max_depth));
}

double integrate_gk(const Fn& f, double a, double b, double rel_tol, int max_depth) {
    using boost::math::quadrature::gauss_kronrod;
    return gauss_kronrod<double, 31>::integrate(f, a, b, max_depth, rel_tol);
}

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) throw ConfigError("fit_line: need n >= 2 pairs");
    const auto n = static_cast<double>(x.size());
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx == 0.0) throw ConfigError("fit_line: abscissae are all equal");
    LineFit out;
    out.slope = sxy / sxx;
    out.intercept = my - out.slope * mx;
    if (x.size() > 2) {
        double ss = 0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double r = y[i] - (out.intercept + out.slope * x[i]);
            ss += r * r;
        }
        out.slope_stderr = std::sqrt(ss / (n - 2.0) / sxx);
    }
    return out;
}

std::vector<double> cubic_real_roots(double c2, double c1, double c0) {
    // depressed form t^3 + p t + q with z = t - c2/3
    const double s = c2 / 3.0;
    const double p = c1 - c2 * c2 / 3.0;
    const double q = 2.0 * c2 * c2 * c2 / 27.0 - c2 * c1 / 3.0 + c0;
    std::vector<double> roots;
    const double disc = 4.0 * p * p * p + 27.0 * q * q; // < 0: three distinct real roots
    if (disc < 0.0) {
        const double r = std::sqrt(-p / 3.0);
        const double phi = std::acos(std::clamp(3.0 * q / (2.0 * p * r), -1.0, 1.0));
        for (int k = 0; k < 3; ++k)
            roots.push_back(2.0 * r * std::cos((phi - 2.0 * M_PI * k) / 3.0) - s);
    } else if (disc == 0.0) {
        if (p == 0.0) {
            roots.assign(3, -s);
        } else {
            const double t1 = 3.0 * q / p; // single root
            const double t2 = -t1 / 2.0;   // double root
            roots = {t1 - s, t2 - s, t2 - s};
        }
    } else {
        const double h = std::sqrt(disc / 108.0);
        const double t = std::cbrt(-q / 2.0 + h) + std::cbrt(-q / 2.0 - h);
        roots.push_back(t - s);
    }
    // one Newton step per root against the undepressed cubic tightens roundoff
    for (auto& z : roots) {
        const double fz = ((z + c2) * z + c1) * z + c0;
        const double dz = (3.0 * z + 2.0 * c2) * z + c1;
        if (dz != 0.0) z -= fz / dz;
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

CubicSpline::CubicSpline(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
    const std::size_t n = x_.size();
    if (n < 3 || y_.size() != n) throw ConfigError("CubicSpline: need n >= 3 matching points");
    for (std::size_t i = 1; i < n; ++i)
        if (!(x_[i] > x_[i - 1])) throw ConfigError("CubicSpline: abscissae must increase");
    // natural end conditions; Thomas solve for the knot second derivatives
    std::vector<double> a(n, 0.0), b(n, 2.0), c(n, 0.0), d(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double hl = x_[i] - x_[i - 1], hr = x_[i + 1] - x_[i];
        a[i] = hl / (hl + hr);
        c[i] = hr / (hl + hr);
        d[i] = 6.0 / (hl + hr) * ((y_[i + 1] - y_[i]) / hr - (y_[i] - y_[i - 1]) / hl);
    }
    m_.assign(n, 0.0);
    std::vector<double> cp(n, 0.0), dp(n, 0.0);
    cp[0] = 0.0;
    dp[0] = 0.0;
    for (std::size_t i = 1; i < n; ++i) {
        const double den = b[i] - a[i] * cp[i - 1];
        cp[i] = c[i] / den;
        dp[i] = (d[i] - a[i] * dp[i - 1]) / den;
    }
    m_[n - 1] = dp[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) m_[i] = dp[i] - cp[i] * m_[i + 1];
}

std::size_t CubicSpline::locate(double x) const {
    auto it = std::upper_bound(x_.begin(), x_.end(), x);
    auto i = static_cast<std::size_t>(std::distance(x_.begin(), it));
    if (i == 0) return 0;
    if (i >= x_.size()) return x_.size() - 2;
    return i - 1;
}

double CubicSpline::deriv(int k, double x) const {
    if (x_.empty()) throw ConfigError("CubicSpline: empty");
    const std::size_t i = locate(x);
    const double h = x_[i + 1] - x_[i];
    const double t = x - x_[i];
    const double s = x_[i + 1] - x;
    const double ml = m_[i], mr = m_[i + 1];
    switch (k) {
    case 0:
        return (ml * s * s * s + mr * t * t * t) / (6.0 * h) +
               (y_[i] / h - ml * h / 6.0) * s + (y_[i + 1] / h - mr * h / 6.0) * t;
    case 1:
        return (-ml * s * s + mr * t * t) / (2.0 * h) + (y_[i + 1] - y_[i]) / h -
               (mr - ml) * h / 6.0;
    case 2:
        return (ml * s + mr * t) / h;
    case 3:
        return (mr - ml) / h;
    default:
        throw ConfigError("CubicSpline: derivative order must be 0..3");
    }
}

Pchip::Pchip(std::vector<double> x, std::vector<double> y) : x_(std::move(x)), y_(std::move(y)) {
    const std::size_t n = x_.size();
    if (n < 2 || y_.size() != n) throw ConfigError("Pchip: need n >= 2 matching points");
    for (std::size_t i = 1; i < n; ++i)
        if (!(x_[i] > x_[i - 1])) throw ConfigError("Pchip: abscissae must increase");
    std::vector<double> h(n - 1), del(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        h[i] = x_[i + 1] - x_[i];
        del[i] = (y_[i + 1] - y_[i]) / h[i];
    }
    d_.assign(n, 0.0);
    if (n == 2) {
        d_[0] = d_[1] = del[0];
    } else {
        for (std::size_t i = 1; i + 1 < n; ++i) {
            if (del[i - 1] * del[i] > 0.0) {
                const double w1 = 2.0 * h[i] + h[i - 1];
                const double w2 = h[i] + 2.0 * h[i - 1];
                d_[i] = (w1 + w2) / (w1 / del[i - 1] + w2 / del[i]);
            }
        }
        auto end_slope = [](double h0, double h1, double d0, double d1) {
            double d = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
            if (d * d0 <= 0.0)
                d = 0.0;
            else if (d0 * d1 < 0.0 && std::abs(d) > 3.0 * std::abs(d0))
                d = 3.0 * d0;
            return d;
        };
        d_[0] = end_slope(h[0], h[1], del[0], del[1]);
        d_[n - 1] = end_slope(h[n - 2], h[n - 3], del[n - 2], del[n - 3]);
    }
}

std::size_t Pchip::locate(double x) const {
    auto it = std::upper_bound(x_.begin(), x_.end(), x);
    auto i = static_cast<std::size_t>(std::distance(x_.begin(), it));
    if (i == 0) return 0;
    if (i >= x_.size()) return x_.size() - 2;
    return i - 1;
}

double Pchip::operator()(double x) const {
    const std::size_t i = locate(x);
    const double h = x_[i + 1] - x_[i];
    const double t = (x - x_[i]) / h;
    const double h00 = (1.0 + 2.0 * t) * (1.0 - t) * (1.0 - t);
    const double h10 = t * (1.0 - t) * (1.0 - t);
    const double h01 = t * t * (3.0 - 2.0 * t);
    const double h11 = t * t * (t - 1.0);
    return h00 * y_[i] + h * h10 * d_[i] + h01 * y_[i + 1] + h * h11 * d_[i + 1];
}

double Pchip::deriv(double x) const {
    const std::size_t i = locate(x);
    const double h = x_[i + 1] - x_[i];
    const double t = (x - x_[i]) / h;
    const double g00 = 6.0 * t * (t - 1.0) / h;
    const double g10 = (1.0 - t) * (1.0 - 3.0 * t);
    const double g01 = -g00;
    const double g11 = t * (3.0 * t - 2.0);
    return g00 * y_[i] + g10 * d_[i] + g01 * y_[i + 1] + g11 * d_[i + 1];
}

namespace {

// Cholesky factorization of a symmetric positive-definite pentadiagonal
// matrix given by its diagonal and first two subdiagonal bands.
struct BandChol {
    std::vector<double> l0, l1, l2;

    void factor(const std::vector<double>& a0, const std::vector<double>& a1,
                const std::vector<double>& a2) {
        const std::size_t n = a0.size();
        l0.assign(n, 0.0);
        l1.assign(n, 0.0);
        l2.assign(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            double s = a0[i];
            if (i >= 1) s -= l1[i - 1] * l1[i - 1];
            if (i >= 2) s -= l2[i - 2] * l2[i - 2];
            l0[i] = std::sqrt(s);
            if (i + 1 < n) {
                double t = a1[i];
                if (i >= 1) t -= l2[i - 1] * l1[i - 1];
                l1[i] = t / l0[i];
            }
            if (i + 2 < n) l2[i] = a2[i] / l0[i];
        }
    }

    std::vector<double> solve(std::vector<double> b) const {
        const std::size_t n = l0.size();
        for (std::size_t i = 0; i < n; ++i) {
            double s = b[i];
            if (i >= 1) s -= l1[i - 1] * b[i - 1];
            if (i >= 2) s -= l2[i - 2] * b[i - 2];
            b[i] = s / l0[i];
        }
        for (std::size_t k = n; k-- > 0;) {
            double s = b[k];
            if (k + 1 < n) s -= l1[k] * b[k + 1];
            if (k + 2 < n) s -= l2[k] * b[k + 2];
            b[k] = s / l0[k];
        }
        return b;
    }
};

// bands of I + lam * D'D, D the second-difference operator
void assemble_whittaker(std::size_t n, double lam, std::vector<double>& a0,
                        std::vector<double>& a1, std::vector<double>& a2) {
    a0.assign(n, 1.0);
    a1.assign(n, 0.0);
    a2.assign(n, 0.0);
    static const double c[3] = {1.0, -2.0, 1.0};
    for (std::size_t i = 0; i + 2 < n; ++i)
        for (int p = 0; p < 3; ++p)
            for (int q = p; q < 3; ++q) {
                const double w = lam * c[p] * c[q];
                if (q == p)
                    a0[i + p] += w;
                else if (q - p == 1)
                    a1[i + p] += w;
                else
                    a2[i + p] += w;
            }
}

} // namespace

std::vector<double> whittaker_smooth(const std::vector<double>& y, double lambda) {
    const std::size_t n = y.size();
    if (n < 5) return y;

    std::vector<double> a0, a1, a2;
    auto run = [&](double lam, double* gcv) {
        assemble_whittaker(n, lam, a0, a1, a2);
        BandChol ch;
        ch.factor(a0, a1, a2);
        auto z = ch.solve(y);
        if (gcv) {
            double rss = 0.0;
            for (std::size_t i = 0; i < n; ++i) rss += (z[i] - y[i]) * (z[i] - y[i]);
            double tr = 0.0;
            std::vector<double> e(n, 0.0);
            for (std::size_t i = 0; i < n; ++i) {
                e[i] = 1.0;
                tr += ch.solve(e)[i];
                e[i] = 0.0;
            }
            const double denom = static_cast<double>(n) - tr;
            const double val = static_cast<double>(n) * rss / (denom * denom);
            *gcv = std::isfinite(val) ? val : std::numeric_limits<double>::infinity();
        }
        return z;
    };

    if (lambda > 0.0) return run(lambda, nullptr);

    // generalized cross-validation over a wide log-spaced penalty sweep
    double best_lam = 1.0, best_gcv = std::numeric_limits<double>::infinity();
    for (double lam : logspace(1e-2, 1e10, 25)) {
        double g = 0.0;
        run(lam, &g);
        if (g < best_gcv) {
            best_gcv = g;
            best_lam = lam;
        }
    }
    return run(best_lam, nullptr);
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

} // namespace phasefront::num
