#include "limspace/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace limspace {

namespace {

// F(s) = integral of sqrt(s^2 + k2), antiderivative evaluated at s.
double sqrt_quad_antideriv(double s, double k2) {
    if (k2 <= 0.0) return 0.5 * s * std::abs(s);
    double r = std::sqrt(s * s + k2);
    return 0.5 * (s * r + k2 * std::asinh(s / std::sqrt(k2)));
}

}  // namespace

double inner_l2(const GridFunction& f, const GridFunction& g) {
    if (f.dim() != g.dim()) throw std::invalid_argument("inner_l2: dimension mismatch");
    if (f.empty() || g.empty()) return 0.0;
    double lo = std::max(f.support_begin(), g.support_begin());
    double hi = std::min(f.support_end(), g.support_end());
    if (!(lo < hi)) return 0.0;
    std::vector<double> grid = merge_breaks(f.breaks(), g.breaks());
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        double l = grid[i], r = grid[i + 1];
        if (r <= lo || l >= hi) continue;
        // integrand is quadratic on the cell; Simpson is exact
        double m = 0.5 * (l + r);
        double fl = dot(f.eval(l), g.eval(l));
        double fm = dot(f.eval(m), g.eval(m));
        double fr = dot(f.eval(r), g.eval(r));
        s += (r - l) / 6.0 * (fl + 4.0 * fm + fr);
    }
    return s;
}

double inner_l2(const GridFunction& f, const StepFunction& g) {
    if (f.dim() != g.dim()) throw std::invalid_argument("inner_l2: dimension mismatch");
    if (f.empty() || g.empty()) return 0.0;
    std::vector<double> grid = merge_breaks(f.breaks(), g.breaks());
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        double l = grid[i], r = grid[i + 1];
        double m = 0.5 * (l + r);
        // f is affine and g constant on the cell: trapezoid on f is exact
        Vec favg = scale(0.5, add(f.eval(l), f.eval(r)));
        s += (r - l) * dot(favg, g.value(m));
    }
    return s;
}

double inner_l2(const StepFunction& f, const StepFunction& g) {
    if (f.dim() != g.dim()) throw std::invalid_argument("inner_l2: dimension mismatch");
    if (f.empty() || g.empty()) return 0.0;
    if (f.support_end() <= g.support_begin() || g.support_end() <= f.support_begin()) return 0.0;
    std::vector<double> grid = merge_breaks(f.breaks(), g.breaks());
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        double m = 0.5 * (grid[i] + grid[i + 1]);
        s += (grid[i + 1] - grid[i]) * dot(f.value(m), g.value(m));
    }
    return s;
}

double integral_norm2_affine(const Vec& A, const Vec& S, double lo, double hi) {
    if (!(lo < hi)) return 0.0;
    double a2 = dot(S, S);
    if (a2 == 0.0) return norm2(A) * (hi - lo);
    // ||A + u S||^2 = a2 ((u + c)^2 + k2), u in [0, hi - lo]
    double c = dot(A, S) / a2;
    double k2 = (dot(A, A) - dot(A, S) * dot(A, S) / a2) / a2;
    if (k2 < 0.0) k2 = 0.0;  // Cauchy-Schwarz guarantees >= 0 up to roundoff
    double u0 = c, u1 = (hi - lo) + c;
    return std::sqrt(a2) * (sqrt_quad_antideriv(u1, k2) - sqrt_quad_antideriv(u0, k2));
}

double l1_integral(const GridFunction& f) {
    double s = 0.0;
    const auto& b = f.breaks();
    const auto& v = f.values();
    for (std::size_t i = 0; i + 1 < b.size(); ++i) {
        double len = b[i + 1] - b[i];
        Vec slope(f.dim());
        for (std::size_t j = 0; j < f.dim(); ++j) slope[j] = (v[i + 1][j] - v[i][j]) / len;
        s += integral_norm2_affine(v[i], slope, b[i], b[i + 1]);
    }
    return s;
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol) {
    struct Rec {
        const std::function<double(double)>& f;
        double run(double a, double b, double fa, double fm, double fb, double whole, double tol, int depth) {
            double m = 0.5 * (a + b);
            double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
            double flm = f(lm), frm = f(rm);
            double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
            double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
            double delta = left + right - whole;
            if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
            return run(a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
                   run(m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
        }
    } rec{f};
    if (!(a < b)) return 0.0;
    double m = 0.5 * (a + b);
    double fa = f(a), fm = f(m), fb = f(b);
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return rec.run(a, b, fa, fm, fb, whole, tol, 48);
}

double lp_integral(const GridFunction& f, double p, double tol) {
    if (p < 1.0) throw std::invalid_argument("lp_integral: p < 1");
    if (f.empty()) return 0.0;
    if (p == 1.0) return l1_integral(f);
    if (p == 2.0) return inner_l2(f, f);
    double s = 0.0;
    const auto& b = f.breaks();
    for (std::size_t i = 0; i + 1 < b.size(); ++i) {
        auto integrand = [&](double t) { return std::pow(norm2(f.eval(t)), p); };
        s += adaptive_simpson(integrand, b[i], b[i + 1], tol / static_cast<double>(b.size()));
    }
    return s;
}

}  // namespace limspace
