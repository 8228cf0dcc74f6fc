#include "limspace/limcore.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "limspace/quadrature.hpp"

namespace limspace {

double sup_norm(const LimFunctionHalf& x) {
    double m = norm2(x.limit());
    for (const Vec& v : x.core().values()) m = std::max(m, norm2(add(v, x.limit())));
    return m;
}

double core_norm(const LimFunctionHalf& x, CoreFlavor flavor, double p) {
    if (flavor == CoreFlavor::Sup) return x.core().sup_norm2();
    if (p < 1.0) throw std::invalid_argument("core_norm: p < 1");
    return std::pow(lp_integral(x.core(), p), 1.0 / p);
}

double x_norm(const LimFunctionHalf& x, const CompositeNorm& norm) {
    double la = norm2(x.limit());
    switch (norm.combine) {
        case CompositeNorm::Combine::Power: {
            if (norm.p < 1.0) throw std::invalid_argument("x_norm: p < 1");
            double c = core_norm(x, norm.flavor, norm.p);
            return std::pow(std::pow(c, norm.p) + std::pow(la, norm.p), 1.0 / norm.p);
        }
        case CompositeNorm::Combine::Sum:
            return core_norm(x, norm.flavor, norm.core_p) + la;
        case CompositeNorm::Combine::Max:
            return std::max(core_norm(x, norm.flavor, norm.core_p), la);
    }
    throw std::logic_error("x_norm: unreachable");
}

NormEquivalence check_norm_equivalence(const LimFunctionHalf& x) {
    NormEquivalence r;
    r.sup = sup_norm(x);
    r.composite = x_norm(x, CompositeNorm::sum(CoreFlavor::Sup));
    r.ratio = r.sup == 0.0 ? 1.0 : r.composite / r.sup;
    if (r.ratio < 1.0 - 1e-12 || r.ratio > 3.0 + 1e-12)
        throw std::logic_error("check_norm_equivalence: ratio escaped [1, 3]");
    return r;
}

namespace {

// Core of t -> x(-t) on [0, inf): reflected negative-side breakpoints, with
// the left limit of the core at 0 as the value at the new origin.
GridFunction reflect_negative_part(const GridFunction& core) {
    Vec at_zero = (!core.empty() && core.support_begin() == 0.0) ? zero_vec(core.dim()) : core.eval(0.0);
    std::vector<double> breaks{0.0};
    std::vector<Vec> values{at_zero};
    for (std::size_t i = core.size(); i-- > 0;) {
        if (core.breaks()[i] < 0.0) {
            breaks.push_back(-core.breaks()[i]);
            values.push_back(core.values()[i]);
        }
    }
    if (breaks.size() == 1 && is_zero(values.front())) return GridFunction(core.dim());
    return GridFunction(std::move(breaks), std::move(values));
}

// Core of the restriction to [0, inf): breakpoints >= 0 with a grid point
// inserted at the origin.
GridFunction positive_part(const GridFunction& core) {
    if (core.empty() || core.support_end() <= 0.0) return GridFunction(core.dim());
    std::vector<double> breaks{0.0};
    std::vector<Vec> values{core.eval(0.0)};
    for (std::size_t i = 0; i < core.size(); ++i) {
        if (core.breaks()[i] > 0.0) {
            breaks.push_back(core.breaks()[i]);
            values.push_back(core.values()[i]);
        }
    }
    return GridFunction(std::move(breaks), std::move(values));
}

}  // namespace

std::pair<LimFunctionHalf, LimFunctionHalf> split_line(const LimFunctionLine& x, bool continuous) {
    GridFunction core1 = reflect_negative_part(x.core());
    GridFunction core2 = positive_part(x.core());
    Vec a1 = x.limit_neg();
    Vec a2 = x.limit_pos();
    if (continuous) {
        Vec v0 = x.eval(0.0);
        a1 = sub(a1, v0);
        a2 = sub(a2, v0);
    }
    return {LimFunctionHalf(std::move(core1), std::move(a1)), LimFunctionHalf(std::move(core2), std::move(a2))};
}

LimFunctionLine join_line(const LimFunctionHalf& x1, const LimFunctionHalf& x2, const Vec& x_at_0,
                          bool continuous) {
    if (x1.dim() != x2.dim()) throw std::invalid_argument("join_line: dimension mismatch");
    Vec a1 = x1.limit();
    Vec a2 = x2.limit();
    if (continuous) {
        if (norm_inf(x1.eval(0.0)) > 1e-9 || norm_inf(x2.eval(0.0)) > 1e-9)
            throw std::invalid_argument("join_line: continuous variant requires x1(0) = x2(0) = 0");
        if (x_at_0.size() != x1.dim()) throw std::invalid_argument("join_line: x_at_0 dimension mismatch");
        a1 = add(a1, x_at_0);
        a2 = add(a2, x_at_0);
    }

    std::vector<double> breaks;
    std::vector<Vec> values;
    const GridFunction& c1 = x1.core();
    for (std::size_t i = c1.size(); i-- > 0;) {
        if (c1.breaks()[i] > 0.0) {
            breaks.push_back(-c1.breaks()[i]);
            values.push_back(c1.values()[i]);
        }
    }
    if (!x2.core().empty()) {
        breaks.insert(breaks.end(), x2.core().breaks().begin(), x2.core().breaks().end());
        values.insert(values.end(), x2.core().values().begin(), x2.core().values().end());
    } else if (!breaks.empty()) {
        breaks.push_back(0.0);
        values.push_back(zero_vec(x1.dim()));
    }
    GridFunction core = breaks.empty() ? GridFunction(x1.dim()) : GridFunction(std::move(breaks), std::move(values));
    return LimFunctionLine(std::move(core), std::move(a1), std::move(a2));
}

double check_lambda_limit(const GridFunction& samples, const Vec& a, double eps, double N) {
    if (!(eps > 0.0)) throw std::invalid_argument("check_lambda_limit: eps must be positive");
    if (N < 0.0) throw std::invalid_argument("check_lambda_limit: N must be nonnegative");
    if (samples.empty()) return 0.0;
    if (samples.dim() != a.size()) throw std::invalid_argument("check_lambda_limit: dimension mismatch");

    double total = 0.0;
    const auto& b = samples.breaks();
    for (std::size_t i = 0; i + 1 < b.size(); ++i) {
        double l = std::max(b[i], N), r = b[i + 1];
        if (!(l < r)) continue;
        // on the cell, x(t) - a = u + (t - b_i) s, and ||x - a||^2 - eps^2 is
        // the convex quadratic  c2 w^2 + c1 w + c0  in w = t - b_i
        Vec u = sub(samples.values()[i], a);
        Vec s(samples.dim());
        double h = b[i + 1] - b[i];
        for (std::size_t j = 0; j < samples.dim(); ++j)
            s[j] = (samples.values()[i + 1][j] - samples.values()[i][j]) / h;
        double c2 = dot(s, s), c1 = 2.0 * dot(u, s), c0 = dot(u, u) - eps * eps;
        double wl = l - b[i], wr = r - b[i];
        if (c2 == 0.0) {
            if (c1 == 0.0) {
                if (c0 >= 0.0) total += wr - wl;
            } else {
                // linear: nonnegative on one side of the root
                double root = -c0 / c1;
                double lo = c1 > 0.0 ? std::max(wl, root) : wl;
                double hi = c1 > 0.0 ? wr : std::min(wr, root);
                if (hi > lo) total += hi - lo;
            }
            continue;
        }
        double disc = c1 * c1 - 4.0 * c2 * c0;
        if (disc <= 0.0) {
            total += wr - wl;  // quadratic never dips below zero
            continue;
        }
        double sq = std::sqrt(disc);
        double q = -0.5 * (c1 + (c1 >= 0.0 ? sq : -sq));
        double r1 = q / c2, r2 = c0 / q;
        if (r1 > r2) std::swap(r1, r2);
        // violation on the cell is [wl, wr] minus the open interval (r1, r2)
        double gap = std::max(0.0, std::min(wr, r2) - std::max(wl, r1));
        total += (wr - wl) - gap;
    }
    return total;
}

Perturbation degenerate_perturbation(const std::function<double(double)>& z, int n) {
    if (n <= 0) throw std::invalid_argument("degenerate_perturbation: n must be positive");
    double center = 2.0 * n;
    double lo = center - 1.0, hi = center + 1.0;
    double amp = 2.0 * std::abs(z(center));
    Perturbation out;
    out.z_n = [z, lo, hi, amp](double t) {
        double v = z(t);
        if (t >= lo && t <= hi) v += amp * (t - lo) * (hi - t);
        return v;
    };
    out.sup_dist = amp;
    out.witness = z(center) + amp;
    return out;
}

}  // namespace limspace
