#include "limspace/convex.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace limspace {

namespace {
constexpr double kArgmaxTol = 1e-9;
}

SupResult sup_functional(const LimFunctionHalf& x) {
    if (x.dim() != 1) throw std::invalid_argument("sup_functional: scalar functions only");
    double a = x.limit()[0];
    const auto& breaks = x.core().breaks();
    const auto& values = x.core().values();

    // scan the breakpoints ahead of the flat tail; on [t_m, inf] the function
    // is identically a, represented by POS_INF
    std::size_t scan = breaks.empty() ? 0 : breaks.size() - 1;
    double value = a;
    for (std::size_t i = 0; i < scan; ++i) value = std::max(value, values[i][0] + a);

    SupResult out;
    out.value = value;
    for (std::size_t i = 0; i < scan; ++i) {
        if (values[i][0] + a >= value - kArgmaxTol) out.argmax.push_back(ExtendedReal::finite(breaks[i]));
    }
    if (a >= value - kArgmaxTol) out.argmax.push_back(ExtendedReal::pos_inf());
    return out;
}

std::vector<ExtendedMeasureFunctional> subdifferential_extreme_points(const LimFunctionHalf& x) {
    std::vector<ExtendedMeasureFunctional> out;
    for (const ExtendedReal& t : sup_functional(x).argmax)
        out.push_back(ExtendedMeasureFunctional(SignedMeasure::dirac(Domain::Half, t, Vec{1.0})));
    return out;
}

bool subgradient_check(const ExtendedMeasureFunctional& mu, const LimFunctionHalf& x,
                       const LimFunctionHalf& y, double tol) {
    double fx = sup_functional(x).value;
    double fy = sup_functional(y).value;
    return fy >= fx + pair_extended(mu, y - x) - tol;
}

double cone_interior_margin(const LimFunctionHalf& x) {
    return -sup_functional(x).value;
}

DegeneracyComparison degeneracy_comparison(const std::function<double(double)>& z,
                                           const std::vector<double>& sample_ts) {
    if (sample_ts.empty()) throw std::invalid_argument("degeneracy_comparison: no sample points");
    DegeneracyComparison out;
    out.f_value = 0.0;  // z < 0 with z -> 0 makes the max over [0, inf] the limit value

    // without the point at infinity: <delta_t, z> = z(t) < 0 = f(z) for every
    // finite t, so the equality in the subdifferential forces mu = 0
    double gap = std::numeric_limits<double>::infinity();
    bool all_negative = true;
    for (double t : sample_ts) {
        double zt = z(t);
        if (!(zt < 0.0)) all_negative = false;
        gap = std::min(gap, out.f_value - zt);
    }
    out.best_finite_gap = gap;
    out.c0_only_zero_measure = all_negative && gap > 0.0;

    // with the point at infinity: delta_inf reads the limit and attains f(z)
    SignedMeasure delta_inf = SignedMeasure::dirac(Domain::Half, ExtendedReal::pos_inf(), Vec{1.0});
    out.delta_inf_total_variation = delta_inf.total_variation().total;
    double pairing = 0.0;  // <delta_inf, z> = lim z = 0
    out.clim_delta_inf_works =
        delta_inf.is_nonnegative() && out.delta_inf_total_variation == 1.0 && pairing == out.f_value;
    return out;
}

}  // namespace limspace
