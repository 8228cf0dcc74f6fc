#ifndef LIMSPACE_CONVEX_HPP
#define LIMSPACE_CONVEX_HPP

#include <functional>
#include <vector>

#include "limspace/extended_real.hpp"
#include "limspace/functionals.hpp"
#include "limspace/lim_function.hpp"

namespace limspace {

struct SupResult {
    double value = 0.0;
    // maximizers within 1e-9, ascending, POS_INF last. The flat tail
    // [last breakpoint, inf], where x equals its limit, is represented by
    // the single point POS_INF.
    std::vector<ExtendedReal> argmax;
};

// max of a scalar x over [0, inf], with x(inf) read from the limit.
SupResult sup_functional(const LimFunctionHalf& x);

// Extreme points of the subdifferential of the max functional at x: unit
// Dirac measures on the argmax set. The full subdifferential is their convex
// hull (not materialized).
std::vector<ExtendedMeasureFunctional> subdifferential_extreme_points(const LimFunctionHalf& x);

// Verifies the subgradient inequality f(y) >= f(x) + <mu, y - x>.
bool subgradient_check(const ExtendedMeasureFunctional& mu, const LimFunctionHalf& x,
                       const LimFunctionHalf& y, double tol = 1e-12);

// -max x: positive iff x lies interior to the nonpositive cone, and then a
// sup-norm ball of this radius around x stays inside the cone.
double cone_interior_margin(const LimFunctionHalf& x);

// Comparison of the two ambient-space readings of a strictly negative z
// vanishing at infinity: without the point at infinity no unit Dirac attains
// the subgradient equality (forcing the zero measure), with it delta_inf
// does.
struct DegeneracyComparison {
    double f_value = 0.0;           // max over [0, inf] of z (the limit 0)
    double best_finite_gap = 0.0;   // min over samples of f(z) - z(t), stays > 0
    bool c0_only_zero_measure = false;
    bool clim_delta_inf_works = false;
    double delta_inf_total_variation = 0.0;
};

DegeneracyComparison degeneracy_comparison(const std::function<double(double)>& z,
                                           const std::vector<double>& sample_ts);

}  // namespace limspace

#endif
