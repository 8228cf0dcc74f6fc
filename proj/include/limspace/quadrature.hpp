#ifndef LIMSPACE_QUADRATURE_HPP
#define LIMSPACE_QUADRATURE_HPP

#include <functional>

#include "limspace/grid_function.hpp"
#include "limspace/step_function.hpp"

namespace limspace {

// Exact integral kernels for the piecewise representations used throughout.
// Every routine here is closed-form except lp_integral for general p, which
// falls back to adaptive Simpson quadrature.

// integral of <f, g> dt for two piecewise-linear functions (the integrand is
// piecewise quadratic; Simpson per merged cell is exact).
double inner_l2(const GridFunction& f, const GridFunction& g);

// integral of <f, g> dt for piecewise-linear f against piecewise-constant g.
double inner_l2(const GridFunction& f, const StepFunction& g);

// integral of <f, g> dt for two piecewise-constant functions.
double inner_l2(const StepFunction& f, const StepFunction& g);

// integral over [lo, hi] of ||A + (t - lo) * S||_2 dt, the arc of an affine
// path; closed form (sqrt-of-quadratic antiderivative).
double integral_norm2_affine(const Vec& A, const Vec& S, double lo, double hi);

// integral of ||f(t)||_2 dt (exact closed form per cell).
double l1_integral(const GridFunction& f);

// integral of ||f(t)||_2^p dt. Exact for p = 1 and p = 2; adaptive Simpson
// with absolute tolerance `tol` otherwise.
double lp_integral(const GridFunction& f, double p, double tol = 1e-12);

// Adaptive Simpson on a scalar callable (used for the general-p fallback;
// exposed for reuse in verification code).
double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol);

}  // namespace limspace

#endif
