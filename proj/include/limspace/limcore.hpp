#ifndef LIMSPACE_LIMCORE_HPP
#define LIMSPACE_LIMCORE_HPP

#include <functional>
#include <utility>

#include "limspace/lim_function.hpp"

namespace limspace {

// Which norm the core component x0 carries: the sup norm (space of continuous
// functions vanishing at infinity) or an L_p norm (Lebesgue flavor).
enum class CoreFlavor { Sup, Lp };

// Composite norm on x = x0 + a combining ||x0|| and ||a||.
struct CompositeNorm {
    enum class Combine { Power, Sum, Max };

    Combine combine = Combine::Power;
    double p = 2.0;       // exponent for Power combining
    CoreFlavor flavor = CoreFlavor::Sup;
    double core_p = 2.0;  // L_p exponent of the core when flavor == Lp

    static CompositeNorm p_composite(double p, CoreFlavor flavor = CoreFlavor::Sup) {
        return {Combine::Power, p, flavor, p};
    }
    static CompositeNorm sum(CoreFlavor flavor = CoreFlavor::Sup, double core_p = 2.0) {
        return {Combine::Sum, 0.0, flavor, core_p};
    }
    static CompositeNorm max(CoreFlavor flavor = CoreFlavor::Sup, double core_p = 2.0) {
        return {Combine::Max, 0.0, flavor, core_p};
    }
};

// sup over [0, inf] of ||x(t)||_2. Exact: the sup of a piecewise-linear
// function under a convex vector norm is attained at a breakpoint or at
// infinity.
double sup_norm(const LimFunctionHalf& x);

// Norm of the core component alone under the chosen flavor.
double core_norm(const LimFunctionHalf& x, CoreFlavor flavor, double p);

// Composite norm ||x|| from ||x0|| and ||a|| per the chosen combination.
double x_norm(const LimFunctionHalf& x, const CompositeNorm& norm);

struct NormEquivalence {
    double sup = 0.0;
    double composite = 0.0;
    double ratio = 1.0;  // composite / sup; 1 for the zero function
};

// Ratio of the sum-composite norm (sup-flavor) to the plain sup norm. Throws
// if the ratio escapes [1, 3] beyond roundoff; those bounds are sharp.
NormEquivalence check_norm_equivalence(const LimFunctionHalf& x);

// Split a line function into two half-line functions (x(-t), x(t)). The
// continuous variant shifts both parts by -x(0) so they vanish at 0. At t = 0
// the reflected part takes the left limit of x, which keeps it representable;
// both variants are exact away from 0 and round-trip exactly with join_line.
std::pair<LimFunctionHalf, LimFunctionHalf> split_line(const LimFunctionLine& x, bool continuous);

// Inverse of split_line. x_at_0 is only consulted by the continuous variant,
// which requires x1(0) = x2(0) = 0.
LimFunctionLine join_line(const LimFunctionHalf& x1, const LimFunctionHalf& x2, const Vec& x_at_0,
                          bool continuous);

// Lebesgue measure of { t in [N, T] : ||x(t) - a|| >= eps } for piecewise-
// linear samples on [0, T]; per-cell quadratic crossing analysis, exact.
double check_lambda_limit(const GridFunction& samples, const Vec& a, double eps, double N);

struct Perturbation {
    std::function<double(double)> z_n;
    double sup_dist = 0.0;  // sup |z_n - z| = 2 |z(2n)|, attained at t = 2n
    double witness = 0.0;   // z_n(2n) = |z(2n)| > 0 whenever z(2n) != 0
};

// Bump perturbation of a strictly negative z vanishing at infinity: adds
// 2|z(2n)| (t - (2n-1)) ((2n+1) - t) on [2n-1, 2n+1]. The result leaves the
// nonpositive cone while staying sup-close to z for large n.
Perturbation degenerate_perturbation(const std::function<double(double)>& z, int n);

}  // namespace limspace

#endif
