#ifndef LIMSPACE_FUNCTIONALS_HPP
#define LIMSPACE_FUNCTIONALS_HPP

#include "limspace/lim_function.hpp"
#include "limspace/signed_measure.hpp"
#include "limspace/step_function.hpp"
#include "limspace/vec.hpp"

namespace limspace {

// <x*, x> = integral <x(t) - x(inf), dmu(t)> + alpha^T x(inf) on the half
// line. The finite measure carries the core action; alpha alone acts on the
// limit, so atoms at infinity are not allowed here.
struct MeasureFunctionalHalf {
    SignedMeasure mu;
    Vec alpha;

    MeasureFunctionalHalf(SignedMeasure m, Vec a);

    bool operator==(const MeasureFunctionalHalf&) const = default;
};

// Line version with separate limit weights at -inf and +inf.
struct MeasureFunctionalLine {
    SignedMeasure mu;
    Vec alpha1;
    Vec alpha2;

    MeasureFunctionalLine(SignedMeasure m, Vec a1, Vec a2);
};

// <x*, x> = integral <x(t), dmu~(t)> over the compactified domain; mu~ may
// place atoms at the infinite endpoints, which read the limit values of x.
struct ExtendedMeasureFunctional {
    SignedMeasure mu_tilde;

    explicit ExtendedMeasureFunctional(SignedMeasure m);
};

// <x*, x> = integral <y(t), x(t) - x(inf)> dt + alpha^T x(inf) with a step
// density y in L_q; q is the Hoelder conjugate of the primal exponent.
struct DensityFunctionalHalf {
    StepFunction y;
    double q = 2.0;
    Vec alpha;

    DensityFunctionalHalf(StepFunction y_, double q_, Vec a);
};

struct DensityFunctionalLine {
    StepFunction y;
    double q = 2.0;
    Vec alpha1;
    Vec alpha2;

    DensityFunctionalLine(StepFunction y_, double q_, Vec a1, Vec a2);
};

// <x*, x> = sum y_n (x_n - a) + alpha a on convergent sequences.
struct SequenceFunctional {
    std::vector<double> y;
    double alpha = 0.0;
};

// Concrete dual element of the Sobolev-flavored space:
// <x*, x> = integral <y0, x - a> + <y1, x'> dt + alpha^T a.
struct SobolevFunctional {
    StepFunction y0;
    StepFunction y1;
    Vec alpha;

    SobolevFunctional(StepFunction y0_, StepFunction y1_, Vec a);
};

double pair_measure(const MeasureFunctionalHalf& f, const LimFunctionHalf& x);
double pair_measure_line(const MeasureFunctionalLine& f, const LimFunctionLine& x);

// Conversion to the single-measure form: mu~ = mu + nu_inf * delta_inf with
// nu_inf = alpha - mu([0, inf)), and back. Exact inverses of one another.
ExtendedMeasureFunctional to_extended(const MeasureFunctionalHalf& f);
MeasureFunctionalHalf from_extended(const ExtendedMeasureFunctional& g);

double pair_extended(const ExtendedMeasureFunctional& g, const LimFunctionHalf& x);
double pair_extended(const ExtendedMeasureFunctional& g, const LimFunctionLine& x);

// Assemble the line functional equivalent to acting with (mu1, mu2, alpha)
// through the splitting x -> (x(-t), x(t)): mu = mu1(-t) + mu2,
// alpha1 = -mu1([0,inf)), alpha2 = alpha - mu2([0,inf)).
MeasureFunctionalLine assemble_line_measure(const SignedMeasure& mu1, const SignedMeasure& mu2,
                                            const Vec& alpha);

double pair_density(const DensityFunctionalHalf& f, const LimFunctionHalf& x);
double pair_density_line(const DensityFunctionalLine& f, const LimFunctionLine& x);

// Line density from two half-line densities: y(t) = y1(-t) on the negative
// axis and y2(t) on the positive one, with the limit weights shifted by the
// corresponding density masses.
DensityFunctionalLine assemble_line_density(const StepFunction& y1, const StepFunction& y2,
                                            const Vec& alpha1, const Vec& alpha2, double q);

double pair_sequence(const SequenceFunctional& f, const LimSequence& x);

double pair_sobolev(const SobolevFunctional& f, const LimFunctionHalf& x);

}  // namespace limspace

#endif
