#ifndef LIMSPACE_DUAL_NORM_HPP
#define LIMSPACE_DUAL_NORM_HPP

#include <cstddef>
#include <cstdint>

#include "limspace/functionals.hpp"

namespace limspace {

// Primal norm on x = (x0, a) whose unit ball the oracle optimizes over.
// PComposite combines (||x0||_p, |a|) with the p-power sum; Sum and Max
// combine them additively / by maximum, with p as the core exponent.
struct PrimalNorm {
    enum class Kind { PComposite, Sum, Max };

    Kind kind = Kind::PComposite;
    double p = 2.0;

    static PrimalNorm p_composite(double p) { return {Kind::PComposite, p}; }
    static PrimalNorm sum(double core_p) { return {Kind::Sum, core_p}; }
    static PrimalNorm max(double core_p) { return {Kind::Max, core_p}; }
};

struct DualNormReport {
    double value = 0.0;
    bool certified = false;  // exhaustive extreme-point enumeration (gap 0)
    double gap = 0.0;        // certificate gap; meaningful when certified
    int restarts = 0;        // gradient-ascent restarts when not certified
    Vec witness_core;        // maximizer coordinates of the core slot
    double witness_limit = 0.0;
};

// Brute-force dual norm: sup of the pairing over the unit ball of the chosen
// primal norm. Polyhedral balls (core exponent 1, or the sup-norm core, with
// Sum/Max/1-power combining) are solved exactly by vertex enumeration; the
// rest by projected-gradient ascent over the core ball plus a concave 1-D
// search over the budget split, reported as a lower bound.
//
// Sequence case: the primal is (x0_1..x0_N, a) with N = truncation <= 8.
DualNormReport dual_norm_oracle(const SequenceFunctional& f, const PrimalNorm& primal,
                                std::size_t truncation, std::uint64_t seed = 20240901);

// Density case: the primal core ranges over step functions on the grid of y
// (where the L_p extremizers of a step density live); <= 8 cells.
DualNormReport dual_norm_oracle(const DensityFunctionalHalf& f, const PrimalNorm& primal,
                                std::size_t truncation, std::uint64_t seed = 20240901);

// Measure case (sup-norm core): the primal core ranges over piecewise-linear
// functions on the atom grid that vanish at infinity; <= 8 atoms.
DualNormReport dual_norm_oracle(const MeasureFunctionalHalf& f, const PrimalNorm& primal,
                                std::size_t truncation, std::uint64_t seed = 20240901);

double conjugate_exponent(double p);

// Closed forms the oracle audits: the additive form ||x0*|| + ||alpha|| and
// the q-power composite (||x0*||^q + ||alpha||^q)^(1/q), q conjugate to p.
struct DualFormulas {
    double core_dual = 0.0;
    double sum = 0.0;
    double q_composite = 0.0;
};

DualFormulas dual_formulas(const SequenceFunctional& f, double p);
DualFormulas dual_formulas(const DensityFunctionalHalf& f, double p);
DualFormulas dual_formulas(const MeasureFunctionalHalf& f);

}  // namespace limspace

#endif
