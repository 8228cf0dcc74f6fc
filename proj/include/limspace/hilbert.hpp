#ifndef LIMSPACE_HILBERT_HPP
#define LIMSPACE_HILBERT_HPP

#include <cstddef>
#include <vector>

#include "limspace/lim_function.hpp"
#include "limspace/step_function.hpp"

namespace limspace {

// One element of the orthonormal system in the Hilbert space of pairs
// (x0, a): the limit unit (0, 1), or a Haar function paired with limit 0.
struct BasisElement {
    enum class Kind { LimitUnit, Father, Wavelet };

    Kind kind = Kind::LimitUnit;
    int level = 0;      // wavelet scale j >= 0
    int translate = 0;  // wavelet shift k in [0, 2^j)
    double support_lo = 0.0;
    double support_hi = 0.0;
    double mid = 0.0;     // sign change point of a wavelet
    double amplitude = 0.0;
    StepFunction fn;      // materialized scalar step function (empty for LimitUnit)
};

// Haar system on [0, T] of the given depth: the limit unit, the constant
// scaling function, and wavelets of levels 0 .. depth-1. Core count is
// 2^depth; all pairwise inner products are exact.
class HaarBasis {
public:
    HaarBasis(double T, int depth);

    double length() const { return T_; }
    int depth() const { return depth_; }
    // number of elements including the limit unit
    std::size_t size() const { return elements_.size(); }
    const BasisElement& element(std::size_t i) const { return elements_[i]; }

private:
    double T_;
    int depth_;
    std::vector<BasisElement> elements_;
};

// Inner product of two basis elements. The dyadic support arithmetic keeps
// the Gram matrix exactly the identity.
double gram_entry(const BasisElement& a, const BasisElement& b);

// <x, y> = integral <x0, y0> dt + a . b (works for any dimension).
double inner_product(const LimFunctionHalf& x, const LimFunctionHalf& y);

// Step-core variant of the inner product.
double inner_product(const StepFunction& x0, const Vec& a, const StepFunction& y0, const Vec& b);

// Expansion coefficients against the basis, c[0] belonging to the limit unit.
struct Coefficients {
    double limit = 0.0;
    std::vector<double> core;
};

// Coefficients of a scalar x; the core support must fit inside [0, T].
Coefficients project(const LimFunctionHalf& x, const HaarBasis& basis);
Coefficients project(const StepFunction& core, double limit, const HaarBasis& basis);

// Partial sum of the expansion: a step-function core plus the limit.
std::pair<StepFunction, double> reconstruct(const Coefficients& c, const HaarBasis& basis);

struct ParsevalReport {
    double lhs = 0.0;  // ||x||^2 in the composite L2 sense
    double rhs = 0.0;  // sum of squared coefficients
    double gap = 0.0;  // lhs - rhs >= 0, the energy missed by the basis
};

ParsevalReport parseval_check(const LimFunctionHalf& x, const HaarBasis& basis);

// Split a line function (plain splitting) and expand both halves.
std::pair<Coefficients, Coefficients> expand_line(const LimFunctionLine& x, const HaarBasis& basis);

}  // namespace limspace

#endif
