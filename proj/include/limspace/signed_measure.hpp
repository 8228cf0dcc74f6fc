#ifndef LIMSPACE_SIGNED_MEASURE_HPP
#define LIMSPACE_SIGNED_MEASURE_HPP

#include <cstddef>
#include <functional>
#include <vector>

#include "limspace/extended_real.hpp"
#include "limspace/lim_function.hpp"
#include "limspace/step_function.hpp"
#include "limspace/vec.hpp"

namespace limspace {

enum class Domain { Half, Line, Finite };

// Vector-valued signed Borel measure represented as finitely many atoms plus
// a piecewise-constant density. Atoms may sit at -inf / +inf where the domain
// allows it; the density lives on a finite breakpoint grid. This class of
// measures is closed under every operation we need and integrates exactly
// against piecewise-linear functions.
class SignedMeasure {
public:
    struct Atom {
        ExtendedReal location;
        Vec weight;
    };

    struct TotalVariation {
        Vec per_component;
        double total = 0.0;
    };

    SignedMeasure() : domain_(Domain::Half), dim_(1) {}
    SignedMeasure(Domain domain, std::size_t dim) : domain_(domain), dim_(dim), density_(dim) {}

    // Atoms at equal locations are merged (weights summed); exact-zero
    // weights are dropped. Locations must lie in the domain.
    SignedMeasure(Domain domain, std::vector<Atom> atoms, StepFunction density);
    SignedMeasure(Domain domain, std::vector<Atom> atoms);

    static SignedMeasure dirac(Domain domain, ExtendedReal location, Vec weight);

    Domain domain() const { return domain_; }
    std::size_t dim() const { return dim_; }
    const std::vector<Atom>& atoms() const { return atoms_; }
    const StepFunction& density() const { return density_; }
    bool is_zero_measure() const { return atoms_.empty() && density_.empty(); }

    bool has_infinite_atom() const;
    bool is_nonnegative() const;

    // Measure of the whole domain, componentwise (atoms plus density mass).
    Vec mass() const;

    TotalVariation total_variation() const;

    // Positive / negative parts of a scalar measure (atomwise and cellwise).
    std::pair<SignedMeasure, SignedMeasure> jordan_decompose() const;

    // integral of <x(t), dmu(t)>; atoms at +-inf read the limit values of x.
    double integrate(const LimFunctionHalf& x) const;
    double integrate(const LimFunctionLine& x) const;

    // Atom-only integral against an arbitrary evaluation rule.
    double integrate_atoms_with(const std::function<Vec(const ExtendedReal&)>& f) const;

    // Image under t(s) = s / (1 + s) mapping [0, inf] onto [0, 1]. Atom
    // masses move unchanged; density cells are subdivided until the
    // piecewise-constant image density tracks the true transformed density
    // with per-cell weak error below `tol`, while every subcell mass is
    // preserved exactly by construction.
    SignedMeasure pushforward_compactify(double tol = 1e-12) const;

    // t -> -t image. A Half measure becomes a Line measure.
    SignedMeasure reflected() const;

    SignedMeasure with_domain(Domain d) const;

    friend SignedMeasure operator+(const SignedMeasure& a, const SignedMeasure& b);
    friend SignedMeasure operator*(double c, const SignedMeasure& mu);

    bool operator==(const SignedMeasure& other) const;

private:
    void validate() const;

    Domain domain_;
    std::size_t dim_;
    std::vector<Atom> atoms_;
    StepFunction density_;
};

const char* domain_name(Domain d);

}  // namespace limspace

#endif
