#include "limspace/functionals.hpp"

#include <stdexcept>

#include "limspace/quadrature.hpp"

namespace limspace {

MeasureFunctionalHalf::MeasureFunctionalHalf(SignedMeasure m, Vec a)
    : mu(std::move(m)), alpha(std::move(a)) {
    if (mu.domain() != Domain::Half && mu.domain() != Domain::Finite)
        throw std::invalid_argument("MeasureFunctionalHalf: half-line measure required");
    if (mu.has_infinite_atom())
        throw std::invalid_argument("MeasureFunctionalHalf: atoms at infinity belong to the extended form");
    if (mu.dim() != alpha.size()) throw std::invalid_argument("MeasureFunctionalHalf: dimension mismatch");
}

MeasureFunctionalLine::MeasureFunctionalLine(SignedMeasure m, Vec a1, Vec a2)
    : mu(std::move(m)), alpha1(std::move(a1)), alpha2(std::move(a2)) {
    if (mu.domain() != Domain::Line && mu.domain() != Domain::Finite)
        throw std::invalid_argument("MeasureFunctionalLine: line measure required");
    if (mu.has_infinite_atom())
        throw std::invalid_argument("MeasureFunctionalLine: atoms at infinity belong to the extended form");
    if (mu.dim() != alpha1.size() || mu.dim() != alpha2.size())
        throw std::invalid_argument("MeasureFunctionalLine: dimension mismatch");
}

ExtendedMeasureFunctional::ExtendedMeasureFunctional(SignedMeasure m) : mu_tilde(std::move(m)) {
    if (mu_tilde.domain() == Domain::Finite)
        throw std::invalid_argument("ExtendedMeasureFunctional: Half or Line domain required");
}

DensityFunctionalHalf::DensityFunctionalHalf(StepFunction y_, double q_, Vec a)
    : y(std::move(y_)), q(q_), alpha(std::move(a)) {
    if (!(q >= 1.0)) throw std::invalid_argument("DensityFunctionalHalf: q < 1");
    if (!y.empty() && y.support_begin() < 0.0)
        throw std::invalid_argument("DensityFunctionalHalf: density outside [0, inf)");
    if (y.dim() != alpha.size()) throw std::invalid_argument("DensityFunctionalHalf: dimension mismatch");
}

DensityFunctionalLine::DensityFunctionalLine(StepFunction y_, double q_, Vec a1, Vec a2)
    : y(std::move(y_)), q(q_), alpha1(std::move(a1)), alpha2(std::move(a2)) {
    if (!(q >= 1.0)) throw std::invalid_argument("DensityFunctionalLine: q < 1");
    if (y.dim() != alpha1.size() || y.dim() != alpha2.size())
        throw std::invalid_argument("DensityFunctionalLine: dimension mismatch");
}

SobolevFunctional::SobolevFunctional(StepFunction y0_, StepFunction y1_, Vec a)
    : y0(std::move(y0_)), y1(std::move(y1_)), alpha(std::move(a)) {
    if (y0.dim() != alpha.size() || y1.dim() != alpha.size())
        throw std::invalid_argument("SobolevFunctional: dimension mismatch");
}

double pair_measure(const MeasureFunctionalHalf& f, const LimFunctionHalf& x) {
    if (f.mu.dim() != x.dim()) throw std::invalid_argument("pair_measure: dimension mismatch");
    // <x - a, mu> = <core, mu> since mu has no mass at infinity
    LimFunctionHalf shifted(x.core(), zero_vec(x.dim()));
    return f.mu.integrate(shifted) + dot(f.alpha, x.limit());
}

double pair_measure_line(const MeasureFunctionalLine& f, const LimFunctionLine& x) {
    if (f.mu.dim() != x.dim()) throw std::invalid_argument("pair_measure_line: dimension mismatch");
    return f.mu.integrate(x) + dot(f.alpha1, x.limit_neg()) + dot(f.alpha2, x.limit_pos());
}

ExtendedMeasureFunctional to_extended(const MeasureFunctionalHalf& f) {
    Vec nu_inf = sub(f.alpha, f.mu.mass());
    SignedMeasure at_inf = SignedMeasure::dirac(Domain::Half, ExtendedReal::pos_inf(), std::move(nu_inf));
    return ExtendedMeasureFunctional(f.mu.with_domain(Domain::Half) + at_inf);
}

MeasureFunctionalHalf from_extended(const ExtendedMeasureFunctional& g) {
    if (g.mu_tilde.domain() != Domain::Half)
        throw std::invalid_argument("from_extended: Half domain required");
    std::vector<SignedMeasure::Atom> finite_atoms;
    Vec nu_inf = zero_vec(g.mu_tilde.dim());
    for (const auto& a : g.mu_tilde.atoms()) {
        if (a.location.is_pos_inf())
            nu_inf = add(nu_inf, a.weight);
        else
            finite_atoms.push_back(a);
    }
    SignedMeasure mu(Domain::Half, std::move(finite_atoms), g.mu_tilde.density());
    Vec alpha = add(nu_inf, mu.mass());
    return MeasureFunctionalHalf(std::move(mu), std::move(alpha));
}

double pair_extended(const ExtendedMeasureFunctional& g, const LimFunctionHalf& x) {
    return g.mu_tilde.integrate(x);
}

double pair_extended(const ExtendedMeasureFunctional& g, const LimFunctionLine& x) {
    return g.mu_tilde.integrate(x);
}

MeasureFunctionalLine assemble_line_measure(const SignedMeasure& mu1, const SignedMeasure& mu2,
                                            const Vec& alpha) {
    if (mu1.domain() != Domain::Half || mu2.domain() != Domain::Half)
        throw std::invalid_argument("assemble_line_measure: half-line measures required");
    if (mu1.has_infinite_atom() || mu2.has_infinite_atom())
        throw std::invalid_argument("assemble_line_measure: finite parts required");
    SignedMeasure mu = mu1.reflected() + mu2.with_domain(Domain::Line);
    Vec alpha1 = scale(-1.0, mu1.mass());
    Vec alpha2 = sub(alpha, mu2.mass());
    return MeasureFunctionalLine(std::move(mu), std::move(alpha1), std::move(alpha2));
}

double pair_density(const DensityFunctionalHalf& f, const LimFunctionHalf& x) {
    if (f.y.dim() != x.dim()) throw std::invalid_argument("pair_density: dimension mismatch");
    return inner_l2(x.core(), f.y) + dot(f.alpha, x.limit());
}

double pair_density_line(const DensityFunctionalLine& f, const LimFunctionLine& x) {
    if (f.y.dim() != x.dim()) throw std::invalid_argument("pair_density_line: dimension mismatch");
    double s = inner_l2(x.core(), f.y);
    double lo = f.y.support_begin(), hi = f.y.support_end();
    s += dot(x.limit_neg(), f.y.integral_over(lo, std::min(0.0, hi)));
    s += dot(x.limit_pos(), f.y.integral_over(std::max(0.0, lo), hi));
    return s + dot(f.alpha1, x.limit_neg()) + dot(f.alpha2, x.limit_pos());
}

DensityFunctionalLine assemble_line_density(const StepFunction& y1, const StepFunction& y2,
                                            const Vec& alpha1, const Vec& alpha2, double q) {
    if (y1.dim() != y2.dim()) throw std::invalid_argument("assemble_line_density: dimension mismatch");
    if ((!y1.empty() && y1.support_begin() < 0.0) || (!y2.empty() && y2.support_begin() < 0.0))
        throw std::invalid_argument("assemble_line_density: half-line densities required");
    StepFunction y = y1.reflected() + y2;
    Vec a1 = sub(alpha1, y1.integral());
    Vec a2 = sub(alpha2, y2.integral());
    return DensityFunctionalLine(std::move(y), q, std::move(a1), std::move(a2));
}

double pair_sequence(const SequenceFunctional& f, const LimSequence& x) {
    double s = f.alpha * x.limit;
    std::size_t n = std::min(f.y.size(), x.head.size());
    for (std::size_t i = 0; i < n; ++i) s += f.y[i] * x.head[i];
    return s;
}

double pair_sobolev(const SobolevFunctional& f, const LimFunctionHalf& x) {
    if (f.y0.dim() != x.dim()) throw std::invalid_argument("pair_sobolev: dimension mismatch");
    double s = dot(f.alpha, x.limit());
    s += inner_l2(x.core(), f.y0);
    s += inner_l2(x.core().derivative(), f.y1);
    return s;
}

}  // namespace limspace
