#include "limspace/hilbert.hpp"

#include <cmath>
#include <stdexcept>

#include "limspace/limcore.hpp"
#include "limspace/quadrature.hpp"

namespace limspace {

HaarBasis::HaarBasis(double T, int depth) : T_(T), depth_(depth) {
    if (!(T > 0.0)) throw std::invalid_argument("HaarBasis: T must be positive");
    if (depth < 0) throw std::invalid_argument("HaarBasis: negative depth");

    BasisElement limit_unit;
    limit_unit.kind = BasisElement::Kind::LimitUnit;
    elements_.push_back(limit_unit);

    BasisElement father;
    father.kind = BasisElement::Kind::Father;
    father.support_lo = 0.0;
    father.support_hi = T;
    father.mid = T;  // no sign change
    father.amplitude = 1.0 / std::sqrt(T);
    father.fn = StepFunction::scalar({0.0, T}, {father.amplitude});
    elements_.push_back(father);

    for (int j = 0; j < depth; ++j) {
        int cells = 1 << j;
        double width = T / cells;
        double amp = std::sqrt(static_cast<double>(cells) / T);
        for (int k = 0; k < cells; ++k) {
            BasisElement e;
            e.kind = BasisElement::Kind::Wavelet;
            e.level = j;
            e.translate = k;
            e.support_lo = k * width;
            e.support_hi = e.support_lo + width;
            e.mid = e.support_lo + 0.5 * width;
            e.amplitude = amp;
            e.fn = StepFunction::scalar({e.support_lo, e.mid, e.support_hi}, {amp, -amp});
            elements_.push_back(e);
        }
    }
}

double gram_entry(const BasisElement& a, const BasisElement& b) {
    using Kind = BasisElement::Kind;
    if (a.kind == Kind::LimitUnit || b.kind == Kind::LimitUnit)
        return (a.kind == Kind::LimitUnit && b.kind == Kind::LimitUnit) ? 1.0 : 0.0;

    // disjoint supports
    if (a.support_hi <= b.support_lo || b.support_hi <= a.support_lo) return 0.0;

    auto raw_self = [](const BasisElement& e) { return e.support_hi - e.support_lo; };

    // the unnormalized sign patterns integrate exactly: over one constant
    // piece of the coarser element the finer wavelet's halves cancel
    auto raw_pair = [&](const BasisElement& coarse, const BasisElement& fine) -> double {
        if (fine.kind == Kind::Father) return raw_self(fine);  // both fathers
        double half = fine.mid - fine.support_lo;
        double cancel = half - (fine.support_hi - fine.mid);  // exact 0 for dyadic halves
        if (coarse.kind == Kind::Father) return cancel;
        // nested wavelets: the finer support lies inside one half of the coarser
        double sign = fine.support_hi <= coarse.mid ? 1.0 : -1.0;
        return sign * cancel;
    };

    double raw;
    if (a.kind == Kind::Wavelet && b.kind == Kind::Wavelet && a.level == b.level) {
        raw = (a.translate == b.translate) ? raw_self(a) : 0.0;
    } else {
        const BasisElement& coarse = raw_self(a) >= raw_self(b) ? a : b;
        const BasisElement& fine = raw_self(a) >= raw_self(b) ? b : a;
        raw = raw_pair(coarse, fine);
    }

    double da = raw_self(a), db = raw_self(b);
    return da == db ? raw / da : raw / std::sqrt(da * db);
}

double inner_product(const LimFunctionHalf& x, const LimFunctionHalf& y) {
    if (x.dim() != y.dim()) throw std::invalid_argument("inner_product: dimension mismatch");
    return inner_l2(x.core(), y.core()) + dot(x.limit(), y.limit());
}

double inner_product(const StepFunction& x0, const Vec& a, const StepFunction& y0, const Vec& b) {
    if (x0.dim() != a.size() || y0.dim() != b.size())
        throw std::invalid_argument("inner_product: dimension mismatch");
    return inner_l2(x0, y0) + dot(a, b);
}

namespace {

void check_inside(double support_end, const HaarBasis& basis) {
    if (support_end > basis.length())
        throw std::invalid_argument("project: core support exceeds the basis interval");
}

}  // namespace

Coefficients project(const LimFunctionHalf& x, const HaarBasis& basis) {
    if (x.dim() != 1) throw std::invalid_argument("project: scalar functions only");
    if (!x.core().empty()) check_inside(x.core().support_end(), basis);
    Coefficients c;
    c.limit = x.limit()[0];
    c.core.reserve(basis.size() - 1);
    for (std::size_t i = 1; i < basis.size(); ++i)
        c.core.push_back(inner_l2(x.core(), basis.element(i).fn));
    return c;
}

Coefficients project(const StepFunction& core, double limit, const HaarBasis& basis) {
    if (core.dim() != 1) throw std::invalid_argument("project: scalar functions only");
    if (!core.empty()) check_inside(core.support_end(), basis);
    Coefficients c;
    c.limit = limit;
    c.core.reserve(basis.size() - 1);
    for (std::size_t i = 1; i < basis.size(); ++i)
        c.core.push_back(inner_l2(core, basis.element(i).fn));
    return c;
}

std::pair<StepFunction, double> reconstruct(const Coefficients& c, const HaarBasis& basis) {
    if (c.core.size() + 1 != basis.size())
        throw std::invalid_argument("reconstruct: coefficient count mismatch");
    StepFunction sum(1);
    for (std::size_t i = 1; i < basis.size(); ++i) {
        if (c.core[i - 1] == 0.0) continue;
        sum = sum + c.core[i - 1] * basis.element(i).fn;
    }
    return {std::move(sum), c.limit};
}

ParsevalReport parseval_check(const LimFunctionHalf& x, const HaarBasis& basis) {
    Coefficients c = project(x, basis);
    ParsevalReport rep;
    rep.lhs = inner_product(x, x);
    rep.rhs = c.limit * c.limit;
    for (double ck : c.core) rep.rhs += ck * ck;
    rep.gap = rep.lhs - rep.rhs;
    return rep;
}

std::pair<Coefficients, Coefficients> expand_line(const LimFunctionLine& x, const HaarBasis& basis) {
    auto [x1, x2] = split_line(x, /*continuous=*/false);
    return {project(x1, basis), project(x2, basis)};
}

}  // namespace limspace
