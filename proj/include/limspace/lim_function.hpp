#ifndef LIMSPACE_LIM_FUNCTION_HPP
#define LIMSPACE_LIM_FUNCTION_HPP

#include <cstddef>
#include <vector>

#include "limspace/extended_real.hpp"
#include "limspace/grid_function.hpp"
#include "limspace/vec.hpp"

namespace limspace {

// x(t) = core(t) + a on [0, inf), where the core has compact support and a is
// the limit at infinity. The core grid must start at t = 0 when nonempty; a
// nonzero core value at 0 is allowed (the domain edge).
class LimFunctionHalf {
public:
    LimFunctionHalf() : core_(1), limit_(1, 0.0) {}
    LimFunctionHalf(GridFunction core, Vec limit);

    static LimFunctionHalf constant(Vec a) { return LimFunctionHalf(GridFunction(a.size()), std::move(a)); }

    const GridFunction& core() const { return core_; }
    const Vec& limit() const { return limit_; }
    std::size_t dim() const { return limit_.size(); }

    Vec eval(double t) const;
    Vec eval(const ExtendedReal& t) const;

    friend LimFunctionHalf operator+(const LimFunctionHalf& a, const LimFunctionHalf& b);
    friend LimFunctionHalf operator-(const LimFunctionHalf& a, const LimFunctionHalf& b);
    friend LimFunctionHalf operator*(double c, const LimFunctionHalf& x);

private:
    GridFunction core_;
    Vec limit_;
};

// x(t) = core(t) + a1 on t < 0 and core(t) + a2 on t >= 0, with limits a1 at
// -inf and a2 at +inf. The switch point between the two limit offsets is
// fixed at 0. The core may carry a jump at 0 (first breakpoint exactly 0 with
// a nonzero value there); everywhere else it joins its zero tails
// continuously, so a core whose support starts left of 0 must begin at the
// zero vector.
class LimFunctionLine {
public:
    LimFunctionLine() : core_(1), limit_neg_(1, 0.0), limit_pos_(1, 0.0) {}
    LimFunctionLine(GridFunction core, Vec limit_neg, Vec limit_pos);

    const GridFunction& core() const { return core_; }
    const Vec& limit_neg() const { return limit_neg_; }
    const Vec& limit_pos() const { return limit_pos_; }
    std::size_t dim() const { return limit_pos_.size(); }

    Vec eval(double t) const;
    Vec eval(const ExtendedReal& t) const;

    // Left limit at 0 (differs from eval(0) when the function jumps there).
    Vec eval_left_of_zero() const;

    // True iff the function has no jump anywhere: either a1 = a2, or the core
    // absorbs the step with a jump at exactly t = 0 of size a1 - a2.
    bool is_continuous() const;

    friend LimFunctionLine operator+(const LimFunctionLine& a, const LimFunctionLine& b);
    friend LimFunctionLine operator-(const LimFunctionLine& a, const LimFunctionLine& b);
    friend LimFunctionLine operator*(double c, const LimFunctionLine& x);

private:
    GridFunction core_;
    Vec limit_neg_;
    Vec limit_pos_;
};

// Convergent sequence x_n = head[n] + a, with head[n] = 0 beyond the stored
// prefix.
struct LimSequence {
    std::vector<double> head;
    double limit = 0.0;

    double at(std::size_t n) const { return (n < head.size() ? head[n] : 0.0) + limit; }
};

}  // namespace limspace

#endif
