#include "limspace/lim_function.hpp"

#include <stdexcept>

namespace limspace {

LimFunctionHalf::LimFunctionHalf(GridFunction core, Vec limit)
    : core_(std::move(core)), limit_(std::move(limit)) {
    if (core_.dim() != limit_.size())
        throw std::invalid_argument("LimFunctionHalf: core and limit dimension mismatch");
    if (!core_.empty() && core_.support_begin() != 0.0)
        throw std::invalid_argument("LimFunctionHalf: core grid must start at t = 0");
}

Vec LimFunctionHalf::eval(double t) const {
    if (t < 0.0) throw std::invalid_argument("LimFunctionHalf: t < 0");
    return add(core_.eval(t), limit_);
}

Vec LimFunctionHalf::eval(const ExtendedReal& t) const {
    if (t.is_pos_inf()) return limit_;
    if (t.is_neg_inf()) throw std::invalid_argument("LimFunctionHalf: -inf not in domain");
    return eval(t.value());
}

LimFunctionHalf operator+(const LimFunctionHalf& a, const LimFunctionHalf& b) {
    return LimFunctionHalf(a.core_ + b.core_, add(a.limit_, b.limit_));
}

LimFunctionHalf operator-(const LimFunctionHalf& a, const LimFunctionHalf& b) {
    return LimFunctionHalf(a.core_ - b.core_, sub(a.limit_, b.limit_));
}

LimFunctionHalf operator*(double c, const LimFunctionHalf& x) {
    return LimFunctionHalf(c * x.core_, scale(c, x.limit_));
}

LimFunctionLine::LimFunctionLine(GridFunction core, Vec limit_neg, Vec limit_pos)
    : core_(std::move(core)), limit_neg_(std::move(limit_neg)), limit_pos_(std::move(limit_pos)) {
    if (limit_neg_.size() != limit_pos_.size())
        throw std::invalid_argument("LimFunctionLine: limit dimension mismatch");
    if (core_.dim() != limit_pos_.size())
        throw std::invalid_argument("LimFunctionLine: core and limit dimension mismatch");
    if (!core_.empty() && core_.support_begin() != 0.0 && !is_zero(core_.values().front()))
        throw std::invalid_argument(
            "LimFunctionLine: core starting left of 0 must begin at the zero vector");
}

Vec LimFunctionLine::eval(double t) const {
    return add(core_.eval(t), t < 0.0 ? limit_neg_ : limit_pos_);
}

Vec LimFunctionLine::eval(const ExtendedReal& t) const {
    if (t.is_neg_inf()) return limit_neg_;
    if (t.is_pos_inf()) return limit_pos_;
    return eval(t.value());
}

Vec LimFunctionLine::eval_left_of_zero() const {
    // core(0-) is 0 when the support starts at 0, core(0) otherwise.
    Vec c = (!core_.empty() && core_.support_begin() == 0.0) ? zero_vec(dim()) : core_.eval(0.0);
    return add(c, limit_neg_);
}

bool LimFunctionLine::is_continuous() const {
    return eval(0.0) == eval_left_of_zero();
}

namespace {

// A core jumping at t = 0 cannot be merged exactly with a core whose support
// reaches left of 0: the jump would land strictly inside the merged grid,
// where piecewise-linear interpolation cannot keep it.
void check_line_sum_representable(const LimFunctionLine& a, const LimFunctionLine& b) {
    auto edge_jump = [](const LimFunctionLine& x) {
        return !x.core().empty() && x.core().support_begin() == 0.0 && !is_zero(x.core().values().front());
    };
    auto spans_negative = [](const LimFunctionLine& x) {
        return !x.core().empty() && x.core().support_begin() < 0.0;
    };
    if ((edge_jump(a) && spans_negative(b)) || (edge_jump(b) && spans_negative(a)))
        throw std::invalid_argument("LimFunctionLine: sum of a core jumping at 0 with a core crossing 0 is not representable");
}

}  // namespace

LimFunctionLine operator+(const LimFunctionLine& a, const LimFunctionLine& b) {
    check_line_sum_representable(a, b);
    return LimFunctionLine(a.core_ + b.core_, add(a.limit_neg_, b.limit_neg_), add(a.limit_pos_, b.limit_pos_));
}

LimFunctionLine operator-(const LimFunctionLine& a, const LimFunctionLine& b) {
    check_line_sum_representable(a, b);
    return LimFunctionLine(a.core_ - b.core_, sub(a.limit_neg_, b.limit_neg_), sub(a.limit_pos_, b.limit_pos_));
}

LimFunctionLine operator*(double c, const LimFunctionLine& x) {
    return LimFunctionLine(c * x.core_, scale(c, x.limit_neg_), scale(c, x.limit_pos_));
}

}  // namespace limspace
