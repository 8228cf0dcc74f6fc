#include "limspace/step_function.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace limspace {

namespace {

void check_breaks(const std::vector<double>& breaks) {
    for (std::size_t i = 0; i < breaks.size(); ++i) {
        if (!std::isfinite(breaks[i])) throw std::invalid_argument("StepFunction: breakpoints must be finite");
        if (i > 0 && !(breaks[i - 1] < breaks[i]))
            throw std::invalid_argument("StepFunction: breakpoints must be strictly increasing");
    }
}

}  // namespace

StepFunction::StepFunction(std::vector<double> breaks, std::vector<Vec> values)
    : breaks_(std::move(breaks)), values_(std::move(values)) {
    check_breaks(breaks_);
    if (breaks_.empty()) {
        if (!values_.empty()) throw std::invalid_argument("StepFunction: values without breakpoints");
        dim_ = 1;
        return;
    }
    if (values_.size() + 1 != breaks_.size())
        throw std::invalid_argument("StepFunction: need one value per cell");
    dim_ = values_.front().size();
    for (const Vec& v : values_) {
        if (v.size() != dim_) throw std::invalid_argument("StepFunction: inconsistent value dimension");
        for (double x : v) {
            if (!std::isfinite(x)) throw std::invalid_argument("StepFunction: values must be finite");
        }
    }
}

StepFunction StepFunction::scalar(std::vector<double> breaks, std::vector<double> cell_values) {
    std::vector<Vec> v;
    v.reserve(cell_values.size());
    for (double x : cell_values) v.push_back(Vec{x});
    return StepFunction(std::move(breaks), std::move(v));
}

Vec StepFunction::value(double t) const {
    if (empty() || t < breaks_.front() || t >= breaks_.back()) return zero_vec(dim_);
    auto it = std::upper_bound(breaks_.begin(), breaks_.end(), t);
    std::size_t cell = static_cast<std::size_t>(it - breaks_.begin()) - 1;
    return values_[cell];
}

Vec StepFunction::integral() const {
    Vec s = zero_vec(dim_);
    for (std::size_t i = 0; i < values_.size(); ++i) {
        double len = breaks_[i + 1] - breaks_[i];
        for (std::size_t j = 0; j < dim_; ++j) s[j] += values_[i][j] * len;
    }
    return s;
}

Vec StepFunction::integral_over(double lo, double hi) const {
    Vec s = zero_vec(dim_);
    for (std::size_t i = 0; i < values_.size(); ++i) {
        double l = std::max(breaks_[i], lo);
        double r = std::min(breaks_[i + 1], hi);
        if (!(l < r)) continue;
        for (std::size_t j = 0; j < dim_; ++j) s[j] += values_[i][j] * (r - l);
    }
    return s;
}

double StepFunction::integral_norm2() const {
    double s = 0.0;
    for (std::size_t i = 0; i < values_.size(); ++i) s += (breaks_[i + 1] - breaks_[i]) * norm2(values_[i]);
    return s;
}

double StepFunction::lq_norm(double q) const {
    if (q < 1.0) throw std::invalid_argument("lq_norm: q < 1");
    if (std::isinf(q)) {
        double m = 0.0;
        for (const Vec& v : values_) m = std::max(m, norm2(v));
        return m;
    }
    double s = 0.0;
    for (std::size_t i = 0; i < values_.size(); ++i)
        s += (breaks_[i + 1] - breaks_[i]) * std::pow(norm2(values_[i]), q);
    return std::pow(s, 1.0 / q);
}

StepFunction StepFunction::reflected() const {
    if (empty()) return *this;
    std::vector<double> rb(breaks_.rbegin(), breaks_.rend());
    for (double& b : rb) b = -b;
    std::vector<Vec> rv(values_.rbegin(), values_.rend());
    return StepFunction(std::move(rb), std::move(rv));
}

std::vector<double> merge_breaks(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

StepFunction combine(const StepFunction& a, const StepFunction& b, double cb) {
    if (a.dim() != b.dim()) throw std::invalid_argument("StepFunction: dimension mismatch");
    std::vector<double> breaks = merge_breaks(a.breaks(), b.breaks());
    if (breaks.empty()) return StepFunction(a.dim());
    std::vector<Vec> values;
    values.reserve(breaks.size() - 1);
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        double mid = 0.5 * (breaks[i] + breaks[i + 1]);
        values.push_back(add(a.value(mid), scale(cb, b.value(mid))));
    }
    return StepFunction(std::move(breaks), std::move(values));
}

}  // namespace

StepFunction operator+(const StepFunction& a, const StepFunction& b) { return combine(a, b, 1.0); }
StepFunction operator-(const StepFunction& a, const StepFunction& b) { return combine(a, b, -1.0); }

StepFunction operator*(double c, const StepFunction& f) {
    if (f.empty()) return f;
    std::vector<Vec> values = f.values();
    for (Vec& v : values) v = scale(c, v);
    return StepFunction(f.breaks(), std::move(values));
}

}  // namespace limspace
