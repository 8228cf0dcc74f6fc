#include "limspace/grid_function.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace limspace {

GridFunction::GridFunction(std::vector<double> breaks, std::vector<Vec> values)
    : breaks_(std::move(breaks)), values_(std::move(values)) {
    for (std::size_t i = 0; i < breaks_.size(); ++i) {
        if (!std::isfinite(breaks_[i])) throw std::invalid_argument("GridFunction: breakpoints must be finite");
        if (i > 0 && !(breaks_[i - 1] < breaks_[i]))
            throw std::invalid_argument("GridFunction: breakpoints must be strictly increasing");
    }
    if (breaks_.empty()) {
        if (!values_.empty()) throw std::invalid_argument("GridFunction: values without breakpoints");
        dim_ = 1;
        return;
    }
    if (values_.size() != breaks_.size())
        throw std::invalid_argument("GridFunction: need one value per breakpoint");
    dim_ = values_.front().size();
    for (const Vec& v : values_) {
        if (v.size() != dim_) throw std::invalid_argument("GridFunction: inconsistent value dimension");
        for (double x : v) {
            if (!std::isfinite(x)) throw std::invalid_argument("GridFunction: values must be finite");
        }
    }
    if (!is_zero(values_.back()))
        throw std::invalid_argument("GridFunction: value at the last breakpoint must be zero (compact support)");
}

GridFunction GridFunction::scalar(std::vector<double> breaks, std::vector<double> values) {
    std::vector<Vec> v;
    v.reserve(values.size());
    for (double x : values) v.push_back(Vec{x});
    return GridFunction(std::move(breaks), std::move(v));
}

Vec GridFunction::eval(double t) const {
    if (empty() || t < breaks_.front() || t > breaks_.back()) return zero_vec(dim_);
    auto it = std::lower_bound(breaks_.begin(), breaks_.end(), t);
    std::size_t i = static_cast<std::size_t>(it - breaks_.begin());
    if (i < breaks_.size() && breaks_[i] == t) return values_[i];
    // t lies strictly inside cell (i-1, i)
    double l = breaks_[i - 1], r = breaks_[i];
    double w = (t - l) / (r - l);
    Vec out(dim_);
    for (std::size_t j = 0; j < dim_; ++j) out[j] = (1.0 - w) * values_[i - 1][j] + w * values_[i][j];
    return out;
}

GridFunction GridFunction::refined(const std::vector<double>& extra_breaks) const {
    std::vector<double> inside;
    for (double t : extra_breaks) {
        if (!empty() && t > breaks_.front() && t < breaks_.back()) inside.push_back(t);
    }
    std::sort(inside.begin(), inside.end());
    std::vector<double> nb = merge_breaks(breaks_, inside);
    if (nb == breaks_) return *this;
    std::vector<Vec> nv;
    nv.reserve(nb.size());
    for (double t : nb) nv.push_back(eval(t));
    return GridFunction(std::move(nb), std::move(nv));
}

StepFunction GridFunction::derivative() const {
    if (size() < 2) return StepFunction(dim_);
    std::vector<Vec> slopes;
    slopes.reserve(size() - 1);
    for (std::size_t i = 0; i + 1 < size(); ++i) {
        double len = breaks_[i + 1] - breaks_[i];
        Vec s(dim_);
        for (std::size_t j = 0; j < dim_; ++j) s[j] = (values_[i + 1][j] - values_[i][j]) / len;
        slopes.push_back(std::move(s));
    }
    return StepFunction(breaks_, std::move(slopes));
}

Vec GridFunction::integral() const {
    Vec s = zero_vec(dim_);
    for (std::size_t i = 0; i + 1 < size(); ++i) {
        double h = breaks_[i + 1] - breaks_[i];
        for (std::size_t j = 0; j < dim_; ++j) s[j] += 0.5 * h * (values_[i][j] + values_[i + 1][j]);
    }
    return s;
}

double GridFunction::sup_norm2() const {
    double m = 0.0;
    for (const Vec& v : values_) m = std::max(m, norm2(v));
    return m;
}

namespace {

GridFunction combine(const GridFunction& a, const GridFunction& b, double cb) {
    if (a.dim() != b.dim()) throw std::invalid_argument("GridFunction: dimension mismatch");
    std::vector<double> breaks = merge_breaks(a.breaks(), b.breaks());
    if (breaks.empty()) return GridFunction(a.dim());
    std::vector<Vec> values;
    values.reserve(breaks.size());
    for (double t : breaks) values.push_back(add(a.eval(t), scale(cb, b.eval(t))));
    return GridFunction(std::move(breaks), std::move(values));
}

}  // namespace

GridFunction operator+(const GridFunction& a, const GridFunction& b) { return combine(a, b, 1.0); }
GridFunction operator-(const GridFunction& a, const GridFunction& b) { return combine(a, b, -1.0); }

GridFunction operator*(double c, const GridFunction& f) {
    if (f.empty()) return f;
    std::vector<Vec> values = f.values();
    for (Vec& v : values) v = scale(c, v);
    return GridFunction(f.breaks(), std::move(values));
}

}  // namespace limspace
