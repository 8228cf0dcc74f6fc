#ifndef LIMSPACE_GRID_FUNCTION_HPP
#define LIMSPACE_GRID_FUNCTION_HPP

#include <cstddef>
#include <vector>

#include "limspace/step_function.hpp"
#include "limspace/vec.hpp"

namespace limspace {

// Piecewise-linear R^n-valued function with compact support: values are
// prescribed at strictly increasing breakpoints, interpolated linearly in
// between, and identically zero outside [breaks.front(), breaks.back()].
// The value at the last breakpoint must be the zero vector, so the function
// joins its zero tail continuously on the right. A nonzero value at the
// first breakpoint is allowed (a jump at the left support edge). An empty
// break list is the zero function.
class GridFunction {
public:
    GridFunction() : dim_(1) {}
    explicit GridFunction(std::size_t dim) : dim_(dim) {}
    GridFunction(std::vector<double> breaks, std::vector<Vec> values);

    static GridFunction scalar(std::vector<double> breaks, std::vector<double> values);
    static GridFunction zero(std::size_t dim) { return GridFunction(dim); }

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return breaks_.size(); }
    bool empty() const { return breaks_.empty(); }

    const std::vector<double>& breaks() const { return breaks_; }
    const std::vector<Vec>& values() const { return values_; }

    double support_begin() const { return empty() ? 0.0 : breaks_.front(); }
    double support_end() const { return empty() ? 0.0 : breaks_.back(); }

    Vec eval(double t) const;

    // Same function on a grid containing the given extra breakpoints.
    GridFunction refined(const std::vector<double>& extra_breaks) const;

    // Piecewise-constant derivative on the support cells.
    StepFunction derivative() const;

    // Componentwise integral over the support (trapezoid rule, exact).
    Vec integral() const;

    // max over breakpoints of ||f(t_i)||_2. Because t -> ||f(t)||_2 is convex
    // on every linear piece this equals the true sup norm of the function.
    double sup_norm2() const;

    friend GridFunction operator+(const GridFunction& a, const GridFunction& b);
    friend GridFunction operator-(const GridFunction& a, const GridFunction& b);
    friend GridFunction operator*(double c, const GridFunction& f);

    bool operator==(const GridFunction& other) const = default;

private:
    std::size_t dim_;
    std::vector<double> breaks_;
    std::vector<Vec> values_;
};

}  // namespace limspace

#endif
