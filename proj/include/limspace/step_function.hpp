#ifndef LIMSPACE_STEP_FUNCTION_HPP
#define LIMSPACE_STEP_FUNCTION_HPP

#include <cstddef>
#include <vector>

#include "limspace/vec.hpp"

namespace limspace {

// Piecewise-constant R^n-valued function with compact support. Cell i is
// [breaks[i], breaks[i+1]) carrying the constant vector values[i]; the
// function is zero outside [breaks.front(), breaks.back()). An empty break
// list is the zero function.
class StepFunction {
public:
    StepFunction() : dim_(1) {}
    explicit StepFunction(std::size_t dim) : dim_(dim) {}
    StepFunction(std::vector<double> breaks, std::vector<Vec> values);

    // Scalar convenience: one value per cell.
    static StepFunction scalar(std::vector<double> breaks, std::vector<double> cell_values);
    static StepFunction zero(std::size_t dim) { return StepFunction(dim); }

    std::size_t dim() const { return dim_; }
    std::size_t cells() const { return values_.size(); }
    bool empty() const { return values_.empty(); }

    const std::vector<double>& breaks() const { return breaks_; }
    const std::vector<Vec>& values() const { return values_; }

    double support_begin() const { return empty() ? 0.0 : breaks_.front(); }
    double support_end() const { return empty() ? 0.0 : breaks_.back(); }

    // Value at t (half-open cell convention, zero outside the support).
    Vec value(double t) const;

    // Componentwise integral over the whole line.
    Vec integral() const;

    // Componentwise integral over [lo, hi] (clipped to the support).
    Vec integral_over(double lo, double hi) const;

    // Integral of the Euclidean pointwise norm: sum |cell| * ||v||_2.
    double integral_norm2() const;

    // L_q norm of t -> ||f(t)||_2; q = infinity gives the essential sup.
    double lq_norm(double q) const;

    // Mirror image t -> f(-t).
    StepFunction reflected() const;

    friend StepFunction operator+(const StepFunction& a, const StepFunction& b);
    friend StepFunction operator-(const StepFunction& a, const StepFunction& b);
    friend StepFunction operator*(double c, const StepFunction& f);

    bool operator==(const StepFunction& other) const = default;

private:
    std::size_t dim_;
    std::vector<double> breaks_;
    std::vector<Vec> values_;
};

// Sorted union of two breakpoint lists (exact comparison).
std::vector<double> merge_breaks(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace limspace

#endif
