#ifndef LIMSPACE_VEC_HPP
#define LIMSPACE_VEC_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace limspace {

// Small dense vector in R^n. Dimensions here are tiny (n <= 8 in practice),
// so a plain std::vector<double> with free helpers is all we need.
using Vec = std::vector<double>;

inline Vec zero_vec(std::size_t n) { return Vec(n, 0.0); }

inline void check_same_dim(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector dimension mismatch");
}

inline Vec add(const Vec& a, const Vec& b) {
    check_same_dim(a, b);
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
    check_same_dim(a, b);
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec scale(double c, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline double dot(const Vec& a, const Vec& b) {
    check_same_dim(a, b);
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm2(const Vec& a) { return std::sqrt(dot(a, a)); }

inline double norm1(const Vec& a) {
    double s = 0.0;
    for (double x : a) s += std::abs(x);
    return s;
}

inline double norm_inf(const Vec& a) {
    double m = 0.0;
    for (double x : a) m = std::max(m, std::abs(x));
    return m;
}

// l_p norm; p = infinity is passed as std::numeric_limits<double>::infinity().
inline double norm_p(const Vec& a, double p) {
    if (std::isinf(p)) return norm_inf(a);
    if (p < 1.0) throw std::invalid_argument("norm_p: p < 1");
    if (p == 1.0) return norm1(a);
    if (p == 2.0) return norm2(a);
    double s = 0.0;
    for (double x : a) s += std::pow(std::abs(x), p);
    return std::pow(s, 1.0 / p);
}

inline bool is_zero(const Vec& a) {
    for (double x : a) {
        if (x != 0.0) return false;
    }
    return true;
}

}  // namespace limspace

#endif
