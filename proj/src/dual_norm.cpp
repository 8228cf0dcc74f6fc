#include "limspace/dual_norm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace limspace {

namespace {

// The oracle reduces every functional form to: maximize  c . u + c_a * a
// over the composite unit ball built from a core norm on u and |a|. The core
// norm is either a weighted l_p norm (sum h_i |u_i|^p)^(1/p) or the sup norm.
struct CoreBall {
    bool sup_box = false;  // sup-norm core; otherwise weighted l_p
    Vec h;                 // cell weights (all 1 for sequences)
    double p = 2.0;

    std::size_t size() const { return h.size(); }

    bool polyhedral() const { return sup_box || p == 1.0; }
};

double uniform(std::mt19937_64& rng, double lo, double hi) {
    double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

// Maximum of c . u over the core unit ball by vertex enumeration. Polyhedral
// cases only; also fills the maximizing vertex.
double enumerate_core(const CoreBall& ball, const Vec& c, Vec& argmax) {
    std::size_t m = ball.size();
    argmax = zero_vec(m);
    if (m == 0) return 0.0;
    double best = -std::numeric_limits<double>::infinity();
    if (ball.sup_box) {
        if (m > 20) throw std::invalid_argument("dual_norm_oracle: truncation too large");
        for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
            double v = 0.0;
            for (std::size_t i = 0; i < m; ++i) v += (mask & (1ull << i)) ? c[i] : -c[i];
            if (v > best) {
                best = v;
                for (std::size_t i = 0; i < m; ++i) argmax[i] = (mask & (1ull << i)) ? 1.0 : -1.0;
            }
        }
        return best;
    }
    // weighted l_1: vertices +-e_i / h_i
    for (std::size_t i = 0; i < m; ++i) {
        for (double s : {1.0, -1.0}) {
            double v = s * c[i] / ball.h[i];
            if (v > best) {
                best = v;
                argmax = zero_vec(m);
                argmax[i] = s / ball.h[i];
            }
        }
    }
    return best;
}

double weighted_p_norm(const CoreBall& ball, const Vec& u) {
    double s = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) s += ball.h[i] * std::pow(std::abs(u[i]), ball.p);
    return std::pow(s, 1.0 / ball.p);
}

// Euclidean projection onto { sum h_i |w_i|^p <= 1 }. KKT per coordinate:
// w + lambda p h w^(p-1) = |z|, solved monotonically; outer bisection drives
// the constraint to 1.
Vec project_weighted_p_ball(const CoreBall& ball, const Vec& z) {
    std::size_t m = z.size();
    auto constraint = [&](const Vec& w) {
        double s = 0.0;
        for (std::size_t i = 0; i < m; ++i) s += ball.h[i] * std::pow(std::abs(w[i]), ball.p);
        return s;
    };
    if (constraint(z) <= 1.0) return z;

    auto shrink = [&](double lambda) {
        Vec w(m);
        for (std::size_t i = 0; i < m; ++i) {
            double zi = std::abs(z[i]);
            if (ball.p == 2.0) {
                w[i] = zi / (1.0 + 2.0 * lambda * ball.h[i]);
            } else {
                double lo = 0.0, hi = zi;
                for (int it = 0; it < 60; ++it) {
                    double mid = 0.5 * (lo + hi);
                    double g = mid + lambda * ball.p * ball.h[i] * std::pow(mid, ball.p - 1.0) - zi;
                    (g < 0.0 ? lo : hi) = mid;
                }
                w[i] = 0.5 * (lo + hi);
            }
        }
        return w;
    };

    double lo = 0.0, hi = 1.0;
    while (constraint(shrink(hi)) > 1.0) hi *= 2.0;
    for (int it = 0; it < 100; ++it) {
        double mid = 0.5 * (lo + hi);
        (constraint(shrink(mid)) > 1.0 ? lo : hi) = mid;
    }
    Vec w = shrink(hi);
    for (std::size_t i = 0; i < m; ++i) w[i] = std::copysign(w[i], z[i]);
    return w;
}

// Projected-gradient ascent of the linear objective c . u over the core
// ball; returns the best value over the given restarts.
double ascend_core(const CoreBall& ball, const Vec& c, int restarts, std::uint64_t seed, Vec& argmax) {
    std::size_t m = ball.size();
    argmax = zero_vec(m);
    if (m == 0) return 0.0;
    double cn = norm2(c);
    if (cn == 0.0) return 0.0;
    std::mt19937_64 rng(seed);
    double best = -std::numeric_limits<double>::infinity();
    for (int r = 0; r < restarts; ++r) {
        Vec u(m);
        for (std::size_t i = 0; i < m; ++i) u[i] = uniform(rng, -1.0, 1.0);
        double un = weighted_p_norm(ball, u);
        if (un > 0.0) u = scale(1.0 / un, u);
        double eta = 1.0 / cn;
        for (int it = 0; it < 400; ++it) {
            Vec step = add(u, scale(eta, c));
            u = project_weighted_p_ball(ball, step);
        }
        double v = dot(c, u);
        if (v > best) {
            best = v;
            argmax = u;
        }
    }
    return best;
}

struct Problem {
    CoreBall ball;
    Vec c;
    double c_a = 0.0;
};

DualNormReport solve(const Problem& prob, PrimalNorm primal, std::uint64_t seed) {
    if (primal.p < 1.0) throw std::invalid_argument("dual_norm_oracle: p < 1");
    // the 1-power composite is the plain sum
    if (primal.kind == PrimalNorm::Kind::PComposite && primal.p == 1.0) primal.kind = PrimalNorm::Kind::Sum;

    DualNormReport rep;
    Vec core_arg;
    double core_dual;
    int restarts = 0;
    if (prob.ball.polyhedral()) {
        core_dual = enumerate_core(prob.ball, prob.c, core_arg);
    } else {
        restarts = 64;
        core_dual = ascend_core(prob.ball, prob.c, restarts, seed, core_arg);
    }
    core_dual = std::max(core_dual, 0.0);  // u = 0 is always feasible

    double aa = std::abs(prob.c_a);
    double a_sign = prob.c_a >= 0.0 ? 1.0 : -1.0;
    switch (primal.kind) {
        case PrimalNorm::Kind::Max:
            rep.value = core_dual + aa;
            rep.witness_core = core_arg;
            rep.witness_limit = a_sign;
            break;
        case PrimalNorm::Kind::Sum:
            if (core_dual >= aa) {
                rep.value = core_dual;
                rep.witness_core = core_arg;
                rep.witness_limit = 0.0;
            } else {
                rep.value = aa;
                rep.witness_core = zero_vec(prob.ball.size());
                rep.witness_limit = a_sign;
            }
            break;
        case PrimalNorm::Kind::PComposite: {
            // maximize beta * core_dual + (1 - beta^p)^(1/p) * |c_a| on [0, 1]
            auto g = [&](double beta) {
                return beta * core_dual + std::pow(1.0 - std::pow(beta, primal.p), 1.0 / primal.p) * aa;
            };
            double lo = 0.0, hi = 1.0;
            for (int it = 0; it < 200; ++it) {
                double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
                if (g(m1) < g(m2))
                    lo = m1;
                else
                    hi = m2;
            }
            double beta = 0.5 * (lo + hi);
            rep.value = g(beta);
            rep.witness_core = scale(beta, core_arg);
            rep.witness_limit = a_sign * std::pow(1.0 - std::pow(beta, primal.p), 1.0 / primal.p);
            break;
        }
    }
    bool combine_polyhedral = primal.kind != PrimalNorm::Kind::PComposite;
    rep.certified = combine_polyhedral && prob.ball.polyhedral();
    rep.gap = 0.0;
    rep.restarts = restarts;
    return rep;
}

void check_scalar(std::size_t dim, const char* who) {
    if (dim != 1) throw std::invalid_argument(std::string(who) + ": scalar functionals only");
}

}  // namespace

DualNormReport dual_norm_oracle(const SequenceFunctional& f, const PrimalNorm& primal,
                                std::size_t truncation, std::uint64_t seed) {
    if (truncation > 8) throw std::invalid_argument("dual_norm_oracle: truncation too large");
    if (f.y.size() > truncation)
        throw std::invalid_argument("dual_norm_oracle: functional head exceeds the truncation");
    Problem prob;
    prob.ball.sup_box = false;
    prob.ball.h = Vec(truncation, 1.0);
    prob.ball.p = primal.p;
    prob.c = Vec(truncation, 0.0);
    for (std::size_t i = 0; i < f.y.size(); ++i) prob.c[i] = f.y[i];
    prob.c_a = f.alpha;
    return solve(prob, primal, seed);
}

DualNormReport dual_norm_oracle(const DensityFunctionalHalf& f, const PrimalNorm& primal,
                                std::size_t truncation, std::uint64_t seed) {
    check_scalar(f.y.dim(), "dual_norm_oracle");
    if (truncation > 8 || f.y.cells() > truncation)
        throw std::invalid_argument("dual_norm_oracle: truncation too large");
    Problem prob;
    prob.ball.sup_box = false;
    prob.ball.p = primal.p;
    std::size_t m = f.y.cells();
    prob.ball.h = Vec(m, 0.0);
    prob.c = Vec(m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        double len = f.y.breaks()[i + 1] - f.y.breaks()[i];
        prob.ball.h[i] = len;
        prob.c[i] = len * f.y.values()[i][0];
    }
    prob.c_a = f.alpha[0];
    return solve(prob, primal, seed);
}

DualNormReport dual_norm_oracle(const MeasureFunctionalHalf& f, const PrimalNorm& primal,
                                std::size_t truncation, std::uint64_t seed) {
    check_scalar(f.mu.dim(), "dual_norm_oracle");
    if (!f.mu.density().empty())
        throw std::invalid_argument("dual_norm_oracle: atom-only measure functionals");
    if (truncation > 8 || f.mu.atoms().size() > truncation)
        throw std::invalid_argument("dual_norm_oracle: truncation too large");
    Problem prob;
    prob.ball.sup_box = true;
    prob.ball.h = Vec(f.mu.atoms().size(), 1.0);
    prob.c = Vec(f.mu.atoms().size(), 0.0);
    for (std::size_t i = 0; i < f.mu.atoms().size(); ++i) prob.c[i] = f.mu.atoms()[i].weight[0];
    prob.c_a = f.alpha[0];
    return solve(prob, primal, seed);
}

double conjugate_exponent(double p) {
    if (p < 1.0) throw std::invalid_argument("conjugate_exponent: p < 1");
    if (p == 1.0) return std::numeric_limits<double>::infinity();
    if (std::isinf(p)) return 1.0;
    return p / (p - 1.0);
}

namespace {

DualFormulas formulas_from(double core_dual, double alpha_norm, double q) {
    DualFormulas out;
    out.core_dual = core_dual;
    out.sum = core_dual + alpha_norm;
    if (std::isinf(q))
        out.q_composite = std::max(core_dual, alpha_norm);
    else
        out.q_composite = std::pow(std::pow(core_dual, q) + std::pow(alpha_norm, q), 1.0 / q);
    return out;
}

}  // namespace

DualFormulas dual_formulas(const SequenceFunctional& f, double p) {
    double q = conjugate_exponent(p);
    return formulas_from(norm_p(f.y, q), std::abs(f.alpha), q);
}

DualFormulas dual_formulas(const DensityFunctionalHalf& f, double p) {
    double q = conjugate_exponent(p);
    return formulas_from(f.y.lq_norm(q), norm2(f.alpha), q);
}

DualFormulas dual_formulas(const MeasureFunctionalHalf& f) {
    return formulas_from(f.mu.total_variation().total, norm2(f.alpha),
                         std::numeric_limits<double>::infinity());
}

}  // namespace limspace
