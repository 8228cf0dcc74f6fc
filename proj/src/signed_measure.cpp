#include "limspace/signed_measure.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

#include "limspace/quadrature.hpp"

namespace limspace {

const char* domain_name(Domain d) {
    switch (d) {
        case Domain::Half: return "half";
        case Domain::Line: return "line";
        case Domain::Finite: return "finite";
    }
    return "?";
}

SignedMeasure::SignedMeasure(Domain domain, std::vector<Atom> atoms, StepFunction density)
    : domain_(domain), atoms_(std::move(atoms)), density_(std::move(density)) {
    std::stable_sort(atoms_.begin(), atoms_.end(),
                     [](const Atom& a, const Atom& b) { return a.location < b.location; });
    // merge equal locations, drop exact-zero weights
    std::vector<Atom> merged;
    for (Atom& a : atoms_) {
        if (!merged.empty() && merged.back().location == a.location)
            merged.back().weight = add(merged.back().weight, a.weight);
        else
            merged.push_back(std::move(a));
    }
    atoms_.clear();
    for (Atom& a : merged) {
        if (!is_zero(a.weight)) atoms_.push_back(std::move(a));
    }
    dim_ = atoms_.empty() ? density_.dim() : atoms_.front().weight.size();
    if (density_.empty()) density_ = StepFunction(dim_);
    validate();
}

SignedMeasure::SignedMeasure(Domain domain, std::vector<Atom> atoms)
    : SignedMeasure(domain, std::move(atoms), StepFunction()) {}

SignedMeasure SignedMeasure::dirac(Domain domain, ExtendedReal location, Vec weight) {
    std::size_t n = weight.size();
    SignedMeasure mu(domain, {Atom{location, std::move(weight)}}, StepFunction(n));
    return mu;
}

void SignedMeasure::validate() const {
    for (const Atom& a : atoms_) {
        if (a.weight.size() != dim_) throw std::invalid_argument("SignedMeasure: atom weight dimension mismatch");
        switch (domain_) {
            case Domain::Half:
                if (a.location.is_neg_inf() || (a.location.is_finite() && a.location.value() < 0.0))
                    throw std::invalid_argument("SignedMeasure: atom outside [0, inf]");
                break;
            case Domain::Finite:
                if (!a.location.is_finite())
                    throw std::invalid_argument("SignedMeasure: infinite atom in a finite-domain measure");
                break;
            case Domain::Line:
                break;
        }
    }
    if (!density_.empty()) {
        if (density_.dim() != dim_) throw std::invalid_argument("SignedMeasure: density dimension mismatch");
        if (domain_ == Domain::Half && density_.support_begin() < 0.0)
            throw std::invalid_argument("SignedMeasure: density outside [0, inf)");
    }
}

bool SignedMeasure::has_infinite_atom() const {
    for (const Atom& a : atoms_) {
        if (!a.location.is_finite()) return true;
    }
    return false;
}

bool SignedMeasure::is_nonnegative() const {
    for (const Atom& a : atoms_) {
        for (double w : a.weight) {
            if (w < 0.0) return false;
        }
    }
    for (const Vec& v : density_.values()) {
        for (double x : v) {
            if (x < 0.0) return false;
        }
    }
    return true;
}

Vec SignedMeasure::mass() const {
    Vec m = density_.empty() ? zero_vec(dim_) : density_.integral();
    for (const Atom& a : atoms_) m = add(m, a.weight);
    return m;
}

SignedMeasure::TotalVariation SignedMeasure::total_variation() const {
    TotalVariation tv;
    tv.per_component = zero_vec(dim_);
    for (const Atom& a : atoms_) {
        for (std::size_t j = 0; j < dim_; ++j) tv.per_component[j] += std::abs(a.weight[j]);
    }
    const auto& breaks = density_.breaks();
    const auto& cells = density_.values();
    for (std::size_t i = 0; i < cells.size(); ++i) {
        double len = breaks[i + 1] - breaks[i];
        for (std::size_t j = 0; j < dim_; ++j) tv.per_component[j] += std::abs(cells[i][j]) * len;
    }
    for (double c : tv.per_component) tv.total += c;
    return tv;
}

std::pair<SignedMeasure, SignedMeasure> SignedMeasure::jordan_decompose() const {
    if (dim_ != 1) throw std::invalid_argument("jordan_decompose: scalar measures only");
    std::vector<Atom> plus_atoms, minus_atoms;
    for (const Atom& a : atoms_) {
        if (a.weight[0] > 0.0)
            plus_atoms.push_back(a);
        else
            minus_atoms.push_back(Atom{a.location, Vec{-a.weight[0]}});
    }
    StepFunction plus_density, minus_density;
    if (!density_.empty()) {
        std::vector<Vec> pv, mv;
        for (const Vec& v : density_.values()) {
            pv.push_back(Vec{std::max(v[0], 0.0)});
            mv.push_back(Vec{std::max(-v[0], 0.0)});
        }
        plus_density = StepFunction(density_.breaks(), std::move(pv));
        minus_density = StepFunction(density_.breaks(), std::move(mv));
    } else {
        plus_density = StepFunction(1);
        minus_density = StepFunction(1);
    }
    return {SignedMeasure(domain_, std::move(plus_atoms), std::move(plus_density)),
            SignedMeasure(domain_, std::move(minus_atoms), std::move(minus_density))};
}

double SignedMeasure::integrate(const LimFunctionHalf& x) const {
    if (domain_ == Domain::Line) throw std::invalid_argument("integrate: line measure against half-line function");
    if (domain_ == Domain::Finite) {
        for (const Atom& a : atoms_) {
            if (a.location.value() < 0.0) throw std::invalid_argument("integrate: atom outside [0, inf)");
        }
        if (!density_.empty() && density_.support_begin() < 0.0)
            throw std::invalid_argument("integrate: density outside [0, inf)");
    }
    if (x.dim() != dim_) throw std::invalid_argument("integrate: dimension mismatch");
    double s = 0.0;
    for (const Atom& a : atoms_) s += dot(x.eval(a.location), a.weight);
    if (!density_.empty())
        s += inner_l2(x.core(), density_) + dot(x.limit(), density_.integral());
    return s;
}

double SignedMeasure::integrate(const LimFunctionLine& x) const {
    if (domain_ == Domain::Half) throw std::invalid_argument("integrate: half-line measure against line function");
    if (x.dim() != dim_) throw std::invalid_argument("integrate: dimension mismatch");
    double s = 0.0;
    for (const Atom& a : atoms_) s += dot(x.eval(a.location), a.weight);
    if (!density_.empty()) {
        s += inner_l2(x.core(), density_);
        double lo = density_.support_begin(), hi = density_.support_end();
        s += dot(x.limit_neg(), density_.integral_over(lo, std::min(0.0, hi)));
        s += dot(x.limit_pos(), density_.integral_over(std::max(0.0, lo), hi));
    }
    return s;
}

double SignedMeasure::integrate_atoms_with(const std::function<Vec(const ExtendedReal&)>& f) const {
    if (!density_.empty()) throw std::invalid_argument("integrate_atoms_with: atom-only measures");
    double s = 0.0;
    for (const Atom& a : atoms_) s += dot(f(a.location), a.weight);
    return s;
}

SignedMeasure SignedMeasure::pushforward_compactify(double tol) const {
    if (domain_ != Domain::Half) throw std::invalid_argument("pushforward_compactify: Half domain required");
    auto tau = [](double s) { return s / (1.0 + s); };

    std::vector<Atom> atoms;
    atoms.reserve(atoms_.size());
    for (const Atom& a : atoms_) {
        double loc = a.location.is_pos_inf() ? 1.0 : tau(a.location.value());
        atoms.push_back(Atom{ExtendedReal::finite(loc), a.weight});
    }

    StepFunction density(dim_);
    if (!density_.empty()) {
        std::vector<double> breaks;
        std::vector<Vec> values;
        const auto& sb = density_.breaks();
        for (std::size_t i = 0; i + 1 < sb.size(); ++i) {
            const Vec& v = density_.values()[i];
            // subdivide [a, b) until the constant image density is within the
            // weak-error budget of the true transformed density on each piece
            std::deque<std::pair<double, double>> queue{{sb[i], sb[i + 1]}};
            std::vector<std::pair<double, double>> pieces;
            double vmax = norm_inf(v);
            while (!queue.empty()) {
                auto [a, b] = queue.front();
                queue.pop_front();
                double width = tau(b) - tau(a);
                double dev = vmax * ((1.0 + b) * (1.0 + b) - (1.0 + a) * (1.0 + a));
                if (vmax > 0.0 && dev * width > tol && pieces.size() + queue.size() < (1u << 20)) {
                    double m = 0.5 * (a + b);
                    queue.emplace_back(a, m);
                    queue.emplace_back(m, b);
                } else {
                    pieces.emplace_back(a, b);
                }
            }
            std::sort(pieces.begin(), pieces.end());
            for (auto [a, b] : pieces) {
                double ta = tau(a), tb = tau(b);
                if (!(ta < tb)) throw std::invalid_argument("pushforward_compactify: image grid collapsed");
                if (breaks.empty() || breaks.back() != ta) {
                    breaks.push_back(ta);
                }
                breaks.push_back(tb);
                // constant on the image cell with the exact cell mass v * (b - a)
                values.push_back(scale((b - a) / (tb - ta), v));
            }
        }
        density = StepFunction(std::move(breaks), std::move(values));
    }
    return SignedMeasure(Domain::Finite, std::move(atoms), std::move(density));
}

SignedMeasure SignedMeasure::reflected() const {
    std::vector<Atom> atoms;
    atoms.reserve(atoms_.size());
    for (const Atom& a : atoms_) {
        ExtendedReal loc = a.location.is_pos_inf()   ? ExtendedReal::neg_inf()
                           : a.location.is_neg_inf() ? ExtendedReal::pos_inf()
                                                     : ExtendedReal::finite(-a.location.value());
        atoms.push_back(Atom{loc, a.weight});
    }
    Domain d = domain_ == Domain::Finite ? Domain::Finite : Domain::Line;
    return SignedMeasure(d, std::move(atoms), density_.reflected());
}

SignedMeasure SignedMeasure::with_domain(Domain d) const {
    return SignedMeasure(d, atoms_, density_);
}

SignedMeasure operator+(const SignedMeasure& a, const SignedMeasure& b) {
    if (a.domain_ != b.domain_) throw std::invalid_argument("SignedMeasure: domain mismatch in sum");
    if (a.dim_ != b.dim_) throw std::invalid_argument("SignedMeasure: dimension mismatch in sum");
    std::vector<SignedMeasure::Atom> atoms = a.atoms_;
    atoms.insert(atoms.end(), b.atoms_.begin(), b.atoms_.end());
    StepFunction density = a.density_.empty() ? b.density_ : (b.density_.empty() ? a.density_ : a.density_ + b.density_);
    if (density.empty()) density = StepFunction(a.dim_);
    return SignedMeasure(a.domain_, std::move(atoms), std::move(density));
}

SignedMeasure operator*(double c, const SignedMeasure& mu) {
    std::vector<SignedMeasure::Atom> atoms = mu.atoms_;
    for (auto& a : atoms) a.weight = scale(c, a.weight);
    return SignedMeasure(mu.domain_, std::move(atoms), c * mu.density_);
}

bool SignedMeasure::operator==(const SignedMeasure& other) const {
    if (domain_ != other.domain_ || dim_ != other.dim_ || atoms_.size() != other.atoms_.size()) return false;
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
        if (!(atoms_[i].location == other.atoms_[i].location) || atoms_[i].weight != other.atoms_[i].weight)
            return false;
    }
    return density_ == other.density_;
}

}  // namespace limspace
