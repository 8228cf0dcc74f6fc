#ifndef LIMSPACE_EXTENDED_REAL_HPP
#define LIMSPACE_EXTENDED_REAL_HPP

#include <cmath>
#include <compare>
#include <stdexcept>
#include <string>

namespace limspace {

// A point of the extended real line [-inf, inf]: either a finite real or one
// of the two infinite endpoints. Ordering is total with -inf < r < +inf.
class ExtendedReal {
public:
    enum class Kind { NegInf, Finite, PosInf };

    ExtendedReal() : kind_(Kind::Finite), value_(0.0) {}

    static ExtendedReal neg_inf() { return ExtendedReal(Kind::NegInf, 0.0); }
    static ExtendedReal pos_inf() { return ExtendedReal(Kind::PosInf, 0.0); }
    static ExtendedReal finite(double r) {
        if (!std::isfinite(r)) throw std::invalid_argument("ExtendedReal: finite value required");
        return ExtendedReal(Kind::Finite, r);
    }

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::Finite; }
    bool is_pos_inf() const { return kind_ == Kind::PosInf; }
    bool is_neg_inf() const { return kind_ == Kind::NegInf; }

    // Finite value; throws on the infinite endpoints.
    double value() const {
        if (!is_finite()) throw std::logic_error("ExtendedReal: not finite");
        return value_;
    }

    friend bool operator==(const ExtendedReal& a, const ExtendedReal& b) {
        if (a.kind_ != b.kind_) return false;
        return a.kind_ != Kind::Finite || a.value_ == b.value_;
    }

    friend std::strong_ordering operator<=>(const ExtendedReal& a, const ExtendedReal& b) {
        auto rank = [](const ExtendedReal& x) { return x.kind_ == Kind::NegInf ? -1 : (x.kind_ == Kind::PosInf ? 1 : 0); };
        if (int ra = rank(a), rb = rank(b); ra != rb) return ra <=> rb;
        if (a.kind_ != Kind::Finite) return std::strong_ordering::equal;
        if (a.value_ < b.value_) return std::strong_ordering::less;
        if (a.value_ > b.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    std::string str() const {
        if (is_neg_inf()) return "-inf";
        if (is_pos_inf()) return "inf";
        return std::to_string(value_);
    }

private:
    ExtendedReal(Kind k, double v) : kind_(k), value_(v) {}

    Kind kind_;
    double value_;
};

}  // namespace limspace

#endif
