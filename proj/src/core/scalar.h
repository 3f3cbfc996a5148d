// Min-plus scalar arithmetic over Q ∪ {∞}.
//
// add  = min   (identity ∞)
// mul  = +     (identity 0, ∞ absorbing)
// The total order places ∞ strictly above every finite value.
// No floating point anywhere: finite values are exact rationals.
#pragma once

#include "core/errors.h"
#include "core/rational.h"

#include <cstdint>
#include <string>

namespace tropgerm {

class TropScalar {
public:
    // Default-constructed scalar is ∞ (the additive identity).
    TropScalar() : inf_(true) {}
    explicit TropScalar(Rat v) : inf_(false), v_(std::move(v)) {}
    explicit TropScalar(long v) : inf_(false), v_(v) {}

    static TropScalar infinity() { return TropScalar(); }
    static TropScalar unit() { return TropScalar(Rat(0)); }  // multiplicative identity

    bool is_inf() const { return inf_; }
    bool is_finite() const { return !inf_; }

    const Rat& value() const {
        if (inf_) throw InputError("value() on infinite tropical scalar");
        return v_;
    }

    friend bool operator==(const TropScalar& a, const TropScalar& b) {
        if (a.inf_ != b.inf_) return false;
        return a.inf_ || a.v_ == b.v_;
    }
    friend bool operator!=(const TropScalar& a, const TropScalar& b) { return !(a == b); }
    friend bool operator<(const TropScalar& a, const TropScalar& b) {
        if (a.inf_) return false;
        if (b.inf_) return true;
        return a.v_ < b.v_;
    }
    friend bool operator<=(const TropScalar& a, const TropScalar& b) { return !(b < a); }
    friend bool operator>(const TropScalar& a, const TropScalar& b) { return b < a; }
    friend bool operator>=(const TropScalar& a, const TropScalar& b) { return !(a < b); }

    // Tropical addition: min with ∞ as identity.
    friend TropScalar trop_min(const TropScalar& a, const TropScalar& b) {
        return (a <= b) ? a : b;
    }

    // Tropical multiplication: classical +, ∞ absorbing.
    friend TropScalar operator+(const TropScalar& a, const TropScalar& b) {
        if (a.inf_ || b.inf_) return infinity();
        return TropScalar(a.v_ + b.v_);
    }
    TropScalar& operator+=(const TropScalar& o) { return *this = *this + o; }

    // Tropical division by a finite scalar: classical −. ∞ − finite = ∞;
    // subtracting ∞ is undefined.
    friend TropScalar operator-(const TropScalar& a, const TropScalar& b) {
        if (b.inf_) throw InputError("division by infinite tropical scalar");
        if (a.inf_) return infinity();
        return TropScalar(a.v_ - b.v_);
    }

    // k-th tropical power: classical k·v for k > 0; the 0-th power is the
    // multiplicative unit even at ∞ (empty product convention).
    friend TropScalar trop_pow(const TropScalar& a, std::int64_t k) {
        if (k < 0) throw InputError("negative tropical power");
        if (k == 0) return unit();
        if (a.inf_) return infinity();
        return TropScalar(a.v_ * k);
    }

    std::string str() const { return inf_ ? "inf" : format_rat(v_); }

private:
    bool inf_;
    Rat v_;
};

}  // namespace tropgerm
