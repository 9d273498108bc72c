#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nccw {

// N together with infinity: x + inf = inf, 0 * inf = 0, n * inf = inf (n >= 1), floor(inf / n) = inf.
class ExtNat {
public:
    constexpr ExtNat() = default;
    constexpr ExtNat(std::uint64_t v) : v_(v) {}  // NOLINT: implicit on purpose
    static constexpr ExtNat inf() {
        ExtNat x;
        x.inf_ = true;
        return x;
    }

    constexpr bool is_inf() const { return inf_; }
    std::uint64_t value() const {
        if (inf_) throw std::logic_error("ExtNat: value of infinity");
        return v_;
    }

    friend constexpr bool operator==(const ExtNat& a, const ExtNat& b) { return a.inf_ == b.inf_ && (a.inf_ || a.v_ == b.v_); }
    friend constexpr bool operator<=(const ExtNat& a, const ExtNat& b) { return b.inf_ || (!a.inf_ && a.v_ <= b.v_); }
    friend constexpr bool operator<(const ExtNat& a, const ExtNat& b) { return !(b <= a); }
    friend constexpr bool operator>=(const ExtNat& a, const ExtNat& b) { return b <= a; }
    friend constexpr bool operator>(const ExtNat& a, const ExtNat& b) { return b < a; }

    friend ExtNat operator+(const ExtNat& a, const ExtNat& b) {
        if (a.inf_ || b.inf_) return inf();
        if (a.v_ > UINT64_MAX - b.v_) throw std::overflow_error("ExtNat addition overflow");
        return ExtNat(a.v_ + b.v_);
    }
    friend ExtNat operator*(std::uint64_t n, const ExtNat& a) {
        if (n == 0) return ExtNat(0);
        if (a.inf_) return inf();
        if (a.v_ != 0 && n > UINT64_MAX / a.v_) throw std::overflow_error("ExtNat multiplication overflow");
        return ExtNat(n * a.v_);
    }
    // Pointwise difference a - b for b <= a with b finite.
    friend ExtNat operator-(const ExtNat& a, const ExtNat& b) {
        if (b.inf_ || !(b <= a)) throw std::logic_error("ExtNat: invalid subtraction");
        return a.inf_ ? inf() : ExtNat(a.v_ - b.v_);
    }
    ExtNat floor_div(std::uint64_t d) const {
        if (d == 0) throw std::invalid_argument("ExtNat: division by zero");
        return inf_ ? inf() : ExtNat(v_ / d);
    }

    std::string to_string() const { return inf_ ? "inf" : std::to_string(v_); }

private:
    std::uint64_t v_ = 0;
    bool inf_ = false;
};

inline ExtNat min(const ExtNat& a, const ExtNat& b) { return a <= b ? a : b; }
inline ExtNat max(const ExtNat& a, const ExtNat& b) { return a <= b ? b : a; }

}  // namespace nccw
