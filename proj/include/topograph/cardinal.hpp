#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace topograph {

/// Symbolic cardinality of a countable set: a nonnegative integer or ω.
/// Arithmetic is total: ω absorbs addition, and 0·ω = 0.
class Cardinal {
public:
    constexpr Cardinal() = default;

    static constexpr Cardinal finite(std::uint64_t n) {
        Cardinal c;
        c.n_ = n;
        return c;
    }
    static constexpr Cardinal omega() {
        Cardinal c;
        c.omega_ = true;
        return c;
    }

    constexpr bool is_omega() const { return omega_; }
    constexpr bool is_finite() const { return !omega_; }

    /// Finite value; throws on ω.
    constexpr std::uint64_t value() const {
        if (omega_) throw std::logic_error("Cardinal: ω has no finite value");
        return n_;
    }

    friend constexpr Cardinal operator+(Cardinal a, Cardinal b) {
        if (a.omega_ || b.omega_) return omega();
        return finite(a.n_ + b.n_);
    }
    friend constexpr Cardinal operator*(Cardinal a, Cardinal b) {
        if ((a.is_finite() && a.n_ == 0) || (b.is_finite() && b.n_ == 0)) return finite(0);
        if (a.omega_ || b.omega_) return omega();
        return finite(a.n_ * b.n_);
    }
    friend constexpr bool operator==(Cardinal a, Cardinal b) {
        return a.omega_ == b.omega_ && (a.omega_ || a.n_ == b.n_);
    }
    friend constexpr bool operator!=(Cardinal a, Cardinal b) { return !(a == b); }

    /// Every finite value is below ω.
    friend constexpr bool operator<(Cardinal a, Cardinal b) {
        if (a.omega_) return false;
        if (b.omega_) return true;
        return a.n_ < b.n_;
    }
    friend constexpr bool operator<=(Cardinal a, Cardinal b) { return a == b || a < b; }

    std::string str() const { return omega_ ? "ω" : std::to_string(n_); }

private:
    bool omega_ = false;
    std::uint64_t n_ = 0;
};

}  // namespace topograph
