#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace topograph {

/// Signed arbitrary-precision integer, base 10^9 limbs. Covers what the
/// Smith reduction needs: ring arithmetic, truncated division, comparison.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);  // NOLINT(google-explicit-constructor): mirrors built-in ints
    static BigInt from_string(const std::string& s);

    std::string str() const;

    bool is_zero() const { return sign_ == 0; }
    bool is_unit() const { return mag_.size() == 1 && mag_[0] == 1; }
    int signum() const { return sign_; }
    BigInt abs() const;

    BigInt operator-() const;
    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;
    /// Truncated toward zero, like built-in integer division.
    BigInt operator/(const BigInt& o) const;
    BigInt operator%(const BigInt& o) const;

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    bool operator==(const BigInt& o) const { return sign_ == o.sign_ && mag_ == o.mag_; }
    bool operator!=(const BigInt& o) const { return !(*this == o); }
    bool operator<(const BigInt& o) const;
    bool operator<=(const BigInt& o) const { return *this < o || *this == o; }
    bool operator>(const BigInt& o) const { return o < *this; }
    bool operator>=(const BigInt& o) const { return o <= *this; }

    /// Quotient and remainder with |r| < |divisor| and r carrying the
    /// dividend's sign (truncated division).
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);

private:
    static constexpr std::uint32_t kBase = 1000000000u;
    int sign_ = 0;                    // -1, 0, +1
    std::vector<std::uint32_t> mag_;  // little-endian limbs, no leading zeros

    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    void trim();
};

BigInt gcd(BigInt a, BigInt b);

}  // namespace topograph
