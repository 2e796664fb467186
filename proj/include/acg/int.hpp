#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace acg {

// Default entry type: arbitrary precision, so normal-form intermediate
// swell can never wrap.
using BigInt = boost::multiprecision::cpp_int;

struct OverflowError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Checked 64-bit entry type. Every arithmetic operation that would leave
// the int64 range throws OverflowError instead of wrapping.
class CheckedI64 {
  public:
    CheckedI64() = default;
    CheckedI64(long long v) : v_(v) {}
    CheckedI64(int v) : v_(v) {}

    long long value() const { return v_; }

    friend CheckedI64 operator+(CheckedI64 a, CheckedI64 b) {
        long long r;
        if (__builtin_add_overflow(a.v_, b.v_, &r)) throw OverflowError("checked int64: add overflow");
        return r;
    }
    friend CheckedI64 operator-(CheckedI64 a, CheckedI64 b) {
        long long r;
        if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw OverflowError("checked int64: sub overflow");
        return r;
    }
    friend CheckedI64 operator*(CheckedI64 a, CheckedI64 b) {
        long long r;
        if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw OverflowError("checked int64: mul overflow");
        return r;
    }
    friend CheckedI64 operator/(CheckedI64 a, CheckedI64 b) {
        if (b.v_ == 0) throw std::domain_error("checked int64: division by zero");
        if (a.v_ == INT64_MIN && b.v_ == -1) throw OverflowError("checked int64: div overflow");
        return a.v_ / b.v_;
    }
    friend CheckedI64 operator%(CheckedI64 a, CheckedI64 b) {
        if (b.v_ == 0) throw std::domain_error("checked int64: remainder by zero");
        if (a.v_ == INT64_MIN && b.v_ == -1) return 0;
        return a.v_ % b.v_;
    }
    CheckedI64 operator-() const { return CheckedI64(0) - *this; }

    CheckedI64& operator+=(CheckedI64 o) { return *this = *this + o; }
    CheckedI64& operator-=(CheckedI64 o) { return *this = *this - o; }
    CheckedI64& operator*=(CheckedI64 o) { return *this = *this * o; }

    friend bool operator==(CheckedI64 a, CheckedI64 b) { return a.v_ == b.v_; }
    friend bool operator!=(CheckedI64 a, CheckedI64 b) { return a.v_ != b.v_; }
    friend bool operator<(CheckedI64 a, CheckedI64 b) { return a.v_ < b.v_; }
    friend bool operator>(CheckedI64 a, CheckedI64 b) { return a.v_ > b.v_; }
    friend bool operator<=(CheckedI64 a, CheckedI64 b) { return a.v_ <= b.v_; }
    friend bool operator>=(CheckedI64 a, CheckedI64 b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, CheckedI64 a);

  private:
    long long v_ = 0;
};

std::ostream& operator<<(std::ostream& os, CheckedI64 a);

template <class T>
T abs_val(const T& a) {
    return a < T(0) ? T(0) - a : a;
}

template <class T>
int sign_of(const T& a) {
    if (a < T(0)) return -1;
    if (a > T(0)) return 1;
    return 0;
}

// gcd, always >= 0; gcd(0, 0) == 0.
template <class T>
T gcd_val(T a, T b) {
    a = abs_val(a);
    b = abs_val(b);
    while (b != T(0)) {
        T t = a % b;
        a = b;
        b = t;
    }
    return a;
}

template <class T>
struct ExtGcd {
    T g, x, y;  // g = x*a + y*b, g >= 0
};

template <class T>
ExtGcd<T> ext_gcd(const T& a, const T& b) {
    T old_r = a, r = b;
    T old_x = T(1), x = T(0);
    T old_y = T(0), y = T(1);
    while (r != T(0)) {
        T q = old_r / r;
        T t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_x - q * x;
        old_x = x;
        x = t;
        t = old_y - q * y;
        old_y = y;
        y = t;
    }
    if (old_r < T(0)) {
        old_r = -old_r;
        old_x = -old_x;
        old_y = -old_y;
    }
    return {old_r, old_x, old_y};
}

// Floor division (round toward negative infinity). b must be nonzero.
template <class T>
T floor_div(const T& a, const T& b) {
    T q = a / b;
    T rem = a - q * b;
    if (rem != T(0) && ((rem < T(0)) != (b < T(0)))) q = q - T(1);
    return q;
}

// a mod b reduced into [0, |b|). b must be nonzero.
template <class T>
T mod_floor(const T& a, const T& b) {
    T bb = abs_val(b);
    return a - floor_div(a, bb) * bb;
}

template <class T>
bool divides(const T& d, const T& a) {
    if (d == T(0)) return a == T(0);
    return a % d == T(0);
}

std::string to_decimal(const BigInt& v);
std::string to_decimal(CheckedI64 v);
BigInt parse_bigint(const std::string& token);  // throws std::invalid_argument
bool fits_int64(const BigInt& v);
long long to_int64(const BigInt& v);  // throws OverflowError when out of range

}  // namespace acg
