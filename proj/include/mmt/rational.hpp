#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace mmt {

// Exact rational number. Always kept canonical: gcd(num, den) == 1, den > 0.
// Arithmetic never rounds; comparisons are exact.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, long d);
    explicit Rational(const mpq_class& q);

    // Parses "num/den" or a bare integer "num". Throws ParseError on junk.
    static Rational from_string(const std::string& s);

    // Canonical form "num/den", denominator always printed: "3/4", "-2/1".
    std::string str() const;

    std::string num_str() const;
    std::string den_str() const;

    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const;
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    Rational abs() const { return sign() < 0 ? -*this : *this; }

    // True iff this is the square of a rational (num and den both perfect squares).
    bool is_perfect_square() const;
    // Exact square root; precondition is_perfect_square().
    Rational exact_sqrt() const;

    // Largest rational of the form floor(sqrt(this * 4^prec)) / 2^prec.
    // Result r satisfies r*r <= this, converging from below as prec grows.
    // Precondition: *this >= 0.
    Rational sqrt_lower_bound(unsigned prec) const;

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Rational operator*(long n, const Rational& r) { return Rational(n) * r; }

} // namespace mmt
