#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>

namespace ratgeom {

using BigInt = mpz_class;

/// Exact arbitrary-precision rational in canonical reduced form:
/// denominator > 0 and gcd(|num|, den) = 1, maintained by every
/// constructor and operation, so equal values compare structurally equal.
class BigRat {
public:
    BigRat() : v_(0) {}
    BigRat(int n) : v_(n) {}
    BigRat(long n) : v_(n) {}
    BigRat(const BigInt& n) : v_(n) {}
    BigRat(long num, long den);
    BigRat(const BigInt& num, const BigInt& den);

    /// Accepts "num/den" and plain integer literals.
    static BigRat parse(const std::string& s);
    /// Accepts decimal and scientific literals ("0.05", "-3.1e2") exactly,
    /// plus everything parse() accepts.
    static BigRat parse_decimal(const std::string& s);

    BigInt numerator() const { return v_.get_num(); }
    BigInt denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    BigRat operator-() const;
    BigRat operator+(const BigRat& o) const;
    BigRat operator-(const BigRat& o) const;
    BigRat operator*(const BigRat& o) const;
    BigRat operator/(const BigRat& o) const;  // throws ZeroDenominator on /0
    BigRat& operator+=(const BigRat& o) { return *this = *this + o; }
    BigRat& operator-=(const BigRat& o) { return *this = *this - o; }
    BigRat& operator*=(const BigRat& o) { return *this = *this * o; }
    BigRat& operator/=(const BigRat& o) { return *this = *this / o; }

    bool operator==(const BigRat& o) const { return mpq_equal(v_.get_mpq_t(), o.v_.get_mpq_t()) != 0; }
    std::strong_ordering operator<=>(const BigRat& o) const {
        int c = mpq_cmp(v_.get_mpq_t(), o.v_.get_mpq_t());
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    /// Serialized as "num/den", the "/den" omitted for integers.
    std::string str() const { return v_.get_str(); }

    /// Nearest double; overflow becomes +-inf. For search filtering only.
    double to_double() const { return mpq_get_d(v_.get_mpq_t()); }

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

BigRat abs(const BigRat& q);
BigRat pow(const BigRat& q, unsigned e);
BigInt floor(const BigRat& q);

std::ostream& operator<<(std::ostream& os, const BigRat& q);

/// Exact rational square root: nonempty iff q is the square of a rational
/// (numerator and denominator of the canonical form are both integer
/// squares); returns the non-negative root.
std::optional<BigRat> is_perfect_square(const BigRat& q);

/// True iff p^2 + q^2 is a perfect square of an integer, i.e. arctan(q/p)
/// has rational sine and cosine.
bool is_member_Qtan2(const BigInt& p, const BigInt& q);

}  // namespace ratgeom
