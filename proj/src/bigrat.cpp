#include "ratgeom/bigrat.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "ratgeom/errors.hpp"

namespace ratgeom {

BigRat::BigRat(long num, long den) : v_(num, den) {
    if (den == 0) throw ZeroDenominator("BigRat: zero denominator");
    v_.canonicalize();
}

BigRat::BigRat(const BigInt& num, const BigInt& den) : v_(num, den) {
    if (den == 0) throw ZeroDenominator("BigRat: zero denominator");
    v_.canonicalize();
}

BigRat BigRat::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("BigRat: empty string");
    mpq_class v;
    if (mpq_set_str(v.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("BigRat: cannot parse '" + s + "'");
    if (v.get_den() == 0) throw ZeroDenominator("BigRat: zero denominator in '" + s + "'");
    v.canonicalize();
    BigRat r;
    r.v_ = v;
    return r;
}

BigRat BigRat::parse_decimal(const std::string& s) {
    if (s.find('/') != std::string::npos) return parse(s);
    if (s.find_first_of(".eE") == std::string::npos) return parse(s);

    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = (s[i++] == '-');
    std::string digits;
    long frac_digits = 0;
    bool seen_dot = false, seen_digit = false;
    for (; i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.'); ++i) {
        if (s[i] == '.') {
            if (seen_dot) throw std::invalid_argument("BigRat: bad decimal '" + s + "'");
            seen_dot = true;
        } else {
            digits += s[i];
            seen_digit = true;
            if (seen_dot) ++frac_digits;
        }
    }
    long exp10 = 0;
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        exp10 = std::stol(s.substr(i + 1));
        i = s.size();
    }
    if (!seen_digit || i != s.size())
        throw std::invalid_argument("BigRat: bad decimal '" + s + "'");

    // Explicit base 10: leading zeros in the digit string must not be
    // read as an octal prefix.
    BigInt mant(digits.empty() ? "0" : digits, 10);
    if (neg) mant = -mant;
    long shift = exp10 - frac_digits;
    BigInt p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    return shift >= 0 ? BigRat(mant * p10) : BigRat(mant, p10);
}

BigRat BigRat::operator-() const {
    BigRat r;
    r.v_ = -v_;
    return r;
}

BigRat BigRat::operator+(const BigRat& o) const {
    BigRat r;
    r.v_ = v_ + o.v_;
    return r;
}

BigRat BigRat::operator-(const BigRat& o) const {
    BigRat r;
    r.v_ = v_ - o.v_;
    return r;
}

BigRat BigRat::operator*(const BigRat& o) const {
    BigRat r;
    r.v_ = v_ * o.v_;
    return r;
}

BigRat BigRat::operator/(const BigRat& o) const {
    if (o.is_zero()) throw ZeroDenominator("BigRat: division by zero");
    BigRat r;
    r.v_ = v_ / o.v_;
    return r;
}

BigRat abs(const BigRat& q) { return q.sign() < 0 ? -q : q; }

BigRat pow(const BigRat& q, unsigned e) {
    BigRat r(1);
    BigRat base = q;
    for (unsigned k = e; k; k >>= 1) {
        if (k & 1) r *= base;
        if (k >> 1) base *= base;
    }
    return r;
}

BigInt floor(const BigRat& q) {
    BigInt r;
    mpz_fdiv_q(r.get_mpz_t(), q.numerator().get_mpz_t(), q.denominator().get_mpz_t());
    return r;
}

std::ostream& operator<<(std::ostream& os, const BigRat& q) { return os << q.str(); }

std::optional<BigRat> is_perfect_square(const BigRat& q) {
    if (q.sign() < 0) return std::nullopt;
    BigInt num = q.numerator(), den = q.denominator();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    BigInt rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return BigRat(rn, rd);
}

bool is_member_Qtan2(const BigInt& p, const BigInt& q) {
    BigInt s = p * p + q * q;
    return mpz_perfect_square_p(s.get_mpz_t()) != 0;
}

}  // namespace ratgeom
