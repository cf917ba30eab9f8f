#pragma once

#include <string>

#include "quivinv/laurent.hpp"

namespace quivinv {

/*
 * Rational function in q over the integers, kept in a canonical reduced form:
 *   - zero is 0/1;
 *   - the denominator is a true polynomial with nonzero constant term
 *     (any power of q is carried by the numerator, which may be Laurent);
 *   - gcd of the primitive parts of numerator and denominator is 1;
 *   - gcd(content(num), content(den)) = 1;
 *   - the denominator's constant term is positive.
 * Two equal values therefore have identical representations, so operator==
 * on the parts decides mathematical equality.
 */
class RationalFunctionQ {
public:
    RationalFunctionQ() : num_(), den_(LaurentPolyQ::one()) {}
    RationalFunctionQ(LaurentPolyQ numerator);  // implicit: polynomials embed
    RationalFunctionQ(LaurentPolyQ numerator, LaurentPolyQ denominator);

    static RationalFunctionQ from_int(long v) { return RationalFunctionQ(LaurentPolyQ::constant(Int(v))); }
    static RationalFunctionQ from_rat(const Rat& r);

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    const LaurentPolyQ& num() const { return num_; }
    const LaurentPolyQ& den() const { return den_; }

    RationalFunctionQ operator-() const;
    friend RationalFunctionQ operator+(const RationalFunctionQ& a, const RationalFunctionQ& b);
    friend RationalFunctionQ operator-(const RationalFunctionQ& a, const RationalFunctionQ& b);
    friend RationalFunctionQ operator*(const RationalFunctionQ& a, const RationalFunctionQ& b);
    friend RationalFunctionQ operator/(const RationalFunctionQ& a, const RationalFunctionQ& b);
    RationalFunctionQ& operator+=(const RationalFunctionQ& o) { return *this = *this + o; }
    RationalFunctionQ& operator-=(const RationalFunctionQ& o) { return *this = *this - o; }
    RationalFunctionQ& operator*=(const RationalFunctionQ& o) { return *this = *this * o; }
    RationalFunctionQ& operator/=(const RationalFunctionQ& o) { return *this = *this / o; }
    bool operator==(const RationalFunctionQ& o) const { return num_ == o.num_ && den_ == o.den_; }

    Rat eval(const Rat& x) const;  // throws domain_error if the denominator vanishes at x

    std::string to_string() const;

private:
    LaurentPolyQ num_, den_;
    void normalize();
};

/* Adams operation on the coefficient field: q -> q^d. */
RationalFunctionQ adams_q(const RationalFunctionQ& f, long d);

/* Certifies that f is a Laurent polynomial and returns it; otherwise throws
   certification_error describing the surviving denominator. */
LaurentPolyQ polynomial_check(const RationalFunctionQ& f);

} // namespace quivinv
