#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "quivinv/errors.hpp"

namespace quivinv {

using Int = mpz_class;
using Rat = mpq_class;

/*
 * Laurent polynomial in q with arbitrary-precision integer coefficients,
 * stored sparsely as exponent -> coefficient with no zero entries.
 * Structural equality of the map is mathematical equality.
 */
class LaurentPolyQ {
public:
    using Map = std::map<long, Int>;

    LaurentPolyQ() = default;

    static LaurentPolyQ zero() { return LaurentPolyQ(); }
    static LaurentPolyQ one() { return constant(1); }
    static LaurentPolyQ constant(Int c);
    static LaurentPolyQ monomial(long exp, Int coeff = Int(1));
    static LaurentPolyQ q() { return monomial(1); }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    bool is_constant() const { return c_.empty() || (c_.size() == 1 && c_.begin()->first == 0); }

    long low_exp() const;   // smallest exponent, requires nonzero
    long high_exp() const;  // largest exponent, requires nonzero
    const Int& leading() const;
    const Int& trailing() const;
    Int coeff(long e) const;
    const Map& coeffs() const { return c_; }
    std::size_t term_count() const { return c_.size(); }

    void add_term(long e, const Int& c);

    LaurentPolyQ operator-() const;
    LaurentPolyQ& operator+=(const LaurentPolyQ& o);
    LaurentPolyQ& operator-=(const LaurentPolyQ& o);
    friend LaurentPolyQ operator+(LaurentPolyQ a, const LaurentPolyQ& b) { return a += b; }
    friend LaurentPolyQ operator-(LaurentPolyQ a, const LaurentPolyQ& b) { return a -= b; }
    friend LaurentPolyQ operator*(const LaurentPolyQ& a, const LaurentPolyQ& b);
    LaurentPolyQ& operator*=(const LaurentPolyQ& o) { return *this = *this * o; }
    bool operator==(const LaurentPolyQ& o) const { return c_ == o.c_; }

    LaurentPolyQ shifted(long d) const;     // multiply by q^d
    LaurentPolyQ subst_pow(long d) const;   // q -> q^d, d >= 1
    LaurentPolyQ pow(long e) const;         // e >= 0
    LaurentPolyQ scaled(const Int& k) const;

    Int content() const;                    // gcd of |coefficients|, 0 for the zero polynomial
    LaurentPolyQ divided_by_int(const Int& k) const;  // exact, throws otherwise

    Rat eval(const Rat& x) const;           // exact evaluation, x != 0 if negative exponents occur
    Int eval_int(const Int& x) const;       // requires low_exp() >= 0
    Int eval_at_one() const;

    std::string to_string() const;          // descending powers, e.g. "q^3 + 2q - 1"
    std::string to_machine() const;         // "[(3,1),(1,2),(0,-1)]"
    static LaurentPolyQ parse_machine(const std::string& s);

private:
    Map c_;
};

/* (q)_n = prod_{s=1}^n (1 - q^s); with inverse_variable, prod (1 - q^{-s}). */
LaurentPolyQ q_pochhammer(int n, bool inverse_variable = false);

/* True polynomial gcd with positive leading coefficient and primitive
   coefficients; Laurent input is aligned to lowest exponent 0 first. */
LaurentPolyQ poly_gcd(const LaurentPolyQ& a, const LaurentPolyQ& b);

/* Exact division, throws certification_error if the remainder is nonzero. */
LaurentPolyQ poly_divexact(const LaurentPolyQ& a, const LaurentPolyQ& b);

/*
 * Polynomial in q and u with integer coefficients, exponents >= 0.
 * Just enough structure for specialization identities like
 * prod_i (1 - q^{i-1} u).
 */
class PolyQU {
public:
    using Key = std::pair<long, long>;  // (q exponent, u exponent)
    using Map = std::map<Key, Int>;

    PolyQU() = default;
    static PolyQU one() { return monomial(0, 0, 1); }
    static PolyQU monomial(long qe, long ue, Int c);

    bool is_zero() const { return c_.empty(); }
    const Map& coeffs() const { return c_; }
    void add_term(long qe, long ue, const Int& c);

    friend PolyQU operator+(PolyQU a, const PolyQU& b);
    friend PolyQU operator*(const PolyQU& a, const PolyQU& b);
    bool operator==(const PolyQU& o) const { return c_ == o.c_; }

    /* Coefficient of u^k as a Laurent polynomial in q. */
    LaurentPolyQ u_coeff(long k) const;

    std::string to_string() const;

private:
    Map c_;
};

} // namespace quivinv
