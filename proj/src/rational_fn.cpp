#include "quivinv/rational_fn.hpp"

#include <sstream>

namespace quivinv {

RationalFunctionQ::RationalFunctionQ(LaurentPolyQ numerator)
    : num_(std::move(numerator)), den_(LaurentPolyQ::one()) {}

RationalFunctionQ::RationalFunctionQ(LaurentPolyQ numerator, LaurentPolyQ denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) throw domain_error("rational function with zero denominator");
    normalize();
}

RationalFunctionQ RationalFunctionQ::from_rat(const Rat& r) {
    return RationalFunctionQ(LaurentPolyQ::constant(r.get_num()),
                             LaurentPolyQ::constant(r.get_den()));
}

void RationalFunctionQ::normalize() {
    if (num_.is_zero()) {
        den_ = LaurentPolyQ::one();
        return;
    }
    // Move the denominator's q-power into the numerator.
    long b = den_.low_exp();
    if (b != 0) {
        den_ = den_.shifted(-b);
        num_ = num_.shifted(-b);
    }
    if (!den_.is_one()) {
        LaurentPolyQ g = poly_gcd(num_, den_);
        if (!g.is_one() && !g.is_constant()) {
            num_ = poly_divexact(num_, g);
            den_ = poly_divexact(den_, g);
        }
    }
    Int cn = num_.content();
    Int cd = den_.content();
    Int g;
    mpz_gcd(g.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (g > 1) {
        num_ = num_.divided_by_int(g);
        den_ = den_.divided_by_int(g);
    }
    if (den_.trailing() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RationalFunctionQ RationalFunctionQ::operator-() const {
    RationalFunctionQ r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RationalFunctionQ operator+(const RationalFunctionQ& a, const RationalFunctionQ& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    return RationalFunctionQ(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunctionQ operator-(const RationalFunctionQ& a, const RationalFunctionQ& b) {
    if (b.is_zero()) return a;
    return RationalFunctionQ(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunctionQ operator*(const RationalFunctionQ& a, const RationalFunctionQ& b) {
    if (a.is_zero() || b.is_zero()) return RationalFunctionQ();
    return RationalFunctionQ(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunctionQ operator/(const RationalFunctionQ& a, const RationalFunctionQ& b) {
    if (b.is_zero()) throw domain_error("division by zero rational function");
    if (a.is_zero()) return RationalFunctionQ();
    return RationalFunctionQ(a.num_ * b.den_, a.den_ * b.num_);
}

Rat RationalFunctionQ::eval(const Rat& x) const {
    Rat d = den_.eval(x);
    if (d == 0) throw domain_error("denominator vanishes at evaluation point");
    Rat r = num_.eval(x) / d;
    r.canonicalize();
    return r;
}

std::string RationalFunctionQ::to_string() const {
    if (den_.is_one()) return num_.to_string();
    std::ostringstream os;
    os << "(" << num_.to_string() << ")/(" << den_.to_string() << ")";
    return os.str();
}

RationalFunctionQ adams_q(const RationalFunctionQ& f, long d) {
    if (d == 1) return f;
    return RationalFunctionQ(f.num().subst_pow(d), f.den().subst_pow(d));
}

LaurentPolyQ polynomial_check(const RationalFunctionQ& f) {
    if (!f.den().is_one())
        throw certification_error("non-polynomial result, denominator " + f.den().to_string());
    return f.num();
}

} // namespace quivinv
