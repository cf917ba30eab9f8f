#include "quivinv/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace quivinv {

LaurentPolyQ LaurentPolyQ::constant(Int c) {
    LaurentPolyQ p;
    if (c != 0) p.c_[0] = std::move(c);
    return p;
}

LaurentPolyQ LaurentPolyQ::monomial(long exp, Int coeff) {
    LaurentPolyQ p;
    if (coeff != 0) p.c_[exp] = std::move(coeff);
    return p;
}

bool LaurentPolyQ::is_one() const {
    return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second == 1;
}

long LaurentPolyQ::low_exp() const {
    if (c_.empty()) throw domain_error("low_exp of zero polynomial");
    return c_.begin()->first;
}

long LaurentPolyQ::high_exp() const {
    if (c_.empty()) throw domain_error("high_exp of zero polynomial");
    return c_.rbegin()->first;
}

const Int& LaurentPolyQ::leading() const {
    if (c_.empty()) throw domain_error("leading coefficient of zero polynomial");
    return c_.rbegin()->second;
}

const Int& LaurentPolyQ::trailing() const {
    if (c_.empty()) throw domain_error("trailing coefficient of zero polynomial");
    return c_.begin()->second;
}

Int LaurentPolyQ::coeff(long e) const {
    auto it = c_.find(e);
    return it == c_.end() ? Int(0) : it->second;
}

void LaurentPolyQ::add_term(long e, const Int& c) {
    if (c == 0) return;
    auto [it, fresh] = c_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) c_.erase(it);
    }
}

LaurentPolyQ LaurentPolyQ::operator-() const {
    LaurentPolyQ r;
    for (const auto& [e, c] : c_) r.c_[e] = -c;
    return r;
}

LaurentPolyQ& LaurentPolyQ::operator+=(const LaurentPolyQ& o) {
    for (const auto& [e, c] : o.c_) add_term(e, c);
    return *this;
}

LaurentPolyQ& LaurentPolyQ::operator-=(const LaurentPolyQ& o) {
    for (const auto& [e, c] : o.c_) add_term(e, -c);
    return *this;
}

LaurentPolyQ operator*(const LaurentPolyQ& a, const LaurentPolyQ& b) {
    LaurentPolyQ r;
    if (a.is_zero() || b.is_zero()) return r;
    Int tmp;
    for (const auto& [ea, ca] : a.c_)
        for (const auto& [eb, cb] : b.c_) {
            tmp = ca * cb;
            r.add_term(ea + eb, tmp);
        }
    return r;
}

LaurentPolyQ LaurentPolyQ::shifted(long d) const {
    LaurentPolyQ r;
    for (const auto& [e, c] : c_) r.c_[e + d] = c;
    return r;
}

LaurentPolyQ LaurentPolyQ::subst_pow(long d) const {
    if (d < 1) throw domain_error("subst_pow requires d >= 1");
    LaurentPolyQ r;
    for (const auto& [e, c] : c_) r.c_[e * d] = c;
    return r;
}

LaurentPolyQ LaurentPolyQ::pow(long e) const {
    if (e < 0) throw domain_error("negative polynomial power");
    LaurentPolyQ r = one();
    LaurentPolyQ base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

LaurentPolyQ LaurentPolyQ::scaled(const Int& k) const {
    LaurentPolyQ r;
    if (k == 0) return r;
    for (const auto& [e, c] : c_) r.c_[e] = c * k;
    return r;
}

Int LaurentPolyQ::content() const {
    Int g = 0;
    for (const auto& [e, c] : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

LaurentPolyQ LaurentPolyQ::divided_by_int(const Int& k) const {
    if (k == 0) throw domain_error("division by zero integer");
    LaurentPolyQ r;
    for (const auto& [e, c] : c_) {
        Int quo, rem;
        mpz_tdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), c.get_mpz_t(), k.get_mpz_t());
        if (rem != 0) throw certification_error("inexact integer division of polynomial");
        r.c_[e] = quo;
    }
    return r;
}

Rat LaurentPolyQ::eval(const Rat& x) const {
    if (c_.empty()) return Rat(0);
    if (x == 0) {
        if (low_exp() < 0) throw domain_error("evaluating negative power at 0");
        return Rat(coeff(0));
    }
    Rat acc = 0;
    for (const auto& [e, c] : c_) {
        Rat p;
        if (e >= 0) {
            Int nu, de;
            mpz_pow_ui(nu.get_mpz_t(), x.get_num().get_mpz_t(), static_cast<unsigned long>(e));
            mpz_pow_ui(de.get_mpz_t(), x.get_den().get_mpz_t(), static_cast<unsigned long>(e));
            p = Rat(nu, de);
        } else {
            Int nu, de;
            mpz_pow_ui(nu.get_mpz_t(), x.get_den().get_mpz_t(), static_cast<unsigned long>(-e));
            mpz_pow_ui(de.get_mpz_t(), x.get_num().get_mpz_t(), static_cast<unsigned long>(-e));
            p = Rat(nu, de);
        }
        p.canonicalize();
        acc += Rat(c) * p;
    }
    acc.canonicalize();
    return acc;
}

Int LaurentPolyQ::eval_int(const Int& x) const {
    if (c_.empty()) return 0;
    if (low_exp() < 0) throw domain_error("integer evaluation of Laurent polynomial with q^{-1}");
    // Horner over the dense range.
    Int acc = 0;
    long e = high_exp();
    for (long k = e; k >= 0; --k) {
        acc *= x;
        acc += coeff(k);
    }
    return acc;
}

Int LaurentPolyQ::eval_at_one() const {
    Int s = 0;
    for (const auto& [e, c] : c_) s += c;
    return s;
}

std::string LaurentPolyQ::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        const long e = it->first;
        Int c = it->second;
        bool neg = c < 0;
        if (neg) c = -c;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (c != 1 || e == 0) os << c.get_str();
        if (e == 1) os << "q";
        else if (e != 0) os << "q^" << e;
    }
    return os.str();
}

std::string LaurentPolyQ::to_machine() const {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        if (!first) os << ",";
        first = false;
        os << "(" << it->first << "," << it->second.get_str() << ")";
    }
    os << "]";
    return os.str();
}

LaurentPolyQ LaurentPolyQ::parse_machine(const std::string& s) {
    LaurentPolyQ r;
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
    auto expect = [&](char ch) {
        skip_ws();
        if (i >= s.size() || s[i] != ch)
            throw domain_error("bad machine polynomial: expected '" + std::string(1, ch) + "' in " + s);
        ++i;
    };
    auto read_int = [&]() -> std::string {
        skip_ws();
        std::size_t j = i;
        if (j < s.size() && (s[j] == '-' || s[j] == '+')) ++j;
        std::size_t k = j;
        while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
        if (k == j) throw domain_error("bad machine polynomial: integer expected in " + s);
        std::string out = s.substr(i, k - i);
        i = k;
        return out;
    };
    expect('[');
    skip_ws();
    if (i < s.size() && s[i] == ']') { ++i; skip_ws(); if (i != s.size()) throw domain_error("trailing text in machine polynomial"); return r; }
    while (true) {
        expect('(');
        long e = std::stol(read_int());
        expect(',');
        Int c(read_int());
        expect(')');
        if (c == 0) throw domain_error("zero coefficient in machine polynomial");
        if (r.c_.count(e)) throw domain_error("duplicate exponent in machine polynomial");
        r.c_[e] = c;
        skip_ws();
        if (i < s.size() && s[i] == ',') { ++i; continue; }
        break;
    }
    expect(']');
    skip_ws();
    if (i != s.size()) throw domain_error("trailing text in machine polynomial");
    return r;
}

LaurentPolyQ q_pochhammer(int n, bool inverse_variable) {
    if (n < 0) throw domain_error("q_pochhammer requires n >= 0");
    LaurentPolyQ r = LaurentPolyQ::one();
    for (int s = 1; s <= n; ++s) {
        LaurentPolyQ f = LaurentPolyQ::one();
        f.add_term(inverse_variable ? -s : s, Int(-1));
        r *= f;
    }
    return r;
}

namespace {

/* Dense coefficient vector [x^0 .. x^deg] of a true polynomial. */
std::vector<Int> to_dense(const LaurentPolyQ& p) {
    std::vector<Int> v(static_cast<std::size_t>(p.high_exp()) + 1, Int(0));
    for (const auto& [e, c] : p.coeffs()) v[static_cast<std::size_t>(e)] = c;
    return v;
}

LaurentPolyQ from_dense(const std::vector<Int>& v) {
    LaurentPolyQ p;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) p.add_term(static_cast<long>(i), v[i]);
    return p;
}

void make_primitive(std::vector<Int>& v) {
    Int g = 0;
    for (const auto& c : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) return;
    }
    if (g == 0 || g == 1) return;
    for (auto& c : v) c /= g;
}

std::size_t dense_deg(const std::vector<Int>& v) {
    std::size_t d = v.size();
    while (d > 0 && v[d - 1] == 0) --d;
    return d;  // number of coefficients; degree + 1, 0 for zero
}

/* Pseudo-remainder of a by b (b nonzero), in place on a dense copy. */
std::vector<Int> pseudo_rem(std::vector<Int> a, const std::vector<Int>& b) {
    std::size_t na = dense_deg(a), nb = dense_deg(b);
    const Int& lb = b[nb - 1];
    while (na >= nb) {
        Int la = a[na - 1];
        for (std::size_t i = 0; i + 1 < na; ++i) a[i] *= lb;
        // subtract la * x^{na-nb} * b
        for (std::size_t i = 0; i < nb; ++i) a[na - nb + i] -= la * b[i];
        a[na - 1] = 0;
        na = dense_deg(a);
        if (na == 0) break;
    }
    a.resize(na);
    return a;
}

} // namespace

LaurentPolyQ poly_gcd(const LaurentPolyQ& a, const LaurentPolyQ& b) {
    if (a.is_zero() && b.is_zero()) return LaurentPolyQ::zero();
    if (a.is_zero() || b.is_zero()) {
        const LaurentPolyQ& p = a.is_zero() ? b : a;
        auto v = to_dense(p.shifted(-p.low_exp()));
        make_primitive(v);
        if (v.back() < 0)
            for (auto& c : v) c = -c;
        return from_dense(v);
    }
    auto va = to_dense(a.shifted(-a.low_exp()));
    auto vb = to_dense(b.shifted(-b.low_exp()));
    make_primitive(va);
    make_primitive(vb);
    if (dense_deg(va) < dense_deg(vb)) std::swap(va, vb);
    while (true) {
        std::size_t nb = dense_deg(vb);
        if (nb == 0) break;
        auto r = pseudo_rem(va, vb);
        make_primitive(r);
        va = std::move(vb);
        vb = std::move(r);
    }
    make_primitive(va);
    if (!va.empty() && va[dense_deg(va) - 1] < 0)
        for (auto& c : va) c = -c;
    va.resize(dense_deg(va));
    return from_dense(va);
}

LaurentPolyQ poly_divexact(const LaurentPolyQ& a, const LaurentPolyQ& b) {
    if (b.is_zero()) throw domain_error("polynomial division by zero");
    if (a.is_zero()) return LaurentPolyQ::zero();
    const long shift = a.low_exp() - b.low_exp();
    auto va = to_dense(a.shifted(-a.low_exp()));
    auto vb = to_dense(b.shifted(-b.low_exp()));
    std::size_t na = dense_deg(va), nb = dense_deg(vb);
    if (na < nb) throw certification_error("inexact polynomial division");
    std::vector<Int> quo(na - nb + 1, Int(0));
    const Int& lb = vb[nb - 1];
    while (true) {
        na = dense_deg(va);
        if (na == 0) break;
        if (na < nb) throw certification_error("inexact polynomial division");
        Int qc, rem;
        mpz_tdiv_qr(qc.get_mpz_t(), rem.get_mpz_t(), va[na - 1].get_mpz_t(), lb.get_mpz_t());
        if (rem != 0) throw certification_error("inexact polynomial division");
        quo[na - nb] = qc;
        for (std::size_t i = 0; i < nb; ++i) va[na - nb + i] -= qc * vb[i];
        if (va[na - 1] != 0) throw certification_error("inexact polynomial division");
    }
    return from_dense(quo).shifted(shift);
}

PolyQU PolyQU::monomial(long qe, long ue, Int c) {
    PolyQU p;
    if (c != 0) p.c_[{qe, ue}] = std::move(c);
    return p;
}

void PolyQU::add_term(long qe, long ue, const Int& c) {
    if (c == 0) return;
    Key k{qe, ue};
    auto [it, fresh] = c_.emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) c_.erase(it);
    }
}

PolyQU operator+(PolyQU a, const PolyQU& b) {
    for (const auto& [k, c] : b.c_) a.add_term(k.first, k.second, c);
    return a;
}

PolyQU operator*(const PolyQU& a, const PolyQU& b) {
    PolyQU r;
    for (const auto& [ka, ca] : a.c_)
        for (const auto& [kb, cb] : b.c_)
            r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
}

LaurentPolyQ PolyQU::u_coeff(long k) const {
    LaurentPolyQ r;
    for (const auto& [key, c] : c_)
        if (key.second == k) r.add_term(key.first, c);
    return r;
}

std::string PolyQU::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : c_) {
        if (!first) os << " + ";
        first = false;
        os << c.get_str();
        if (k.first != 0) os << "*q^" << k.first;
        if (k.second != 0) os << "*u^" << k.second;
    }
    return os.str();
}

} // namespace quivinv
