#include "quivinv/series.hpp"

#include "quivinv/errors.hpp"

#include <numeric>
#include <sstream>

namespace quivinv {

GradedSeries::GradedSeries(int num_vars, int num_slots, Key box, long total_cap)
    : num_vars_(num_vars), num_slots_(num_slots), box_(std::move(box)), cap_(total_cap) {
    if (num_vars_ < 0 || num_slots_ < 0) throw domain_error("GradedSeries: negative arity");
    if (box_.size() != static_cast<std::size_t>(num_vars_))
        throw domain_error("GradedSeries: box size does not match variable count");
    for (int b : box_)
        if (b < 0) throw domain_error("GradedSeries: negative box bound");
}

bool GradedSeries::keeps(const Key& v) const {
    if (v.size() != static_cast<std::size_t>(num_vars_))
        throw domain_error("GradedSeries: key size does not match variable count");
    long total = 0;
    for (int i = 0; i < num_vars_; ++i) {
        if (v[static_cast<std::size_t>(i)] < 0) throw domain_error("GradedSeries: negative exponent");
        if (v[static_cast<std::size_t>(i)] > box_[static_cast<std::size_t>(i)]) return false;
        total += v[static_cast<std::size_t>(i)];
    }
    return cap_ < 0 || total <= cap_;
}

bool GradedSeries::same_truncation(const GradedSeries& o) const {
    return num_vars_ == o.num_vars_ && num_slots_ == o.num_slots_ && box_ == o.box_ &&
           cap_ == o.cap_;
}

void GradedSeries::add_term(const Key& v, const HomogSymFunc& f) {
    if (!keeps(v) || f.is_zero()) return;
    if (f.num_slots() != num_slots_)
        throw domain_error("GradedSeries: coefficient slot count does not match series");
    auto it = t_.find(v);
    if (it == t_.end()) {
        t_.emplace(v, f);
    } else {
        it->second += f;
        if (it->second.is_zero()) t_.erase(it);
    }
}

HomogSymFunc GradedSeries::coeff(const Key& v) const {
    HomogSymFunc zero{std::vector<int>(static_cast<std::size_t>(num_slots_), 0)};
    if (!keeps(v)) return zero;
    auto it = t_.find(v);
    return it == t_.end() ? zero : it->second;
}

GradedSeries& GradedSeries::operator+=(const GradedSeries& o) {
    if (!same_truncation(o)) throw domain_error("GradedSeries: truncation mismatch in +");
    for (const auto& [v, f] : o.t_) add_term(v, f);
    return *this;
}

GradedSeries GradedSeries::operator-() const {
    GradedSeries r(num_vars_, num_slots_, box_, cap_);
    for (const auto& [v, f] : t_) r.t_.emplace(v, -f);
    return r;
}

GradedSeries GradedSeries::scaled(const RationalFunctionQ& c) const {
    GradedSeries r(num_vars_, num_slots_, box_, cap_);
    if (c.is_zero()) return r;
    for (const auto& [v, f] : t_) r.t_.emplace(v, f.scaled(c));
    return r;
}

std::string GradedSeries::to_string() const {
    std::ostringstream os;
    if (t_.empty()) return "0";
    bool first = true;
    for (const auto& [v, f] : t_) {
        if (!first) os << " + ";
        first = false;
        os << "[";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) os << ",";
            os << v[i];
        }
        os << "] : " << f.to_string();
    }
    return os.str();
}

GradedSeries series_mul(const GradedSeries& a, const GradedSeries& b) {
    if (!a.same_truncation(b)) throw domain_error("series_mul: truncation mismatch");
    GradedSeries r(a.num_vars(), a.num_slots(), a.box(), a.total_cap());
    for (const auto& [va, fa] : a.terms()) {
        for (const auto& [vb, fb] : b.terms()) {
            GradedSeries::Key v(va.size());
            for (std::size_t i = 0; i < v.size(); ++i) v[i] = va[i] + vb[i];
            if (!r.keeps(v)) continue;
            r.add_term(v, fa * fb);
        }
    }
    return r;
}

GradedSeries series_adams(const GradedSeries& f, long d) {
    if (d < 1) throw domain_error("series_adams: order must be positive");
    GradedSeries r(f.num_vars(), f.num_slots(), f.box(), f.total_cap());
    for (const auto& [v, c] : f.terms()) {
        GradedSeries::Key w(v.size());
        bool fits = true;
        for (std::size_t i = 0; i < v.size(); ++i) {
            long e = static_cast<long>(v[i]) * d;
            if (e > f.box()[i]) { fits = false; break; }
            w[i] = static_cast<int>(e);
        }
        if (fits && r.keeps(w)) r.add_term(w, adams(c, d));
    }
    return r;
}

int mobius(long d) {
    if (d < 1) throw domain_error("mobius: argument must be positive");
    int r = 1;
    for (long p = 2; p * p <= d; ++p) {
        if (d % p) continue;
        d /= p;
        if (d % p == 0) return 0;
        r = -r;
    }
    if (d > 1) r = -r;
    return r;
}

namespace {

/* log(1 + A) = sum_{m>=1} (-1)^{m+1} A^m / m, truncated. */
GradedSeries plain_log_one_plus(const GradedSeries& a) {
    GradedSeries w(a.num_vars(), a.num_slots(), a.box(), a.total_cap());
    GradedSeries power = a;
    long m = 1;
    while (!power.is_zero()) {
        Rat c(m % 2 == 1 ? 1 : -1, m);
        w += power.scaled(RationalFunctionQ::from_rat(c));
        ++m;
        power = series_mul(power, a);
    }
    return w;
}

long key_gcd(const GradedSeries::Key& v) {
    long g = 0;
    for (int e : v) g = std::gcd(g, static_cast<long>(e));
    return g;
}

} // namespace

GradedSeries pleth_log(const GradedSeries& series) {
    const auto zero = series.zero_key();
    if (!(series.coeff(zero) == HomogSymFunc::unit(series.num_slots())))
        throw domain_error("pleth_log: constant term must be 1");
    GradedSeries a = series;
    a.erase(zero);
    GradedSeries w = plain_log_one_plus(a);

    GradedSeries v(series.num_vars(), series.num_slots(), series.box(), series.total_cap());
    for (const auto& [key, f] : w.terms()) {
        if (key_gcd(key) == 0) continue;
        for (long d = 1;; ++d) {
            GradedSeries::Key scaled_key(key.size());
            bool fits = true;
            for (std::size_t i = 0; i < key.size(); ++i) {
                long e = static_cast<long>(key[i]) * d;
                if (e > series.box()[i]) { fits = false; break; }
                scaled_key[i] = static_cast<int>(e);
            }
            if (!fits || !v.keeps(scaled_key)) break;
            int mu = mobius(d);
            if (mu != 0)
                v.add_term(scaled_key, adams(f, d).scaled(RationalFunctionQ::from_rat(Rat(mu, d))));
        }
    }
    return v;
}

GradedSeries pleth_exp(const GradedSeries& series) {
    const auto zero = series.zero_key();
    if (!series.coeff(zero).is_zero())
        throw domain_error("pleth_exp: constant term must be 0");

    GradedSeries g(series.num_vars(), series.num_slots(), series.box(), series.total_cap());
    for (long d = 1;; ++d) {
        GradedSeries term = series_adams(series, d);
        if (term.is_zero()) break;
        g += term.scaled(RationalFunctionQ::from_rat(Rat(1, d)));
    }

    GradedSeries e(series.num_vars(), series.num_slots(), series.box(), series.total_cap());
    e.add_term(zero, HomogSymFunc::unit(series.num_slots()));
    GradedSeries power = g;
    Rat inv_factorial(1);
    long m = 1;
    while (!power.is_zero()) {
        inv_factorial /= m;
        e += power.scaled(RationalFunctionQ::from_rat(inv_factorial));
        ++m;
        power = series_mul(power, g);
    }
    return e;
}

} // namespace quivinv
