#pragma once

#include "quivinv/symfunc.hpp"

namespace quivinv {

/*
 * Truncated series in grading variables T_1..T_k with homogeneous
 * symmetric-function coefficients (num_slots alphabets; 0 slots makes the
 * coefficients plain rational functions). A key v is kept when v fits the
 * componentwise box and, if a total cap is set, sum(v) <= cap. Both filters
 * cut along lower sets, so truncated results are exact where kept.
 */
class GradedSeries {
public:
    using Key = std::vector<int>;
    using Map = std::map<Key, HomogSymFunc>;

    GradedSeries(int num_vars, int num_slots, Key box, long total_cap = -1);

    int num_vars() const { return num_vars_; }
    int num_slots() const { return num_slots_; }
    const Key& box() const { return box_; }
    long total_cap() const { return cap_; }
    bool keeps(const Key& v) const;
    bool same_truncation(const GradedSeries& o) const;

    const Map& terms() const { return t_; }
    void add_term(const Key& v, const HomogSymFunc& f);
    HomogSymFunc coeff(const Key& v) const;
    Key zero_key() const { return Key(static_cast<std::size_t>(num_vars_), 0); }
    void erase(const Key& v) { t_.erase(v); }
    bool is_zero() const { return t_.empty(); }

    GradedSeries& operator+=(const GradedSeries& o);
    friend GradedSeries operator+(GradedSeries a, const GradedSeries& b) { return a += b; }
    GradedSeries operator-() const;
    friend GradedSeries operator-(GradedSeries a, const GradedSeries& b) { return a += -b; }
    GradedSeries scaled(const RationalFunctionQ& c) const;
    bool operator==(const GradedSeries& o) const {
        return num_vars_ == o.num_vars_ && num_slots_ == o.num_slots_ && t_ == o.t_;
    }

    std::string to_string() const;

private:
    int num_vars_;
    int num_slots_;
    Key box_;
    long cap_;
    Map t_;
};

/* Truncated Cauchy product; operands must share the truncation. */
GradedSeries series_mul(const GradedSeries& a, const GradedSeries& b);

/* psi_d on the whole series: T^v -> T^{dv}, parts and q to the d-th power. */
GradedSeries series_adams(const GradedSeries& f, long d);

/*
 * Plethystic logarithm. With W = log(series) as a plain power series,
 * Log(series) has coefficients V_v = sum_{d | gcd(v)} mu(d)/d psi_d(W_{v/d}).
 * The constant term must be exactly 1.
 */
GradedSeries pleth_log(const GradedSeries& series);

/* Plethystic exponential exp(sum_{d>=1} psi_d(V)/d); constant term must be 0. */
GradedSeries pleth_exp(const GradedSeries& series);

int mobius(long d);

} // namespace quivinv
