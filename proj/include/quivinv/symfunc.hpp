#pragma once

#include "quivinv/partition.hpp"
#include "quivinv/rational_fn.hpp"

namespace quivinv {

/*
 * Homogeneous symmetric function in one alphabet per slot, stored in the
 * power-sum basis: a finite sum of coefficients in Q(q) times
 * p_{lambda^1}(x^1) ... p_{lambda^s}(x^s). The multidegree (one entry per
 * slot) is fixed; every key's slot sizes must match it.
 */
class HomogSymFunc {
public:
    using Map = std::map<MultiPartition, RationalFunctionQ>;

    HomogSymFunc() = default;  // zero of degree (0,...) over 0 slots
    explicit HomogSymFunc(std::vector<int> degree) : deg_(std::move(degree)) {}
    static HomogSymFunc unit(int num_slots);

    int num_slots() const { return static_cast<int>(deg_.size()); }
    const std::vector<int>& degree() const { return deg_; }
    const Map& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    void add_term(const MultiPartition& key, const RationalFunctionQ& c);
    RationalFunctionQ coeff(const MultiPartition& key) const;

    HomogSymFunc& operator+=(const HomogSymFunc& o);
    friend HomogSymFunc operator+(HomogSymFunc a, const HomogSymFunc& b) { return a += b; }
    HomogSymFunc operator-() const;
    friend HomogSymFunc operator-(HomogSymFunc a, const HomogSymFunc& b) { return a += -b; }
    friend HomogSymFunc operator*(const HomogSymFunc& a, const HomogSymFunc& b);
    HomogSymFunc scaled(const RationalFunctionQ& c) const;
    bool operator==(const HomogSymFunc& o) const {
        return deg_.size() == o.deg_.size() && t_ == o.t_;
    }

    std::string to_string() const;

private:
    std::vector<int> deg_;
    Map t_;
};

/* p_{lambda}, s_{mu}, h_{mu} for a multipartition, one alphabet per slot. */
HomogSymFunc p_basis(const MultiPartition& lambda);
HomogSymFunc schur(const MultiPartition& mu);
HomogSymFunc complete_h(const MultiPartition& mu);

/* Transformed Hall-Littlewood function H~_lambda placed in the given slot:
   sum_mu K~_{mu,lambda}(q) s_mu expanded into power sums. */
HomogSymFunc hall_littlewood_transformed(const Partition& lambda, int slot, int num_slots);

/* Single-slot p-basis expansion of H~_lambda, memoized. */
const std::map<Partition, RationalFunctionQ>& hall_littlewood_p_expansion(const Partition& lambda);

/* Hall pairing with <p_a, p_b> = delta_{ab} z_a slot-wise; Schur functions
   come out orthonormal. Mixed degrees pair to zero. */
RationalFunctionQ hall_pairing(const HomogSymFunc& f, const HomogSymFunc& g);

/* Adams operation psi_d: q -> q^d and every part of every key times d. */
HomogSymFunc adams(const HomogSymFunc& f, long d);

/* Specialization p_r -> 1 - u^r of a single-alphabet function, as the map
   u-exponent -> coefficient in Q(q). */
using USeries = std::map<long, RationalFunctionQ>;
USeries u_specialize(const HomogSymFunc& f);
USeries useries_mul(const USeries& a, const USeries& b);

/* Top-degree coefficient: the coefficient of u^n in f[1-u], n = deg f.
   Computed both from the specialization and as (-1)^n <f, s_{1^n}>; the two
   routes are asserted equal. */
RationalFunctionQ top_degree(const HomogSymFunc& f);

} // namespace quivinv
