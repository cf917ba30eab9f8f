#pragma once

#include "quivinv/quiver.hpp"
#include "quivinv/series.hpp"

namespace quivinv {

/*
 * Symmetric quiver together with the linear-form weights k'_i >= 1 used by
 * the q-series DT definition; each k'_i must have parity opposite to the
 * loop count at its vertex (k'_i == loops_i - 1 mod 2).
 */
struct SymmetricQuiverProblem {
    Quiver quiver;
    std::vector<int> kprime;
    SymmetricQuiverProblem(Quiver q, std::vector<int> kp);
};

/* The weights k'_i = a'_ii + 1, the smallest choice matching match_symmetric. */
std::vector<int> default_kprime(const Quiver& sym);

/*
 * The master series of a quiver with legs[i] >= 1 slots at vertex i
 * (slots ordered vertex-major). The inner series has T^v coefficient
 *   sum over multipartitions pi with |pi^i| = v_i of
 *   q^{sum_{i->j} <pi^i,pi^j>} / (prod_i q^{<pi^i,pi^i>}
 *   prod_k prod_{j=1}^{m_k(pi^i)} (1 - q^{-j}))
 *   times legs[i] tensor copies of H~_{pi^i},
 * and the master series is (q-1) times its plethystic Log. Extraction
 * pairs a coefficient against Schur or complete homogeneous functions and
 * certifies the result is a Laurent polynomial.
 */
class MasterSeries {
public:
    MasterSeries(Quiver g, std::vector<int> legs, DimVector box, long total_cap = -1,
                 int threads = 0);

    const Quiver& quiver() const { return g_; }
    const std::vector<int>& legs() const { return legs_; }
    const GradedSeries& inner() const { return inner_; }
    const GradedSeries& series() const { return h_; }

    /* <H, s_mu>; zero when slot sizes differ at one vertex. */
    LaurentPolyQ hs(const MultiPartition& mu) const;
    /* <H, h_mu>, the Kac polynomial of (Gamma_mu, v_mu); needs all-ones legs. */
    LaurentPolyQ kac(const MultiPartition& mu) const;
    /* DT_v = q^{(delta - delta')/2} <H, s_{1^v}> with delta = sum legs_i v_i,
       delta' = sum kprime_i v_i; empty kprime means kprime = legs. */
    LaurentPolyQ dt(const DimVector& v, const std::vector<int>& kprime = {}) const;

    /* <H_v, f> for a caller-built test function of matching slot layout. */
    RationalFunctionQ pair_coefficient(const DimVector& v, const HomogSymFunc& f) const;

private:
    Quiver g_;
    std::vector<int> legs_;
    GradedSeries inner_;
    GradedSeries h_;
    DimVector slot_sizes(const DimVector& v) const;
};

GradedSeries hua_inner_series(const Quiver& g, const std::vector<int>& legs, DimVector box,
                              long total_cap = -1, int threads = 0);

LaurentPolyQ hs_mu(const Quiver& g, const std::vector<int>& legs, const MultiPartition& mu,
                   int threads = 0);
LaurentPolyQ kac_poly(const Quiver& g, const MultiPartition& mu, int threads = 0);
LaurentPolyQ dt_via_symfunc(const Quiver& g, const std::vector<int>& legs, const DimVector& v,
                            const std::vector<int>& kprime = {}, int threads = 0);

/*
 * All DT_v with v inside the box, straight from the scalar q-series
 *   (q-1) Log sum_v q^{-(gamma'(v)+delta'(v))/2} / (q^{-1})_v (-1)^{delta'(v)} T^v
 * with gamma'(v) the Tits form of the symmetric quiver. No symmetric
 * functions are involved, so this is an independent route.
 */
std::map<DimVector, LaurentPolyQ> dt_via_qseries(const SymmetricQuiverProblem& p, DimVector box,
                                                 long total_cap = -1);

/*
 * A quiver-with-legs (Gamma, k) whose gamma/delta data match the symmetric
 * quiver: a_ij = a'_ij for i < j, no loops, k_i = a'_ii + 1.
 */
std::pair<Quiver, std::vector<int>> match_symmetric(const Quiver& sym);

/* <H, p_lambda> for all-ones legs; asserts the expansion
   sum_mu prod_i chi^{mu^i}_{lambda^i} H^s_mu matches it exactly. */
RationalFunctionQ character_sum_check(const Quiver& g, const MultiPartition& lambda,
                                      int threads = 0);

/* Checks A_lambda = sum_mu K_{mu lambda} H^s_mu and its inverse via the
   certified Kostka matrix, over all multipartitions of size v. */
bool kostka_relation_check(const Quiver& g, const DimVector& v, int threads = 0);

} // namespace quivinv
