#pragma once

#include <cstdint>
#include <string>

namespace quivinv {

/*
 * Executable property suites shared by the CLI selftest and the acceptance
 * runner. Each suite reports how many elementary checks ran and, for the
 * first failure, which instance failed. Suites may also throw domain_error
 * or certification_error from the library calls they drive.
 */
struct SuiteResult {
    std::string name;
    long checks = 0;
    bool ok = true;
    std::string detail;
};

/* Power-sum / Schur / complete-homogeneous pairing identities and symmetric
   group character orthogonality for all partitions of size <= 5. */
SuiteResult check_symfunc_basics();

/* H~_lambda[1-u] = prod_{i<=l(lambda)} (1 - q^{i-1} u) and the top-degree
   values of H~_lambda for |lambda| <= hl_max; hook evaluation of
   s_lambda[1-u] for |lambda| <= hook_max; the u-limit and pairing routes of
   top_degree compared on every instance. */
SuiteResult check_specialization_identities(int hl_max, int hook_max);

/* Plethystic Log commutes with the specialization p_r -> 1 - u^r (tracked
   through an extra grading variable) and with top-degree extraction, on
   seeded random series. */
SuiteResult check_log_commutation(std::uint64_t seed, int trials);

/* The two-variable series sum q^{n1 n2} / ((q)_{n1} (q)_{n2}) T1^{n1} T2^{n2}
   has (q-1) Log equal to -T1 - T2 + T1 T2, and the doubled one-arrow quiver
   has DT_v = 1 exactly at (1,0), (0,1), (1,1); truncation box x box. */
SuiteResult check_pentagon(int box);

/* Frozen refined DT tables for the one-vertex quiver with m loops against
   the q-series route; m = 2 has n <= 6 frozen, m = 3 has n <= 5. */
SuiteResult check_loop_table(int m, int nmax);

/* q-series DT equals the symmetric-function route through match_symmetric
   for the 2-loop vertex (n <= 6), the 3-loop vertex (n <= 5) and the
   doubled A2 / Kronecker quivers (sum v <= 5), plus a nonzero weight shift
   on the 2-loop vertex. */
SuiteResult check_two_route(int threads = 0);

/* kac_count over F_2 / F_3 equals kac_poly evaluated there on the fixed
   17-triple corpus. */
SuiteResult check_oracle_corpus(int threads = 0);

/* Nonnegative coefficients, (nonzero iff root), monic of degree d_mu, and
   (equal to 1 iff real root) for hs_mu over a six-quiver corpus, every mu
   with total size <= total_max; mu with unequal slot sizes at a vertex must
   give zero. */
SuiteResult check_root_properties(int total_max, int threads = 0);

/* kostka_relation_check on the Jordan, A2 and Kronecker quivers for every
   nonzero v with sum v_i <= total_max. */
SuiteResult check_kostka_suite(int total_max, int threads = 0);

} // namespace quivinv
