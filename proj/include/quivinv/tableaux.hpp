#pragma once

#include <vector>

#include "quivinv/partition.hpp"

namespace quivinv {

/*
 * Charge of a word with partition content (weakly decreasing letter
 * multiplicities), computed by repeated extraction of standard subwords:
 * take the leftmost 1, then for each next letter the first occurrence
 * strictly to the right of the current one, wrapping to the start of the
 * word when none exists; the charge of a standard word gives letter r+1
 * the index of r if it sits to the right of r and one more if to the left.
 */
long charge_word(const std::vector<int>& word);

/* Reading words (rows right to left, top row first) of all semistandard
   tableaux of the given shape and content. */
std::vector<std::vector<int>> ssyt_reading_words(const Partition& shape, const Partition& content);

/* Transformed Hall-Littlewood coefficient: sum over SSYT of shape mu and
   content lambda of q^{n(lambda) - charge}. Sizes must agree. */
LaurentPolyQ kostka_foulkes_cocharge(const Partition& mu, const Partition& lambda);

/* Number of SSYT of shape mu and content lambda. */
Int kostka_number(const Partition& mu, const Partition& lambda);

/* Irreducible symmetric group character chi^mu at cycle type lambda,
   by border-strip removal on beta numbers. Sizes must agree. */
Int sn_character(const Partition& mu, const Partition& lambda);

/*
 * Kostka matrix for partitions of n in the reverse-lexicographic listing,
 * together with its exact inverse. K[i][j] = K_{order[i], order[j]} is
 * unitriangular in this listing; the inverse is certified integral and a
 * two-sided inverse at construction.
 */
struct KostkaMatrix {
    std::vector<Partition> order;
    std::vector<std::vector<Int>> K;
    std::vector<std::vector<Int>> Kinv;
};
KostkaMatrix kostka_matrix(int n);

/* Persistent memo for kostka_foulkes_cocharge keyed by QUIVINV_CACHE_DIR;
   load is implicit on first use, flush writes back merged entries, reset
   drops the in-memory memo so the next query reloads from disk. */
void kf_cache_flush();
void kf_cache_reset();

} // namespace quivinv
