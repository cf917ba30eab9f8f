#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "quivinv/laurent.hpp"

namespace quivinv {

/*
 * Integer partition with weakly decreasing positive parts.
 * Ordering note: operator< orders by the reverse-lexicographic listing used
 * everywhere in this project, i.e. (n) comes first and (1^n) last among
 * partitions of n, so sorted containers iterate in that listing order.
 */
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    static Partition single_row(int n) { return n == 0 ? Partition() : Partition({n}); }
    static Partition single_column(int n);

    const std::vector<int>& parts() const { return p_; }
    bool empty() const { return p_.empty(); }
    int size() const;                  // sum of parts
    int length() const { return static_cast<int>(p_.size()); }
    int part(int i) const { return i < length() ? p_[static_cast<std::size_t>(i)] : 0; }

    std::map<int, int> multiplicities() const;   // part size -> multiplicity
    Partition dual() const;
    long n_stat() const;               // sum (i-1) * lambda_i, rows numbered from 1

    bool operator==(const Partition& o) const { return p_ == o.p_; }
    bool operator<(const Partition& o) const;  // reverse-lexicographic listing order
    bool operator!=(const Partition& o) const { return !(*this == o); }

    std::string to_string() const;     // "[3,1,1]", "[]"
    static Partition parse(const std::string& s);

private:
    std::vector<int> p_;
};

/* One partition per slot; compares slot by slot in the Partition order. */
class MultiPartition {
public:
    MultiPartition() = default;
    explicit MultiPartition(std::vector<Partition> comps) : c_(std::move(comps)) {}

    int num_slots() const { return static_cast<int>(c_.size()); }
    const Partition& slot(int i) const { return c_[static_cast<std::size_t>(i)]; }
    Partition& slot(int i) { return c_[static_cast<std::size_t>(i)]; }
    const std::vector<Partition>& slots() const { return c_; }
    std::vector<int> sizes() const;
    int total_size() const;

    bool operator==(const MultiPartition& o) const { return c_ == o.c_; }
    bool operator<(const MultiPartition& o) const;

    std::string to_string() const;     // "[3,1];[2];[]"
    static MultiPartition parse(const std::string& s);

private:
    std::vector<Partition> c_;
};

/* sum_{i,j} min(i,j) m_i(lambda) m_j(mu); equals sum_i lambda'_i mu'_i. */
long pairing(const Partition& lambda, const Partition& mu);

/* Centralizer order z_lambda = prod_j j^{m_j} m_j!. */
Int z_order(const Partition& lambda);

/* All partitions of n in reverse-lexicographic order, (n) first. */
std::vector<Partition> enumerate_partitions(int n);

/* All multipartitions with slot i a partition of sizes[i]. */
std::vector<MultiPartition> enumerate_multipartitions(const std::vector<int>& sizes);

} // namespace quivinv
