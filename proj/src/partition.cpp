#include "quivinv/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace quivinv {

Partition::Partition(std::vector<int> parts) : p_(std::move(parts)) {
    for (std::size_t i = 0; i < p_.size(); ++i) {
        if (p_[i] <= 0) throw domain_error("partition parts must be positive");
        if (i > 0 && p_[i] > p_[i - 1]) throw domain_error("partition parts must be weakly decreasing");
    }
}

Partition Partition::single_column(int n) {
    if (n == 0) return Partition();
    return Partition(std::vector<int>(static_cast<std::size_t>(n), 1));
}

int Partition::size() const {
    return std::accumulate(p_.begin(), p_.end(), 0);
}

std::map<int, int> Partition::multiplicities() const {
    std::map<int, int> m;
    for (int x : p_) ++m[x];
    return m;
}

Partition Partition::dual() const {
    if (p_.empty()) return Partition();
    std::vector<int> d(static_cast<std::size_t>(p_[0]), 0);
    for (int x : p_)
        for (int j = 0; j < x; ++j) ++d[static_cast<std::size_t>(j)];
    return Partition(std::move(d));
}

long Partition::n_stat() const {
    long s = 0;
    for (std::size_t i = 0; i < p_.size(); ++i) s += static_cast<long>(i) * p_[i];
    return s;
}

bool Partition::operator<(const Partition& o) const {
    // (n) sorts before (n-1,1): lexicographically larger part vectors come first
    return std::lexicographical_compare(o.p_.begin(), o.p_.end(), p_.begin(), p_.end());
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < p_.size(); ++i) {
        if (i) os << ",";
        os << p_[i];
    }
    os << "]";
    return os.str();
}

Partition Partition::parse(const std::string& s) {
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
    skip_ws();
    if (i >= s.size() || s[i] != '[') throw domain_error("partition must start with '[': " + s);
    ++i;
    std::vector<int> parts;
    skip_ws();
    if (i < s.size() && s[i] == ']') {
        ++i;
    } else {
        while (true) {
            skip_ws();
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            if (j == i) throw domain_error("expected part in partition: " + s);
            parts.push_back(std::stoi(s.substr(i, j - i)));
            i = j;
            skip_ws();
            if (i < s.size() && s[i] == ',') { ++i; continue; }
            if (i < s.size() && s[i] == ']') { ++i; break; }
            throw domain_error("malformed partition: " + s);
        }
    }
    skip_ws();
    if (i != s.size()) throw domain_error("trailing text after partition: " + s);
    return Partition(std::move(parts));
}

std::vector<int> MultiPartition::sizes() const {
    std::vector<int> v;
    v.reserve(c_.size());
    for (const auto& p : c_) v.push_back(p.size());
    return v;
}

int MultiPartition::total_size() const {
    int s = 0;
    for (const auto& p : c_) s += p.size();
    return s;
}

bool MultiPartition::operator<(const MultiPartition& o) const {
    return std::lexicographical_compare(c_.begin(), c_.end(), o.c_.begin(), o.c_.end());
}

std::string MultiPartition::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ";";
        os << c_[i].to_string();
    }
    return os.str();
}

MultiPartition MultiPartition::parse(const std::string& s) {
    std::vector<Partition> comps;
    std::size_t start = 0;
    while (true) {
        std::size_t semi = s.find(';', start);
        std::string piece = semi == std::string::npos ? s.substr(start) : s.substr(start, semi - start);
        comps.push_back(Partition::parse(piece));
        if (semi == std::string::npos) break;
        start = semi + 1;
    }
    return MultiPartition(std::move(comps));
}

long pairing(const Partition& lambda, const Partition& mu) {
    long s = 0;
    for (const auto& [i, mi] : lambda.multiplicities())
        for (const auto& [j, mj] : mu.multiplicities())
            s += static_cast<long>(std::min(i, j)) * mi * mj;
    return s;
}

Int z_order(const Partition& lambda) {
    Int z = 1;
    for (const auto& [j, m] : lambda.multiplicities()) {
        Int pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(j), static_cast<unsigned long>(m));
        Int fact;
        mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(m));
        z *= pw * fact;
    }
    return z;
}

namespace {

void enum_rec(int n, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(cur.empty() ? Partition() : Partition(cur));
        return;
    }
    for (int k = std::min(n, max_part); k >= 1; --k) {
        cur.push_back(k);
        enum_rec(n - k, k, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw domain_error("enumerate_partitions requires n >= 0");
    std::vector<Partition> out;
    std::vector<int> cur;
    enum_rec(n, n, cur, out);
    return out;
}

std::vector<MultiPartition> enumerate_multipartitions(const std::vector<int>& sizes) {
    std::vector<MultiPartition> out;
    std::vector<std::vector<Partition>> lists;
    lists.reserve(sizes.size());
    for (int n : sizes) lists.push_back(enumerate_partitions(n));
    std::vector<Partition> cur(sizes.size());
    std::vector<std::size_t> idx(sizes.size(), 0);
    while (true) {
        for (std::size_t i = 0; i < sizes.size(); ++i) cur[i] = lists[i][idx[i]];
        out.push_back(MultiPartition(cur));
        std::size_t i = sizes.size();
        while (i > 0) {
            --i;
            if (++idx[i] < lists[i].size()) break;
            idx[i] = 0;
            if (i == 0) return out;
        }
        if (sizes.empty()) return out;
    }
}

} // namespace quivinv
