#include "quivinv/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "quivinv/tableaux.hpp"

namespace quivinv {

HomogSymFunc HomogSymFunc::unit(int num_slots) {
    HomogSymFunc f(std::vector<int>(static_cast<std::size_t>(num_slots), 0));
    f.t_.emplace(MultiPartition(std::vector<Partition>(static_cast<std::size_t>(num_slots))),
                 RationalFunctionQ::from_int(1));
    return f;
}

void HomogSymFunc::add_term(const MultiPartition& key, const RationalFunctionQ& c) {
    if (c.is_zero()) return;
    if (key.num_slots() != num_slots())
        throw domain_error("symmetric function key has wrong slot count");
    const auto sz = key.sizes();
    for (std::size_t s = 0; s < deg_.size(); ++s)
        if (sz[s] != deg_[s]) throw domain_error("symmetric function key degree mismatch");
    auto [it, fresh] = t_.emplace(key, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

RationalFunctionQ HomogSymFunc::coeff(const MultiPartition& key) const {
    auto it = t_.find(key);
    return it == t_.end() ? RationalFunctionQ() : it->second;
}

HomogSymFunc& HomogSymFunc::operator+=(const HomogSymFunc& o) {
    if (o.is_zero()) return *this;      // zero of any degree is absorbed
    if (is_zero()) { deg_ = o.deg_; t_ = o.t_; return *this; }
    if (deg_ != o.deg_) throw domain_error("adding symmetric functions of different degree");
    for (const auto& [k, c] : o.t_) add_term(k, c);
    return *this;
}

HomogSymFunc HomogSymFunc::operator-() const {
    HomogSymFunc r(deg_);
    for (const auto& [k, c] : t_) r.t_.emplace(k, -c);
    return r;
}

namespace {

Partition merge_parts(const Partition& a, const Partition& b) {
    std::vector<int> v;
    v.reserve(a.parts().size() + b.parts().size());
    v.insert(v.end(), a.parts().begin(), a.parts().end());
    v.insert(v.end(), b.parts().begin(), b.parts().end());
    std::sort(v.begin(), v.end(), std::greater<int>());
    return Partition(std::move(v));
}

} // namespace

HomogSymFunc operator*(const HomogSymFunc& a, const HomogSymFunc& b) {
    if (a.num_slots() != b.num_slots())
        throw domain_error("multiplying symmetric functions with different slot counts");
    std::vector<int> deg(a.degree());
    for (std::size_t s = 0; s < deg.size(); ++s) deg[s] += b.degree()[s];
    HomogSymFunc r(deg);
    const int ns = a.num_slots();
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            std::vector<Partition> merged(static_cast<std::size_t>(ns));
            for (int s = 0; s < ns; ++s) merged[static_cast<std::size_t>(s)] = merge_parts(ka.slot(s), kb.slot(s));
            r.add_term(MultiPartition(std::move(merged)), ca * cb);
        }
    return r;
}

HomogSymFunc HomogSymFunc::scaled(const RationalFunctionQ& c) const {
    HomogSymFunc r(deg_);
    if (c.is_zero()) return r;
    for (const auto& [k, v] : t_) r.t_.emplace(k, v * c);
    return r;
}

std::string HomogSymFunc::to_string() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : t_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")*p(" << k.to_string() << ")";
    }
    return os.str();
}

HomogSymFunc p_basis(const MultiPartition& lambda) {
    HomogSymFunc f(lambda.sizes());
    f.add_term(lambda, RationalFunctionQ::from_int(1));
    return f;
}

namespace {

std::mutex exp_mutex;
std::map<Partition, std::map<Partition, RationalFunctionQ>> schur_memo;
std::map<Partition, std::map<Partition, RationalFunctionQ>> hlt_memo;

/* s_mu = sum_lambda chi^mu_lambda / z_lambda p_lambda, single slot. */
const std::map<Partition, RationalFunctionQ>& schur_p_expansion(const Partition& mu) {
    std::lock_guard<std::mutex> lock(exp_mutex);
    auto it = schur_memo.find(mu);
    if (it != schur_memo.end()) return it->second;
    std::map<Partition, RationalFunctionQ> exp;
    for (const auto& la : enumerate_partitions(mu.size())) {
        Int chi = sn_character(mu, la);
        if (chi == 0) continue;
        exp.emplace(la, RationalFunctionQ(LaurentPolyQ::constant(chi),
                                          LaurentPolyQ::constant(z_order(la))));
    }
    return schur_memo.emplace(mu, std::move(exp)).first->second;
}

HomogSymFunc from_single_slot(const std::map<Partition, RationalFunctionQ>& exp,
                              int n, int slot, int num_slots) {
    std::vector<int> deg(static_cast<std::size_t>(num_slots), 0);
    deg[static_cast<std::size_t>(slot)] = n;
    HomogSymFunc f(deg);
    for (const auto& [la, c] : exp) {
        std::vector<Partition> key(static_cast<std::size_t>(num_slots));
        key[static_cast<std::size_t>(slot)] = la;
        f.add_term(MultiPartition(std::move(key)), c);
    }
    return f;
}

} // namespace

HomogSymFunc schur(const MultiPartition& mu) {
    HomogSymFunc f = HomogSymFunc::unit(mu.num_slots());
    for (int s = 0; s < mu.num_slots(); ++s) {
        if (mu.slot(s).empty()) continue;
        f = f * from_single_slot(schur_p_expansion(mu.slot(s)), mu.slot(s).size(), s, mu.num_slots());
    }
    return f;
}

HomogSymFunc complete_h(const MultiPartition& mu) {
    HomogSymFunc f = HomogSymFunc::unit(mu.num_slots());
    for (int s = 0; s < mu.num_slots(); ++s)
        for (int part : mu.slot(s).parts()) {
            std::map<Partition, RationalFunctionQ> hn;
            for (const auto& la : enumerate_partitions(part))
                hn.emplace(la, RationalFunctionQ(LaurentPolyQ::one(),
                                                 LaurentPolyQ::constant(z_order(la))));
            f = f * from_single_slot(hn, part, s, mu.num_slots());
        }
    return f;
}

const std::map<Partition, RationalFunctionQ>& hall_littlewood_p_expansion(const Partition& lambda) {
    {
        std::lock_guard<std::mutex> lock(exp_mutex);
        auto it = hlt_memo.find(lambda);
        if (it != hlt_memo.end()) return it->second;
    }
    std::map<Partition, RationalFunctionQ> exp;
    for (const auto& mu : enumerate_partitions(lambda.size())) {
        LaurentPolyQ kf = kostka_foulkes_cocharge(mu, lambda);
        if (kf.is_zero()) continue;
        RationalFunctionQ kfc{kf};
        for (const auto& [la, c] : schur_p_expansion(mu)) {
            auto [it, fresh] = exp.emplace(la, kfc * c);
            if (!fresh) {
                it->second += kfc * c;
                if (it->second.is_zero()) exp.erase(it);
            }
        }
    }
    std::lock_guard<std::mutex> lock(exp_mutex);
    return hlt_memo.emplace(lambda, std::move(exp)).first->second;
}

HomogSymFunc hall_littlewood_transformed(const Partition& lambda, int slot, int num_slots) {
    if (slot < 0 || slot >= num_slots) throw domain_error("slot out of range");
    return from_single_slot(hall_littlewood_p_expansion(lambda), lambda.size(), slot, num_slots);
}

RationalFunctionQ hall_pairing(const HomogSymFunc& f, const HomogSymFunc& g) {
    if (f.num_slots() != g.num_slots())
        throw domain_error("pairing symmetric functions with different slot counts");
    RationalFunctionQ acc;
    if (f.degree() != g.degree()) return acc;  // homogeneous of different degree
    const auto& a = f.terms();
    const auto& b = g.terms();
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (ia->first < ib->first) { ++ia; continue; }
        if (ib->first < ia->first) { ++ib; continue; }
        Int z = 1;
        for (const auto& la : ia->first.slots()) z *= z_order(la);
        acc += ia->second * ib->second * RationalFunctionQ(LaurentPolyQ::constant(z));
        ++ia;
        ++ib;
    }
    return acc;
}

HomogSymFunc adams(const HomogSymFunc& f, long d) {
    if (d < 1) throw domain_error("Adams operation requires d >= 1");
    if (d == 1) return f;
    std::vector<int> deg(f.degree());
    for (auto& x : deg) x *= static_cast<int>(d);
    HomogSymFunc r(deg);
    for (const auto& [k, c] : f.terms()) {
        std::vector<Partition> key;
        key.reserve(static_cast<std::size_t>(k.num_slots()));
        for (const auto& la : k.slots()) {
            std::vector<int> parts = la.parts();
            for (auto& p : parts) p *= static_cast<int>(d);
            key.push_back(Partition(std::move(parts)));
        }
        r.add_term(MultiPartition(std::move(key)), adams_q(c, d));
    }
    return r;
}

USeries useries_mul(const USeries& a, const USeries& b) {
    USeries r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            RationalFunctionQ v = ca * cb;
            if (v.is_zero()) continue;
            auto [it, fresh] = r.emplace(ea + eb, v);
            if (!fresh) {
                it->second += v;
                if (it->second.is_zero()) r.erase(it);
            }
        }
    return r;
}

USeries u_specialize(const HomogSymFunc& f) {
    if (f.num_slots() != 1)
        throw domain_error("u_specialize needs exactly one alphabet");
    USeries r;
    for (const auto& [k, c] : f.terms()) {
        // prod_parts (1 - u^part), integer coefficients in u
        std::map<long, Int> prod;
        prod[0] = 1;
        for (int part : k.slot(0).parts()) {
            std::map<long, Int> next;
            for (const auto& [e, cc] : prod) {
                next[e] += cc;
                next[e + part] -= cc;
            }
            for (auto it = next.begin(); it != next.end();)
                it = it->second == 0 ? next.erase(it) : std::next(it);
            prod = std::move(next);
        }
        for (const auto& [e, cc] : prod) {
            RationalFunctionQ v = c * RationalFunctionQ(LaurentPolyQ::constant(cc));
            if (v.is_zero()) continue;
            auto [it, fresh] = r.emplace(e, v);
            if (!fresh) {
                it->second += v;
                if (it->second.is_zero()) r.erase(it);
            }
        }
    }
    return r;
}

RationalFunctionQ top_degree(const HomogSymFunc& f) {
    if (f.num_slots() != 1)
        throw domain_error("top_degree needs exactly one alphabet");
    const int n = f.degree()[0];
    USeries spec = u_specialize(f);
    auto it = spec.find(n);
    RationalFunctionQ via_u = it == spec.end() ? RationalFunctionQ() : it->second;

    RationalFunctionQ via_pairing =
        hall_pairing(f, schur(MultiPartition({Partition::single_column(n)})));
    if (n % 2 == 1) via_pairing = -via_pairing;
    if (!(via_u == via_pairing))
        throw certification_error("top-degree routes disagree");
    return via_u;
}

} // namespace quivinv
