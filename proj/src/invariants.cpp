#include "quivinv/invariants.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <thread>
#include <utility>

#include "quivinv/errors.hpp"
#include "quivinv/tableaux.hpp"

namespace quivinv {

namespace {

std::vector<int> all_ones(int r) { return std::vector<int>(static_cast<std::size_t>(r), 1); }

std::string dim_to_string(const DimVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

void validate_legs(const Quiver& g, const std::vector<int>& legs) {
    if (legs.size() != static_cast<std::size_t>(g.num_vertices()))
        throw domain_error("legs list has " + std::to_string(legs.size()) + " entries for " +
                           std::to_string(g.num_vertices()) + " vertices");
    for (int k : legs)
        if (k < 1) throw domain_error("leg count must be >= 1");
}

/* Iterate all keys in the box of a truncated series; f(v) on the kept ones. */
template <typename F>
void for_each_kept(const GradedSeries& s, F&& f) {
    GradedSeries::Key v(static_cast<std::size_t>(s.num_vars()), 0);
    if (s.num_vars() == 0) {
        f(v);
        return;
    }
    for (;;) {
        if (s.keeps(v)) f(v);
        std::size_t i = 0;
        while (i < v.size() && v[i] == s.box()[i]) v[i++] = 0;
        if (i == v.size()) return;
        ++v[i];
    }
}

/* q^{sum_arrows <pi_i,pi_j>} / (q^{sum_i <pi_i,pi_i>} prod_i prod_k
   prod_{j<=m_k(pi_i)} (1 - q^{-j})), the automorphism-weighted count of the
   multipartition stratum. */
RationalFunctionQ hua_weight(const Quiver& g, const MultiPartition& pi) {
    long a = 0;
    for (const auto& ar : g.arrows()) a += pairing(pi.slot(ar.first), pi.slot(ar.second));
    long b = 0;
    LaurentPolyQ den = LaurentPolyQ::one();
    for (int i = 0; i < g.num_vertices(); ++i) {
        b += pairing(pi.slot(i), pi.slot(i));
        for (const auto& [part, mult] : pi.slot(i).multiplicities()) {
            (void)part;
            den *= q_pochhammer(mult, true);
        }
    }
    return RationalFunctionQ(LaurentPolyQ::monomial(a - b)) / RationalFunctionQ(den);
}

struct HuaJob {
    DimVector v;
    MultiPartition pi;
};

using TensorCache = std::map<std::pair<int, Partition>, HomogSymFunc>;

/* legs[i] tensor copies of the transformed Hall-Littlewood function of pi^i,
   multiplied over the vertices, in the vertex-major slot layout. */
HomogSymFunc hua_tensor(const MultiPartition& pi, const std::vector<int>& legs,
                        const std::vector<int>& slot_base, int total_slots, TensorCache& cache) {
    HomogSymFunc f = HomogSymFunc::unit(total_slots);
    for (int i = 0; i < pi.num_slots(); ++i) {
        auto key = std::make_pair(i, pi.slot(i));
        auto it = cache.find(key);
        if (it == cache.end()) {
            HomogSymFunc t = HomogSymFunc::unit(total_slots);
            for (int j = 0; j < legs[static_cast<std::size_t>(i)]; ++j)
                t = t * hall_littlewood_transformed(pi.slot(i),
                                                    slot_base[static_cast<std::size_t>(i)] + j,
                                                    total_slots);
            it = cache.emplace(std::move(key), std::move(t)).first;
        }
        f = f * it->second;
    }
    return f;
}

}  // namespace

SymmetricQuiverProblem::SymmetricQuiverProblem(Quiver q, std::vector<int> kp)
    : quiver(std::move(q)), kprime(std::move(kp)) {
    if (!quiver.is_symmetric()) throw domain_error("the q-series DT definition needs a symmetric quiver");
    if (kprime.size() != static_cast<std::size_t>(quiver.num_vertices()))
        throw domain_error("kprime list has " + std::to_string(kprime.size()) + " entries for " +
                           std::to_string(quiver.num_vertices()) + " vertices");
    for (int i = 0; i < quiver.num_vertices(); ++i) {
        int k = kprime[static_cast<std::size_t>(i)];
        if (k < 1) throw domain_error("kprime entries must be >= 1");
        if (((k + quiver.loops_at(i)) & 1) == 0)
            throw domain_error("kprime[" + std::to_string(i) + "] = " + std::to_string(k) +
                               " must differ in parity from the loop count " +
                               std::to_string(quiver.loops_at(i)));
    }
}

std::vector<int> default_kprime(const Quiver& sym) {
    if (!sym.is_symmetric()) throw domain_error("default_kprime needs a symmetric quiver");
    std::vector<int> kp(static_cast<std::size_t>(sym.num_vertices()));
    for (int i = 0; i < sym.num_vertices(); ++i) kp[static_cast<std::size_t>(i)] = sym.loops_at(i) + 1;
    return kp;
}

GradedSeries hua_inner_series(const Quiver& g, const std::vector<int>& legs, DimVector box,
                              long total_cap, int threads) {
    validate_legs(g, legs);
    const int r = g.num_vertices();
    const int total_slots = std::accumulate(legs.begin(), legs.end(), 0);
    std::vector<int> slot_base(legs.size(), 0);
    for (std::size_t i = 1; i < legs.size(); ++i) slot_base[i] = slot_base[i - 1] + legs[i - 1];

    GradedSeries om(r, total_slots, std::move(box), total_cap);
    std::vector<HuaJob> jobs;
    for_each_kept(om, [&](const GradedSeries::Key& v) {
        for (auto& pi : enumerate_multipartitions(v)) jobs.push_back({v, std::move(pi)});
    });

    std::vector<HomogSymFunc> results(jobs.size());
    auto run = [&](std::size_t begin, std::size_t end) {
        TensorCache cache;
        for (std::size_t idx = begin; idx < end; ++idx)
            results[idx] = hua_tensor(jobs[idx].pi, legs, slot_base, total_slots, cache)
                               .scaled(hua_weight(g, jobs[idx].pi));
    };

    unsigned n = threads > 0 ? static_cast<unsigned>(threads) : std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    n = std::min<unsigned>(n, jobs.size() ? static_cast<unsigned>(jobs.size()) : 1u);
    if (n <= 1) {
        run(0, jobs.size());
    } else {
        std::vector<std::thread> pool;
        std::size_t chunk = (jobs.size() + n - 1) / n;
        for (unsigned t = 0; t < n; ++t) {
            std::size_t begin = t * chunk;
            std::size_t end = std::min(jobs.size(), begin + chunk);
            if (begin >= end) break;
            pool.emplace_back(run, begin, end);
        }
        for (auto& th : pool) th.join();
    }

    for (std::size_t idx = 0; idx < jobs.size(); ++idx) om.add_term(jobs[idx].v, results[idx]);
    return om;
}

MasterSeries::MasterSeries(Quiver g, std::vector<int> legs, DimVector box, long total_cap,
                           int threads)
    : g_(std::move(g)),
      legs_(std::move(legs)),
      inner_(hua_inner_series(g_, legs_, std::move(box), total_cap, threads)),
      h_(pleth_log(inner_).scaled(RationalFunctionQ(LaurentPolyQ::q() - LaurentPolyQ::one()))) {}

DimVector MasterSeries::slot_sizes(const DimVector& v) const {
    DimVector s;
    for (std::size_t i = 0; i < legs_.size(); ++i)
        s.insert(s.end(), static_cast<std::size_t>(legs_[i]), v[i]);
    return s;
}

LaurentPolyQ MasterSeries::hs(const MultiPartition& mu) const {
    if (mu.num_slots() != inner_.num_slots())
        throw domain_error("multipartition has " + std::to_string(mu.num_slots()) +
                           " slots, the series has " + std::to_string(inner_.num_slots()));
    DimVector v(legs_.size(), 0);
    int slot = 0;
    for (std::size_t i = 0; i < legs_.size(); ++i)
        for (int j = 0; j < legs_[i]; ++j, ++slot) {
            if (j == 0)
                v[i] = mu.slot(slot).size();
            else if (mu.slot(slot).size() != v[i])
                return LaurentPolyQ::zero();
        }
    if (std::all_of(v.begin(), v.end(), [](int x) { return x == 0; }))
        throw domain_error("pairing needs a nonzero multipartition");
    if (!h_.keeps(v)) throw domain_error("dimension vector outside the series truncation");
    return polynomial_check(hall_pairing(h_.coeff(v), schur(mu)));
}

LaurentPolyQ MasterSeries::kac(const MultiPartition& mu) const {
    if (!std::all_of(legs_.begin(), legs_.end(), [](int k) { return k == 1; }))
        throw domain_error("Kac polynomials need the one-slot-per-vertex series");
    if (mu.num_slots() != inner_.num_slots())
        throw domain_error("multipartition has " + std::to_string(mu.num_slots()) +
                           " slots, the series has " + std::to_string(inner_.num_slots()));
    DimVector v = mu.sizes();
    if (mu.total_size() == 0) throw domain_error("pairing needs a nonzero multipartition");
    if (!h_.keeps(v)) throw domain_error("dimension vector outside the series truncation");
    return polynomial_check(hall_pairing(h_.coeff(v), complete_h(mu)));
}

LaurentPolyQ MasterSeries::dt(const DimVector& v, const std::vector<int>& kprime) const {
    LaurentPolyQ base = hs(one_column_multipartition(v, legs_));
    if (kprime.empty()) return base;
    if (kprime.size() != legs_.size())
        throw domain_error("kprime list has " + std::to_string(kprime.size()) + " entries for " +
                           std::to_string(legs_.size()) + " vertices");
    long shift2 = 0;
    for (std::size_t i = 0; i < legs_.size(); ++i) {
        if (kprime[i] < 1) throw domain_error("kprime entries must be >= 1");
        if (((legs_[i] - kprime[i]) & 1) != 0)
            throw domain_error("kprime[" + std::to_string(i) + "] = " + std::to_string(kprime[i]) +
                               " must match the parity of the leg count " +
                               std::to_string(legs_[i]));
        shift2 += static_cast<long>(legs_[i] - kprime[i]) * v[i];
    }
    return base.shifted(shift2 / 2);
}

RationalFunctionQ MasterSeries::pair_coefficient(const DimVector& v, const HomogSymFunc& f) const {
    if (v.size() != legs_.size()) throw domain_error("dimension vector has the wrong length");
    if (!h_.keeps(v)) throw domain_error("dimension vector outside the series truncation");
    return hall_pairing(h_.coeff(v), f);
}

LaurentPolyQ hs_mu(const Quiver& g, const std::vector<int>& legs, const MultiPartition& mu,
                   int threads) {
    validate_legs(g, legs);
    const int total_slots = std::accumulate(legs.begin(), legs.end(), 0);
    if (mu.num_slots() != total_slots)
        throw domain_error("multipartition has " + std::to_string(mu.num_slots()) +
                           " slots, the quiver with legs has " + std::to_string(total_slots));
    DimVector v(legs.size(), 0);
    int slot = 0;
    for (std::size_t i = 0; i < legs.size(); ++i)
        for (int j = 0; j < legs[i]; ++j, ++slot) {
            if (j == 0)
                v[i] = mu.slot(slot).size();
            else if (mu.slot(slot).size() != v[i])
                return LaurentPolyQ::zero();
        }
    MasterSeries ms(g, legs, v, -1, threads);
    return ms.hs(mu);
}

LaurentPolyQ kac_poly(const Quiver& g, const MultiPartition& mu, int threads) {
    if (mu.num_slots() != g.num_vertices())
        throw domain_error("multipartition has " + std::to_string(mu.num_slots()) +
                           " slots for " + std::to_string(g.num_vertices()) + " vertices");
    MasterSeries ms(g, all_ones(g.num_vertices()), mu.sizes(), -1, threads);
    return ms.kac(mu);
}

LaurentPolyQ dt_via_symfunc(const Quiver& g, const std::vector<int>& legs, const DimVector& v,
                            const std::vector<int>& kprime, int threads) {
    validate_legs(g, legs);
    if (v.size() != legs.size()) throw domain_error("dimension vector has the wrong length");
    MasterSeries ms(g, legs, v, -1, threads);
    return ms.dt(v, kprime);
}

std::map<DimVector, LaurentPolyQ> dt_via_qseries(const SymmetricQuiverProblem& p, DimVector box,
                                                 long total_cap) {
    const Quiver& g = p.quiver;
    const int r = g.num_vertices();
    if (box.size() != static_cast<std::size_t>(r)) throw domain_error("box has the wrong length");

    GradedSeries inner(r, 0, std::move(box), total_cap);
    for_each_kept(inner, [&](const GradedSeries::Key& v) {
        long gamma = tits_form(g, v);
        long delta = 0;
        for (int i = 0; i < r; ++i) delta += static_cast<long>(p.kprime[static_cast<std::size_t>(i)]) * v[static_cast<std::size_t>(i)];
        if (((gamma + delta) & 1L) != 0)
            throw certification_error("q-series exponent (gamma + delta)/2 is not integral at v = " +
                                      dim_to_string(v));
        LaurentPolyQ den = LaurentPolyQ::one();
        for (int i = 0; i < r; ++i) den *= q_pochhammer(v[static_cast<std::size_t>(i)], true);
        RationalFunctionQ c =
            RationalFunctionQ(LaurentPolyQ::monomial(-(gamma + delta) / 2)) / RationalFunctionQ(den);
        if ((delta & 1L) != 0) c = -c;
        inner.add_term(v, HomogSymFunc::unit(0).scaled(c));
    });

    GradedSeries lg =
        pleth_log(inner).scaled(RationalFunctionQ(LaurentPolyQ::q() - LaurentPolyQ::one()));

    std::map<DimVector, LaurentPolyQ> out;
    const MultiPartition scalar_key{std::vector<Partition>{}};
    for_each_kept(lg, [&](const GradedSeries::Key& v) {
        if (v == lg.zero_key()) return;
        long delta = 0;
        for (int i = 0; i < r; ++i) delta += static_cast<long>(p.kprime[static_cast<std::size_t>(i)]) * v[static_cast<std::size_t>(i)];
        RationalFunctionQ c = lg.coeff(v).coeff(scalar_key);
        if ((delta & 1L) != 0) c = -c;
        out[v] = polynomial_check(c);
    });
    return out;
}

std::pair<Quiver, std::vector<int>> match_symmetric(const Quiver& sym) {
    if (!sym.is_symmetric()) throw domain_error("match_symmetric needs a symmetric quiver");
    auto a = sym.arrow_matrix();
    const int r = sym.num_vertices();
    std::vector<std::pair<int, int>> arrows;
    std::vector<int> k(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) {
        k[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] + 1;
        for (int j = i + 1; j < r; ++j)
            for (int c = 0; c < a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; ++c)
                arrows.emplace_back(i, j);
    }
    return {Quiver(r, std::move(arrows)), std::move(k)};
}

RationalFunctionQ character_sum_check(const Quiver& g, const MultiPartition& lambda, int threads) {
    if (lambda.num_slots() != g.num_vertices())
        throw domain_error("multipartition has " + std::to_string(lambda.num_slots()) +
                           " slots for " + std::to_string(g.num_vertices()) + " vertices");
    if (lambda.total_size() == 0) throw domain_error("pairing needs a nonzero multipartition");
    DimVector v = lambda.sizes();
    MasterSeries ms(g, all_ones(g.num_vertices()), v, -1, threads);
    RationalFunctionQ lhs = ms.pair_coefficient(v, p_basis(lambda));

    RationalFunctionQ rhs;
    for (const auto& mu : enumerate_multipartitions(v)) {
        Int chi(1);
        for (int i = 0; i < g.num_vertices(); ++i) {
            chi *= sn_character(mu.slot(i), lambda.slot(i));
            if (chi == 0) break;
        }
        if (chi == 0) continue;
        rhs += RationalFunctionQ(ms.hs(mu).scaled(chi));
    }
    if (!(lhs == rhs))
        throw certification_error("power-sum pairing disagrees with its character expansion at " +
                                  lambda.to_string());
    return lhs;
}

bool kostka_relation_check(const Quiver& g, const DimVector& v, int threads) {
    const int r = g.num_vertices();
    if (v.size() != static_cast<std::size_t>(r)) throw domain_error("dimension vector has the wrong length");
    if (std::all_of(v.begin(), v.end(), [](int x) { return x == 0; }))
        throw domain_error("pairing needs a nonzero dimension vector");

    MasterSeries ms(g, all_ones(r), v, -1, threads);
    std::vector<MultiPartition> mus = enumerate_multipartitions(v);
    std::vector<LaurentPolyQ> hs(mus.size()), ka(mus.size());
    for (std::size_t m = 0; m < mus.size(); ++m) {
        hs[m] = ms.hs(mus[m]);
        ka[m] = ms.kac(mus[m]);
    }

    std::vector<KostkaMatrix> km;
    std::vector<std::map<Partition, std::size_t>> index(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) {
        km.push_back(kostka_matrix(v[static_cast<std::size_t>(i)]));
        for (std::size_t t = 0; t < km.back().order.size(); ++t)
            index[static_cast<std::size_t>(i)][km.back().order[t]] = t;
    }
    auto entry = [&](bool inverse, const MultiPartition& row, const MultiPartition& col) {
        Int prod(1);
        for (int i = 0; i < r; ++i) {
            const auto& mat = inverse ? km[static_cast<std::size_t>(i)].Kinv : km[static_cast<std::size_t>(i)].K;
            prod *= mat[index[static_cast<std::size_t>(i)].at(row.slot(i))]
                       [index[static_cast<std::size_t>(i)].at(col.slot(i))];
            if (prod == 0) break;
        }
        return prod;
    };

    for (std::size_t a = 0; a < mus.size(); ++a) {
        LaurentPolyQ sum;
        for (std::size_t b = 0; b < mus.size(); ++b) {
            Int c = entry(false, mus[b], mus[a]);
            if (c != 0) sum += hs[b].scaled(c);
        }
        if (!(sum == ka[a])) return false;
    }
    for (std::size_t b = 0; b < mus.size(); ++b) {
        LaurentPolyQ sum;
        for (std::size_t a = 0; a < mus.size(); ++a) {
            Int c = entry(true, mus[a], mus[b]);
            if (c != 0) sum += ka[a].scaled(c);
        }
        if (!(sum == hs[b])) return false;
    }
    return true;
}

}  // namespace quivinv
