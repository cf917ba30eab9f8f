#include "quivinv/selfcheck.hpp"

#include "quivinv/errors.hpp"
#include "quivinv/invariants.hpp"
#include "quivinv/oracle.hpp"
#include "quivinv/tableaux.hpp"

#include <numeric>
#include <random>
#include <sstream>

namespace quivinv {

namespace {

struct Checker {
    SuiteResult r;
    explicit Checker(std::string name) { r.name = std::move(name); }
    void check(bool ok, const std::string& what) {
        ++r.checks;
        if (!ok && r.ok) {
            r.ok = false;
            r.detail = what;
        }
    }
};

Quiver point() { return Quiver(1, {}); }
Quiver jordan() { return Quiver(1, {{0, 0}}); }
Quiver loops(int m) { return Quiver(1, std::vector<Quiver::Arrow>(static_cast<std::size_t>(m), {0, 0})); }
Quiver a2() { return Quiver(2, {{0, 1}}); }
Quiver kronecker() { return Quiver(2, {{0, 1}, {0, 1}}); }

std::string dims(const DimVector& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

MultiPartition single(const Partition& la) { return MultiPartition(std::vector<Partition>{la}); }

MultiPartition rows_of(const DimVector& v) {
    std::vector<Partition> slots;
    slots.reserve(v.size());
    for (int n : v) slots.push_back(Partition::single_row(n));
    return MultiPartition(std::move(slots));
}

/* All vectors of the given length with entries in [0, total_max] and total
   in [1, total_max], in odometer order. */
std::vector<DimVector> bounded_vectors(int len, int total_max) {
    std::vector<DimVector> out;
    DimVector v(static_cast<std::size_t>(len), 0);
    for (;;) {
        long total = std::accumulate(v.begin(), v.end(), 0L);
        if (total >= 1 && total <= total_max) out.push_back(v);
        std::size_t i = 0;
        while (i < v.size() && v[i] == total_max) { v[i] = 0; ++i; }
        if (i == v.size()) break;
        ++v[i];
    }
    return out;
}

HomogSymFunc scalar(const RationalFunctionQ& c) { return HomogSymFunc::unit(0).scaled(c); }

RationalFunctionQ random_rf(std::mt19937& rng) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> pick(0, 3);
    RationalFunctionQ r = RationalFunctionQ::from_int(coeff(rng));
    if (pick(rng) == 0) {
        r = r * RationalFunctionQ(LaurentPolyQ::q()) + RationalFunctionQ::from_int(coeff(rng));
    }
    if (pick(rng) == 0) r = r / RationalFunctionQ(q_pochhammer(1));
    return r;
}

/* Random series whose coefficient at T^v is homogeneous of degree |v| in one
   alphabet, with constant term 1. */
GradedSeries random_graded_series(std::mt19937& rng, const GradedSeries::Key& box) {
    GradedSeries s(static_cast<int>(box.size()), 1, box, -1);
    GradedSeries::Key v(box.size(), 0);
    for (;;) {
        long total = std::accumulate(v.begin(), v.end(), 0L);
        if (total == 0) {
            s.add_term(v, HomogSymFunc::unit(1));
        } else {
            HomogSymFunc f(std::vector<int>{static_cast<int>(total)});
            for (const Partition& la : enumerate_partitions(static_cast<int>(total)))
                f.add_term(single(la), random_rf(rng));
            s.add_term(v, f);
        }
        std::size_t i = 0;
        while (i < v.size() && v[i] == box[i]) { v[i] = 0; ++i; }
        if (i == v.size()) break;
        ++v[i];
    }
    return s;
}

/* Spread the u-specialization of each coefficient over an extra grading
   variable, turning a 1-slot series into a scalar series in one more T. */
GradedSeries spread_specialization(const GradedSeries& f, int u_box) {
    GradedSeries::Key box = f.box();
    box.push_back(u_box);
    long cap = f.total_cap() < 0 ? -1 : f.total_cap() + u_box;
    GradedSeries r(f.num_vars() + 1, 0, box, cap);
    for (const auto& [v, c] : f.terms()) {
        for (const auto& [uexp, rf] : u_specialize(c)) {
            GradedSeries::Key w = v;
            w.push_back(static_cast<int>(uexp));
            r.add_term(w, scalar(rf));
        }
    }
    return r;
}

/* Keep only the top-degree part of each coefficient, as a scalar series. */
GradedSeries top_degree_series(const GradedSeries& f) {
    GradedSeries r(f.num_vars(), 0, f.box(), f.total_cap());
    for (const auto& [v, c] : f.terms()) r.add_term(v, scalar(top_degree(c)));
    return r;
}

} // namespace

SuiteResult check_symfunc_basics() {
    Checker c("symmetric_function_identities");
    for (int n = 1; n <= 5; ++n) {
        const auto parts = enumerate_partitions(n);
        for (const Partition& a : parts) {
            for (const Partition& b : parts) {
                RationalFunctionQ pp = hall_pairing(p_basis(single(a)), p_basis(single(b)));
                RationalFunctionQ pw = a == b ? RationalFunctionQ::from_rat(Rat(z_order(a)))
                                              : RationalFunctionQ();
                c.check(pp == pw, "power-sum pairing at " + a.to_string() + "," + b.to_string());

                RationalFunctionQ ss = hall_pairing(schur(single(a)), schur(single(b)));
                RationalFunctionQ sw = RationalFunctionQ::from_int(a == b ? 1 : 0);
                c.check(ss == sw, "Schur orthonormality at " + a.to_string() + "," + b.to_string());
            }
        }
        const KostkaMatrix km = kostka_matrix(n);
        for (std::size_t i = 0; i < km.order.size(); ++i)
            for (std::size_t j = 0; j < km.order.size(); ++j) {
                RationalFunctionQ sh = hall_pairing(schur(single(km.order[i])),
                                                    complete_h(single(km.order[j])));
                c.check(sh == RationalFunctionQ::from_rat(Rat(km.K[i][j])),
                        "Kostka pairing at " + km.order[i].to_string() + "," +
                            km.order[j].to_string());
            }
        for (const Partition& mu : parts) {
            for (const Partition& nu : parts) {
                Rat sum = 0;
                for (const Partition& la : parts)
                    sum += Rat(sn_character(mu, la) * sn_character(nu, la)) / Rat(z_order(la));
                c.check(sum == (mu == nu ? 1 : 0),
                        "character orthogonality at " + mu.to_string() + "," + nu.to_string());
            }
        }
    }
    return c.r;
}

SuiteResult check_specialization_identities(int hl_max, int hook_max) {
    Checker c("u_specialization_identities");
    for (int n = 0; n <= hl_max; ++n) {
        for (const Partition& la : enumerate_partitions(n)) {
            HomogSymFunc f = hall_littlewood_transformed(la, 0, 1);

            USeries got = u_specialize(f);
            USeries expect{{0, RationalFunctionQ::from_int(1)}};
            for (int i = 1; i <= la.length(); ++i) {
                USeries factor{{0, RationalFunctionQ::from_int(1)},
                               {1, RationalFunctionQ(-LaurentPolyQ::monomial(i - 1))}};
                expect = useries_mul(expect, factor);
            }
            c.check(got == expect, "H~[1-u] factorization at " + la.to_string());

            RationalFunctionQ td = top_degree(f);
            RationalFunctionQ via_pairing =
                hall_pairing(f, schur(single(Partition::single_column(n)))) *
                RationalFunctionQ::from_int(n % 2 == 0 ? 1 : -1);
            c.check(td == via_pairing, "top-degree routes at " + la.to_string());
            if (la == Partition::single_column(n)) {
                LaurentPolyQ want = LaurentPolyQ::monomial(static_cast<long>(n) * (n - 1) / 2,
                                                           Int(n % 2 == 0 ? 1 : -1));
                c.check(td == RationalFunctionQ(want), "top degree of H~ at " + la.to_string());
            } else {
                c.check(td.is_zero(), "top degree of H~ vanishes at " + la.to_string());
            }
        }
    }
    for (int n = 1; n <= hook_max; ++n) {
        for (const Partition& la : enumerate_partitions(n)) {
            USeries got = u_specialize(schur(single(la)));
            bool is_hook = la.length() == 1 || la.part(1) <= 1;
            if (!is_hook) {
                c.check(got.empty(), "hook vanishing of s[1-u] at " + la.to_string());
                continue;
            }
            int r = la.part(0);
            RationalFunctionQ sign = RationalFunctionQ::from_int((n - r) % 2 == 0 ? 1 : -1);
            USeries expect{{n - r, sign}, {n - r + 1, -sign}};
            c.check(got == expect, "hook value of s[1-u] at " + la.to_string());
        }
    }
    return c.r;
}

SuiteResult check_log_commutation(std::uint64_t seed, int trials) {
    Checker c("log_commutation");
    std::mt19937 rng(static_cast<std::uint32_t>(seed));
    for (int t = 0; t < trials; ++t) {
        GradedSeries::Key box = t % 2 ? GradedSeries::Key{3} : GradedSeries::Key{2, 2};
        int u_box = 0;
        for (int b : box) u_box += b;
        GradedSeries om = random_graded_series(rng, box);
        std::string label = " on trial " + std::to_string(t);

        GradedSeries spread = spread_specialization(om, u_box);
        c.check(spread_specialization(series_adams(om, 2), u_box) == series_adams(spread, 2),
                "Adams/specialization commutation" + label);
        c.check(pleth_log(spread) == spread_specialization(pleth_log(om), u_box),
                "Log/specialization commutation" + label);
        c.check(pleth_log(top_degree_series(om)) == top_degree_series(pleth_log(om)),
                "Log/top-degree commutation" + label);
    }
    return c.r;
}

SuiteResult check_pentagon(int box) {
    Checker c("pentagon_series");
    GradedSeries om(2, 0, {box, box});
    for (int n1 = 0; n1 <= box; ++n1)
        for (int n2 = 0; n2 <= box; ++n2) {
            RationalFunctionQ coeff =
                RationalFunctionQ(LaurentPolyQ::monomial(static_cast<long>(n1) * n2)) /
                (RationalFunctionQ(q_pochhammer(n1)) * RationalFunctionQ(q_pochhammer(n2)));
            om.add_term({n1, n2}, scalar(coeff));
        }
    GradedSeries lg = pleth_log(om).scaled(RationalFunctionQ(LaurentPolyQ::q()) -
                                           RationalFunctionQ::from_int(1));
    GradedSeries expected(2, 0, {box, box});
    expected.add_term({1, 0}, scalar(RationalFunctionQ::from_int(-1)));
    expected.add_term({0, 1}, scalar(RationalFunctionQ::from_int(-1)));
    expected.add_term({1, 1}, scalar(RationalFunctionQ::from_int(1)));
    c.check(lg == expected, "three-term logarithm of the pentagon series");

    auto dt = dt_via_qseries(SymmetricQuiverProblem(a2().doubled(), {1, 1}), {box, box});
    c.check(dt.size() == static_cast<std::size_t>((box + 1) * (box + 1) - 1),
            "doubled A2 DT table size");
    for (const auto& [v, poly] : dt) {
        bool unit = (v == DimVector{1, 0}) || (v == DimVector{0, 1}) || (v == DimVector{1, 1});
        c.check(poly == (unit ? LaurentPolyQ::one() : LaurentPolyQ::zero()),
                "doubled A2 DT at v=" + dims(v));
    }
    return c.r;
}

SuiteResult check_loop_table(int m, int nmax) {
    static const char* m2[] = {
        "[(0,1)]",
        "[(0,1)]",
        "[(1,1)]",
        "[(3,1),(1,1)]",
        "[(6,1),(4,1),(3,1),(2,1),(1,1)]",
        "[(10,1),(8,1),(7,1),(6,2),(5,1),(4,3),(3,1),(2,2),(1,1)]",
    };
    static const char* m3[] = {
        "[(0,1)]",
        "[(1,1)]",
        "[(4,1),(2,1),(1,1)]",
        "[(9,1),(7,1),(6,1),(5,2),(4,1),(3,2),(2,1),(1,1)]",
        "[(16,1),(14,1),(13,1),(12,2),(11,2),(10,3),(9,3),(8,4),(7,4),(6,5),(5,4),(4,4),(3,3),"
        "(2,2),(1,1)]",
    };
    Checker c("loop_quiver_dt_table_m" + std::to_string(m));
    const char** table = nullptr;
    int frozen = 0;
    if (m == 2) {
        table = m2;
        frozen = 6;
    } else if (m == 3) {
        table = m3;
        frozen = 5;
    } else {
        throw domain_error("check_loop_table: frozen tables exist only for m = 2, 3");
    }
    if (nmax < 1 || nmax > frozen)
        throw domain_error("check_loop_table: nmax outside the frozen range");

    SymmetricQuiverProblem p(loops(m), {m + 1});
    auto dt = dt_via_qseries(p, {nmax});
    for (int n = 1; n <= nmax; ++n)
        c.check(dt.at({n}) == LaurentPolyQ::parse_machine(table[n - 1]),
                "DT_" + std::to_string(n) + " for the " + std::to_string(m) + "-loop vertex");
    return c.r;
}

SuiteResult check_two_route(int threads) {
    Checker c("two_route_dt");
    struct Entry {
        std::string label;
        Quiver sym;
        DimVector box;
        long cap;
    };
    const std::vector<Entry> corpus = {
        {"2-loop vertex", loops(2), {6}, -1},
        {"3-loop vertex", loops(3), {5}, -1},
        {"doubled A2", a2().doubled(), {5, 5}, 5},
        {"doubled Kronecker", kronecker().doubled(), {5, 5}, 5},
    };
    for (const Entry& e : corpus) {
        std::vector<int> kp = default_kprime(e.sym);
        auto [g, legs] = match_symmetric(e.sym);
        MasterSeries ms(g, legs, e.box, e.cap, threads);
        auto qs = dt_via_qseries(SymmetricQuiverProblem(e.sym, kp), e.box, e.cap);
        for (const auto& [v, poly] : qs)
            c.check(ms.dt(v, kp) == poly, "two-route DT for " + e.label + " at v=" + dims(v));
    }

    auto shifted = dt_via_qseries(SymmetricQuiverProblem(loops(2), {1}), {6});
    MasterSeries ms(point(), {3}, {6}, -1, threads);
    for (int n = 1; n <= 6; ++n)
        c.check(ms.dt({n}, {1}) == shifted.at({n}),
                "weight-shifted two-route DT at n=" + std::to_string(n));
    return c.r;
}

SuiteResult check_oracle_corpus(int threads) {
    Checker c("finite_field_oracle");
    struct Entry {
        Quiver g;
        DimVector v;
        std::vector<int> fields;
    };
    const std::vector<Entry> corpus = {
        {jordan(), {1}, {2}},
        {jordan(), {2}, {2}},
        {jordan(), {3}, {2}},
        {kronecker(), {1, 1}, {2}},
        {kronecker(), {1, 2}, {2}},
        {kronecker(), {2, 1}, {2}},
        {kronecker(), {2, 2}, {2}},
        {a2(), {1, 1}, {2, 3}},
        {a2(), {1, 2}, {2, 3}},
        {a2(), {2, 1}, {2, 3}},
        {a2(), {2, 2}, {2, 3}},
        {loops(2), {1}, {2, 3}},
    };
    long triples = 0;
    for (const Entry& e : corpus) {
        LaurentPolyQ poly = kac_poly(e.g, rows_of(e.v), threads);
        for (int q : e.fields) {
            ++triples;
            Int count = kac_count(q, e.g, e.v);
            c.check(count == poly.eval_int(Int(q)),
                    "oracle count at q=" + std::to_string(q) + ", v=" + dims(e.v));
        }
    }
    c.check(triples >= 10, "oracle corpus has at least 10 triples");
    return c.r;
}

SuiteResult check_root_properties(int total_max, int threads) {
    Checker c("root_properties");
    struct Entry {
        std::string label;
        Quiver g;
        std::vector<int> legs;
    };
    const std::vector<Entry> corpus = {
        {"A2", a2(), {1, 1}},
        {"Jordan", jordan(), {1}},
        {"Kronecker", kronecker(), {1, 1}},
        {"point with three legs", point(), {3}},
        {"2-loop vertex with an edge", Quiver(2, {{0, 0}, {0, 0}, {0, 1}}), {1, 1}},
        {"3-vertex star", Quiver(3, {{1, 0}, {2, 0}}), {1, 1, 1}},
    };
    for (const Entry& e : corpus) {
        int r = e.g.num_vertices();
        int num_slots = std::accumulate(e.legs.begin(), e.legs.end(), 0);
        MasterSeries ms(e.g, e.legs, DimVector(static_cast<std::size_t>(r), total_max),
                        total_max, threads);
        for (const DimVector& sizes : bounded_vectors(num_slots, total_max)) {
            bool equal_per_vertex = true;
            int slot = 0;
            for (int i = 0; i < r; ++i) {
                for (int j = 1; j < e.legs[static_cast<std::size_t>(i)]; ++j)
                    if (sizes[static_cast<std::size_t>(slot + j)] !=
                        sizes[static_cast<std::size_t>(slot)])
                        equal_per_vertex = false;
                slot += e.legs[static_cast<std::size_t>(i)];
            }
            for (const MultiPartition& mu : enumerate_multipartitions(sizes)) {
                std::string label = " for " + e.label + " at mu=" + mu.to_string();
                LaurentPolyQ h = ms.hs(mu);
                if (!equal_per_vertex) {
                    c.check(h.is_zero(), "vanishing on unequal slot sizes" + label);
                    continue;
                }
                bool nonneg = true;
                for (const auto& [e2, co] : h.coeffs())
                    if (co < 0) nonneg = false;
                c.check(nonneg, "nonnegative coefficients" + label);
                c.check(h.is_zero() || h.low_exp() >= 0, "polynomial exponents" + label);

                auto [gm, vm] = attach_legs(e.g, mu, e.legs);
                RootClass cls = classify_root(gm, vm);
                c.check(!h.is_zero() == (cls != RootClass::NotRoot), "root dichotomy" + label);
                if (!h.is_zero()) {
                    c.check(h.leading() == 1, "monic" + label);
                    c.check(h.high_exp() == d_mu(e.g, mu, e.legs), "degree d_mu" + label);
                }
                c.check((h == LaurentPolyQ::one()) == (cls == RootClass::RealRoot),
                        "real-root value" + label);
            }
        }
    }
    return c.r;
}

SuiteResult check_kostka_suite(int total_max, int threads) {
    Checker c("kostka_relations");
    struct Entry {
        std::string label;
        Quiver g;
    };
    const std::vector<Entry> corpus = {
        {"Jordan", jordan()},
        {"A2", a2()},
        {"Kronecker", kronecker()},
    };
    for (const Entry& e : corpus)
        for (const DimVector& v : bounded_vectors(e.g.num_vertices(), total_max))
            c.check(kostka_relation_check(e.g, v, threads),
                    "Kostka relations for " + e.label + " at v=" + dims(v));
    return c.r;
}

} // namespace quivinv
