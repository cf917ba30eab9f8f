#include <doctest.h>

#include "quivinv/errors.hpp"
#include "quivinv/series.hpp"

#include <random>

using namespace quivinv;

namespace {

Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }

HomogSymFunc scalar(const RationalFunctionQ& c) { return HomogSymFunc::unit(0).scaled(c); }

RationalFunctionQ rf_rat(long num, long den) { return RationalFunctionQ::from_rat(Rat(num, den)); }

GradedSeries one_series(int num_vars, int num_slots, GradedSeries::Key box, long cap = -1) {
    GradedSeries s(num_vars, num_slots, std::move(box), cap);
    s.add_term(s.zero_key(), HomogSymFunc::unit(num_slots));
    return s;
}

RationalFunctionQ random_rf(std::mt19937& rng) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> pick(0, 3);
    RationalFunctionQ r = RationalFunctionQ::from_int(coeff(rng));
    if (pick(rng) == 0) {
        r = r * RationalFunctionQ(LaurentPolyQ::q()) +
            RationalFunctionQ::from_int(coeff(rng));
    }
    if (pick(rng) == 0)
        r = r / RationalFunctionQ(q_pochhammer(1));
    return r;
}

/* Random scalar-coefficient series with constant term c0. */
GradedSeries random_scalar_series(std::mt19937& rng, const GradedSeries::Key& box, long cap,
                                  const RationalFunctionQ& c0) {
    GradedSeries s(static_cast<int>(box.size()), 0, box, cap);
    GradedSeries::Key v(box.size(), 0);
    for (;;) {
        bool kept = true;
        long total = 0;
        for (std::size_t i = 0; i < box.size(); ++i) {
            if (v[i] > box[i]) { kept = false; break; }
            total += v[i];
        }
        if (kept && (cap < 0 || total <= cap)) {
            bool origin = total == 0;
            s.add_term(v, scalar(origin ? c0 : random_rf(rng)));
        }
        std::size_t i = 0;
        while (i < v.size() && v[i] == box[i]) { v[i] = 0; ++i; }
        if (i == v.size()) break;
        ++v[i];
    }
    return s;
}

/* Random series whose coefficient at T^v is homogeneous of degree |v| in one
   alphabet, with constant term 1. */
GradedSeries random_graded_series(std::mt19937& rng, const GradedSeries::Key& box, long cap) {
    GradedSeries s(static_cast<int>(box.size()), 1, box, cap);
    GradedSeries::Key v(box.size(), 0);
    for (;;) {
        long total = 0;
        bool kept = true;
        for (std::size_t i = 0; i < box.size(); ++i) {
            if (v[i] > box[i]) { kept = false; break; }
            total += v[i];
        }
        if (kept && (cap < 0 || total <= cap)) {
            if (total == 0) {
                s.add_term(v, HomogSymFunc::unit(1));
            } else {
                HomogSymFunc f(std::vector<int>{static_cast<int>(total)});
                for (const Partition& la : enumerate_partitions(static_cast<int>(total)))
                    f.add_term(MultiPartition({la}), random_rf(rng));
                s.add_term(v, f);
            }
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

TEST_CASE("mobius function") {
    const int expected[] = {1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0};
    for (long d = 1; d <= 12; ++d) CHECK(mobius(d) == expected[d - 1]);
    CHECK(mobius(30) == -1);
    CHECK(mobius(36) == 0);
    CHECK_THROWS_AS(mobius(0), domain_error);
}

TEST_CASE("series arithmetic and truncation") {
    GradedSeries a(2, 0, {2, 2});
    a.add_term({1, 0}, scalar(RationalFunctionQ::from_int(3)));
    a.add_term({0, 1}, scalar(RationalFunctionQ::from_int(2)));
    a.add_term({3, 0}, scalar(RationalFunctionQ::from_int(7)));
    CHECK(a.terms().size() == 2);
    CHECK(a.coeff({3, 0}).is_zero());

    GradedSeries prod = series_mul(a, a);
    CHECK(prod.coeff({2, 0}) == scalar(RationalFunctionQ::from_int(9)));
    CHECK(prod.coeff({1, 1}) == scalar(RationalFunctionQ::from_int(12)));
    CHECK(prod.coeff({0, 2}) == scalar(RationalFunctionQ::from_int(4)));

    GradedSeries capped(2, 0, {2, 2}, 1);
    capped.add_term({1, 1}, scalar(RationalFunctionQ::from_int(5)));
    CHECK(capped.is_zero());

    CHECK_THROWS_AS(series_mul(a, capped), domain_error);
    CHECK_THROWS_AS(a.coeff({-1, 0}), domain_error);

    GradedSeries b = a.scaled(rf_rat(1, 2));
    CHECK(b.coeff({1, 0}) == scalar(rf_rat(3, 2)));
    CHECK((a - a).is_zero());
}

TEST_CASE("adams operation on series") {
    GradedSeries a(1, 1, {3});
    HomogSymFunc f(std::vector<int>{2});
    f.add_term(MultiPartition({P({2})}), RationalFunctionQ(LaurentPolyQ::q()));
    a.add_term({2}, f);
    a.add_term({1}, p_basis(MultiPartition({P({1})})));

    GradedSeries a2 = series_adams(a, 2);
    CHECK(a2.coeff({4}).is_zero());
    HomogSymFunc g = a2.coeff({2});
    CHECK(g.degree() == std::vector<int>{2});
    CHECK(g.coeff(MultiPartition({P({2})})) == RationalFunctionQ::from_int(1));

    CHECK_THROWS_AS(series_adams(a, 0), domain_error);
}

TEST_CASE("plethystic exponential of a single variable") {
    GradedSeries v(1, 0, {6});
    v.add_term({1}, scalar(RationalFunctionQ::from_int(1)));
    GradedSeries e = pleth_exp(v);
    for (int n = 0; n <= 6; ++n)
        CHECK(e.coeff({n}) == scalar(RationalFunctionQ::from_int(1)));

    GradedSeries w(1, 0, {6});
    w.add_term({1}, scalar(RationalFunctionQ::from_int(-1)));
    GradedSeries f = pleth_exp(w);
    CHECK(f.coeff({0}) == scalar(RationalFunctionQ::from_int(1)));
    CHECK(f.coeff({1}) == scalar(RationalFunctionQ::from_int(-1)));
    for (int n = 2; n <= 6; ++n) CHECK(f.coeff({n}).is_zero());

    GradedSeries lg = pleth_log(e);
    CHECK(lg.terms().size() == 1);
    CHECK(lg.coeff({1}) == scalar(RationalFunctionQ::from_int(1)));
}

TEST_CASE("exponential of p_1 T generates complete homogeneous functions") {
    GradedSeries v(1, 1, {5});
    v.add_term({1}, p_basis(MultiPartition({P({1})})));
    GradedSeries e = pleth_exp(v);
    for (int n = 1; n <= 5; ++n)
        CHECK(e.coeff({n}) == complete_h(MultiPartition({P({n})})));

    GradedSeries w = v.scaled(RationalFunctionQ::from_int(-1));
    GradedSeries f = pleth_exp(w);
    for (int n = 1; n <= 5; ++n) {
        HomogSymFunc en = schur(MultiPartition({Partition::single_column(n)}));
        if (n % 2) en = -en;
        CHECK(f.coeff({n}) == en);
    }
}

TEST_CASE("exponential turns sums into products") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 6; ++trial) {
        GradedSeries::Key box = trial % 2 ? GradedSeries::Key{3} : GradedSeries::Key{2, 2};
        GradedSeries v = random_scalar_series(rng, box, -1, RationalFunctionQ());
        GradedSeries w = random_scalar_series(rng, box, -1, RationalFunctionQ());
        CHECK(pleth_exp(v + w) == series_mul(pleth_exp(v), pleth_exp(w)));
    }
}

TEST_CASE("log and exp invert each other on random scalar series") {
    std::mt19937 rng(987654321);
    for (int trial = 0; trial < 10; ++trial) {
        GradedSeries::Key box;
        long cap = -1;
        switch (trial % 3) {
            case 0: box = {4}; break;
            case 1: box = {2, 2}; break;
            default: box = {2, 2, 2}; cap = 4; break;
        }
        GradedSeries v = random_scalar_series(rng, box, cap, RationalFunctionQ());
        CHECK(pleth_log(pleth_exp(v)) == v);
        GradedSeries om = random_scalar_series(rng, box, cap, RationalFunctionQ::from_int(1));
        CHECK(pleth_exp(pleth_log(om)) == om);
    }
}

TEST_CASE("log and exp invert each other with symmetric-function coefficients") {
    std::mt19937 rng(13579);
    for (int trial = 0; trial < 4; ++trial) {
        GradedSeries::Key box = trial % 2 ? GradedSeries::Key{3} : GradedSeries::Key{2, 1};
        GradedSeries om = random_graded_series(rng, box, -1);
        GradedSeries v = pleth_log(om);
        CHECK(pleth_exp(v) == om);
    }
}

TEST_CASE("log requires constant term 1, exp requires constant term 0") {
    GradedSeries s(1, 0, {3});
    s.add_term({1}, scalar(RationalFunctionQ::from_int(1)));
    CHECK_THROWS_AS(pleth_log(s), domain_error);
    GradedSeries t = one_series(1, 0, {3});
    CHECK_THROWS_AS(pleth_exp(t), domain_error);
}

TEST_CASE("two-variable quantum pentagon series has a three-term logarithm") {
    GradedSeries om(2, 0, {4, 4});
    for (int n1 = 0; n1 <= 4; ++n1) {
        for (int n2 = 0; n2 <= 4; ++n2) {
            RationalFunctionQ c = RationalFunctionQ(LaurentPolyQ::monomial(n1 * n2)) /
                                  (RationalFunctionQ(q_pochhammer(n1)) *
                                   RationalFunctionQ(q_pochhammer(n2)));
            om.add_term({n1, n2}, scalar(c));
        }
    }
    GradedSeries lg = pleth_log(om).scaled(RationalFunctionQ(LaurentPolyQ::q()) -
                                           RationalFunctionQ::from_int(1));
    GradedSeries expected(2, 0, {4, 4});
    expected.add_term({1, 0}, scalar(RationalFunctionQ::from_int(-1)));
    expected.add_term({0, 1}, scalar(RationalFunctionQ::from_int(-1)));
    expected.add_term({1, 1}, scalar(RationalFunctionQ::from_int(1)));
    CHECK(lg == expected);
}

TEST_CASE("specialization p_r -> 1 - u^r commutes with the plethystic log") {
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 4; ++trial) {
        GradedSeries::Key box = trial % 2 ? GradedSeries::Key{3} : GradedSeries::Key{2, 2};
        int u_box = 0;
        for (int b : box) u_box += b;
        GradedSeries om = random_graded_series(rng, box, -1);

        GradedSeries spread = spread_specialization(om, u_box);
        CHECK(spread_specialization(series_adams(om, 2), u_box) == series_adams(spread, 2));
        CHECK(pleth_log(spread) == spread_specialization(pleth_log(om), u_box));
    }
}

TEST_CASE("top-degree extraction commutes with the plethystic log") {
    std::mt19937 rng(31415);
    for (int trial = 0; trial < 4; ++trial) {
        GradedSeries::Key box = trial % 2 ? GradedSeries::Key{3} : GradedSeries::Key{2, 2};
        GradedSeries om = random_graded_series(rng, box, -1);
        CHECK(pleth_log(top_degree_series(om)) == top_degree_series(pleth_log(om)));
    }
}
