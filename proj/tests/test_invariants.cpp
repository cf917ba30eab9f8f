#include "doctest.h"

#include "quivinv/invariants.hpp"
#include "quivinv/errors.hpp"

using namespace quivinv;

namespace {

Quiver point() { return Quiver(1, {}); }
Quiver jordan() { return Quiver(1, {{0, 0}}); }
Quiver loops(int m) { return Quiver(1, std::vector<Quiver::Arrow>(static_cast<std::size_t>(m), {0, 0})); }
Quiver a2() { return Quiver(2, {{0, 1}}); }
Quiver kronecker() { return Quiver(2, {{0, 1}, {0, 1}}); }

LaurentPolyQ P(std::initializer_list<std::pair<long, long>> terms) {
    LaurentPolyQ f;
    for (const auto& [e, c] : terms) f.add_term(e, Int(c));
    return f;
}

RationalFunctionQ RF(const LaurentPolyQ& f) { return RationalFunctionQ(f); }

MultiPartition mp(const std::string& s) { return MultiPartition::parse(s); }

const LaurentPolyQ qm1 = LaurentPolyQ::q() - LaurentPolyQ::one();

}  // namespace

TEST_CASE("inner series anchors") {
    GradedSeries om = hua_inner_series(point(), {1}, {1});
    CHECK(om.coeff({0}) == HomogSymFunc::unit(1));
    CHECK(om.coeff({1}) == p_basis(mp("[1]")).scaled(RF(LaurentPolyQ::one()) / RF(qm1)));

    GradedSeries omj = hua_inner_series(jordan(), {1}, {1});
    CHECK(omj.coeff({1}) == p_basis(mp("[1]")).scaled(RF(LaurentPolyQ::q()) / RF(qm1)));

    MasterSeries ms(point(), {1}, {1});
    CHECK(ms.series().coeff({1}) == p_basis(mp("[1]")));

    MasterSeries msa(a2(), {1, 1}, {1, 1});
    CHECK(msa.series().coeff({1, 1}) == p_basis(mp("[1];[1]")));

    CHECK_THROWS_AS(hua_inner_series(point(), {1, 1}, {1}), domain_error);
    CHECK_THROWS_AS(hua_inner_series(point(), {0}, {1}), domain_error);
}

TEST_CASE("symmetric quiver problem validation") {
    CHECK_NOTHROW(SymmetricQuiverProblem(loops(2), {3}));
    CHECK_NOTHROW(SymmetricQuiverProblem(loops(2), {1}));
    CHECK_NOTHROW(SymmetricQuiverProblem(loops(2), {5}));
    CHECK_THROWS_AS(SymmetricQuiverProblem(loops(2), {2}), domain_error);
    CHECK_THROWS_AS(SymmetricQuiverProblem(loops(2), {0}), domain_error);
    CHECK_THROWS_AS(SymmetricQuiverProblem(loops(2), {3, 3}), domain_error);
    CHECK_THROWS_AS(SymmetricQuiverProblem(a2(), {1, 1}), domain_error);

    CHECK(default_kprime(loops(2)) == std::vector<int>{3});
    CHECK(default_kprime(jordan()) == std::vector<int>{2});
    CHECK(default_kprime(a2().doubled()) == std::vector<int>{1, 1});
    CHECK_THROWS_AS(default_kprime(a2()), domain_error);
}

TEST_CASE("match_symmetric frozen pairs") {
    auto [g1, k1] = match_symmetric(loops(2));
    CHECK(g1 == point());
    CHECK(k1 == std::vector<int>{3});

    auto [g2, k2] = match_symmetric(loops(3));
    CHECK(g2 == point());
    CHECK(k2 == std::vector<int>{4});

    auto [g3, k3] = match_symmetric(a2().doubled());
    CHECK(g3 == a2());
    CHECK(k3 == std::vector<int>{1, 1});

    auto [g4, k4] = match_symmetric(kronecker().doubled());
    CHECK(g4 == kronecker());
    CHECK(k4 == std::vector<int>{1, 1});

    auto [g5, k5] = match_symmetric(jordan().doubled());
    CHECK(g5 == point());
    CHECK(k5 == std::vector<int>{3});

    CHECK_THROWS_AS(match_symmetric(a2()), domain_error);

    SUBCASE("matched pair satisfies the arrow and weight conditions") {
        for (const auto& sym : {loops(2), loops(3), a2().doubled(), kronecker().doubled()}) {
            auto [g, k] = match_symmetric(sym);
            auto a = g.arrow_matrix();
            auto ap = sym.arrow_matrix();
            for (int i = 0; i < g.num_vertices(); ++i) {
                CHECK(k[static_cast<std::size_t>(i)] - 2 + 2 * a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] ==
                      -1 + ap[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)]);
                for (int j = 0; j < g.num_vertices(); ++j) {
                    if (i == j) continue;
                    CHECK(ap[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +
                              ap[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] ==
                          2 * (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +
                               a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]));
                }
            }
        }
    }
}

TEST_CASE("Kac polynomial anchors") {
    CHECK(kac_poly(point(), mp("[1]")) == LaurentPolyQ::one());
    CHECK(kac_poly(jordan(), mp("[1]")) == LaurentPolyQ::q());
    CHECK(kac_poly(jordan(), mp("[2]")) == LaurentPolyQ::q());
    CHECK(kac_poly(jordan(), mp("[3]")) == LaurentPolyQ::q());
    CHECK(kac_poly(jordan(), mp("[1,1]")) == P({{2, 1}, {1, 1}}));
    CHECK(kac_poly(kronecker(), mp("[1];[1]")) == P({{1, 1}, {0, 1}}));
    CHECK(kac_poly(a2(), mp("[1];[1]")) == LaurentPolyQ::one());
    CHECK(kac_poly(a2(), mp("[2];[1]")) == LaurentPolyQ::zero());
    CHECK(kac_poly(a2(), mp("[2];[2]")) == LaurentPolyQ::zero());
    CHECK_THROWS_AS(kac_poly(a2(), mp("[1]")), domain_error);
    CHECK_THROWS_AS(kac_poly(point(), mp("[]")), domain_error);
}

TEST_CASE("Hall pairing extraction anchors") {
    CHECK(hs_mu(a2(), {1, 1}, mp("[1];[1]")) == LaurentPolyQ::one());
    CHECK(hs_mu(jordan(), {1}, mp("[1]")) == LaurentPolyQ::q());
    CHECK(hs_mu(jordan(), {1}, mp("[2]")) == LaurentPolyQ::q());
    CHECK(hs_mu(jordan(), {1}, mp("[1,1]")) == P({{2, 1}}));

    SUBCASE("slot sizes must agree at each vertex") {
        CHECK(hs_mu(point(), {2}, mp("[1];[2]")) == LaurentPolyQ::zero());
        MasterSeries ms(point(), {2}, {2});
        CHECK(ms.hs(mp("[1];[1,1]")) == LaurentPolyQ::zero());
        CHECK_THROWS_AS(ms.hs(mp("[];[]")), domain_error);
        CHECK_THROWS_AS(ms.hs(mp("[1]")), domain_error);
        CHECK_THROWS_AS(ms.hs(mp("[3];[3]")), domain_error);
    }

    SUBCASE("degree and leading coefficient match the expected dimension") {
        for (const auto& mu : {mp("[1]"), mp("[2]"), mp("[1,1]")}) {
            LaurentPolyQ f = hs_mu(jordan(), {1}, mu);
            CHECK(f.high_exp() == d_mu(jordan(), mu));
            CHECK(f.leading() == 1);
        }
    }
}

TEST_CASE("q-series DT tables for loop quivers") {
    SUBCASE("no loops") {
        SymmetricQuiverProblem p(point(), {1});
        auto dt = dt_via_qseries(p, {4});
        CHECK(dt.at({1}) == LaurentPolyQ::one());
        CHECK(dt.at({2}) == LaurentPolyQ::zero());
        CHECK(dt.at({3}) == LaurentPolyQ::zero());
        CHECK(dt.at({4}) == LaurentPolyQ::zero());
    }
    SUBCASE("one loop") {
        SymmetricQuiverProblem p(jordan(), {2});
        auto dt = dt_via_qseries(p, {4});
        CHECK(dt.at({1}) == LaurentPolyQ::one());
        CHECK(dt.at({2}) == LaurentPolyQ::zero());
        CHECK(dt.at({3}) == LaurentPolyQ::zero());
        CHECK(dt.at({4}) == LaurentPolyQ::zero());
    }
    SUBCASE("two loops") {
        SymmetricQuiverProblem p(loops(2), {3});
        auto dt = dt_via_qseries(p, {6});
        CHECK(dt.at({1}) == LaurentPolyQ::one());
        CHECK(dt.at({2}) == LaurentPolyQ::one());
        CHECK(dt.at({3}) == LaurentPolyQ::q());
        CHECK(dt.at({4}) == P({{3, 1}, {1, 1}}));
        CHECK(dt.at({5}) == P({{6, 1}, {4, 1}, {3, 1}, {2, 1}, {1, 1}}));
        CHECK(dt.at({6}) ==
              P({{10, 1}, {8, 1}, {7, 1}, {6, 2}, {5, 1}, {4, 3}, {3, 1}, {2, 2}, {1, 1}}));
    }
    SUBCASE("three loops") {
        SymmetricQuiverProblem p(loops(3), {4});
        auto dt = dt_via_qseries(p, {5});
        CHECK(dt.at({1}) == LaurentPolyQ::one());
        CHECK(dt.at({2}) == LaurentPolyQ::q());
        CHECK(dt.at({3}) == P({{4, 1}, {2, 1}, {1, 1}}));
        CHECK(dt.at({4}) == P({{9, 1}, {7, 1}, {6, 1}, {5, 2}, {4, 1}, {3, 2}, {2, 1}, {1, 1}}));
        CHECK(dt.at({5}) == P({{16, 1}, {14, 1}, {13, 1}, {12, 2}, {11, 2}, {10, 3}, {9, 3},
                               {8, 4}, {7, 4}, {6, 5}, {5, 4}, {4, 4}, {3, 3}, {2, 2}, {1, 1}}));
    }
}

TEST_CASE("q-series DT of the doubled one-arrow quiver is the pentagon identity") {
    SymmetricQuiverProblem p(a2().doubled(), {1, 1});
    auto dt = dt_via_qseries(p, {4, 4});
    for (const auto& [v, f] : dt) {
        if (v == DimVector{1, 0} || v == DimVector{0, 1} || v == DimVector{1, 1})
            CHECK(f == LaurentPolyQ::one());
        else
            CHECK(f == LaurentPolyQ::zero());
    }
    CHECK(dt.size() == 24);
}

TEST_CASE("symmetric-function and q-series DT routes agree") {
    SUBCASE("two loops against the three-leg point") {
        SymmetricQuiverProblem p(loops(2), {3});
        auto table = dt_via_qseries(p, {4});
        MasterSeries ms(point(), {3}, {4});
        for (int n = 1; n <= 4; ++n) CHECK(ms.dt({n}) == table.at({n}));
    }
    SUBCASE("doubled one-arrow quiver") {
        SymmetricQuiverProblem p(a2().doubled(), {1, 1});
        auto table = dt_via_qseries(p, {3, 3}, 3);
        MasterSeries ms(a2(), {1, 1}, {3, 3}, 3);
        for (const auto& [v, f] : table) CHECK(ms.dt(v) == f);
    }
    SUBCASE("doubled Kronecker quiver") {
        SymmetricQuiverProblem p(kronecker().doubled(), {1, 1});
        auto table = dt_via_qseries(p, {3, 3}, 3);
        MasterSeries ms(kronecker(), {1, 1}, {3, 3}, 3);
        for (const auto& [v, f] : table) CHECK(ms.dt(v) == f);
        CHECK(table.at({1, 1}) == P({{1, 1}, {0, 1}}));
    }
}

TEST_CASE("changing the weights shifts DT by a power of q") {
    SymmetricQuiverProblem p3(loops(2), {3});
    SymmetricQuiverProblem p1(loops(2), {1});
    auto t3 = dt_via_qseries(p3, {4});
    auto t1 = dt_via_qseries(p1, {4});
    MasterSeries ms(point(), {3}, {4});
    for (int n = 1; n <= 4; ++n) {
        CHECK(t1.at({n}) == t3.at({n}).shifted(n));
        CHECK(ms.dt({n}, {1}) == t1.at({n}));
    }
    CHECK_THROWS_AS(ms.dt({2}, {2}), domain_error);
    CHECK_THROWS_AS(ms.dt({2}, {0}), domain_error);
    CHECK_THROWS_AS(ms.dt({2}, {1, 1}), domain_error);
}

TEST_CASE("power-sum pairing matches its character expansion") {
    CHECK(character_sum_check(jordan(), mp("[1]")) == RF(LaurentPolyQ::q()));
    CHECK(character_sum_check(jordan(), mp("[2]")) == RF(P({{2, -1}, {1, 1}})));
    CHECK(character_sum_check(jordan(), mp("[1,1]")) == RF(P({{2, 1}, {1, 1}})));
    CHECK(character_sum_check(a2(), mp("[1];[1]")) == RF(LaurentPolyQ::one()));
    CHECK(character_sum_check(kronecker(), mp("[1];[1]")) == RF(P({{1, 1}, {0, 1}})));
    CHECK_NOTHROW(character_sum_check(jordan(), mp("[2,1]")));
    CHECK_NOTHROW(character_sum_check(a2(), mp("[2];[1,1]")));
    CHECK_THROWS_AS(character_sum_check(a2(), mp("[1]")), domain_error);
    CHECK_THROWS_AS(character_sum_check(a2(), mp("[];[]")), domain_error);
}

TEST_CASE("Kostka relations between Kac and pairing polynomials") {
    CHECK(kostka_relation_check(jordan(), {1}));
    CHECK(kostka_relation_check(jordan(), {2}));
    CHECK(kostka_relation_check(jordan(), {3}));
    CHECK(kostka_relation_check(a2(), {1, 1}));
    CHECK(kostka_relation_check(a2(), {2, 1}));
    CHECK(kostka_relation_check(kronecker(), {1, 1}));
    CHECK_THROWS_AS(kostka_relation_check(a2(), {0, 0}), domain_error);
    CHECK_THROWS_AS(kostka_relation_check(a2(), {1}), domain_error);

    SUBCASE("Kac polynomial of a column multipartition via Kostka numbers") {
        MasterSeries ms(jordan(), {1}, {2});
        CHECK(ms.kac(mp("[1,1]")) == ms.hs(mp("[2]")) + ms.hs(mp("[1,1]")));
        CHECK(ms.hs(mp("[2]")) == LaurentPolyQ::q());
        CHECK(ms.hs(mp("[1,1]")) == P({{2, 1}}));
    }
}

TEST_CASE("DT degrees match the expected dimension of the column multipartition") {
    SymmetricQuiverProblem p(loops(2), {3});
    auto dt = dt_via_qseries(p, {5});
    for (int n = 4; n <= 5; ++n) {
        LaurentPolyQ f = dt.at({n});
        CHECK(f.high_exp() == d_mu(point(), one_column_multipartition({n}, {3}), {3}));
        CHECK(f.leading() == 1);
    }
}

TEST_CASE("pairing against caller-built symmetric functions") {
    MasterSeries ms(a2(), {1, 1}, {1, 1});
    CHECK(ms.pair_coefficient({1, 1}, p_basis(mp("[1];[1]"))) == RF(LaurentPolyQ::one()));
    CHECK_THROWS_AS(ms.pair_coefficient({2, 2}, p_basis(mp("[2];[2]"))), domain_error);
    CHECK_THROWS_AS(ms.pair_coefficient({1}, p_basis(mp("[1]"))), domain_error);
}
