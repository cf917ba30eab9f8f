#include <doctest.h>

#include "quivinv/errors.hpp"
#include "quivinv/quiver.hpp"

#include <random>

using namespace quivinv;

namespace {

Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }

Quiver a2() { return Quiver(2, {{0, 1}}); }
Quiver jordan() { return Quiver(1, {{0, 0}}); }
Quiver kronecker() { return Quiver(2, {{0, 1}, {0, 1}}); }
Quiver point() { return Quiver(1, {}); }
Quiver loop_edge() { return Quiver(2, {{0, 0}, {0, 0}, {0, 1}}); }
Quiver path3() { return Quiver(3, {{0, 1}, {1, 2}}); }

Quiver random_quiver(std::mt19937& rng) {
    std::uniform_int_distribution<int> nv(1, 4);
    int r = nv(rng);
    std::uniform_int_distribution<int> na(0, 6);
    std::uniform_int_distribution<int> vx(0, r - 1);
    std::vector<Quiver::Arrow> arrows;
    int n = na(rng);
    for (int t = 0; t < n; ++t) arrows.emplace_back(vx(rng), vx(rng));
    return Quiver(r, std::move(arrows));
}

long cartan_form(const Quiver& g, const DimVector& v) {
    auto c = g.cartan();
    long s = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            s += static_cast<long>(c[i][j]) * v[i] * v[j];
    REQUIRE(s % 2 == 0);
    return s / 2;
}

} // namespace

TEST_CASE("quiver file parsing and serialization") {
    std::string text =
        "# two vertices joined by one arrow\n"
        "vertices 2\n"
        "\n"
        "arrow 1 2\n";
    Quiver g = Quiver::parse(text);
    CHECK(g == a2());
    CHECK(g.serialize() == "vertices 2\narrow 1 2\n");
    CHECK(Quiver::parse(g.serialize()) == g);

    Quiver k = kronecker();
    CHECK(k.serialize() == "vertices 2\narrow 1 2\narrow 1 2\n");
    CHECK(Quiver::parse(k.serialize()).serialize() == k.serialize());

    CHECK(Quiver::parse("vertices 1\narrow 1 1\n") == jordan());

    CHECK_THROWS_AS(Quiver::parse("arrow 1 2\nvertices 2\n"), domain_error);
    CHECK_THROWS_AS(Quiver::parse("vertices 2\narrow 1 3\n"), domain_error);
    CHECK_THROWS_AS(Quiver::parse("vertices 0\n"), domain_error);
    CHECK_THROWS_AS(Quiver::parse("vertices 2\nvertices 2\n"), domain_error);
    CHECK_THROWS_AS(Quiver::parse("vertices 2\narrow 1 2 3\n"), domain_error);
    CHECK_THROWS_AS(Quiver::parse("vertices 2\nedge 1 2\n"), domain_error);
    CHECK_THROWS_AS(Quiver::parse(""), domain_error);
}

TEST_CASE("cartan matrices") {
    CHECK(point().cartan() == std::vector<std::vector<int>>{{2}});
    CHECK(jordan().cartan() == std::vector<std::vector<int>>{{0}});
    CHECK(a2().cartan() == std::vector<std::vector<int>>{{2, -1}, {-1, 2}});
    CHECK(kronecker().cartan() == std::vector<std::vector<int>>{{2, -2}, {-2, 2}});
    CHECK(loop_edge().cartan() == std::vector<std::vector<int>>{{-2, -1}, {-1, 2}});
}

TEST_CASE("double and opposite quivers") {
    Quiver d = a2().doubled();
    CHECK(d.arrows() == std::vector<Quiver::Arrow>{{0, 1}, {1, 0}});
    CHECK(d.is_symmetric());
    CHECK_FALSE(a2().is_symmetric());
    CHECK(jordan().doubled().loops_at(0) == 2);
    CHECK(a2().opposite().arrows() == std::vector<Quiver::Arrow>{{1, 0}});
    CHECK(jordan().is_symmetric());

    std::mt19937 rng(1234);
    for (int t = 0; t < 50; ++t) {
        Quiver g = random_quiver(rng);
        CHECK(g.cartan() == g.opposite().cartan());
        CHECK(g.doubled().arrows().size() == 2 * g.arrows().size());
        CHECK(g.doubled().is_symmetric());
    }
}

TEST_CASE("tits form agrees with the cartan matrix") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> dim(0, 4);
    for (int t = 0; t < 50; ++t) {
        Quiver g = random_quiver(rng);
        DimVector v(static_cast<std::size_t>(g.num_vertices()));
        for (auto& x : v) x = dim(rng);
        CHECK(tits_form(g, v) == cartan_form(g, v));
    }
    CHECK(tits_form(a2(), {1, 1}) == 1);
    CHECK(tits_form(kronecker(), {1, 1}) == 0);
    CHECK(tits_form(jordan(), {3}) == 0);
    CHECK(tits_form(loop_edge(), {2, 1}) == -5);
}

TEST_CASE("leg attachment") {
    auto [g1, v1] = attach_legs(point(), MultiPartition({P({1, 1})}));
    CHECK(g1.num_vertices() == 2);
    CHECK(v1 == DimVector{2, 1});
    CHECK(g1.arrows() == std::vector<Quiver::Arrow>{{1, 0}});

    auto [g2, v2] = attach_legs(point(), MultiPartition({P({2, 1})}));
    CHECK(g2.num_vertices() == 2);
    CHECK(v2 == DimVector{3, 1});

    auto [g3, v3] = attach_legs(point(), MultiPartition({P({3})}));
    CHECK(g3.num_vertices() == 1);
    CHECK(v3 == DimVector{3});

    auto [g4, v4] = attach_legs(a2(), MultiPartition({P({2, 1}), P({1, 1})}));
    CHECK(g4.num_vertices() == 4);
    CHECK(v4 == DimVector{3, 2, 1, 1});
    CHECK(g4.arrows() == std::vector<Quiver::Arrow>{{0, 1}, {2, 0}, {3, 1}});

    auto [g5, v5] = attach_legs(point(), one_column_multipartition({3}, {2}), {2});
    CHECK(g5.num_vertices() == 5);
    CHECK(v5 == DimVector{3, 2, 1, 2, 1});

    auto [g6, v6] = attach_legs(point(), MultiPartition({Partition()}));
    CHECK(g6.num_vertices() == 1);
    CHECK(v6 == DimVector{0});

    CHECK_THROWS_AS(attach_legs(a2(), MultiPartition({P({1})})), domain_error);
    CHECK_THROWS_AS(attach_legs(point(), MultiPartition({P({2}), P({1})}), {2}), domain_error);
    CHECK_THROWS_AS(attach_legs(point(), MultiPartition({P({1})}), {0}), domain_error);
}

TEST_CASE("d_mu reproduces known table degrees") {
    CHECK(d_mu(point(), MultiPartition({P({1})})) == 0);
    CHECK(d_mu(point(), one_column_multipartition({5}, {3}), {3}) == 6);
    CHECK(d_mu(point(), one_column_multipartition({4}, {4}), {4}) == 9);
    CHECK(d_mu(point(), one_column_multipartition({5}, {4}), {4}) == 16);
    CHECK(d_mu(a2(), one_column_multipartition({1, 1}, {1, 1}), {1, 1}) == 0);
    CHECK(d_mu(jordan(), MultiPartition({P({1})})) == 1);

    for (int n = 1; n <= 5; ++n) {
        auto mu = one_column_multipartition({n}, {3});
        auto [ext, v] = attach_legs(point(), mu, {3});
        CHECK(d_mu(point(), mu, {3}) == 1 - cartan_form(ext, v));
    }
}

TEST_CASE("root classification on known quivers") {
    CHECK(classify_root(a2(), {1, 0}) == RootClass::RealRoot);
    CHECK(classify_root(a2(), {0, 1}) == RootClass::RealRoot);
    CHECK(classify_root(a2(), {1, 1}) == RootClass::RealRoot);
    CHECK(classify_root(a2(), {2, 1}) == RootClass::NotRoot);
    CHECK(classify_root(a2(), {1, 2}) == RootClass::NotRoot);
    CHECK(classify_root(a2(), {2, 2}) == RootClass::NotRoot);

    for (int n = 1; n <= 5; ++n)
        CHECK(classify_root(jordan(), {n}) == RootClass::ImaginaryRoot);

    CHECK(classify_root(kronecker(), {1, 1}) == RootClass::ImaginaryRoot);
    CHECK(classify_root(kronecker(), {2, 2}) == RootClass::ImaginaryRoot);
    CHECK(classify_root(kronecker(), {2, 1}) == RootClass::RealRoot);
    CHECK(classify_root(kronecker(), {1, 2}) == RootClass::RealRoot);
    CHECK(classify_root(kronecker(), {3, 2}) == RootClass::RealRoot);
    CHECK(classify_root(kronecker(), {3, 1}) == RootClass::NotRoot);

    CHECK(classify_root(loop_edge(), {0, 1}) == RootClass::RealRoot);
    CHECK(classify_root(loop_edge(), {1, 0}) == RootClass::ImaginaryRoot);
    CHECK(classify_root(loop_edge(), {1, 1}) == RootClass::ImaginaryRoot);
    CHECK(classify_root(loop_edge(), {0, 2}) == RootClass::NotRoot);

    CHECK(classify_root(path3(), {1, 0, 1}) == RootClass::NotRoot);
    CHECK(classify_root(path3(), {1, 1, 1}) == RootClass::RealRoot);
    CHECK(classify_root(path3(), {1, 2, 1}) == RootClass::NotRoot);

    CHECK_THROWS_AS(classify_root(a2(), {0, 0}), domain_error);
    CHECK_THROWS_AS(classify_root(a2(), {1}), domain_error);
    CHECK_THROWS_AS(classify_root(a2(), {-1, 1}), domain_error);
}

TEST_CASE("root classification is reflection invariant") {
    std::mt19937 rng(5150);
    std::uniform_int_distribution<int> dim(0, 3);
    int checked = 0;
    for (int t = 0; t < 200; ++t) {
        Quiver g = random_quiver(rng);
        int r = g.num_vertices();
        DimVector v(static_cast<std::size_t>(r));
        bool nonzero = false;
        for (auto& x : v) {
            x = dim(rng);
            nonzero = nonzero || x > 0;
        }
        if (!nonzero) continue;
        auto c = g.cartan();
        for (int i = 0; i < r; ++i) {
            if (g.loops_at(i) != 0) continue;
            long dot = 0;
            for (int j = 0; j < r; ++j)
                dot += static_cast<long>(c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) *
                       v[static_cast<std::size_t>(j)];
            DimVector w = v;
            w[static_cast<std::size_t>(i)] -= static_cast<int>(dot);
            if (w[static_cast<std::size_t>(i)] < 0) continue;
            bool w_nonzero = false;
            for (int x : w) w_nonzero = w_nonzero || x > 0;
            if (!w_nonzero) continue;
            CHECK(classify_root(g, w) == classify_root(g, v));
            ++checked;
        }
    }
    CHECK(checked > 100);
}

TEST_CASE("real roots have tits form 1, imaginary roots at most 0") {
    for (const Quiver& g : {a2(), jordan(), kronecker(), loop_edge(), path3(), point()}) {
        int r = g.num_vertices();
        DimVector v(static_cast<std::size_t>(r), 0);
        for (;;) {
            std::size_t i = 0;
            while (i < v.size() && v[i] == 3) { v[i] = 0; ++i; }
            if (i == v.size()) break;
            ++v[i];
            RootClass rc = classify_root(g, v);
            if (rc == RootClass::RealRoot) CHECK(tits_form(g, v) == 1);
            if (rc == RootClass::ImaginaryRoot) CHECK(tits_form(g, v) <= 0);
        }
    }
}
