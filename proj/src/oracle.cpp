#include "quivinv/oracle.hpp"

#include <numeric>

namespace quivinv {

namespace {

constexpr long kRepBudget = 10000000;
constexpr long kEndBudget = 1000000;
constexpr long kBurnsideBudget = 10000;

void validate_dims(const Quiver& g, const DimVector& v) {
    if (v.size() != static_cast<std::size_t>(g.num_vertices()))
        throw domain_error("dimension vector has the wrong length");
    long total = 0;
    for (int x : v) {
        if (x < 0) throw domain_error("dimension vector entries must be non-negative");
        total += x;
    }
    if (total == 0) throw domain_error("dimension vector must be nonzero");
}

/* q^e if it stays within budget, otherwise -1. */
long bounded_pow(int q, long e, long budget) {
    long r = 1;
    for (long i = 0; i < e; ++i) {
        r *= q;
        if (r > budget) return -1;
    }
    return r;
}

void validate_rep(const Quiver& g, const DimVector& v, const QuiverRep& rep) {
    if (rep.size() != g.arrows().size()) throw domain_error("representation has the wrong number of matrices");
    for (std::size_t k = 0; k < rep.size(); ++k) {
        auto [s, t] = g.arrows()[k];
        if (rep[k].rows != v[static_cast<std::size_t>(t)] || rep[k].cols != v[static_cast<std::size_t>(s)])
            throw domain_error("representation matrix shape mismatch at arrow " + std::to_string(k));
    }
}

std::vector<int> vertex_offsets(const DimVector& v) {
    std::vector<int> off(v.size() + 1, 0);
    for (std::size_t i = 0; i < v.size(); ++i) off[i + 1] = off[i] + v[i] * v[i];
    return off;
}

/* Rows of the linear system cutting out End(rep) inside prod_i Mat_{v_i}. */
GFMatrix endo_system(const FiniteField& F, const Quiver& g, const DimVector& v,
                     const QuiverRep& rep) {
    std::vector<int> off = vertex_offsets(v);
    int unknowns = off.back();
    long rows = 0;
    for (const auto& [s, t] : g.arrows())
        rows += static_cast<long>(v[static_cast<std::size_t>(t)]) * v[static_cast<std::size_t>(s)];
    GFMatrix M(static_cast<int>(rows), unknowns);
    int row = 0;
    for (std::size_t k = 0; k < rep.size(); ++k) {
        auto [s, t] = g.arrows()[k];
        int vs = v[static_cast<std::size_t>(s)], vt = v[static_cast<std::size_t>(t)];
        const GFMatrix& phi = rep[k];
        for (int r = 0; r < vt; ++r)
            for (int c = 0; c < vs; ++c, ++row)
                for (int m = 0; m < std::max(vs, vt); ++m) {
                    if (m < vt) {
                        int col = off[static_cast<std::size_t>(t)] + r * vt + m;
                        M.at(row, col) = F.add(M.at(row, col), phi.at(m, c));
                    }
                    if (m < vs) {
                        int col = off[static_cast<std::size_t>(s)] + m * vs + c;
                        M.at(row, col) = F.sub(M.at(row, col), phi.at(r, m));
                    }
                }
    }
    return M;
}

std::vector<GFMatrix> unpack_endo(const DimVector& v, const std::vector<int>& x) {
    std::vector<int> off = vertex_offsets(v);
    std::vector<GFMatrix> blocks;
    for (std::size_t i = 0; i < v.size(); ++i) {
        GFMatrix b(v[i], v[i]);
        for (int r = 0; r < v[i]; ++r)
            for (int c = 0; c < v[i]; ++c) b.at(r, c) = x[static_cast<std::size_t>(off[i] + r * v[i] + c)];
        blocks.push_back(std::move(b));
    }
    return blocks;
}

struct RepWalker {
    const FiniteField& F;
    const Quiver& g;
    const DimVector& v;
    long total_entries;

    RepWalker(const FiniteField& f, const Quiver& gg, const DimVector& vv)
        : F(f), g(gg), v(vv), total_entries(rep_dimension(gg, vv)) {}

    template <typename Fn>
    void walk(Fn&& fn) const {
        QuiverRep rep;
        for (const auto& [s, t] : g.arrows())
            rep.emplace_back(v[static_cast<std::size_t>(t)], v[static_cast<std::size_t>(s)]);
        std::vector<int*> slots;
        for (auto& m : rep)
            for (int& e : m.a) slots.push_back(&e);
        for (;;) {
            fn(rep);
            std::size_t i = 0;
            while (i < slots.size() && *slots[i] == F.size() - 1) *slots[i++] = 0;
            if (i == slots.size()) return;
            ++*slots[i];
        }
    }
};

/* sum of |Aut(phi)| over representation points, restricted to absolutely
   indecomposable ones when indec_only is set. */
Int orbit_sum(int q, const Quiver& g, const DimVector& v, bool indec_only) {
    validate_dims(g, v);
    FiniteField F(q);
    if (bounded_pow(q, rep_dimension(g, v), kRepBudget) < 0)
        throw domain_error("representation space exceeds the 10^7 enumeration budget");
    Int total = 0;
    RepWalker(F, g, v).walk([&](const QuiverRep& rep) {
        EndoAnalysis ea = analyze_endomorphisms(F, g, v, rep);
        if (!indec_only || ea.abs_indec) total += ea.aut_count;
    });
    return total;
}

Int divide_by_gl(Int total, int q, const DimVector& v, const char* what) {
    Int den = 1;
    for (int n : v) den *= gl_order(q, n);
    if (!mpz_divisible_p(total.get_mpz_t(), den.get_mpz_t()))
        throw certification_error(std::string(what) + ": orbit sum is not divisible by |GL_v|");
    return total / den;
}

}  // namespace

long rep_dimension(const Quiver& g, const DimVector& v) {
    if (v.size() != static_cast<std::size_t>(g.num_vertices()))
        throw domain_error("dimension vector has the wrong length");
    long n = 0;
    for (const auto& [s, t] : g.arrows())
        n += static_cast<long>(v[static_cast<std::size_t>(t)]) * v[static_cast<std::size_t>(s)];
    return n;
}

std::vector<std::vector<int>> endomorphism_basis(const FiniteField& F, const Quiver& g,
                                                 const DimVector& v, const QuiverRep& rep) {
    validate_dims(g, v);
    validate_rep(g, v, rep);
    return gf_nullspace(F, endo_system(F, g, v, rep));
}

namespace {

/* Echelonized span accumulator; insert returns true when the vector was
   independent of the rows seen so far. */
struct SpanBuilder {
    const FiniteField& F;
    std::map<std::size_t, std::vector<int>> rows;  // leading position -> row with lead 1

    bool insert(std::vector<int> vec) {
        for (std::size_t p = 0; p < vec.size(); ++p) {
            if (vec[p] == 0) continue;
            auto it = rows.find(p);
            if (it == rows.end()) {
                int lead_inv = F.inv(vec[p]);
                for (int& e : vec) e = F.mul(lead_inv, e);
                rows.emplace(p, std::move(vec));
                return true;
            }
            int f = vec[p];
            for (std::size_t j = p; j < vec.size(); ++j)
                vec[j] = F.sub(vec[j], F.mul(f, it->second[j]));
        }
        return false;
    }
};

}  // namespace

EndoAnalysis analyze_endomorphisms(const FiniteField& F, const Quiver& g, const DimVector& v,
                                   const QuiverRep& rep) {
    std::vector<std::vector<int>> basis = endomorphism_basis(F, g, v, rep);
    EndoAnalysis ea;
    ea.end_dim = static_cast<int>(basis.size());
    long count = bounded_pow(F.size(), ea.end_dim, kEndBudget);
    if (count < 0) throw domain_error("endomorphism algebra exceeds the 10^6 enumeration budget");

    const std::size_t n = static_cast<std::size_t>(vertex_offsets(v).back());
    std::vector<int> coeffs(basis.size(), 0);
    std::vector<int> x(n, 0);
    long units = 0, nils = 0;
    SpanBuilder nil_span{F, {}};
    for (long it = 0; it < count; ++it) {
        bool inv = true, nil = true;
        for (const GFMatrix& b : unpack_endo(v, x)) {
            if (inv && !gf_invertible(F, b)) inv = false;
            if (nil && !gf_nilpotent(F, b)) nil = false;
            if (!inv && !nil) break;
        }
        if (inv) ++units;
        if (nil) {
            ++nils;
            nil_span.insert(x);
        }

        /* labels are field elements, so each step applies the field delta */
        std::size_t i = 0;
        while (i < coeffs.size() && coeffs[i] == F.size() - 1) {
            int delta = F.neg(coeffs[i]);
            for (std::size_t j = 0; j < n; ++j)
                x[j] = F.add(x[j], F.mul(delta, basis[i][j]));
            coeffs[i++] = 0;
        }
        if (i == coeffs.size()) break;
        int prev = coeffs[i]++;
        int delta = F.sub(coeffs[i], prev);
        for (std::size_t j = 0; j < n; ++j) x[j] = F.add(x[j], F.mul(delta, basis[i][j]));
    }
    ea.aut_count = Int(units);
    ea.local = units + nils == count;
    ea.radical_dim = static_cast<int>(nil_span.rows.size());
    if (ea.local && bounded_pow(F.size(), ea.radical_dim, kEndBudget) != nils)
        throw certification_error("nilpotent endomorphisms of a local algebra do not form a subspace");
    ea.abs_indec = ea.local && ea.end_dim - ea.radical_dim == 1;
    return ea;
}

Int gl_order(int q, int n) {
    if (n < 0) throw domain_error("matrix size must be non-negative");
    Int qn = 1;
    for (int i = 0; i < n; ++i) qn *= q;
    Int order = 1, qj = 1;
    for (int j = 0; j < n; ++j) {
        order *= qn - qj;
        qj *= q;
    }
    return order;
}

Int kac_count(int q, const Quiver& g, const DimVector& v) {
    return divide_by_gl(orbit_sum(q, g, v, true), q, v, "kac_count");
}

Int isoclass_count(int q, const Quiver& g, const DimVector& v) {
    return divide_by_gl(orbit_sum(q, g, v, false), q, v, "isoclass_count");
}

Int isoclass_count_burnside(int q, const Quiver& g, const DimVector& v) {
    validate_dims(g, v);
    FiniteField F(q);
    long n_rep = rep_dimension(g, v);
    if (bounded_pow(q, n_rep, kBurnsideBudget) < 0)
        throw domain_error("representation space exceeds the 10^4 fixed-point budget");

    std::vector<std::vector<GFMatrix>> gl(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        long cells = bounded_pow(q, static_cast<long>(v[i]) * v[i], kEndBudget);
        if (cells < 0) throw domain_error("general linear group exceeds the enumeration budget");
        GFMatrix m(v[i], v[i]);
        for (long it = 0; it < cells; ++it) {
            if (gf_invertible(F, m)) gl[i].push_back(m);
            std::size_t d = 0;
            while (d < m.a.size() && m.a[d] == q - 1) m.a[d++] = 0;
            if (d < m.a.size()) ++m.a[d];
        }
    }

    std::vector<std::size_t> pick(v.size(), 0);
    Int fixed_sum = 0;
    for (;;) {
        /* phi is fixed by (X_i) iff X_t phi = phi X_s per arrow: a linear
           system in phi whose kernel size is the fixed-point count. */
        GFMatrix M(static_cast<int>(n_rep), static_cast<int>(n_rep));
        std::vector<long> arrow_off(g.arrows().size() + 1, 0);
        for (std::size_t k = 0; k < g.arrows().size(); ++k) {
            auto [s, t] = g.arrows()[k];
            arrow_off[k + 1] = arrow_off[k] +
                               static_cast<long>(v[static_cast<std::size_t>(t)]) * v[static_cast<std::size_t>(s)];
        }
        int row = 0;
        for (std::size_t k = 0; k < g.arrows().size(); ++k) {
            auto [s, t] = g.arrows()[k];
            int vs = v[static_cast<std::size_t>(s)], vt = v[static_cast<std::size_t>(t)];
            const GFMatrix& Xs = gl[static_cast<std::size_t>(s)][pick[static_cast<std::size_t>(s)]];
            const GFMatrix& Xt = gl[static_cast<std::size_t>(t)][pick[static_cast<std::size_t>(t)]];
            for (int r = 0; r < vt; ++r)
                for (int c = 0; c < vs; ++c, ++row)
                    for (int m = 0; m < std::max(vs, vt); ++m) {
                        if (m < vt) {
                            int col = static_cast<int>(arrow_off[k]) + m * vs + c;
                            M.at(row, col) = F.add(M.at(row, col), Xt.at(r, m));
                        }
                        if (m < vs) {
                            int col = static_cast<int>(arrow_off[k]) + r * vs + m;
                            M.at(row, col) = F.sub(M.at(row, col), Xs.at(m, c));
                        }
                    }
        }
        long nullity = n_rep - gf_rank(F, std::move(M));
        Int fix = 1;
        for (long i = 0; i < nullity; ++i) fix *= q;
        fixed_sum += fix;

        std::size_t i = 0;
        while (i < pick.size() && pick[i] + 1 == gl[i].size()) pick[i++] = 0;
        if (i == pick.size()) break;
        ++pick[i];
    }
    return divide_by_gl(fixed_sum, q, v, "isoclass_count_burnside");
}

}  // namespace quivinv
