#pragma once

#include "quivinv/partition.hpp"

#include <utility>

namespace quivinv {

using DimVector = std::vector<int>;

/*
 * Finite quiver on vertices 0..r-1 with an arrow multiset (loops allowed).
 * Arrows are kept sorted, so equal quivers compare equal structurally. The
 * text format is 1-based: a "vertices <r>" line followed by one
 * "arrow <i> <j>" line per arrow; '#' starts a comment line.
 */
class Quiver {
public:
    using Arrow = std::pair<int, int>;

    Quiver(int num_vertices, std::vector<Arrow> arrows);

    int num_vertices() const { return r_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    int loops_at(int i) const;
    bool is_symmetric() const;

    std::vector<std::vector<int>> arrow_matrix() const;
    /* Cartan matrix 2I - A - A^T; a g-loop vertex gets diagonal 2 - 2g. */
    std::vector<std::vector<int>> cartan() const;

    Quiver doubled() const;
    Quiver opposite() const;

    bool operator==(const Quiver& o) const { return r_ == o.r_ && arrows_ == o.arrows_; }

    static Quiver parse(const std::string& text);
    std::string serialize() const;

private:
    int r_;
    std::vector<Arrow> arrows_;
};

/* Tits form (1/2) v^T C v. */
long tits_form(const Quiver& g, const DimVector& v);

enum class RootClass { NotRoot, RealRoot, ImaginaryRoot };

/*
 * Kac root classification by reflection descent. Reflections act only at
 * loop-free vertices i with (Cv)_i > 0; descent ends at a simple root
 * (real), in the fundamental region, i.e. connected support and
 * (Cv)_i <= 0 at every loop-free vertex (imaginary), or outside the
 * positive cone or with disconnected support (not a root).
 */
RootClass classify_root(const Quiver& g, const DimVector& v);

/*
 * Leg attachment: one leg per (vertex, leg) slot, slots ordered
 * vertex-major, legs[i] slots at vertex i. The slot's partition mu with
 * |mu| = v_i contributes l(mu)-1 leg vertices carrying the partial-sum
 * dimensions v_i - mu_1, v_i - mu_1 - mu_2, ..., mu_{l}; leg arrows point
 * toward the original vertex. Leg vertices are appended after the original
 * ones, slot by slot. All slots at one vertex must have equal size.
 */
std::pair<Quiver, DimVector> attach_legs(const Quiver& g, const MultiPartition& mu,
                                         const std::vector<int>& legs);
std::pair<Quiver, DimVector> attach_legs(const Quiver& g, const MultiPartition& mu);

/* The multipartition 1^v for a leg profile: (1^{v_i}) in every slot. */
MultiPartition one_column_multipartition(const DimVector& v, const std::vector<int>& legs);

/* d_mu = 1 - (1/2) v_mu^T C_mu v_mu over the leg-extended quiver. */
long d_mu(const Quiver& g, const MultiPartition& mu, const std::vector<int>& legs);
long d_mu(const Quiver& g, const MultiPartition& mu);

} // namespace quivinv
