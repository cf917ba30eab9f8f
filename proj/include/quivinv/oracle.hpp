#pragma once

#include "quivinv/gf.hpp"
#include "quivinv/quiver.hpp"

namespace quivinv {

/* One matrix per arrow in the quiver's arrow order; arrow (i, j) carries a
   v_j x v_i matrix mapping the vertex-i space into the vertex-j space. */
using QuiverRep = std::vector<GFMatrix>;

long rep_dimension(const Quiver& g, const DimVector& v);

struct EndoAnalysis {
    int end_dim = 0;
    int radical_dim = 0;
    Int aut_count;
    bool local = false;
    bool abs_indec = false;
};

/* Basis of {(X_i): X_j phi = phi X_i for every arrow}, each vector listing
   the X_i entries vertex by vertex, row-major. */
std::vector<std::vector<int>> endomorphism_basis(const FiniteField& F, const Quiver& g,
                                                 const DimVector& v, const QuiverRep& rep);

/*
 * Walks every element of the endomorphism algebra (q^dim <= 10^6): counts
 * units, checks the non-units are exactly the nilpotents (locality), and
 * certifies the nilpotents form a subspace, the radical. The representation
 * is absolutely indecomposable iff the algebra is local with End/J = F_q.
 */
EndoAnalysis analyze_endomorphisms(const FiniteField& F, const Quiver& g, const DimVector& v,
                                   const QuiverRep& rep);

Int gl_order(int q, int n);

/* Number of absolutely indecomposable representations of dimension v over
   F_q up to isomorphism: sum |Aut(phi)| over the absolutely indecomposable
   points, divided exactly by |GL_v|. Refuses |Rep| > 10^7. */
Int kac_count(int q, const Quiver& g, const DimVector& v);

/* All isomorphism classes of dimension v, by the same orbit sum. */
Int isoclass_count(int q, const Quiver& g, const DimVector& v);

/* The same count via the fixed points of every element of GL_v acting on
   the representation space; refuses |Rep| > 10^4. */
Int isoclass_count_burnside(int q, const Quiver& g, const DimVector& v);

}  // namespace quivinv
