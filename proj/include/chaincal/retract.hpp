/**
 * Simplicial machinery for neighborhood retractions: barycentric
 * subdivision with its chain map, full-subcomplex detection, regular
 * neighborhoods, the barycentric retraction r, and its chain-level
 * realization through simplicial approximation.
 */
#pragma once

#include "chaincal/complex.hpp"

namespace chaincal {

struct SubdivisionResult {
    CellComplex complex;  // the subdivided complex K'
    /// New vertex id of the barycenter of each simplex of K (vertices
    /// of K map to their own barycenters).
    std::map<Cell, int64_t> barycenter_id;
    /// sd(simplex) as a chain on K'.
    std::map<Cell, Chain> cell_image;

    /// The subdivision chain map: commutes with boundary and preserves
    /// homology classes.
    Chain apply(const Chain& c) const;
    /// Image of a subcomplex L of K inside K'.
    CellComplex map_subcomplex(const CellComplex& L) const;
};

SubdivisionResult barycentric_subdivision(const CellComplex& K);

/// True iff every simplex of K spanned entirely by vertices of L lies
/// in L. Throws NotSubcomplex when L is not a subcomplex of K.
bool is_full(const CellComplex& K, const CellComplex& L);

/// Simplices of K with at least one vertex in L: the carriers meeting
/// the open regular neighborhood N(L). Requires is_full(K, L).
std::vector<Cell> regular_neighborhood(const CellComplex& K,
                                       const CellComplex& L);

struct BarycentricPoint {
    Cell carrier;                   // simplex of K
    std::map<int64_t, Rat> coords;  // vertex id -> weight, sum 1

    void validate(const CellComplex& K) const;
    std::vector<Rat> euclidean(const CellComplex& K) const;
    bool operator==(const BarycentricPoint& o) const
    {
        return carrier == o.carrier && coords == o.coords;
    }
};

/// r(alpha) = (sum of L-weights * vertices) / (sum of L-weights):
/// renormalizes the mass on L-vertices. Identity on |L|, idempotent;
/// zero L-mass raises OutsideNeighborhood.
BarycentricPoint retract_point(const BarycentricPoint& alpha,
                               const CellComplex& K, const CellComplex& L);

struct RetractChainResult {
    Chain image;           // on refined_L
    int subdivisions = 0;  // barycentric subdivisions applied
    CellComplex refined_K;
    CellComplex refined_L;
    Chain refined_input;   // sd^s(c), the chain the image is compared to
};

/// Chain-level retraction: the vertex map v -> v on L, otherwise the
/// nearest L-vertex of v's star (ties by lowest id), applied after the
/// minimal number of barycentric subdivisions that makes the map
/// simplicial into L. Chains supported on L need no subdivision and are
/// returned unchanged.
RetractChainResult retract_chain(const Chain& c, const CellComplex& K,
                                 const CellComplex& L,
                                 int max_subdivisions = 5);

}  // namespace chaincal
