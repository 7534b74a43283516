/**
 * Finite cell complexes: cubical complexes on a grid (optionally with
 * periodic identifications, which is how the torus corpus is built) and
 * geometric simplicial complexes with exact rational vertex coordinates.
 * Complexes are face-closed and immutable once built.
 */
#pragma once

#include <map>
#include <vector>

#include "chaincal/chain.hpp"
#include "chaincal/intmat.hpp"

namespace chaincal {

class CellComplex {
public:
    CellComplex() = default;

    /// Build from generating cells; faces are added automatically and
    /// anchors are canonicalized for periodic grids.
    static CellComplex cubical(CubicalGrid grid, const std::vector<Cell>& cells);

    /// Geometric simplicial complex. Every simplex must be affinely
    /// independent (exact rank check).
    static CellComplex simplicial(std::vector<std::vector<Rat>> vertex_coords,
                                  const std::vector<Cell>& simplices);

    CellKind kind() const { return kind_; }
    const CubicalGrid& grid() const;
    const std::vector<std::vector<Rat>>& vertex_coords() const;
    int ambient_dim() const;

    int top_dim() const { return static_cast<int>(cells_.size()) - 1; }
    const std::vector<Cell>& cells(int k) const;
    size_t cell_count(int k) const { return cells(k).size(); }
    size_t total_cells() const;

    bool contains(const Cell& c) const;
    /// Index of a cell within its dimension's sorted list; -1 if absent.
    int index_of(const Cell& c) const;
    Cell canonical(const Cell& c) const;

    /// k-volume of a cell: edge^k for cubes, Euclidean simplex volume
    /// for simplices. Simplicial volumes whose squared value is not a
    /// perfect rational square cannot be represented exactly and raise
    /// UnrepresentableWeight.
    Rat weight(const Cell& c) const;

    Rat mass_of(const Chain& c) const;

    /// Boundary with membership validation and periodic canonicalization.
    Chain boundary_in(const Chain& c) const;

    /// Every cell of `c` belongs to this complex.
    bool carries(const Chain& c) const;

    bool is_subcomplex_of(const CellComplex& ambient) const;

    /// Euclidean center/realization point of a cell (cubical center or
    /// simplex barycenter).
    std::vector<Rat> cell_point(const Cell& c) const;

private:
    CellKind kind_ = CellKind::cubical;
    CubicalGrid grid_;
    bool has_grid_ = false;
    std::vector<std::vector<Rat>> coords_;
    std::vector<std::vector<Cell>> cells_;  // per dimension, sorted
    std::map<Cell, int> index_;
    mutable std::map<Cell, Rat> weight_cache_;

    void insert_with_faces(const Cell& c);
    void finalize();
};

/// Sparse incidence matrices of a complex. D(k) has one row per
/// (k-1)-cell and one column per k-cell with entries in {-1, 0, +1};
/// D(k-1) * D(k) = 0.
class BoundaryOperator {
public:
    explicit BoundaryOperator(const CellComplex& X);

    /// Dense D_k. For k outside [1, top_dim] returns the appropriately
    /// shaped zero-row/column matrix.
    const IntMat& dense(int k) const;
    int num_cells(int k) const;

private:
    std::vector<IntMat> mats_;  // mats_[k] = D_k, k >= 1
    std::vector<int> counts_;
    IntMat empty_;
};

/// Coefficient vector of a chain over the sorted k-cells of X.
std::vector<Int> chain_to_vector(const Chain& c, const CellComplex& X);
Chain vector_to_chain(const std::vector<Int>& v, const CellComplex& X, int k);

/// The product K x [0,1] together with the algebraic prism operator:
/// boundary(apply(c)) = top(c) - bottom(c) - apply(boundary(c)).
struct PrismComplex {
    CellComplex complex;
    CellKind kind;
    int64_t vertex_count = 0;  // simplicial: top vertex v maps to v + vertex_count

    Chain apply(const Chain& c) const;
    Chain top(const Chain& c) const;
    Chain bottom(const Chain& c) const;
    /// Vertex-level inclusions, for building cellular maps out of the
    /// prism (simplicial ids or cubical lattice level).
    int64_t top_vertex(int64_t v) const { return v + vertex_count; }
    int64_t bottom_vertex(int64_t v) const { return v; }
};

PrismComplex prism_complex(const CellComplex& K);

}  // namespace chaincal
