/**
 * Cells and cubical grids.
 *
 * A cubical cell is an anchor (lattice coordinates of its minimal corner)
 * plus the sorted set of spanned axes; a simplicial cell is a strictly
 * increasing tuple of vertex ids. Orientation is implicit: increasing
 * axis order for cubes, increasing vertex ids for simplices, with signs
 * produced by the face and pushforward routines.
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chaincal/errors.hpp"
#include "chaincal/numbers.hpp"

namespace chaincal {

enum class CellKind : uint8_t { cubical, simplicial };

struct Cell {
    CellKind kind = CellKind::cubical;
    // Anchor coordinates (cubical) or sorted vertex ids (simplicial).
    std::vector<int64_t> v;
    // Spanned axes, strictly increasing; cubical only.
    std::vector<int32_t> axes;

    int dim() const
    {
        return kind == CellKind::cubical ? static_cast<int>(axes.size())
                                         : static_cast<int>(v.size()) - 1;
    }

    bool spans(int32_t axis) const;

    static Cell cube(std::vector<int64_t> anchor, std::vector<int32_t> axes);
    static Cell vertex(std::vector<int64_t> anchor);
    static Cell simplex(std::vector<int64_t> vertex_ids);

    /// "3,-4|0,1" for cubes (anchor|axes), "0 2 5" for simplices.
    std::string key() const;
    static Cell parse(const std::string& key, CellKind kind);

    bool operator==(const Cell& o) const
    {
        return kind == o.kind && v == o.v && axes == o.axes;
    }
    bool operator<(const Cell& o) const;
};

/// Signed face: (face cell, incidence sign in {-1,+1}).
using SignedCell = std::pair<Cell, int>;

/// Codimension-1 faces with incidence signs under the tensor-product
/// convention: for the j-th spanned axis (0-based), the upper face gets
/// sign (-1)^j and the lower face -(-1)^j. Simplicial faces follow the
/// alternating-sum rule. Throws ZeroDimBoundary on 0-cells.
std::vector<SignedCell> cell_faces(const Cell& c);

/// All faces of every dimension, the cell itself included.
std::vector<Cell> cell_closure(const Cell& c);

struct CubicalGrid {
    int dim = 0;
    Rat edge = 1;
    std::vector<Rat> offset;       // one entry per axis
    std::vector<int64_t> bbox_lo;  // lattice corners of the active region
    std::vector<int64_t> bbox_hi;
    // Per-axis cell counts for periodically identified grids (torus
    // construction); empty means the grid is an honest subset of R^n.
    // Periodic grids use anchors in [0, period) and bbox [0, period].
    std::vector<int64_t> periods;

    static CubicalGrid box(int dim, Rat edge, std::vector<int64_t> lo,
                           std::vector<int64_t> hi, std::vector<Rat> offset = {});
    static CubicalGrid torus(std::vector<int64_t> periods, Rat edge = 1);

    bool periodic() const { return !periods.empty(); }
    void validate() const;

    /// Euclidean coordinate of a lattice position along one axis.
    Rat coord(int axis, int64_t lattice) const
    {
        return offset[axis] + edge * Int(lattice);
    }

    std::vector<Rat> vertex_point(const std::vector<int64_t>& anchor) const;
    std::vector<Rat> cell_center(const Cell& c) const;

    /// Closed box [lo, hi] spanned by a cell, per axis.
    void cell_box(const Cell& c, std::vector<Rat>& lo, std::vector<Rat>& hi) const;

    /// Reduce an anchor modulo the periods (no-op for plain grids).
    void canonicalize(std::vector<int64_t>& anchor) const;
    Cell canonical_cell(Cell c) const;

    bool anchor_in_bbox(const std::vector<int64_t>& a) const;
    bool cell_in_bbox(const Cell& c) const;
};

}  // namespace chaincal
