/**
 * Cellular maps between complexes and the chain-level pushforward.
 *
 * A map is a vertex assignment (simplicial vertex ids, or lattice
 * vertices for cubical complexes) under which every source cell's image
 * vertex set spans a cell of the target, possibly of lower dimension.
 * Degenerate images contribute zero to the pushforward; boundary
 * commutes with pushforward exactly.
 */
#pragma once

#include "chaincal/complex.hpp"

namespace chaincal {

class CellularMap {
public:
    /// Simplicial map: vertex id -> vertex id. Checked cell by cell.
    static CellularMap simplicial(const CellComplex& source,
                                  const CellComplex& target,
                                  std::map<int64_t, int64_t> vertex_map);

    /// Cubical map: lattice vertex -> lattice vertex. Each cell's
    /// assignment must factor through the axes (every target coordinate
    /// driven by at most one spanned source axis, by a unit step), which
    /// is what makes the image a genuine box with a well-defined degree.
    static CellularMap cubical(
        const CellComplex& source, const CellComplex& target,
        std::map<std::vector<int64_t>, std::vector<int64_t>> lattice_map);

    static CellularMap identity(const CellComplex& X);

    /// g after f; f's target must carry g's source cells.
    static CellularMap compose(const CellularMap& g, const CellularMap& f);

    const CellComplex& source() const { return source_; }
    const CellComplex& target() const { return target_; }
    CellKind kind() const { return kind_; }

    int64_t map_vertex(int64_t v) const;
    std::vector<int64_t> map_lattice(const std::vector<int64_t>& v) const;

    /// Image of one cell with its orientation sign; sign 0 when the
    /// image is degenerate.
    SignedCell image(const Cell& c) const;

private:
    CellKind kind_ = CellKind::simplicial;
    CellComplex source_, target_;
    std::map<int64_t, int64_t> vmap_;
    std::map<std::vector<int64_t>, std::vector<int64_t>> lmap_;

    void validate() const;
};

/// Linear extension of the cellular map to chains.
Chain pushforward(const Chain& c, const CellularMap& f);

}  // namespace chaincal
