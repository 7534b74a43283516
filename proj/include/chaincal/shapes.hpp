/**
 * Builders for the standard test corpus: points, intervals, solid and
 * hollow squares, annuli, flat tori (periodic grids), the 6-vertex
 * projective plane, polygons, and full simplices.
 */
#pragma once

#include "chaincal/complex.hpp"

namespace chaincal {
namespace shapes {

/// Single 0-cell at the lattice origin of a 1-d grid.
CellComplex point();

/// Path complex 0 - 1 - ... - len on a 1-d unit grid.
CellComplex interval(int64_t len);

/// All w x h unit 2-cells anchored in [0,w) x [0,h).
CellComplex solid_rect(int64_t w, int64_t h, Rat edge = 1);

/// The four edges of the unit square (no 2-cell).
CellComplex hollow_square();

/// Rectangle frame of edges: boundary of [0,w] x [0,h].
CellComplex rect_frame(int64_t w, int64_t h);

/// side x side solid square minus a centered hole x hole block.
CellComplex annulus(int64_t side = 4, int64_t hole = 2);

/// Flat torus from an a x b periodic grid.
CellComplex torus(int64_t a, int64_t b);

/// Solid 3-d box of unit cubes.
CellComplex solid_box(int64_t w, int64_t h, int64_t d);

/// Minimal 6-vertex triangulation of the projective plane, embedded on
/// the standard basis of R^6.
CellComplex projective_plane();

/// Boundary cycle of an n-gon (simplicial circle), vertices on a
/// rational approximation of a circle.
CellComplex polygon(int n);

/// Full m-simplex with all faces, vertices = standard basis of R^(m+1).
CellComplex full_simplex(int m);

/// Simplicial triangulation of the w x h grid square (two triangles per
/// unit cell), vertex ids row-major.
CellComplex triangulated_rect(int64_t w, int64_t h);

/// Triangulated annulus: triangulated_rect minus a centered hole.
CellComplex triangulated_annulus(int64_t side = 4, int64_t hole = 2);

/// Fundamental 1-cycles. The loop of a frame / hollow square, oriented.
Chain frame_cycle(const CellComplex& X, int64_t x0, int64_t y0, int64_t w,
                  int64_t h);

/// Full top-dimensional chain (every top cell with coefficient 1).
Chain fundamental_chain(const CellComplex& X);

}  // namespace shapes
}  // namespace chaincal
