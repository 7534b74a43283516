/**
 * The cubical deformation of chains onto a coarser grid: the exact
 * decomposition T = P + Q + dL with P supported on coarse k-cells, Q the
 * deformation track of dT (zero for cycles), and L the homotopy chain.
 *
 * The map behind P rounds every support vertex to its nearest coarse
 * vertex per axis, which is the combinatorial endpoint of the iterated
 * sup-norm radial projection through the grid skeleta; the homotopy is
 * the axis-by-axis telescoped prism of that map. Offsets are validated
 * exactly so that no support vertex sits on a rounding wall.
 */
#pragma once

#include <array>

#include "chaincal/chain.hpp"

namespace chaincal {

/// The j-skeleton of a cubical grid, enumerable within the bbox.
struct GridSkeleton {
    CubicalGrid grid;
    int dim = 0;

    std::vector<Cell> cells() const;
};

/// Coordinates of p lying at half-integer grid positions (the dual
/// walls): (p_i - offset_i) / edge = 1/2 mod 1.
int count_half_coordinates(const std::vector<Rat>& p, const CubicalGrid& g);

/// p lies on the dual j-skeleton W''_j + offset iff at least n - j of
/// its coordinates are at half positions.
bool on_dual_skeleton(const std::vector<Rat>& p, const CubicalGrid& g, int j);

/// Iterated radial projection from face centers down to the target
/// skeleton dimension, exact in rationals. A point already on the
/// i-skeleton is returned unchanged; face centers along the way raise
/// CenterSingularity.
std::vector<Rat> radial_project(const std::vector<Rat>& p, const Cell& cube,
                                const CubicalGrid& g, int target_dim);

/// A translation of the coarse template such that no support vertex of
/// any batch chain lies on any dual wall (hence on no dual skeleton).
/// Candidate 0 is the untranslated grid; later candidates shift each
/// axis by half a fine edge, drawn from the seeded generator.
std::vector<Rat> select_offset(const std::vector<const Chain*>& batch,
                               const CubicalGrid& fine,
                               const CubicalGrid& coarse_template, uint64_t seed,
                               int max_retries = 64);

struct DeformationResult {
    Chain T;  // input, on the fine grid
    Chain P;  // polyhedral part, on the coarse grid
    Chain Q;  // deformation of dT, on the common grid
    Chain L;  // homotopy part (dimension k+1), on the common grid
    CubicalGrid fine, coarse, common;
    // Observed ratios of the four mass bounds:
    //   M(P) / (M(T) + e M(dT)),  M(dP) / M(dT),
    //   M(Q) / (e M(dT)),         M(L) / (e M(T));
    // zero whenever the denominator vanishes.
    std::array<Rat, 4> kappa_observed;
    // Max Chebyshev distance from any cell center of P, Q, L to spt(T).
    Rat support_radius;
};

/// Deform a fine-grid chain onto the coarse grid. The identity
/// T = P + Q + dL is verified exactly on the common refinement before
/// returning. Throws OffsetConflict when a support vertex lies on a
/// dual wall of the coarse grid.
DeformationResult deform(const Chain& T, const CubicalGrid& fine,
                         const CubicalGrid& coarse);

/// Grid on which sums of fine- and coarse-grid chains live exactly.
CubicalGrid common_refinement(const CubicalGrid& fine, const CubicalGrid& coarse);

}  // namespace chaincal
