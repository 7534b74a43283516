/**
 * Integer homology of cell complexes via Smith normal form: absolute and
 * relative groups, boundary-filling queries, and homology-class
 * coordinates that make "two cycles are homologous" decidable.
 */
#pragma once

#include <optional>

#include "chaincal/complex.hpp"

namespace chaincal {

struct RelativePair {
    CellComplex ambient;  // X
    CellComplex sub;      // A, a face-closed subcomplex of X
    void validate() const;
};

struct ClassCoordinates {
    std::vector<Int> free_coords;       // one per free generator
    std::vector<Int> torsion_residues;  // one per torsion factor, in [0, d)
    bool operator==(const ClassCoordinates&) const = default;
    bool is_zero() const;
};

struct HomologyGroup {
    int dim = 0;
    int betti = 0;
    std::vector<Int> torsion;  // invariant factors > 1, divisibility order
    std::vector<Chain> generators;          // free generators (cycles)
    std::vector<Chain> torsion_generators;  // paired with `torsion`

    // Solver state for class_coordinates: the quotient k-cells, the
    // cycle-space basis and the normal form of the boundary-image matrix.
    struct Solver {
        std::vector<Cell> cells;    // k-cells of X \ A, sorted
        std::map<Cell, int> index;
        bool relative = false;
        IntMat quotient_boundary;   // D_k on the quotient
        SNFResult cycle_basis_snf;  // SNF of the kernel basis K
        IntMat kernel;              // K
        IntMat um;                  // U of SNF(M), M = boundaries in K-coords
        std::vector<Int> diag;      // diagonal of SNF(M), positive entries
    };
    Solver solver;

    std::string format() const;  // "Z^b + Z/t1 + ..." or "0"
};

/// H_k(X); k may exceed the top dimension (trivial group); negative k
/// raises DimensionOutOfRange.
HomologyGroup homology(const CellComplex& X, int k);

/// H_k(X, A) computed on the quotient complex (cells of X not in A,
/// boundary taken mod A). Raises SubNotContained if A is not a
/// subcomplex of X.
HomologyGroup relative_homology(const RelativePair& p, int k);

/// A filling y with boundary(y) = z if one exists over Z.
std::optional<Chain> is_boundary(const Chain& z, const CellComplex& X);

/// Coordinates of a (relative) cycle in the group's generator basis.
/// Cycles are homologous iff their coordinates agree. For relative
/// groups, terms supported on A are quotiented away.
ClassCoordinates class_coordinates(const Chain& z, const HomologyGroup& H);

}  // namespace chaincal
