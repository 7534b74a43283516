/**
 * Integer chains and the elementary current operations: boundary, mass,
 * restriction, slicing, prism, and grid subdivision. A chain is a finite
 * formal sum of oriented k-cells with nonzero integer coefficients,
 * stored in canonical sparse form (sorted cell keys, no zeros).
 */
#pragma once

#include <functional>
#include <map>

#include "chaincal/cell.hpp"

namespace chaincal {

class Chain {
public:
    Chain() = default;
    explicit Chain(int dim) : dim_(dim) {}

    int dim() const { return dim_; }
    const std::map<Cell, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    Int coeff(const Cell& c) const
    {
        auto it = terms_.find(c);
        return it == terms_.end() ? Int(0) : it->second;
    }

    /// Accumulate m * cell, pruning a zero result.
    void add(const Cell& c, const Int& m);

    Chain& operator+=(const Chain& o);
    Chain& operator-=(const Chain& o);
    Chain& operator*=(const Int& m);
    friend Chain operator+(Chain a, const Chain& b) { return a += b; }
    friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
    friend Chain operator*(const Int& m, Chain a) { return a *= m; }
    Chain operator-() const;
    bool operator==(const Chain& o) const
    {
        return dim_ == o.dim_ && terms_ == o.terms_;
    }

    static Chain single(const Cell& c, Int m = 1);

private:
    int dim_ = 0;
    std::map<Cell, Int> terms_;
};

/// Boundary by local incidence (plain grids and simplicial vertex
/// tuples need no complex). Throws ZeroDimBoundary on dimension 0.
Chain boundary(const Chain& c);

/// Periodic-aware boundary: faces are canonicalized modulo the grid's
/// periods before accumulation.
Chain boundary(const Chain& c, const CubicalGrid& g);

/// Sum of |coefficient| * edge^k over the terms.
Rat mass(const Chain& c, const CubicalGrid& g);

/// Terms whose cell satisfies the predicate; idempotent and
/// complementary (keep + not-keep == original).
Chain restrict_chain(const Chain& c,
                     const std::function<bool(const Cell&)>& keep);

/// Chebyshev distance function D_{x0}(p) = max_i |p_i - x0_i|.
Rat chebyshev(const std::vector<Rat>& p, const std::vector<Rat>& x0);

/// Slice of a cycle at radius y around x0: the boundary of the
/// restriction to cells whose center lies outside the cube C(x0, y).
/// Exact genericity check: rejects radii where any face of any cell of
/// the chain lies inside the level set {D_{x0} = y}.
Chain slice(const Chain& c, const CubicalGrid& g, const std::vector<Rat>& x0,
            const Rat& y);

/// True iff the closed box of `c` lies inside {D_{x0} = y}.
bool box_in_level_set(const Cell& c, const CubicalGrid& g,
                      const std::vector<Rat>& x0, const Rat& y);

/// Cubical prism: appends one axis and shifts orientation so that
/// boundary(prism(c)) = top(c) - bottom(c) - prism(boundary(c)).
/// top/bottom are the inclusions at lattice levels 1 and 0 of the new
/// axis. (The simplicial prism lives with PrismComplex in complex.hpp.)
Chain prism(const Chain& c, int grid_dim);
Chain prism_top(const Chain& c);
Chain prism_bottom(const Chain& c);
/// Grid for prism chains: one extra axis with bbox [0,1].
CubicalGrid prism_grid(const CubicalGrid& g);

/// Rewrite a chain of `from` as the equal chain of the refinement `to`.
/// Requires to.edge | from.edge and compatible offsets; exact.
Chain subdivide_chain(const Chain& c, const CubicalGrid& from,
                      const CubicalGrid& to);

/// Chebyshev distance from a point to the union of the closed cells of
/// a chain's support (infinite-norm; exact).
Rat chebyshev_to_support(const std::vector<Rat>& p, const Chain& support,
                         const CubicalGrid& g);

}  // namespace chaincal
