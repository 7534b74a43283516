#include "chaincal/chain.hpp"

#include <algorithm>

namespace chaincal {

void Chain::add(const Cell& c, const Int& m)
{
    if (m == 0) return;
    if (c.dim() != dim_)
        throw DimensionMismatch("cell dimension does not match chain");
    auto [it, inserted] = terms_.try_emplace(c, m);
    if (!inserted) {
        it->second += m;
        if (it->second == 0) terms_.erase(it);
    }
}

Chain& Chain::operator+=(const Chain& o)
{
    if (o.is_zero()) return *this;
    if (is_zero() && dim_ != o.dim_ && terms_.empty()) dim_ = o.dim_;
    for (const auto& [cell, m] : o.terms_) add(cell, m);
    return *this;
}

Chain& Chain::operator-=(const Chain& o)
{
    if (o.is_zero()) return *this;
    if (is_zero() && dim_ != o.dim_ && terms_.empty()) dim_ = o.dim_;
    for (const auto& [cell, m] : o.terms_) add(cell, -m);
    return *this;
}

Chain& Chain::operator*=(const Int& m)
{
    if (m == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [cell, coeff] : terms_) coeff *= m;
    return *this;
}

Chain Chain::operator-() const
{
    Chain out(dim_);
    for (const auto& [cell, m] : terms_) out.terms_.emplace(cell, -m);
    return out;
}

Chain Chain::single(const Cell& c, Int m)
{
    Chain out(c.dim());
    out.add(c, m);
    return out;
}

Chain boundary(const Chain& c)
{
    if (c.dim() == 0)
        throw ZeroDimBoundary("boundary of a 0-chain is rejected");
    Chain out(c.dim() - 1);
    for (const auto& [cell, m] : c.terms())
        for (const auto& [face, sign] : cell_faces(cell)) out.add(face, sign * m);
    return out;
}

Chain boundary(const Chain& c, const CubicalGrid& g)
{
    if (!g.periodic()) return boundary(c);
    if (c.dim() == 0)
        throw ZeroDimBoundary("boundary of a 0-chain is rejected");
    Chain out(c.dim() - 1);
    for (const auto& [cell, m] : c.terms())
        for (auto& [face, sign] : cell_faces(cell))
            out.add(g.canonical_cell(face), sign * m);
    return out;
}

Rat mass(const Chain& c, const CubicalGrid& g)
{
    Rat w = 1;
    for (int i = 0; i < c.dim(); ++i) w *= g.edge;
    Int total = 0;
    for (const auto& [cell, m] : c.terms()) total += abs(m);
    return w * total;
}

Chain restrict_chain(const Chain& c,
                     const std::function<bool(const Cell&)>& keep)
{
    Chain out(c.dim());
    for (const auto& [cell, m] : c.terms())
        if (keep(cell)) out.add(cell, m);
    return out;
}

Rat chebyshev(const std::vector<Rat>& p, const std::vector<Rat>& x0)
{
    if (p.size() != x0.size()) throw ArityMismatch("point arity mismatch");
    Rat best = 0;
    for (size_t i = 0; i < p.size(); ++i) {
        Rat d = p[i] - x0[i];
        if (d < 0) d = -d;
        if (d > best) best = d;
    }
    return best;
}

bool box_in_level_set(const Cell& c, const CubicalGrid& g,
                      const std::vector<Rat>& x0, const Rat& y)
{
    std::vector<Rat> lo, hi;
    g.cell_box(c, lo, hi);
    // Inside the closed cube in every axis, and pinned to one of the two
    // walls in at least one axis.
    bool pinned = false;
    for (int i = 0; i < g.dim; ++i) {
        Rat wall_lo = x0[i] - y, wall_hi = x0[i] + y;
        if (lo[i] < wall_lo || hi[i] > wall_hi) return false;
        if ((lo[i] == hi[i]) && (lo[i] == wall_lo || lo[i] == wall_hi))
            pinned = true;
    }
    return pinned;
}

Chain slice(const Chain& c, const CubicalGrid& g, const std::vector<Rat>& x0,
            const Rat& y)
{
    if (static_cast<int>(x0.size()) != g.dim)
        throw ArityMismatch("slice center arity mismatch");
    if (y <= 0) throw NonGenericRadius("slice radius must be positive");
    if (c.dim() == 0)
        throw ZeroDimBoundary("slice needs a chain of dimension >= 1");
    if (!boundary(c, g).is_zero())
        throw NotACycle("slice input must be a cycle");
    for (const auto& [cell, m] : c.terms()) {
        (void)m;
        for (const Cell& f : cell_closure(cell))
            if (box_in_level_set(f, g, x0, y))
                throw NonGenericRadius("cell face lies in the level set D = " +
                                       rat_str(y));
    }
    Chain kept = restrict_chain(c, [&](const Cell& cell) {
        return chebyshev(g.cell_center(cell), x0) > y;
    });
    if (kept.is_zero()) return Chain(c.dim() - 1);
    return boundary(kept, g);
}

Chain prism(const Chain& c, int grid_dim)
{
    // prism(c) = (-1)^k (c x I) with the interval appended as the last
    // axis; the sign makes the homotopy formula read
    // boundary(prism(c)) = top - bottom - prism(boundary(c)).
    Chain out(c.dim() + 1);
    int sign = (c.dim() % 2 == 0) ? 1 : -1;
    for (const auto& [cell, m] : c.terms()) {
        std::vector<int64_t> anchor = cell.v;
        anchor.push_back(0);
        std::vector<int32_t> axes = cell.axes;
        axes.push_back(grid_dim);
        out.add(Cell::cube(std::move(anchor), std::move(axes)), sign * m);
    }
    return out;
}

static Chain shift_level(const Chain& c, int64_t level)
{
    Chain out(c.dim());
    for (const auto& [cell, m] : c.terms()) {
        std::vector<int64_t> anchor = cell.v;
        anchor.push_back(level);
        out.add(Cell::cube(std::move(anchor), cell.axes), m);
    }
    return out;
}

Chain prism_top(const Chain& c) { return shift_level(c, 1); }
Chain prism_bottom(const Chain& c) { return shift_level(c, 0); }

CubicalGrid prism_grid(const CubicalGrid& g)
{
    CubicalGrid out = g;
    out.dim += 1;
    out.offset.push_back(Rat(0));
    out.bbox_lo.push_back(0);
    out.bbox_hi.push_back(1);
    if (out.periodic()) out.periods.push_back(2);
    return out;
}

Chain subdivide_chain(const Chain& c, const CubicalGrid& from,
                      const CubicalGrid& to)
{
    if (from.dim != to.dim)
        throw DimensionMismatch("subdivision grids disagree in dimension");
    if (from.periodic() || to.periodic())
        throw DimensionMismatch("subdivision of periodic grids is not supported");
    Rat ratio = from.edge / to.edge;
    if (!rat_is_int(ratio) || ratio < 1)
        throw DimensionMismatch("target edge must divide source edge");
    int64_t r = static_cast<int64_t>(rat_num(ratio));
    std::vector<int64_t> shift(from.dim);
    for (int i = 0; i < from.dim; ++i) {
        Rat s = (from.offset[i] - to.offset[i]) / to.edge;
        if (!rat_is_int(s))
            throw DimensionMismatch("grid offsets are not lattice-compatible");
        shift[i] = static_cast<int64_t>(rat_num(s));
    }
    Chain out(c.dim());
    for (const auto& [cell, m] : c.terms()) {
        std::vector<int64_t> base(from.dim);
        for (int i = 0; i < from.dim; ++i) base[i] = cell.v[i] * r + shift[i];
        size_t k = cell.axes.size();
        std::vector<int64_t> steps(k, 0);
        while (true) {
            std::vector<int64_t> anchor = base;
            for (size_t j = 0; j < k; ++j) anchor[cell.axes[j]] += steps[j];
            out.add(Cell::cube(std::move(anchor), cell.axes), m);
            size_t j = 0;
            for (; j < k; ++j) {
                if (++steps[j] < r) break;
                steps[j] = 0;
            }
            if (j == k) break;
        }
    }
    return out;
}

Rat chebyshev_to_support(const std::vector<Rat>& p, const Chain& support,
                         const CubicalGrid& g)
{
    bool first = true;
    Rat best = 0;
    for (const auto& [cell, m] : support.terms()) {
        (void)m;
        std::vector<Rat> lo, hi;
        g.cell_box(cell, lo, hi);
        Rat d = 0;
        for (int i = 0; i < g.dim; ++i) {
            Rat axis_d = 0;
            if (p[i] < lo[i]) axis_d = lo[i] - p[i];
            else if (p[i] > hi[i]) axis_d = p[i] - hi[i];
            if (axis_d > d) d = axis_d;
        }
        if (first || d < best) best = d;
        first = false;
    }
    if (first) throw EmptySet("support is empty");
    return best;
}

}  // namespace chaincal
