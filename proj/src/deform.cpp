#include "chaincal/deform.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

namespace chaincal {

std::vector<Cell> GridSkeleton::cells() const
{
    std::vector<Cell> out;
    int n = grid.dim;
    // choose `dim` axes, then every anchor with room for the spanned axes
    std::vector<int32_t> axes;
    std::vector<int32_t> pick(dim);
    auto emit_for_axes = [&](const std::vector<int32_t>& ax) {
        std::vector<int64_t> anchor = grid.bbox_lo;
        while (true) {
            bool ok = true;
            for (int32_t a : ax)
                if (anchor[a] + 1 > grid.bbox_hi[a]) ok = false;
            if (ok) out.push_back(Cell::cube(anchor, ax));
            int i = 0;
            for (; i < n; ++i) {
                if (++anchor[i] <= grid.bbox_hi[i]) break;
                anchor[i] = grid.bbox_lo[i];
            }
            if (i == n) break;
        }
    };
    // iterate axis subsets of size `dim`
    std::function<void(int, int)> rec = [&](int start, int chosen) {
        if (chosen == dim) {
            emit_for_axes(pick);
            return;
        }
        for (int a = start; a < n; ++a) {
            pick[chosen] = a;
            rec(a + 1, chosen + 1);
        }
    };
    if (dim == 0) emit_for_axes({});
    else rec(0, 0);
    (void)axes;
    return out;
}

int count_half_coordinates(const std::vector<Rat>& p, const CubicalGrid& g)
{
    int count = 0;
    for (int i = 0; i < g.dim; ++i) {
        Rat u = (p[i] - g.offset[i]) / g.edge;
        Rat frac = u - Rat(rat_floor(u));
        if (frac == Rat(1, 2)) ++count;
    }
    return count;
}

bool on_dual_skeleton(const std::vector<Rat>& p, const CubicalGrid& g, int j)
{
    return count_half_coordinates(p, g) >= g.dim - j;
}

std::vector<Rat> radial_project(const std::vector<Rat>& p, const Cell& cube,
                                const CubicalGrid& g, int target_dim)
{
    if (cube.dim() != g.dim)
        throw std::invalid_argument("radial projection needs a top cell");
    std::vector<Rat> lo, hi;
    g.cell_box(cube, lo, hi);
    int n = g.dim;
    for (int i = 0; i < n; ++i)
        if (p[i] < lo[i] || p[i] > hi[i])
            throw std::invalid_argument("point outside the cube");

    std::vector<Rat> x = p;
    auto free_axes = [&]() {
        std::vector<int> free;
        for (int i = 0; i < n; ++i)
            if (x[i] != lo[i] && x[i] != hi[i]) free.push_back(i);
        return free;
    };

    std::vector<int> free = free_axes();
    Rat half = g.edge / 2;
    while (static_cast<int>(free.size()) > target_dim) {
        // Center of the current carrier face; project from it onto the
        // face's boundary along the sup-norm ray through x.
        Rat maxu = 0;
        for (int i : free) {
            Rat u = x[i] - (lo[i] + half);
            if (u < 0) u = -u;
            if (u > maxu) maxu = u;
        }
        if (maxu == 0)
            throw CenterSingularity("point is the center of its carrier face");
        Rat t = half / maxu;
        for (int i : free) {
            Rat q = lo[i] + half;
            x[i] = q + t * (x[i] - q);
        }
        free = free_axes();
    }
    return x;
}

namespace {

// Support vertices of a chain: the 0-faces of every cell.
std::set<std::vector<int64_t>> support_vertices(const Chain& c)
{
    std::set<std::vector<int64_t>> out;
    for (const auto& [cell, m] : c.terms()) {
        (void)m;
        size_t k = cell.axes.size();
        for (size_t bits = 0; bits < (size_t(1) << k); ++bits) {
            std::vector<int64_t> v = cell.v;
            for (size_t j = 0; j < k; ++j)
                if (bits & (size_t(1) << j)) v[cell.axes[j]] += 1;
            out.insert(std::move(v));
        }
    }
    return out;
}

bool offset_ok(const std::set<std::vector<int64_t>>& verts,
               const CubicalGrid& fine, const CubicalGrid& coarse)
{
    for (const auto& v : verts) {
        std::vector<Rat> p = fine.vertex_point(v);
        if (count_half_coordinates(p, coarse) > 0) return false;
    }
    return true;
}

void check_compatible(const CubicalGrid& fine, const CubicalGrid& coarse)
{
    if (fine.dim != coarse.dim)
        throw DimensionMismatch("fine and coarse grids disagree in dimension");
    if (fine.periodic() || coarse.periodic())
        throw DimensionMismatch("deformation needs plain grids");
    Rat ratio = coarse.edge / fine.edge;
    if (!rat_is_int(ratio) || ratio < 1)
        throw DimensionMismatch("fine edge must divide the coarse edge");
}

}  // namespace

std::vector<Rat> select_offset(const std::vector<const Chain*>& batch,
                               const CubicalGrid& fine,
                               const CubicalGrid& coarse_template, uint64_t seed,
                               int max_retries)
{
    if (batch.empty())
        throw DimensionMismatch("offset selection needs a nonempty batch");
    check_compatible(fine, coarse_template);
    std::set<std::vector<int64_t>> verts;
    for (const Chain* c : batch)
        for (const auto& v : support_vertices(*c)) verts.insert(v);

    std::mt19937_64 rng(seed);
    Rat half_fine = fine.edge / 2;
    for (int attempt = 0; attempt <= max_retries; ++attempt) {
        CubicalGrid cand = coarse_template;
        cand.offset = fine.offset;
        if (attempt > 0)
            for (int i = 0; i < fine.dim; ++i)
                if (rng() & 1) cand.offset[i] += half_fine;
        if (offset_ok(verts, fine, cand)) return cand.offset;
    }
    throw OffsetSearchExhausted("no generic translation found; refine the grid");
}

CubicalGrid common_refinement(const CubicalGrid& fine, const CubicalGrid& coarse)
{
    check_compatible(fine, coarse);
    Rat step = rat_gcd(fine.edge, coarse.edge);
    for (int i = 0; i < fine.dim; ++i) {
        Rat d = coarse.offset[i] - fine.offset[i];
        if (d < 0) d = -d;
        step = rat_gcd(step, d);
    }
    CubicalGrid g;
    g.dim = fine.dim;
    g.edge = step;
    g.offset = fine.offset;
    g.bbox_lo.resize(fine.dim);
    g.bbox_hi.resize(fine.dim);
    Rat scale = fine.edge / step;
    int64_t r = static_cast<int64_t>(rat_num(scale));
    int64_t pad = 2 * static_cast<int64_t>(rat_num(coarse.edge / step));
    for (int i = 0; i < fine.dim; ++i) {
        g.bbox_lo[i] = fine.bbox_lo[i] * r - pad;
        g.bbox_hi[i] = fine.bbox_hi[i] * r + pad;
    }
    g.validate();
    return g;
}

namespace {

// Half-open rational interval [lo, hi] with lo == hi meaning a point;
// one per axis of a homotopy box.
struct Box {
    std::vector<Rat> lo, hi;
};

// Expand an axis-aligned box into the cells of the common grid.
void accumulate_box(Chain& acc, const Box& box, const Int& coeff,
                    const CubicalGrid& common)
{
    int n = common.dim;
    std::vector<int64_t> base(n);
    std::vector<int64_t> len(n);
    std::vector<int32_t> axes;
    for (int i = 0; i < n; ++i) {
        Rat lo_idx = (box.lo[i] - common.offset[i]) / common.edge;
        Rat hi_idx = (box.hi[i] - common.offset[i]) / common.edge;
        if (!rat_is_int(lo_idx) || !rat_is_int(hi_idx))
            throw DimensionMismatch("homotopy box off the common grid");
        base[i] = static_cast<int64_t>(rat_num(lo_idx));
        len[i] = static_cast<int64_t>(rat_num(hi_idx)) - base[i];
        if (len[i] > 0) axes.push_back(i);
    }
    std::vector<int64_t> steps(axes.size(), 0);
    while (true) {
        std::vector<int64_t> anchor = base;
        for (size_t j = 0; j < axes.size(); ++j) anchor[axes[j]] += steps[j];
        acc.add(Cell::cube(std::move(anchor), axes), coeff);
        size_t j = 0;
        for (; j < axes.size(); ++j) {
            if (++steps[j] < len[axes[j]]) break;
            steps[j] = 0;
        }
        if (j == axes.size()) break;
    }
}

struct Deformer {
    const CubicalGrid& fine;
    const CubicalGrid& coarse;
    const CubicalGrid& common;

    // Nearest coarse lattice value; the offset validation guarantees no
    // exact halves among support vertices.
    Rat phi(int axis, const Rat& v) const
    {
        Rat u = (v - coarse.offset[axis]) / coarse.edge;
        auto r = rat_round_strict(u);
        if (!r)
            throw OffsetConflict("support vertex on a dual wall of the coarse grid");
        return coarse.offset[axis] + coarse.edge * *r;
    }

    // Pushforward of a single cell under the rounding map, accumulated
    // into `P` over coarse cells.
    void push_cell(Chain& P, const Cell& c, const Int& m) const
    {
        int n = fine.dim;
        std::vector<int64_t> anchor(n);
        std::vector<int32_t> axes;
        for (int i = 0; i < n; ++i) {
            Rat x = fine.coord(i, c.v[i]);
            Rat lo = phi(i, x);
            if (c.spans(i)) {
                Rat hi = phi(i, x + fine.edge);
                if (hi == lo) return;  // degenerate, contributes zero
                anchor[i] = static_cast<int64_t>(
                    rat_num((lo - coarse.offset[i]) / coarse.edge));
                axes.push_back(i);
            } else {
                anchor[i] = static_cast<int64_t>(
                    rat_num((lo - coarse.offset[i]) / coarse.edge));
            }
        }
        P.add(Cell::cube(std::move(anchor), std::move(axes)), m);
    }

    // Telescoped product homotopy between the identity and the rounding
    // map: H(c) = sum_i (+-) phi(c_<i) x track_i(c_i) x c_>i, where the
    // track of an unspanned axis is the swept segment and spanned axes
    // contribute nothing. Satisfies dH + Hd = phi_# - id.
    void homotopy_cell(Chain& acc, const Cell& c, const Int& m) const
    {
        int n = fine.dim;
        for (int i = 0; i < n; ++i) {
            if (c.spans(i)) continue;
            Rat xi = fine.coord(i, c.v[i]);
            Rat fi = phi(i, xi);
            if (fi == xi) continue;
            int sweep_sign = fi > xi ? 1 : -1;

            Box box;
            box.lo.resize(n);
            box.hi.resize(n);
            int koszul = 1;
            bool dead = false;
            for (int j = 0; j < n && !dead; ++j) {
                Rat xj = fine.coord(j, c.v[j]);
                if (j < i) {
                    if (c.spans(j)) {
                        Rat lo = phi(j, xj), hi = phi(j, xj + fine.edge);
                        if (lo == hi) {
                            dead = true;
                            break;
                        }
                        box.lo[j] = lo;
                        box.hi[j] = hi;
                        koszul = -koszul;
                    } else {
                        box.lo[j] = box.hi[j] = phi(j, xj);
                    }
                } else if (j == i) {
                    box.lo[j] = std::min(xi, fi);
                    box.hi[j] = std::max(xi, fi);
                } else {
                    box.lo[j] = xj;
                    box.hi[j] = c.spans(j) ? xj + fine.edge : xj;
                }
            }
            if (dead) continue;
            accumulate_box(acc, box, m * koszul * sweep_sign, common);
        }
    }
};

}  // namespace

DeformationResult deform(const Chain& T, const CubicalGrid& fine,
                         const CubicalGrid& coarse)
{
    check_compatible(fine, coarse);
    int k = T.dim();

    DeformationResult out;
    out.T = T;
    out.fine = fine;
    out.coarse = coarse;
    out.common = common_refinement(fine, coarse);
    Deformer d{fine, coarse, out.common};

    // Validate genericity up front so the error is not term-order
    // dependent.
    for (const auto& v : support_vertices(T))
        if (count_half_coordinates(fine.vertex_point(v), coarse) > 0)
            throw OffsetConflict("support vertex on a dual wall of the coarse grid");

    Chain dT = (k >= 1) ? boundary(T) : Chain(0);

    out.P = Chain(k);
    for (const auto& [cell, m] : T.terms()) d.push_cell(out.P, cell, m);

    Chain HT(k + 1);
    for (const auto& [cell, m] : T.terms()) d.homotopy_cell(HT, cell, m);
    out.L = -HT;

    Chain HdT(k);
    if (k >= 1)
        for (const auto& [cell, m] : dT.terms()) d.homotopy_cell(HdT, cell, m);
    out.Q = -HdT;

    // The decomposition identity, verified on the common refinement.
    Chain residue = subdivide_chain(T, fine, out.common);
    residue -= subdivide_chain(out.P, coarse, out.common);
    residue -= out.Q;
    if (!out.L.is_zero()) residue -= boundary(out.L);
    if (!residue.is_zero())
        throw std::logic_error("deformation identity violated");

    // Mass ratios.
    Rat mT = mass(T, fine);
    Rat mdT = (k >= 1) ? mass(dT, fine) : Rat(0);
    Rat mP = mass(out.P, coarse);
    Rat mdP = (k >= 1 && !out.P.is_zero()) ? mass(boundary(out.P), coarse) : Rat(0);
    Rat mQ = mass(out.Q, out.common);
    Rat mL = mass(out.L, out.common);
    Rat e = coarse.edge;
    auto ratio = [](const Rat& num, const Rat& den) {
        return den == 0 ? Rat(0) : num / den;
    };
    out.kappa_observed[0] = ratio(mP, mT + e * mdT);
    out.kappa_observed[1] = ratio(mdP, mdT);
    out.kappa_observed[2] = ratio(mQ, e * mdT);
    out.kappa_observed[3] = ratio(mL, e * mT);

    // Support radius over the centers of P, Q, L.
    out.support_radius = 0;
    if (!T.is_zero()) {
        auto update = [&](const Chain& c, const CubicalGrid& g) {
            for (const auto& [cell, m] : c.terms()) {
                (void)m;
                Rat r = chebyshev_to_support(g.cell_center(cell), T, fine);
                if (r > out.support_radius) out.support_radius = r;
            }
        };
        update(out.P, coarse);
        update(out.Q, out.common);
        update(out.L, out.common);
    }
    return out;
}

}  // namespace chaincal
