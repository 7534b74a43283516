#include "chaincal/cellmap.hpp"

#include <algorithm>

namespace chaincal {

namespace {

// Sign of the permutation sorting `ids`; 0 on duplicates.
int sort_sign(std::vector<int64_t>& ids)
{
    int sign = 1;
    for (size_t i = 0; i < ids.size(); ++i)
        for (size_t j = i + 1; j < ids.size(); ++j) {
            if (ids[i] == ids[j]) return 0;
            if (ids[i] > ids[j]) {
                std::swap(ids[i], ids[j]);
                sign = -sign;
            }
        }
    return sign;
}

}  // namespace

CellularMap CellularMap::simplicial(const CellComplex& source,
                                    const CellComplex& target,
                                    std::map<int64_t, int64_t> vertex_map)
{
    CellularMap f;
    f.kind_ = CellKind::simplicial;
    f.source_ = source;
    f.target_ = target;
    f.vmap_ = std::move(vertex_map);
    f.validate();
    return f;
}

CellularMap CellularMap::cubical(
    const CellComplex& source, const CellComplex& target,
    std::map<std::vector<int64_t>, std::vector<int64_t>> lattice_map)
{
    CellularMap f;
    f.kind_ = CellKind::cubical;
    f.source_ = source;
    f.target_ = target;
    f.lmap_ = std::move(lattice_map);
    f.validate();
    return f;
}

CellularMap CellularMap::identity(const CellComplex& X)
{
    if (X.kind() == CellKind::simplicial) {
        std::map<int64_t, int64_t> vm;
        for (const Cell& v : X.cells(0)) vm[v.v[0]] = v.v[0];
        return simplicial(X, X, std::move(vm));
    }
    std::map<std::vector<int64_t>, std::vector<int64_t>> lm;
    for (const Cell& v : X.cells(0)) lm[v.v] = v.v;
    return cubical(X, X, std::move(lm));
}

CellularMap CellularMap::compose(const CellularMap& g, const CellularMap& f)
{
    if (g.kind_ != f.kind_)
        throw NotCellular("composition of maps of different kinds");
    if (f.kind_ == CellKind::simplicial) {
        std::map<int64_t, int64_t> vm;
        for (const auto& [v, w] : f.vmap_) vm[v] = g.map_vertex(w);
        return simplicial(f.source_, g.target_, std::move(vm));
    }
    std::map<std::vector<int64_t>, std::vector<int64_t>> lm;
    for (const auto& [v, w] : f.lmap_) lm[v] = g.map_lattice(w);
    return cubical(f.source_, g.target_, std::move(lm));
}

int64_t CellularMap::map_vertex(int64_t v) const
{
    auto it = vmap_.find(v);
    if (it == vmap_.end())
        throw NotCellular("vertex has no image: " + std::to_string(v));
    return it->second;
}

std::vector<int64_t> CellularMap::map_lattice(const std::vector<int64_t>& v) const
{
    auto it = lmap_.find(v);
    if (it == lmap_.end()) {
        Cell c = Cell::vertex(v);
        throw NotCellular("lattice vertex has no image: " + c.key());
    }
    return it->second;
}

SignedCell CellularMap::image(const Cell& c) const
{
    if (kind_ == CellKind::simplicial) {
        std::vector<int64_t> ids;
        ids.reserve(c.v.size());
        for (int64_t v : c.v) ids.push_back(map_vertex(v));
        int sign = sort_sign(ids);
        if (sign == 0) {
            // Degenerate: the image is the distinct-id simplex.
            std::sort(ids.begin(), ids.end());
            ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        }
        Cell img = Cell::simplex(std::move(ids));
        if (!target_.contains(img))
            throw NotCellular("image spans no simplex of the target: " +
                              img.key());
        return {std::move(img), sign};
    }

    // Cubical: evaluate the vertex assignment on the cell's corners and
    // check it factors per axis.
    size_t k = c.axes.size();
    int n_tgt = target_.grid().dim;
    size_t corners = size_t(1) << k;
    std::vector<std::vector<int64_t>> img(corners);
    for (size_t bits = 0; bits < corners; ++bits) {
        std::vector<int64_t> v = c.v;
        for (size_t j = 0; j < k; ++j)
            if (bits & (size_t(1) << j)) v[c.axes[j]] += 1;
        img[bits] = map_lattice(v);
        if (static_cast<int>(img[bits].size()) != n_tgt)
            throw NotCellular("image vertex arity mismatch");
    }

    // For each target axis, which source axis moves it, and which way.
    std::vector<int> driver(n_tgt, -1);
    std::vector<int> step(n_tgt, 0);
    for (int b = 0; b < n_tgt; ++b) {
        for (size_t j = 0; j < k; ++j) {
            int64_t delta0 = 0;
            bool moves = false;
            for (size_t bits = 0; bits < corners; ++bits) {
                if (bits & (size_t(1) << j)) continue;
                int64_t d = img[bits | (size_t(1) << j)][b] - img[bits][b];
                if (bits == 0) delta0 = d;
                else if (d != delta0)
                    throw NotCellular("cell image does not factor through axes");
                if (d != 0) moves = true;
            }
            if (moves) {
                if (delta0 != 1 && delta0 != -1)
                    throw NotCellular("image step is not a lattice edge");
                if (driver[b] >= 0)
                    throw NotCellular("two source axes drive one target axis");
                driver[b] = int(j);
                step[b] = int(delta0);
            }
        }
    }
    // A source axis driving two target axes would shear the cell off the
    // lattice; detect by counting.
    std::vector<int> used(k, 0);
    for (int b = 0; b < n_tgt; ++b)
        if (driver[b] >= 0 && ++used[size_t(driver[b])] > 1)
            throw NotCellular("source axis drives two target axes");

    std::vector<int64_t> anchor(n_tgt);
    std::vector<int32_t> axes_out;
    for (int b = 0; b < n_tgt; ++b) {
        int64_t lo = img[0][b];
        if (driver[b] >= 0) {
            int64_t other = img[size_t(1) << driver[b]][b];
            lo = std::min(lo, other);
            axes_out.push_back(b);
        }
        anchor[b] = lo;
    }
    Cell out = Cell::cube(std::move(anchor), std::move(axes_out));
    out = target_.canonical(out);
    if (!target_.contains(out))
        throw NotCellular("image spans no cell of the target: " + out.key());

    int sign;
    if (out.dim() < c.dim()) {
        sign = 0;
    } else {
        // Orientation: per-axis direction signs times the parity of the
        // source-axis order induced on the sorted target axes.
        sign = 1;
        std::vector<int64_t> order;
        for (int b = 0; b < n_tgt; ++b)
            if (driver[b] >= 0) {
                sign *= step[b];
                order.push_back(driver[b]);
            }
        std::vector<int64_t> tmp = order;
        int parity = sort_sign(tmp);
        sign *= parity;
    }
    return {std::move(out), sign};
}

void CellularMap::validate() const
{
    for (int d = 0; d <= source_.top_dim(); ++d)
        for (const Cell& c : source_.cells(d)) (void)image(c);
}

Chain pushforward(const Chain& c, const CellularMap& f)
{
    Chain out(c.dim());
    for (const auto& [cell, m] : c.terms()) {
        if (!f.source().contains(cell))
            throw NotInComplex("chain cell outside the map's source: " +
                               cell.key());
        auto [img, sign] = f.image(cell);
        if (sign != 0) out.add(img, sign * m);
    }
    return out;
}

}  // namespace chaincal
