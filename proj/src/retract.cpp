#include "chaincal/retract.hpp"

#include <algorithm>
#include <set>

namespace chaincal {

namespace {

// Sorted simplex from arbitrary ids with the permutation sign; sign 0 on
// duplicates.
std::pair<Cell, int> oriented_simplex(std::vector<int64_t> ids)
{
    int sign = 1;
    for (size_t i = 0; i < ids.size(); ++i)
        for (size_t j = i + 1; j < ids.size(); ++j) {
            if (ids[i] == ids[j]) return {Cell(), 0};
            if (ids[i] > ids[j]) {
                std::swap(ids[i], ids[j]);
                sign = -sign;
            }
        }
    return {Cell::simplex(std::move(ids)), sign};
}

// Cone of a chain from a fresh apex: apex * [w...] = [apex, w...].
Chain cone(int64_t apex, const Chain& c)
{
    Chain out(c.dim() + 1);
    for (const auto& [cell, m] : c.terms()) {
        std::vector<int64_t> ids = cell.v;
        ids.insert(ids.begin(), apex);
        auto [simplex, sign] = oriented_simplex(std::move(ids));
        if (sign != 0) out.add(simplex, sign * m);
    }
    return out;
}

std::set<int64_t> vertex_ids(const CellComplex& X)
{
    std::set<int64_t> out;
    for (const Cell& v : X.cells(0)) out.insert(v.v[0]);
    return out;
}

}  // namespace

Chain SubdivisionResult::apply(const Chain& c) const
{
    Chain out(c.dim());
    for (const auto& [cell, m] : c.terms()) {
        auto it = cell_image.find(cell);
        if (it == cell_image.end())
            throw NotInComplex("chain cell outside the subdivided complex: " +
                               cell.key());
        out += m * Chain(it->second);
    }
    return out;
}

CellComplex SubdivisionResult::map_subcomplex(const CellComplex& L) const
{
    std::vector<Cell> cells;
    for (int k = 0; k <= L.top_dim(); ++k)
        for (const Cell& c : L.cells(k)) {
            auto it = cell_image.find(c);
            if (it == cell_image.end())
                throw NotSubcomplex("subcomplex cell unknown to the subdivision");
            for (const auto& [img, m] : it->second.terms()) {
                (void)m;
                cells.push_back(img);
            }
        }
    return CellComplex::simplicial(complex.vertex_coords(), cells);
}

SubdivisionResult barycentric_subdivision(const CellComplex& K)
{
    if (K.kind() != CellKind::simplicial)
        throw DimensionMismatch("barycentric subdivision needs a simplicial complex");
    SubdivisionResult out;

    // Barycenter ids in dimension-major canonical order, so the apex of
    // every cone has a larger id than the barycenters of its faces.
    int64_t next_id = 0;
    std::vector<std::vector<Rat>> coords;
    for (int k = 0; k <= K.top_dim(); ++k)
        for (const Cell& c : K.cells(k)) {
            out.barycenter_id[c] = next_id++;
            coords.push_back(K.cell_point(c));
        }

    // sd by the cone recursion, bottom up.
    for (int k = 0; k <= K.top_dim(); ++k)
        for (const Cell& c : K.cells(k)) {
            if (k == 0) {
                out.cell_image[c] =
                    Chain::single(Cell::simplex({out.barycenter_id[c]}));
                continue;
            }
            Chain boundary_image(k - 1);
            for (auto& [face, sign] : cell_faces(c))
                boundary_image += sign * Chain(out.cell_image.at(face));
            out.cell_image[c] = cone(out.barycenter_id[c], boundary_image);
        }

    std::vector<Cell> cells;
    for (const auto& [cell, chain] : out.cell_image) {
        (void)cell;
        for (const auto& [img, m] : chain.terms()) {
            (void)m;
            cells.push_back(img);
        }
    }
    out.complex = CellComplex::simplicial(std::move(coords), cells);
    return out;
}

bool is_full(const CellComplex& K, const CellComplex& L)
{
    if (!L.is_subcomplex_of(K))
        throw NotSubcomplex("L is not a subcomplex of K");
    std::set<int64_t> lv = vertex_ids(L);
    for (int k = 1; k <= K.top_dim(); ++k)
        for (const Cell& c : K.cells(k)) {
            bool spanned = std::all_of(c.v.begin(), c.v.end(),
                                       [&](int64_t v) { return lv.count(v); });
            if (spanned && !L.contains(c)) return false;
        }
    return true;
}

std::vector<Cell> regular_neighborhood(const CellComplex& K,
                                       const CellComplex& L)
{
    if (!is_full(K, L)) throw NotFull("L is not full in K");
    std::set<int64_t> lv = vertex_ids(L);
    std::vector<Cell> out;
    for (int k = 0; k <= K.top_dim(); ++k)
        for (const Cell& c : K.cells(k))
            if (std::any_of(c.v.begin(), c.v.end(),
                            [&](int64_t v) { return lv.count(v); }))
                out.push_back(c);
    return out;
}

void BarycentricPoint::validate(const CellComplex& K) const
{
    if (!K.contains(carrier)) throw NotInComplex("carrier not in the complex");
    Rat sum = 0;
    for (const auto& [v, w] : coords) {
        if (w < 0) throw DimensionMismatch("negative barycentric weight");
        if (std::find(carrier.v.begin(), carrier.v.end(), v) == carrier.v.end())
            throw DimensionMismatch("weight on a vertex outside the carrier");
        sum += w;
    }
    if (sum != 1) throw DimensionMismatch("barycentric weights must sum to 1");
}

std::vector<Rat> BarycentricPoint::euclidean(const CellComplex& K) const
{
    const auto& table = K.vertex_coords();
    size_t n = table.at(size_t(carrier.v[0])).size();
    std::vector<Rat> p(n, Rat(0));
    for (const auto& [v, w] : coords)
        for (size_t i = 0; i < n; ++i) p[i] += w * table[size_t(v)][i];
    return p;
}

BarycentricPoint retract_point(const BarycentricPoint& alpha,
                               const CellComplex& K, const CellComplex& L)
{
    alpha.validate(K);
    std::set<int64_t> lv = vertex_ids(L);
    Rat l_mass = 0;
    for (const auto& [v, w] : alpha.coords)
        if (lv.count(v)) l_mass += w;
    if (l_mass == 0)
        throw OutsideNeighborhood("zero barycentric mass on L");

    BarycentricPoint out;
    std::vector<int64_t> face;
    for (int64_t v : alpha.carrier.v)
        if (lv.count(v)) face.push_back(v);
    out.carrier = Cell::simplex(std::move(face));
    if (!L.contains(out.carrier))
        throw NotFull("carrier's L-face is missing from L");
    for (const auto& [v, w] : alpha.coords)
        if (lv.count(v) && w != 0) out.coords[v] = w / l_mass;
    return out;
}

RetractChainResult retract_chain(const Chain& c, const CellComplex& K,
                                 const CellComplex& L, int max_subdivisions)
{
    if (!is_full(K, L)) throw NotFull("L is not full in K");
    if (!K.carries(c)) throw NotInComplex("chain is not carried by K");
    {
        std::set<Cell> nbhd;
        for (const Cell& s : regular_neighborhood(K, L)) nbhd.insert(s);
        for (const auto& [cell, m] : c.terms()) {
            (void)m;
            if (!nbhd.count(cell))
                throw SupportEscapesNeighborhood("cell outside N(L): " +
                                                 cell.key());
        }
    }

    RetractChainResult res;
    res.refined_K = K;
    res.refined_L = L;
    res.refined_input = c;

    for (int s = 0; s <= max_subdivisions; ++s) {
        const CellComplex& Ks = res.refined_K;
        const CellComplex& Ls = res.refined_L;
        const Chain& cs = res.refined_input;
        std::set<int64_t> lv = vertex_ids(Ls);

        // Vertex map: identity on L, otherwise the nearest L-vertex of
        // the star (ties by lowest id).
        std::map<int64_t, int64_t> g;
        auto map_of = [&](int64_t v) -> int64_t {
            auto it = g.find(v);
            if (it != g.end()) return it->second;
            int64_t best = -1;
            if (lv.count(v)) {
                best = v;
            } else {
                Rat best_d2 = 0;
                const auto& table = Ks.vertex_coords();
                for (int k = 1; k <= Ks.top_dim(); ++k)
                    for (const Cell& simplex : Ks.cells(k)) {
                        if (std::find(simplex.v.begin(), simplex.v.end(), v) ==
                            simplex.v.end())
                            continue;
                        for (int64_t w : simplex.v) {
                            if (!lv.count(w)) continue;
                            Rat d2 = 0;
                            for (size_t t = 0; t < table[size_t(v)].size(); ++t) {
                                Rat d = table[size_t(v)][t] - table[size_t(w)][t];
                                d2 += d * d;
                            }
                            if (best < 0 || d2 < best_d2 ||
                                (d2 == best_d2 && w < best)) {
                                best = w;
                                best_d2 = d2;
                            }
                        }
                    }
                if (best < 0)
                    throw SupportEscapesNeighborhood(
                        "vertex star meets no L-vertex");
            }
            g[v] = best;
            return best;
        };

        // The map is usable when every support cell's image spans a
        // simplex of L.
        bool valid = true;
        for (const auto& [cell, m] : cs.terms()) {
            (void)m;
            std::vector<int64_t> img;
            for (int64_t v : cell.v) img.push_back(map_of(v));
            std::sort(img.begin(), img.end());
            img.erase(std::unique(img.begin(), img.end()), img.end());
            if (!Ls.contains(Cell::simplex(img))) {
                valid = false;
                break;
            }
        }
        if (valid) {
            Chain image(cs.dim());
            for (const auto& [cell, m] : cs.terms()) {
                std::vector<int64_t> img;
                for (int64_t v : cell.v) img.push_back(map_of(v));
                auto [simplex, sign] = oriented_simplex(std::move(img));
                if (sign != 0) image.add(simplex, sign * m);
            }
            res.image = std::move(image);
            res.subdivisions = s;
            return res;
        }
        if (s == max_subdivisions) break;

        SubdivisionResult sd = barycentric_subdivision(Ks);
        res.refined_input = sd.apply(cs);
        res.refined_L = sd.map_subcomplex(Ls);
        res.refined_K = std::move(sd.complex);
    }
    throw SupportEscapesNeighborhood(
        "simplicial approximation did not stabilize within the subdivision cap");
}

}  // namespace chaincal
