#include "chaincal/complex.hpp"

#include <algorithm>

namespace chaincal {

namespace {

// Exact rank of the edge-vector matrix of a simplex; equals dim iff the
// vertices are affinely independent.
bool affinely_independent(const std::vector<std::vector<Rat>>& coords,
                          const Cell& simplex)
{
    int k = simplex.dim();
    if (k == 0) return true;
    size_t n = coords.at(simplex.v[0]).size();
    std::vector<std::vector<Rat>> m(k, std::vector<Rat>(n));
    for (int i = 0; i < k; ++i)
        for (size_t j = 0; j < n; ++j)
            m[i][j] = coords.at(simplex.v[i + 1])[j] - coords.at(simplex.v[0])[j];
    int rank = 0;
    for (size_t col = 0; col < n && rank < k; ++col) {
        int pivot = -1;
        for (int r = rank; r < k; ++r)
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int r = rank + 1; r < k; ++r) {
            if (m[r][col] == 0) continue;
            Rat f = m[r][col] / m[rank][col];
            for (size_t c = col; c < n; ++c) m[r][c] -= f * m[rank][c];
        }
        ++rank;
    }
    return rank == k;
}

}  // namespace

CellComplex CellComplex::cubical(CubicalGrid grid, const std::vector<Cell>& cells)
{
    CellComplex X;
    X.kind_ = CellKind::cubical;
    X.grid_ = std::move(grid);
    X.has_grid_ = true;
    for (const Cell& c : cells) {
        if (c.kind != CellKind::cubical)
            throw DimensionMismatch("cubical complex built from non-cubical cell");
        if (static_cast<int>(c.v.size()) != X.grid_.dim)
            throw DimensionMismatch("cell arity does not match grid");
        if (!X.grid_.periodic() && !X.grid_.cell_in_bbox(c))
            throw BBoxOverflow("cell outside the grid bbox: " + c.key());
        X.insert_with_faces(X.grid_.canonical_cell(c));
    }
    X.finalize();
    return X;
}

CellComplex CellComplex::simplicial(std::vector<std::vector<Rat>> vertex_coords,
                                    const std::vector<Cell>& simplices)
{
    CellComplex X;
    X.kind_ = CellKind::simplicial;
    X.coords_ = std::move(vertex_coords);
    for (const Cell& c : simplices) {
        if (c.kind != CellKind::simplicial)
            throw DimensionMismatch("simplicial complex built from non-simplex");
        for (int64_t v : c.v)
            if (v < 0 || v >= static_cast<int64_t>(X.coords_.size()))
                throw NotInComplex("simplex references unknown vertex");
        if (!affinely_independent(X.coords_, c))
            throw DimensionMismatch("degenerate simplex: " + c.key());
        X.insert_with_faces(c);
    }
    X.finalize();
    return X;
}

void CellComplex::insert_with_faces(const Cell& c)
{
    int d = c.dim();
    if (static_cast<int>(cells_.size()) <= d) cells_.resize(d + 1);
    if (index_.count(c)) return;
    index_.emplace(c, 0);  // final indices assigned in finalize()
    cells_[d].push_back(c);
    for (Cell f : cell_closure(c)) {
        if (has_grid_) f = grid_.canonical_cell(std::move(f));
        if (index_.count(f)) continue;
        index_.emplace(f, 0);
        cells_[f.dim()].push_back(f);
    }
}

void CellComplex::finalize()
{
    if (cells_.empty()) cells_.resize(1);
    for (auto& level : cells_) {
        std::sort(level.begin(), level.end());
        for (size_t i = 0; i < level.size(); ++i)
            index_[level[i]] = static_cast<int>(i);
    }
}

const CubicalGrid& CellComplex::grid() const
{
    if (!has_grid_) throw DimensionMismatch("complex has no grid");
    return grid_;
}

const std::vector<std::vector<Rat>>& CellComplex::vertex_coords() const
{
    if (kind_ != CellKind::simplicial)
        throw DimensionMismatch("cubical complex has no vertex table");
    return coords_;
}

int CellComplex::ambient_dim() const
{
    if (kind_ == CellKind::cubical) return grid().dim;
    return coords_.empty() ? 0 : static_cast<int>(coords_[0].size());
}

const std::vector<Cell>& CellComplex::cells(int k) const
{
    static const std::vector<Cell> none;
    if (k < 0 || k >= static_cast<int>(cells_.size())) return none;
    return cells_[k];
}

size_t CellComplex::total_cells() const
{
    size_t n = 0;
    for (const auto& level : cells_) n += level.size();
    return n;
}

bool CellComplex::contains(const Cell& c) const { return index_.count(c) > 0; }

int CellComplex::index_of(const Cell& c) const
{
    auto it = index_.find(c);
    return it == index_.end() ? -1 : it->second;
}

Cell CellComplex::canonical(const Cell& c) const
{
    return has_grid_ ? grid_.canonical_cell(c) : c;
}

Rat CellComplex::weight(const Cell& c) const
{
    if (!contains(c)) throw NotInComplex("weight of foreign cell " + c.key());
    if (kind_ == CellKind::cubical) {
        Rat w = 1;
        for (int i = 0; i < c.dim(); ++i) w *= grid_.edge;
        return w;
    }
    auto it = weight_cache_.find(c);
    if (it != weight_cache_.end()) return it->second;
    int k = c.dim();
    Rat w;
    if (k == 0) {
        w = 1;
    } else {
        // vol = sqrt(det Gram) / k!
        size_t n = coords_[c.v[0]].size();
        std::vector<std::vector<Rat>> e(k, std::vector<Rat>(n));
        for (int i = 0; i < k; ++i)
            for (size_t j = 0; j < n; ++j)
                e[i][j] = coords_[c.v[i + 1]][j] - coords_[c.v[0]][j];
        std::vector<std::vector<Rat>> gram(k, std::vector<Rat>(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                Rat s = 0;
                for (size_t t = 0; t < n; ++t) s += e[i][t] * e[j][t];
                gram[i][j] = s;
            }
        // det by fraction-free-ish elimination over Q
        Rat det = 1;
        for (int col = 0; col < k; ++col) {
            int pivot = -1;
            for (int r = col; r < k; ++r)
                if (gram[r][col] != 0) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) {
                det = 0;
                break;
            }
            if (pivot != col) {
                std::swap(gram[pivot], gram[col]);
                det = -det;
            }
            det *= gram[col][col];
            for (int r = col + 1; r < k; ++r) {
                if (gram[r][col] == 0) continue;
                Rat f = gram[r][col] / gram[col][col];
                for (int cc = col; cc < k; ++cc)
                    gram[r][cc] -= f * gram[col][cc];
            }
        }
        auto root = rat_sqrt_exact(det);
        if (!root)
            throw UnrepresentableWeight("simplex " + c.key() +
                                        " has irrational volume");
        Int fact = 1;
        for (int i = 2; i <= k; ++i) fact *= i;
        w = *root / Rat(fact);
        if (w <= 0)
            throw UnrepresentableWeight("simplex " + c.key() +
                                        " has nonpositive volume");
    }
    weight_cache_.emplace(c, w);
    return w;
}

Rat CellComplex::mass_of(const Chain& c) const
{
    Rat total = 0;
    for (const auto& [cell, m] : c.terms()) total += Rat(abs(m)) * weight(cell);
    return total;
}

Chain CellComplex::boundary_in(const Chain& c) const
{
    if (!carries(c)) throw NotInComplex("chain has cells outside the complex");
    if (c.dim() == 0)
        throw ZeroDimBoundary("boundary of a 0-chain is rejected");
    Chain out(c.dim() - 1);
    for (const auto& [cell, m] : c.terms())
        for (auto& [face, sign] : cell_faces(cell))
            out.add(canonical(face), sign * m);
    return out;
}

bool CellComplex::carries(const Chain& c) const
{
    for (const auto& [cell, m] : c.terms()) {
        (void)m;
        if (!contains(cell)) return false;
    }
    return true;
}

bool CellComplex::is_subcomplex_of(const CellComplex& ambient) const
{
    if (kind_ != ambient.kind_) return false;
    for (const auto& level : cells_)
        for (const Cell& c : level)
            if (!ambient.contains(c)) return false;
    return true;
}

std::vector<Rat> CellComplex::cell_point(const Cell& c) const
{
    if (kind_ == CellKind::cubical) return grid_.cell_center(c);
    size_t n = coords_[c.v[0]].size();
    std::vector<Rat> p(n, Rat(0));
    for (int64_t v : c.v)
        for (size_t j = 0; j < n; ++j) p[j] += coords_[v][j];
    Rat inv(1, c.v.size());
    for (auto& x : p) x *= inv;
    return p;
}

BoundaryOperator::BoundaryOperator(const CellComplex& X)
{
    int top = X.top_dim();
    counts_.resize(top + 1);
    for (int k = 0; k <= top; ++k)
        counts_[k] = static_cast<int>(X.cell_count(k));
    mats_.resize(top + 1);
    for (int k = 1; k <= top; ++k) {
        IntMat D(counts_[k - 1], counts_[k]);
        const auto& cols = X.cells(k);
        for (size_t j = 0; j < cols.size(); ++j)
            for (auto& [face, sign] : cell_faces(cols[j])) {
                int row = X.index_of(X.canonical(face));
                if (row < 0) throw NotInComplex("complex is not face-closed");
                D.at(row, static_cast<int>(j)) += sign;
            }
        mats_[k] = std::move(D);
    }
}

const IntMat& BoundaryOperator::dense(int k) const
{
    if (k >= 1 && k < static_cast<int>(mats_.size())) return mats_[k];
    return empty_;
}

int BoundaryOperator::num_cells(int k) const
{
    if (k < 0 || k >= static_cast<int>(counts_.size())) return 0;
    return counts_[k];
}

std::vector<Int> chain_to_vector(const Chain& c, const CellComplex& X)
{
    std::vector<Int> v(X.cell_count(c.dim()), Int(0));
    for (const auto& [cell, m] : c.terms()) {
        int i = X.index_of(cell);
        if (i < 0) throw NotInComplex("chain cell not in complex: " + cell.key());
        v[i] = m;
    }
    return v;
}

Chain vector_to_chain(const std::vector<Int>& v, const CellComplex& X, int k)
{
    Chain out(k);
    const auto& cells = X.cells(k);
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) out.add(cells[i], v[i]);
    return out;
}

PrismComplex prism_complex(const CellComplex& K)
{
    PrismComplex P;
    P.kind = K.kind();
    if (K.kind() == CellKind::cubical) {
        if (K.grid().periodic())
            throw DimensionMismatch("prism over periodic grids is not supported");
        CubicalGrid pg = prism_grid(K.grid());
        std::vector<Cell> cells;
        for (int k = 0; k <= K.top_dim(); ++k)
            for (const Cell& c : K.cells(k)) {
                Chain pc = prism(Chain::single(c), K.grid().dim);
                cells.push_back(pc.terms().begin()->first);
            }
        P.complex = CellComplex::cubical(std::move(pg), cells);
        return P;
    }
    const auto& coords = K.vertex_coords();
    P.vertex_count = static_cast<int64_t>(coords.size());
    std::vector<std::vector<Rat>> pc;
    pc.reserve(coords.size() * 2);
    for (int level = 0; level <= 1; ++level)
        for (const auto& p : coords) {
            std::vector<Rat> q = p;
            q.push_back(Rat(level));
            pc.push_back(std::move(q));
        }
    std::vector<Cell> cells;
    for (int k = 0; k <= K.top_dim(); ++k)
        for (const Cell& c : K.cells(k)) {
            // Triangulation of simplex x I: [a_0..a_i, b_i..b_k].
            for (size_t i = 0; i < c.v.size(); ++i) {
                std::vector<int64_t> ids;
                for (size_t j = 0; j <= i; ++j) ids.push_back(c.v[j]);
                for (size_t j = i; j < c.v.size(); ++j)
                    ids.push_back(c.v[j] + P.vertex_count);
                cells.push_back(Cell::simplex(std::move(ids)));
            }
        }
    P.complex = CellComplex::simplicial(std::move(pc), cells);
    return P;
}

Chain PrismComplex::apply(const Chain& c) const
{
    if (kind == CellKind::cubical) {
        // Grid dimension of the source is one less than the prism grid.
        return prism(c, complex.grid().dim - 1);
    }
    Chain out(c.dim() + 1);
    for (const auto& [cell, m] : c.terms()) {
        int sign = 1;
        for (size_t i = 0; i < cell.v.size(); ++i) {
            std::vector<int64_t> ids;
            for (size_t j = 0; j <= i; ++j) ids.push_back(cell.v[j]);
            for (size_t j = i; j < cell.v.size(); ++j)
                ids.push_back(cell.v[j] + vertex_count);
            out.add(Cell::simplex(std::move(ids)), sign * m);
            sign = -sign;
        }
    }
    return out;
}

Chain PrismComplex::top(const Chain& c) const
{
    if (kind == CellKind::cubical) return prism_top(c);
    Chain out(c.dim());
    for (const auto& [cell, m] : c.terms()) {
        std::vector<int64_t> ids = cell.v;
        for (auto& v : ids) v += vertex_count;
        out.add(Cell::simplex(std::move(ids)), m);
    }
    return out;
}

Chain PrismComplex::bottom(const Chain& c) const
{
    if (kind == CellKind::cubical) return prism_bottom(c);
    return c;
}

}  // namespace chaincal
