#include "chaincal/cell.hpp"

#include <algorithm>
#include <sstream>

namespace chaincal {

bool Cell::spans(int32_t axis) const
{
    return std::binary_search(axes.begin(), axes.end(), axis);
}

Cell Cell::cube(std::vector<int64_t> anchor, std::vector<int32_t> ax)
{
    Cell c;
    c.kind = CellKind::cubical;
    c.v = std::move(anchor);
    c.axes = std::move(ax);
    for (size_t i = 0; i < c.axes.size(); ++i) {
        if (c.axes[i] < 0 || c.axes[i] >= static_cast<int32_t>(c.v.size()))
            throw DimensionMismatch("axis outside ambient dimension");
        if (i > 0 && c.axes[i] <= c.axes[i - 1])
            throw DimensionMismatch("axes must be strictly increasing");
    }
    return c;
}

Cell Cell::vertex(std::vector<int64_t> anchor)
{
    return cube(std::move(anchor), {});
}

Cell Cell::simplex(std::vector<int64_t> vertex_ids)
{
    Cell c;
    c.kind = CellKind::simplicial;
    c.v = std::move(vertex_ids);
    for (size_t i = 1; i < c.v.size(); ++i)
        if (c.v[i] <= c.v[i - 1])
            throw DimensionMismatch("vertex ids must be strictly increasing");
    return c;
}

std::string Cell::key() const
{
    std::ostringstream os;
    if (kind == CellKind::cubical) {
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) os << ',';
            os << v[i];
        }
        os << '|';
        for (size_t i = 0; i < axes.size(); ++i) {
            if (i) os << ',';
            os << axes[i];
        }
    } else {
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) os << ' ';
            os << v[i];
        }
    }
    return os.str();
}

static std::vector<int64_t> parse_int_list(const std::string& s, char sep)
{
    std::vector<int64_t> out;
    if (s.empty()) return out;
    std::string item;
    std::istringstream is(s);
    while (std::getline(is, item, sep)) {
        if (item.empty()) continue;
        try {
            size_t pos = 0;
            int64_t value = std::stoll(item, &pos);
            if (pos != item.size()) throw std::invalid_argument(item);
            out.push_back(value);
        } catch (const std::exception&) {
            throw ParseError("bad integer in cell key: " + item);
        }
    }
    return out;
}

Cell Cell::parse(const std::string& key, CellKind kind)
{
    if (kind == CellKind::simplicial) {
        auto ids = parse_int_list(key, ' ');
        if (ids.empty()) throw ParseError("empty simplex key");
        return simplex(std::move(ids));
    }
    auto bar = key.find('|');
    if (bar == std::string::npos)
        throw ParseError("cubical cell key lacks '|': " + key);
    auto anchor = parse_int_list(key.substr(0, bar), ',');
    auto axes64 = parse_int_list(key.substr(bar + 1), ',');
    std::vector<int32_t> axes(axes64.begin(), axes64.end());
    return cube(std::move(anchor), std::move(axes));
}

bool Cell::operator<(const Cell& o) const
{
    if (kind != o.kind) return kind < o.kind;
    if (v.size() != o.v.size()) return v.size() < o.v.size();
    if (axes.size() != o.axes.size()) return axes.size() < o.axes.size();
    if (v != o.v) return v < o.v;
    return axes < o.axes;
}

std::vector<SignedCell> cell_faces(const Cell& c)
{
    if (c.dim() == 0)
        throw ZeroDimBoundary("boundary of a 0-cell is not defined");
    std::vector<SignedCell> out;
    if (c.kind == CellKind::cubical) {
        out.reserve(2 * c.axes.size());
        for (size_t j = 0; j < c.axes.size(); ++j) {
            int sign = (j % 2 == 0) ? 1 : -1;
            std::vector<int32_t> sub_axes;
            sub_axes.reserve(c.axes.size() - 1);
            for (size_t t = 0; t < c.axes.size(); ++t)
                if (t != j) sub_axes.push_back(c.axes[t]);
            Cell lower = Cell::cube(c.v, sub_axes);
            Cell upper = lower;
            upper.v[c.axes[j]] += 1;
            out.emplace_back(std::move(upper), sign);
            out.emplace_back(std::move(lower), -sign);
        }
    } else {
        out.reserve(c.v.size());
        for (size_t i = 0; i < c.v.size(); ++i) {
            std::vector<int64_t> sub;
            sub.reserve(c.v.size() - 1);
            for (size_t t = 0; t < c.v.size(); ++t)
                if (t != i) sub.push_back(c.v[t]);
            out.emplace_back(Cell::simplex(std::move(sub)),
                             (i % 2 == 0) ? 1 : -1);
        }
    }
    return out;
}

std::vector<Cell> cell_closure(const Cell& c)
{
    std::vector<Cell> out;
    if (c.kind == CellKind::cubical) {
        // Every subset of the spanned axes, each spanned-but-dropped axis
        // pinned at either end.
        size_t k = c.axes.size();
        for (uint64_t keep = 0; keep < (uint64_t(1) << k); ++keep) {
            std::vector<int32_t> sub_axes;
            std::vector<size_t> dropped;
            for (size_t j = 0; j < k; ++j) {
                if (keep & (uint64_t(1) << j))
                    sub_axes.push_back(c.axes[j]);
                else
                    dropped.push_back(j);
            }
            size_t d = dropped.size();
            for (uint64_t side = 0; side < (uint64_t(1) << d); ++side) {
                std::vector<int64_t> anchor = c.v;
                for (size_t t = 0; t < d; ++t)
                    if (side & (uint64_t(1) << t))
                        anchor[c.axes[dropped[t]]] += 1;
                out.push_back(Cell::cube(std::move(anchor), sub_axes));
            }
        }
    } else {
        size_t m = c.v.size();
        for (uint64_t mask = 1; mask < (uint64_t(1) << m); ++mask) {
            std::vector<int64_t> sub;
            for (size_t i = 0; i < m; ++i)
                if (mask & (uint64_t(1) << i)) sub.push_back(c.v[i]);
            out.push_back(Cell::simplex(std::move(sub)));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

CubicalGrid CubicalGrid::box(int dim, Rat edge, std::vector<int64_t> lo,
                             std::vector<int64_t> hi, std::vector<Rat> offset)
{
    CubicalGrid g;
    g.dim = dim;
    g.edge = std::move(edge);
    g.bbox_lo = std::move(lo);
    g.bbox_hi = std::move(hi);
    g.offset = offset.empty() ? std::vector<Rat>(dim, Rat(0)) : std::move(offset);
    g.validate();
    return g;
}

CubicalGrid CubicalGrid::torus(std::vector<int64_t> periods, Rat edge)
{
    CubicalGrid g;
    g.dim = static_cast<int>(periods.size());
    g.edge = std::move(edge);
    g.offset.assign(g.dim, Rat(0));
    g.bbox_lo.assign(g.dim, 0);
    g.bbox_hi.resize(g.dim);
    for (int i = 0; i < g.dim; ++i) g.bbox_hi[i] = periods[i];
    g.periods = std::move(periods);
    g.validate();
    return g;
}

void CubicalGrid::validate() const
{
    if (dim <= 0) throw DimensionMismatch("grid dimension must be positive");
    if (edge <= 0) throw DimensionMismatch("grid edge must be positive");
    if (static_cast<int>(offset.size()) != dim ||
        static_cast<int>(bbox_lo.size()) != dim ||
        static_cast<int>(bbox_hi.size()) != dim)
        throw DimensionMismatch("grid field arity mismatch");
    for (int i = 0; i < dim; ++i)
        if (bbox_lo[i] >= bbox_hi[i])
            throw EmptyBBox("bbox lower corner must be strictly below upper");
    if (!periods.empty())
        for (int i = 0; i < dim; ++i)
            if (periods[i] <= 0)
                throw DimensionMismatch("periods must be positive");
}

std::vector<Rat> CubicalGrid::vertex_point(const std::vector<int64_t>& anchor) const
{
    std::vector<Rat> p(dim);
    for (int i = 0; i < dim; ++i) p[i] = coord(i, anchor[i]);
    return p;
}

std::vector<Rat> CubicalGrid::cell_center(const Cell& c) const
{
    std::vector<Rat> p = vertex_point(c.v);
    Rat half = edge / 2;
    for (int32_t a : c.axes) p[a] += half;
    return p;
}

void CubicalGrid::cell_box(const Cell& c, std::vector<Rat>& lo,
                           std::vector<Rat>& hi) const
{
    lo = vertex_point(c.v);
    hi = lo;
    for (int32_t a : c.axes) hi[a] += edge;
}

void CubicalGrid::canonicalize(std::vector<int64_t>& anchor) const
{
    if (!periodic()) return;
    for (int i = 0; i < dim; ++i) {
        int64_t p = periods[i];
        anchor[i] %= p;
        if (anchor[i] < 0) anchor[i] += p;
    }
}

Cell CubicalGrid::canonical_cell(Cell c) const
{
    canonicalize(c.v);
    return c;
}

bool CubicalGrid::anchor_in_bbox(const std::vector<int64_t>& a) const
{
    for (int i = 0; i < dim; ++i)
        if (a[i] < bbox_lo[i] || a[i] > bbox_hi[i]) return false;
    return true;
}

bool CubicalGrid::cell_in_bbox(const Cell& c) const
{
    if (static_cast<int>(c.v.size()) != dim) return false;
    std::vector<int64_t> far = c.v;
    for (int32_t a : c.axes) far[a] += 1;
    return anchor_in_bbox(c.v) && anchor_in_bbox(far);
}

}  // namespace chaincal
