#include "chaincal/shapes.hpp"

namespace chaincal {
namespace shapes {

CellComplex point()
{
    CubicalGrid g = CubicalGrid::box(1, 1, {0}, {1});
    return CellComplex::cubical(g, {Cell::vertex({0})});
}

CellComplex interval(int64_t len)
{
    CubicalGrid g = CubicalGrid::box(1, 1, {0}, {len > 0 ? len : 1});
    std::vector<Cell> cells;
    for (int64_t i = 0; i < len; ++i) cells.push_back(Cell::cube({i}, {0}));
    if (len == 0) cells.push_back(Cell::vertex({0}));
    return CellComplex::cubical(g, cells);
}

CellComplex solid_rect(int64_t w, int64_t h, Rat edge)
{
    CubicalGrid g = CubicalGrid::box(2, edge, {0, 0}, {w, h});
    std::vector<Cell> cells;
    for (int64_t x = 0; x < w; ++x)
        for (int64_t y = 0; y < h; ++y) cells.push_back(Cell::cube({x, y}, {0, 1}));
    return CellComplex::cubical(g, cells);
}

CellComplex hollow_square() { return rect_frame(1, 1); }

CellComplex rect_frame(int64_t w, int64_t h)
{
    CubicalGrid g = CubicalGrid::box(2, 1, {0, 0}, {w, h});
    std::vector<Cell> cells;
    for (int64_t x = 0; x < w; ++x) {
        cells.push_back(Cell::cube({x, 0}, {0}));
        cells.push_back(Cell::cube({x, h}, {0}));
    }
    for (int64_t y = 0; y < h; ++y) {
        cells.push_back(Cell::cube({0, y}, {1}));
        cells.push_back(Cell::cube({w, y}, {1}));
    }
    return CellComplex::cubical(g, cells);
}

CellComplex annulus(int64_t side, int64_t hole)
{
    int64_t lo = (side - hole) / 2, hi = lo + hole;
    CubicalGrid g = CubicalGrid::box(2, 1, {0, 0}, {side, side});
    std::vector<Cell> cells;
    for (int64_t x = 0; x < side; ++x)
        for (int64_t y = 0; y < side; ++y) {
            bool in_hole = (x >= lo && x < hi && y >= lo && y < hi);
            if (!in_hole) cells.push_back(Cell::cube({x, y}, {0, 1}));
        }
    return CellComplex::cubical(g, cells);
}

CellComplex torus(int64_t a, int64_t b)
{
    CubicalGrid g = CubicalGrid::torus({a, b});
    std::vector<Cell> cells;
    for (int64_t x = 0; x < a; ++x)
        for (int64_t y = 0; y < b; ++y) cells.push_back(Cell::cube({x, y}, {0, 1}));
    return CellComplex::cubical(g, cells);
}

CellComplex solid_box(int64_t w, int64_t h, int64_t d)
{
    CubicalGrid g = CubicalGrid::box(3, 1, {0, 0, 0}, {w, h, d});
    std::vector<Cell> cells;
    for (int64_t x = 0; x < w; ++x)
        for (int64_t y = 0; y < h; ++y)
            for (int64_t z = 0; z < d; ++z)
                cells.push_back(Cell::cube({x, y, z}, {0, 1, 2}));
    return CellComplex::cubical(g, cells);
}

CellComplex projective_plane()
{
    std::vector<std::vector<Rat>> coords;
    for (int i = 0; i < 6; ++i) {
        std::vector<Rat> p(6, Rat(0));
        p[i] = 1;
        coords.push_back(std::move(p));
    }
    // Antipodal quotient of the icosahedron; every edge lies in exactly
    // two of the ten triangles.
    const int64_t faces[10][3] = {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5},
                                  {0, 1, 5}, {1, 2, 4}, {2, 3, 5}, {1, 3, 4},
                                  {2, 4, 5}, {1, 3, 5}};
    std::vector<Cell> cells;
    for (auto& f : faces) cells.push_back(Cell::simplex({f[0], f[1], f[2]}));
    return CellComplex::simplicial(std::move(coords), cells);
}

CellComplex polygon(int n)
{
    std::vector<std::vector<Rat>> coords;
    for (int i = 0; i < n; ++i)
        coords.push_back({Rat(i), Rat(Int(i) * Int(i) + 1)});  // convex position
    std::vector<Cell> cells;
    for (int i = 0; i < n; ++i) {
        int64_t a = i, b = (i + 1) % n;
        if (a > b) std::swap(a, b);
        cells.push_back(Cell::simplex({a, b}));
    }
    return CellComplex::simplicial(std::move(coords), cells);
}

CellComplex full_simplex(int m)
{
    std::vector<std::vector<Rat>> coords;
    for (int i = 0; i <= m; ++i) {
        std::vector<Rat> p(m + 1, Rat(0));
        p[i] = 1;
        coords.push_back(std::move(p));
    }
    std::vector<int64_t> all;
    for (int i = 0; i <= m; ++i) all.push_back(i);
    return CellComplex::simplicial(std::move(coords), {Cell::simplex(all)});
}

CellComplex triangulated_rect(int64_t w, int64_t h)
{
    std::vector<std::vector<Rat>> coords;
    auto id = [&](int64_t x, int64_t y) { return y * (w + 1) + x; };
    for (int64_t y = 0; y <= h; ++y)
        for (int64_t x = 0; x <= w; ++x) coords.push_back({Rat(x), Rat(y)});
    std::vector<Cell> cells;
    for (int64_t y = 0; y < h; ++y)
        for (int64_t x = 0; x < w; ++x) {
            int64_t a = id(x, y), b = id(x + 1, y), c = id(x, y + 1),
                    d = id(x + 1, y + 1);
            cells.push_back(Cell::simplex({a, b, d}));
            cells.push_back(Cell::simplex({a, c, d}));
        }
    return CellComplex::simplicial(std::move(coords), cells);
}

CellComplex triangulated_annulus(int64_t side, int64_t hole)
{
    int64_t lo = (side - hole) / 2, hi = lo + hole;
    std::vector<std::vector<Rat>> coords;
    auto id = [&](int64_t x, int64_t y) { return y * (side + 1) + x; };
    for (int64_t y = 0; y <= side; ++y)
        for (int64_t x = 0; x <= side; ++x) coords.push_back({Rat(x), Rat(y)});
    std::vector<Cell> cells;
    for (int64_t y = 0; y < side; ++y)
        for (int64_t x = 0; x < side; ++x) {
            if (x >= lo && x < hi && y >= lo && y < hi) continue;
            int64_t a = id(x, y), b = id(x + 1, y), c = id(x, y + 1),
                    d = id(x + 1, y + 1);
            cells.push_back(Cell::simplex({a, b, d}));
            cells.push_back(Cell::simplex({a, c, d}));
        }
    return CellComplex::simplicial(std::move(coords), cells);
}

Chain frame_cycle(const CellComplex& X, int64_t x0, int64_t y0, int64_t w,
                  int64_t h)
{
    Chain c(1);
    for (int64_t x = x0; x < x0 + w; ++x) {
        c.add(X.canonical(Cell::cube({x, y0}, {0})), 1);
        c.add(X.canonical(Cell::cube({x, y0 + h}, {0})), -1);
    }
    for (int64_t y = y0; y < y0 + h; ++y) {
        c.add(X.canonical(Cell::cube({x0 + w, y}, {1})), 1);
        c.add(X.canonical(Cell::cube({x0, y}, {1})), -1);
    }
    return c;
}

Chain fundamental_chain(const CellComplex& X)
{
    int k = X.top_dim();
    Chain c(k);
    for (const Cell& cell : X.cells(k)) c.add(cell, 1);
    return c;
}

}  // namespace shapes
}  // namespace chaincal
