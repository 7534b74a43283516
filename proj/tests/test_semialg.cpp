#include <doctest.h>

#include "chaincal/semialg.hpp"
#include "chaincal/shapes.hpp"
#include "support.hpp"

using namespace chaincal;
using testsupport::Rng;

namespace {

SAFormula disk_formula()
{
    return SAFormula::parse("(<= (+ (^ x 2) (^ y 2)) 1)");
}

SAFormula annulus_formula()
{
    return SAFormula::parse(
        "(and (<= (+ (^ x 2) (^ y 2)) 1) (>= (+ (^ x 2) (^ y 2)) 1/4))");
}

Rat exact_box_distance2(const std::vector<Rat>& p, const CellComplex& X)
{
    const CubicalGrid& g = X.grid();
    bool first = true;
    Rat best = 0;
    for (const Cell& t : X.cells(g.dim)) {
        Rat d2 = 0;
        for (int i = 0; i < g.dim; ++i) {
            Rat lo = g.coord(i, t.v[i]), hi = lo + g.edge;
            Rat ax = 0;
            if (p[i] < lo) ax = lo - p[i];
            else if (p[i] > hi) ax = p[i] - hi;
            d2 += ax * ax;
        }
        if (first || d2 < best) best = d2;
        first = false;
    }
    return best;
}

}  // namespace

TEST_CASE("exact formula evaluation")
{
    SAFormula disk = disk_formula();
    CHECK(disk.eval({Rat(0), Rat(0)}));
    CHECK(!disk.eval({Rat(1), Rat(1)}));
    CHECK(disk.eval({Rat(3, 5), Rat(4, 5)}));  // on the circle

    // Cusp y^2 = x^3.
    SAFormula cusp = SAFormula::parse("(= (^ y 2) (^ x 3))");
    CHECK(cusp.eval({Rat(1), Rat(1)}));
    CHECK(cusp.eval({Rat(1), Rat(-1)}));
    CHECK(!cusp.eval({Rat(2), Rat(1)}));
    CHECK(cusp.eval({Rat(4), Rat(8)}));
    CHECK(cusp.has_equality_atom());
    CHECK(!disk.has_equality_atom());

    CHECK_THROWS_AS(disk.eval({Rat(0)}), ArityMismatch);
    CHECK_THROWS_AS(SAFormula::parse("(<= (+ x y) 1"), ParseError);
    CHECK_THROWS_AS(SAFormula::parse("(foo x 1)"), ParseError);
}

TEST_CASE("rasterization: trivial formulas and the quarter-grid disk")
{
    CubicalGrid g = CubicalGrid::box(2, Rat(1, 2), {-4, -4}, {4, 4});

    Rasterization none = rasterize(SAFormula::always(false, 2), g);
    CHECK(none.complex.total_cells() == 0);

    CubicalGrid g4 = CubicalGrid::box(2, 1, {0, 0}, {4, 4});
    Rasterization full = rasterize(SAFormula::always(true, 2), g4);
    CHECK(full.complex.cell_count(2) == 16);

    // Unit disk, edge 1/2, bbox [-2,2]^2: count centers inside exactly.
    Rasterization disk = rasterize(disk_formula(), g, SampleScheme::center);
    size_t expect = 0;
    SAFormula f = disk_formula();
    for (int64_t x = -4; x < 4; ++x)
        for (int64_t y = -4; y < 4; ++y) {
            std::vector<Rat> c = {Rat(2 * x + 1, 4), Rat(2 * y + 1, 4)};
            if (f.eval(c)) ++expect;
        }
    CHECK(disk.complex.cell_count(2) == expect);
    CHECK(expect > 0);

    // Corner scheme gives an inner approximation of the center scheme
    // for this convex set.
    Rasterization disk_c = rasterize(disk_formula(), g, SampleScheme::corners);
    for (const Cell& t : disk_c.complex.cells(2)) CHECK(f.eval(g.cell_center(t)));
}

TEST_CASE("rasterization monotone in the formula")
{
    CubicalGrid g = CubicalGrid::box(2, Rat(1, 2), {-4, -4}, {4, 4});
    SAFormula small = disk_formula();
    SAFormula big = SAFormula::parse("(<= (+ (^ x 2) (^ y 2)) 2)");
    Rasterization rs = rasterize(small, g);
    Rasterization rb = rasterize(big, g);
    for (const Cell& t : rs.complex.cells(2)) CHECK(rb.complex.contains(t));
}

TEST_CASE("refinement keeps margin-interior points covered")
{
    // A point whose distance to the set boundary exceeds the cell
    // diameter lies in an included cell, so halving the edge cannot
    // uncover it. Sample such points on the disk and the annulus.
    Rng rng(211);
    CubicalGrid coarse = CubicalGrid::box(2, Rat(1, 4), {-8, -8}, {8, 8});
    CubicalGrid fine = CubicalGrid::box(2, Rat(1, 8), {-16, -16}, {16, 16});
    auto covered = [](const Rasterization& R, const std::vector<Rat>& p) {
        for (const Cell& t : R.complex.cells(2)) {
            std::vector<Rat> lo, hi;
            R.grid.cell_box(t, lo, hi);
            bool in = true;
            for (int i = 0; i < 2; ++i)
                if (p[i] < lo[i] || p[i] > hi[i]) in = false;
            if (in) return true;
        }
        return false;
    };

    Rasterization dc = rasterize(disk_formula(), coarse);
    Rasterization df = rasterize(disk_formula(), fine);
    Rasterization af = rasterize(annulus_formula(), fine);
    int disk_pts = 0, ann_pts = 0;
    while (disk_pts < 500 || ann_pts < 500) {
        std::vector<Rat> p = {Rat(rng.range(-64, 64), 64),
                              Rat(rng.range(-64, 64), 64)};
        Rat r2 = p[0] * p[0] + p[1] * p[1];
        // Disk interior with margin above the coarse diameter sqrt(2)/4.
        if (disk_pts < 500 && r2 < Rat(2, 5)) {
            ++disk_pts;
            CHECK(covered(dc, p));
            CHECK(covered(df, p));
        }
        // Annulus interior with margin above the fine diameter sqrt(2)/8.
        if (ann_pts < 500 && r2 > Rat(15, 32) && r2 < Rat(21, 32)) {
            ++ann_pts;
            CHECK(covered(af, p));
        }
    }
}

TEST_CASE("thicken: identity, Chebyshev ball, composition, annulus hole")
{
    CubicalGrid g = CubicalGrid::box(2, 1, {-8, -8}, {16, 16});
    CellComplex one =
        CellComplex::cubical(g, {Cell::cube({0, 0}, {0, 1})});

    CHECK(thicken(one, 0).total_cells() == one.total_cells());
    CellComplex ball = thicken(one, 1);
    CHECK(ball.cell_count(2) == 9);

    CellComplex two_a = thicken(thicken(one, 1), 2);
    CellComplex two_b = thicken(one, 3);
    CHECK(two_a.total_cells() == two_b.total_cells());
    for (const Cell& c : two_b.cells(2)) CHECK(two_a.contains(c));

    // 8x8 frame with a 4x4 hole: thickening by one shrinks the hole to 2x2.
    std::vector<Cell> ring;
    for (int64_t x = 0; x < 8; ++x)
        for (int64_t y = 0; y < 8; ++y)
            if (!(x >= 2 && x < 6 && y >= 2 && y < 6))
                ring.push_back(Cell::cube({x, y}, {0, 1}));
    CellComplex annulus = CellComplex::cubical(g, ring);
    CellComplex fat = thicken(annulus, 1);
    size_t hole = 0;
    for (int64_t x = 0; x < 8; ++x)
        for (int64_t y = 0; y < 8; ++y)
            if (!fat.contains(Cell::cube({x, y}, {0, 1}))) ++hole;
    CHECK(hole == 4);

    CellComplex tight = CellComplex::cubical(
        CubicalGrid::box(2, 1, {0, 0}, {1, 1}), {Cell::cube({0, 0}, {0, 1})});
    CHECK_THROWS_AS(thicken(tight, 1), BBoxOverflow);
}

TEST_CASE("distance estimate encloses the true distance")
{
    Rng rng(223);
    CubicalGrid g = CubicalGrid::box(2, Rat(1, 2), {-4, -4}, {4, 4});
    Rasterization disk = rasterize(disk_formula(), g);

    // Containment point.
    DistanceInterval inside = distance_estimate({Rat(0), Rat(0)}, disk);
    CHECK(inside.lo == 0);
    CHECK(inside.hi * inside.hi <= Rat(1, 2) + Rat(1, 8));  // within cell diameter

    Rat width_budget = Rat(2) * g.edge * Rat(2);  // n * edge * sqrt(n), n = 2
    for (int rep = 0; rep < 60; ++rep) {
        std::vector<Rat> p = {Rat(rng.range(-12, 12), 3),
                              Rat(rng.range(-12, 12), 3)};
        DistanceInterval di = distance_estimate(p, disk);
        CHECK(di.hi - di.lo <= width_budget);
        Rat d2 = exact_box_distance2(p, disk.complex);
        CHECK(di.lo * di.lo <= d2);
        if (d2 > 0) CHECK(d2 <= di.hi * di.hi);
        // Brute-force minimum over included-cell corners sits inside.
        bool first = true;
        Rat corner2 = 0;
        for (const Cell& t : disk.complex.cells(2))
            for (int dx = 0; dx <= 1; ++dx)
                for (int dy = 0; dy <= 1; ++dy) {
                    std::vector<Rat> q =
                        disk.grid.vertex_point({t.v[0] + dx, t.v[1] + dy});
                    Rat dd = (q[0] - p[0]) * (q[0] - p[0]) +
                             (q[1] - p[1]) * (q[1] - p[1]);
                    if (first || dd < corner2) corner2 = dd;
                    first = false;
                }
        CHECK(di.lo * di.lo <= corner2);
        CHECK(corner2 <= di.hi * di.hi);
    }

    Rasterization empty =
        rasterize(SAFormula::always(false, 2), g);
    CHECK_THROWS_AS(distance_estimate({Rat(0), Rat(0)}, empty), EmptySet);
}
