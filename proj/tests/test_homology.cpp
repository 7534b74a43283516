#include <doctest.h>

#include "chaincal/homology.hpp"
#include "chaincal/shapes.hpp"
#include "support.hpp"

using namespace chaincal;
using testsupport::Rng;

namespace {

IntMat from_rows(const std::vector<std::vector<int>>& rows)
{
    IntMat m(int(rows.size()), rows.empty() ? 0 : int(rows[0].size()));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
    return m;
}

Int det(const IntMat& a)
{
    REQUIRE(a.rows == a.cols);
    // rational elimination; exact
    int n = a.rows;
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = Rat(a.at(i, j));
    Rat d = 1;
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int r = c; r < n; ++r)
            if (m[r][c] != 0) {
                p = r;
                break;
            }
        if (p < 0) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            d = -d;
        }
        d *= m[c][c];
        for (int r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            Rat f = m[r][c] / m[c][c];
            for (int cc = c; cc < n; ++cc) m[r][cc] -= f * m[c][cc];
        }
    }
    CHECK(rat_is_int(d));
    return rat_num(d);
}

void check_snf_contract(const IntMat& a)
{
    SNFResult s = smith_normal_form(a);
    CHECK(s.U.mul(a).mul(s.V) == s.S);
    CHECK(s.U.mul(s.Uinv) == IntMat::identity(a.rows));
    CHECK(s.V.mul(s.Vinv) == IntMat::identity(a.cols));
    if (a.rows > 0) CHECK(abs(det(s.U)) == 1);
    if (a.cols > 0) CHECK(abs(det(s.V)) == 1);
    auto d = s.diag();
    for (size_t i = 0; i + 1 < d.size(); ++i) {
        CHECK(d[i] >= 0);
        if (d[i + 1] != 0) {
            REQUIRE(d[i] != 0);
            CHECK(d[i + 1] % d[i] == 0);
        }
    }
    // off-diagonal zero
    for (int i = 0; i < s.S.rows; ++i)
        for (int j = 0; j < s.S.cols; ++j)
            if (i != j) CHECK(s.S.at(i, j) == 0);
}

}  // namespace

TEST_CASE("smith normal form: fixed examples")
{
    SNFResult id3 = smith_normal_form(IntMat::identity(3));
    CHECK(id3.S == IntMat::identity(3));
    CHECK(id3.rank == 3);

    IntMat z(3, 4);
    SNFResult zs = smith_normal_form(z);
    CHECK(zs.S.is_zero());
    CHECK(zs.rank == 0);

    IntMat a = from_rows({{2, 4}, {6, 8}});
    SNFResult s = smith_normal_form(a);
    CHECK(s.S.at(0, 0) == 2);
    CHECK(s.S.at(1, 1) == 4);
    CHECK(abs(det(a)) == 8);
    check_snf_contract(a);

    SNFResult empty = smith_normal_form(IntMat(0, 0));
    CHECK(empty.diag().empty());
}

TEST_CASE("smith normal form: contract on random matrices")
{
    Rng rng(41);
    for (int rep = 0; rep < 40; ++rep) {
        int r = int(rng.range(1, 6)), c = int(rng.range(1, 6));
        IntMat a(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) a.at(i, j) = rng.range(-9, 9);
        check_snf_contract(a);
    }
}

TEST_CASE("integer solving through SNF")
{
    Rng rng(43);
    for (int rep = 0; rep < 30; ++rep) {
        int r = int(rng.range(1, 5)), c = int(rng.range(1, 5));
        IntMat a(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) a.at(i, j) = rng.range(-4, 4);
        std::vector<Int> x0(c);
        for (int j = 0; j < c; ++j) x0[j] = rng.range(-3, 3);
        std::vector<Int> b = a.apply(x0);
        auto x = solve_integer(smith_normal_form(a), b);
        REQUIRE(x.has_value());
        CHECK(a.apply(*x) == b);
    }
    // unsolvable: 2x = 1
    IntMat two = from_rows({{2}});
    CHECK(!solve_integer(smith_normal_form(two), {Int(1)}).has_value());
}

TEST_CASE("dimension axiom: homology of a point")
{
    CellComplex P = shapes::point();
    HomologyGroup h0 = homology(P, 0);
    CHECK(h0.betti == 1);
    CHECK(h0.torsion.empty());
    CHECK(h0.format() == "Z");
    for (int k = 1; k <= 3; ++k) {
        HomologyGroup hk = homology(P, k);
        CHECK(hk.betti == 0);
        CHECK(hk.torsion.empty());
    }
    CHECK_THROWS_AS(homology(P, -1), DimensionOutOfRange);
}

TEST_CASE("homology corpus with rank-over-Q cross-check")
{
    struct Row {
        CellComplex X;
        std::vector<int> betti;  // from dim 0
        std::vector<Int> torsion1;
    };
    std::vector<Row> rows;
    rows.push_back({shapes::hollow_square(), {1, 1}, {}});
    rows.push_back({shapes::solid_rect(4, 4), {1, 0, 0}, {}});
    rows.push_back({shapes::annulus(4, 2), {1, 1, 0}, {}});
    rows.push_back({shapes::torus(3, 4), {1, 2, 1}, {}});
    rows.push_back({shapes::projective_plane(), {1, 0, 0}, {Int(2)}});
    rows.push_back({shapes::solid_box(2, 2, 2), {1, 0, 0, 0}, {}});

    for (const auto& row : rows) {
        for (size_t k = 0; k < row.betti.size(); ++k) {
            HomologyGroup h = homology(row.X, int(k));
            CHECK(h.betti == row.betti[k]);
            CHECK(h.betti == testsupport::betti_by_rank(row.X, int(k)));
            if (k == 1) CHECK(h.torsion == row.torsion1);
            // generators are cycles and not boundaries
            for (const Chain& g : h.generators) {
                if (k >= 1) CHECK(row.X.boundary_in(g).is_zero());
                CHECK(!is_boundary(g, row.X).has_value());
            }
        }
    }
}

TEST_CASE("relative homology")
{
    // A = empty equals absolute homology across the corpus.
    std::vector<CellComplex> corpus;
    corpus.push_back(shapes::point());
    corpus.push_back(shapes::interval(3));
    corpus.push_back(shapes::hollow_square());
    corpus.push_back(shapes::solid_rect(2, 2));
    corpus.push_back(shapes::solid_rect(4, 4));
    corpus.push_back(shapes::annulus(4, 2));
    corpus.push_back(shapes::torus(3, 3));
    corpus.push_back(shapes::solid_box(2, 2, 2));
    corpus.push_back(shapes::projective_plane());
    corpus.push_back(shapes::triangulated_annulus(4, 2));
    for (const auto& X : corpus) {
        CellComplex empty =
            X.kind() == CellKind::cubical
                ? CellComplex::cubical(X.grid(), {})
                : CellComplex::simplicial(X.vertex_coords(), {});
        for (int k = 0; k <= X.top_dim(); ++k) {
            HomologyGroup abs_h = homology(X, k);
            HomologyGroup rel_h = relative_homology({X, empty}, k);
            CHECK(abs_h.betti == rel_h.betti);
            CHECK(abs_h.torsion == rel_h.torsion);
        }
    }

    // Solid square relative to its boundary frame: H_2 = Z.
    CellComplex X = shapes::solid_rect(2, 2);
    CellComplex A = shapes::rect_frame(2, 2);
    HomologyGroup h2 = relative_homology({X, A}, 2);
    CHECK(h2.betti == 1);
    CHECK(h2.torsion.empty());

    // Interval relative to both endpoints: H_1 = Z.
    CellComplex I = shapes::interval(1);
    CellComplex ends = CellComplex::cubical(
        I.grid(), {Cell::vertex({0}), Cell::vertex({1})});
    HomologyGroup h1 = relative_homology({I, ends}, 1);
    CHECK(h1.betti == 1);

    // Sub not contained is rejected.
    CellComplex other = shapes::hollow_square();
    CHECK_THROWS_AS(relative_homology({I, other}, 0), SubNotContained);
}

TEST_CASE("is_boundary: fillings and obstructions")
{
    CellComplex S = shapes::solid_rect(2, 2);
    Chain sq_cell = Chain::single(Cell::cube({0, 0}, {0, 1}));
    Chain z = S.boundary_in(sq_cell);
    auto fill = is_boundary(z, S);
    REQUIRE(fill.has_value());
    CHECK(S.boundary_in(*fill) == z);

    CellComplex H = shapes::hollow_square();
    Chain loop = shapes::frame_cycle(H, 0, 0, 1, 1);
    CHECK(!is_boundary(loop, H).has_value());

    CellComplex P = shapes::projective_plane();
    HomologyGroup h1 = homology(P, 1);
    REQUIRE(h1.torsion == std::vector<Int>{Int(2)});
    REQUIRE(h1.torsion_generators.size() == 1);
    const Chain& t = h1.torsion_generators[0];
    CHECK(!is_boundary(t, P).has_value());
    auto fill2 = is_boundary(Int(2) * Chain(t), P);
    REQUIRE(fill2.has_value());
    CHECK(P.boundary_in(*fill2) == Int(2) * Chain(t));

    Chain notcycle = Chain::single(Cell::cube({0, 0}, {0}));
    CHECK_THROWS_AS(is_boundary(notcycle, S), NotACycle);
}

TEST_CASE("class coordinates")
{
    CellComplex T = shapes::torus(3, 3);
    HomologyGroup h = homology(T, 1);
    REQUIRE(h.betti == 2);
    REQUIRE(h.generators.size() == 2);

    // A generator has a unit coordinate vector.
    ClassCoordinates c0 = class_coordinates(h.generators[0], h);
    CHECK(c0.free_coords == std::vector<Int>{Int(1), Int(0)});
    ClassCoordinates c1 = class_coordinates(h.generators[1], h);
    CHECK(c1.free_coords == std::vector<Int>{Int(0), Int(1)});

    // Boundaries have zero coordinates.
    Rng rng(59);
    Chain b = testsupport::random_cycle(T, 1, rng);
    CHECK(class_coordinates(b, h).is_zero());

    // 3 g1 - g2 has coordinates (3, -1); adding boundaries preserves them.
    Chain z = Int(3) * Chain(h.generators[0]) - h.generators[1];
    ClassCoordinates cz = class_coordinates(z, h);
    CHECK(cz.free_coords == std::vector<Int>{Int(3), Int(-1)});
    Chain z2 = z + b;
    CHECK(class_coordinates(z2, h) == cz);

    // Torsion residues on the projective plane.
    CellComplex P = shapes::projective_plane();
    HomologyGroup hp = homology(P, 1);
    const Chain& t = hp.torsion_generators[0];
    ClassCoordinates ct = class_coordinates(t, hp);
    CHECK(ct.torsion_residues == std::vector<Int>{Int(1)});
    CHECK(class_coordinates(Int(2) * Chain(t), hp).is_zero());

    CHECK_THROWS_AS(class_coordinates(Chain::single(Cell::cube({0, 0}, {0})), h),
                    NotACycle);
}
