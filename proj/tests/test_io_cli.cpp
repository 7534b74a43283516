#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "chaincal/io.hpp"
#include "chaincal/shapes.hpp"
#include "support.hpp"

using namespace chaincal;
using testsupport::Rng;

#ifndef CHAINCAL_CLI_PATH
#define CHAINCAL_CLI_PATH "./chaincal"
#endif

namespace {

bool complexes_equal(const CellComplex& a, const CellComplex& b)
{
    if (a.kind() != b.kind() || a.top_dim() != b.top_dim()) return false;
    for (int k = 0; k <= a.top_dim(); ++k) {
        if (a.cell_count(k) != b.cell_count(k)) return false;
        for (const Cell& c : a.cells(k))
            if (!b.contains(c)) return false;
    }
    if (a.kind() == CellKind::simplicial)
        return a.vertex_coords() == b.vertex_coords();
    const CubicalGrid &ga = a.grid(), &gb = b.grid();
    return ga.dim == gb.dim && ga.edge == gb.edge && ga.offset == gb.offset &&
           ga.bbox_lo == gb.bbox_lo && ga.bbox_hi == gb.bbox_hi &&
           ga.periods == gb.periods;
}

int run_cli(const std::string& args)
{
    std::string cmd = std::string(CHAINCAL_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path)
{
    std::ifstream is(path, std::ios::binary);
    REQUIRE(is.good());
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("complex and chain files round-trip")
{
    Rng rng(501);
    std::vector<CellComplex> corpus;
    corpus.push_back(shapes::annulus(4, 2));
    corpus.push_back(shapes::torus(3, 4));
    corpus.push_back(shapes::projective_plane());
    corpus.push_back(shapes::solid_rect(3, 3, Rat(1, 4)));
    for (const auto& X : corpus) {
        std::string text = complex_to_string(X);
        CellComplex Y = complex_from_string(text);
        CHECK(complexes_equal(X, Y));
        CHECK(complex_to_string(Y) == text);  // canonical form is a fixpoint

        for (int rep = 0; rep < 5; ++rep) {
            int k = int(rng.range(0, X.top_dim()));
            Chain c = testsupport::random_chain(X, k, rng);
            Chain back = chain_from_string(chain_to_string(c), X.kind());
            CHECK(back == c);
        }
    }
}

TEST_CASE("offset grids and rationals survive the text format")
{
    CubicalGrid g = CubicalGrid::box(2, Rat(1, 4), {-8, -8}, {8, 8},
                                     {Rat(1, 8), Rat(-3, 8)});
    CellComplex X = CellComplex::cubical(g, {Cell::cube({0, 0}, {0, 1})});
    CellComplex Y = complex_from_string(complex_to_string(X));
    CHECK(complexes_equal(X, Y));

    CHECK_THROWS_AS(complex_from_string("junk"), ParseError);
    CHECK_THROWS_AS(chain_from_string("junk", CellKind::cubical), ParseError);
    CHECK_THROWS_AS(parse_rat("1/0"), ParseError);
    CHECK(parse_rat("-7/21") == Rat(-1, 3));
    CHECK(rat_str(Rat(-6, 8)) == "-3/4");
}

TEST_CASE("cli pipeline: deterministic byte-identical outputs")
{
    std::string dir = "/tmp/chaincal_cli_test";
    std::system(("rm -rf " + dir + " && mkdir -p " + dir).c_str());
    {
        std::ofstream f(dir + "/disk.sa");
        f << "(<= (+ (^ x 2) (^ y 2)) 1)\n";
    }
    std::string base = "--out-dir " + dir + " rasterize --formula " + dir +
                       "/disk.sa --edge 1/4 --bbox -2,-2,2,2 --out disk.cx";
    REQUIRE(run_cli(base) == 0);
    std::string first = slurp(dir + "/disk.cx");
    REQUIRE(run_cli(base) == 0);
    CHECK(slurp(dir + "/disk.cx") == first);

    REQUIRE(run_cli("--out-dir " + dir + " homology --complex " + dir +
                    "/disk.cx --dim 0 --prefix d0") == 0);
    REQUIRE(run_cli("--out-dir " + dir + " homology --complex " + dir +
                    "/disk.cx --dim 1 --prefix d1") == 0);

    // A chain written by one command re-parses identically.
    std::string gen = dir + "/d0_gen0.chain";
    Chain z = read_chain(gen, CellKind::cubical);
    CHECK(chain_to_string(z) == slurp(gen));

    // Deform determinism under a fixed seed.
    {
        CellComplex A = shapes::annulus(4, 2);
        write_chain(shapes::frame_cycle(A, 0, 0, 4, 4), dir + "/loop.chain");
    }
    std::string dcmd = "--out-dir " + dir + " --seed 11 deform --fine 1 " +
                       "--coarse 2 " + dir + "/loop.chain out";
    REQUIRE(run_cli(dcmd) == 0);
    std::string p1 = slurp(dir + "/out.P.chain"), l1 = slurp(dir + "/out.L.chain");
    REQUIRE(run_cli(dcmd) == 0);
    CHECK(slurp(dir + "/out.P.chain") == p1);
    CHECK(slurp(dir + "/out.L.chain") == l1);

    // Domain error -> exit 2, usage error -> exit 1.
    CHECK(run_cli("homology --complex " + dir + "/missing.cx --dim 0") == 2);
    CHECK(run_cli("bogus-subcommand") == 1);

    // minimize on a non-cycle reports NotACycle with exit 2.
    {
        Chain notcycle = Chain::single(Cell::cube({0, 0}, {0}));
        write_chain(notcycle, dir + "/notcycle.chain");
        CellComplex A = shapes::annulus(4, 2);
        write_complex(A, dir + "/ann.cx");
    }
    std::string cmd = std::string(CHAINCAL_CLI_PATH) + " minimize --complex " +
                      dir + "/ann.cx --cycle " + dir +
                      "/notcycle.chain 2>" + dir + "/err.txt >/dev/null";
    int rc = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(rc) == 2);
    CHECK(slurp(dir + "/err.txt").find("NotACycle") != std::string::npos);
}

TEST_CASE("selftest subcommand runs clean")
{
    CHECK(run_cli("selftest") == 0);
}
