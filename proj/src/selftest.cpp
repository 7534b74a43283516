#include "chaincal/selftest.hpp"

#include <random>

#include "chaincal/axioms.hpp"
#include "chaincal/deform.hpp"
#include "chaincal/homology.hpp"
#include "chaincal/minimize.hpp"
#include "chaincal/retract.hpp"
#include "chaincal/shapes.hpp"

namespace chaincal {

namespace {

struct Runner {
    SelftestResult result;
    void check(const std::string& name, bool ok)
    {
        result.checks.emplace_back(name, ok);
        (ok ? result.passed : result.failed)++;
    }
    template <typename F>
    void guarded(const std::string& name, F&& f)
    {
        try {
            check(name, f());
        } catch (const std::exception&) {
            check(name, false);
        }
    }
};

}  // namespace

SelftestResult run_selftest(uint64_t seed)
{
    Runner r;
    std::mt19937_64 rng(seed);

    r.guarded("dimension_axiom", [] {
        HomologyGroup h0 = homology(shapes::point(), 0);
        bool ok = h0.betti == 1 && h0.torsion.empty();
        for (int k = 1; k <= 3; ++k) {
            HomologyGroup hk = homology(shapes::point(), k);
            ok &= hk.betti == 0 && hk.torsion.empty();
        }
        return ok;
    });

    r.guarded("homology_corpus", [] {
        bool ok = homology(shapes::hollow_square(), 1).betti == 1;
        ok &= homology(shapes::solid_rect(4, 4), 1).betti == 0;
        HomologyGroup a1 = homology(shapes::annulus(4, 2), 1);
        ok &= a1.betti == 1;
        HomologyGroup t1 = homology(shapes::torus(3, 4), 1);
        ok &= t1.betti == 2;
        ok &= homology(shapes::torus(3, 4), 2).betti == 1;
        HomologyGroup p1 = homology(shapes::projective_plane(), 1);
        ok &= p1.betti == 0 && p1.torsion == std::vector<Int>{Int(2)};
        return ok;
    });

    r.guarded("deformation_identity", [&] {
        CubicalGrid fine = CubicalGrid::box(2, Rat(1, 2), {-20, -20}, {20, 20});
        CubicalGrid coarse = CubicalGrid::box(2, 1, {-12, -12}, {12, 12});
        bool ok = true;
        for (int rep = 0; rep < 25; ++rep) {
            Chain T(int(rng() % 2));
            for (int t = 0; t < 4; ++t) {
                std::vector<int64_t> anchor = {int64_t(rng() % 8),
                                               int64_t(rng() % 8)};
                if (T.dim() == 0) T.add(Cell::cube(anchor, {}), 1 + int(rng() % 2));
                else T.add(Cell::cube(anchor, {int32_t(rng() % 2)}), 1);
            }
            std::vector<const Chain*> batch = {&T};
            CubicalGrid cg = coarse;
            cg.offset = select_offset(batch, fine, coarse, rng());
            DeformationResult res = deform(T, fine, cg);
            Chain lhs = subdivide_chain(T, fine, res.common);
            Chain rhs = subdivide_chain(res.P, res.coarse, res.common) + res.Q;
            if (!res.L.is_zero()) rhs += boundary(res.L);
            ok &= lhs == rhs;
            ok &= res.support_radius <= Rat(2 * fine.dim) * cg.edge;
        }
        return ok;
    });

    r.guarded("annulus_minimization", [] {
        CellComplex A = shapes::annulus(4, 2);
        Chain outer = shapes::frame_cycle(A, 0, 0, 4, 4);
        OHCPInstance inst{&A, &outer};
        MinimizeResult res = optimal_homologous(inst);
        return res.optimal_mass == Rat(8) && res.proved_optimal;
    });

    r.guarded("annulus_systole", [] {
        auto s = systole(shapes::annulus(4, 2), 1);
        return s.has_value() && s->first == Rat(8);
    });

    r.guarded("slice_identity", [&] {
        CellComplex B = shapes::solid_box(3, 3, 3);
        Chain surface = B.boundary_in(shapes::fundamental_chain(B));
        const CubicalGrid& g = B.grid();
        bool ok = true;
        for (int rep = 0; rep < 20; ++rep) {
            std::vector<Rat> x0 = {Rat(int64_t(rng() % 3)), Rat(int64_t(rng() % 3)),
                                   Rat(int64_t(rng() % 3))};
            Rat y = Rat(3 * int64_t(1 + rng() % 3) + 1, 3);
            Chain s = slice(surface, g, x0, y);
            Chain kept = restrict_chain(surface, [&](const Cell& c) {
                return chebyshev(g.cell_center(c), x0) > y;
            });
            Chain expect =
                kept.is_zero() ? Chain(1) : boundary(kept);
            ok &= (s == expect);
            if (!s.is_zero()) ok &= boundary(s).is_zero();
        }
        return ok;
    });

    r.guarded("retract_identities", [] {
        CellComplex K = CellComplex::simplicial(
            {{Rat(0)}, {Rat(1)}, {Rat(2)}},
            {Cell::simplex({0, 1}), Cell::simplex({1, 2})});
        CellComplex L =
            CellComplex::simplicial(K.vertex_coords(), {Cell::simplex({0, 1})});
        Chain onl = Chain::single(Cell::simplex({0, 1}), 2);
        RetractChainResult res = retract_chain(onl, K, L);
        bool ok = res.image == onl && res.subdivisions == 0;
        RetractChainResult res2 =
            retract_chain(Chain::single(Cell::simplex({1, 2})), K, L);
        ok &= res2.image.is_zero();
        return ok;
    });

    r.guarded("axioms_fast", [&] {
        for (const auto& c : axioms::dimension_axiom())
            if (!c.pass) return false;
        for (const auto& c : axioms::functoriality(seed, 4))
            if (!c.pass) return false;
        return true;
    });

    return r.result;
}

}  // namespace chaincal
