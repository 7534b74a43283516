/**
 * chaincal: exact integer chain calculus on cubical and simplicial
 * complexes. Subcommands: rasterize, homology, relhomology, minimize,
 * systole, deform, slice, retract, axioms, selftest.
 */
#include <CLI11.hpp>
#include <iostream>

#include "chaincal/axioms.hpp"
#include "chaincal/deform.hpp"
#include "chaincal/homology.hpp"
#include "chaincal/io.hpp"
#include "chaincal/minimize.hpp"
#include "chaincal/retract.hpp"
#include "chaincal/selftest.hpp"
#include "chaincal/semialg.hpp"
#include "chaincal/shapes.hpp"

using namespace chaincal;

namespace {

struct GlobalOpts {
    uint64_t seed = 0;
    std::string report = "text";
    std::string out_dir = ".";
};

std::string out_path(const GlobalOpts& g, const std::string& name)
{
    if (name.empty() || name[0] == '/') return name;
    return g.out_dir + "/" + name;
}

// Grid around the support of a cubical chain, padded by `margin` cells.
CubicalGrid grid_around(const Chain& c, const Rat& edge, int64_t margin)
{
    int n = 0;
    for (const auto& [cell, m] : c.terms()) {
        (void)m;
        n = static_cast<int>(cell.v.size());
        break;
    }
    if (n == 0) throw EmptyBBox("cannot infer a grid from an empty chain");
    std::vector<int64_t> lo(n), hi(n);
    bool first = true;
    for (const auto& [cell, m] : c.terms()) {
        (void)m;
        for (int i = 0; i < n; ++i) {
            int64_t a = cell.v[i];
            int64_t b = a + (cell.spans(i) ? 1 : 0);
            if (first || a < lo[i]) lo[i] = a;
            if (first || b > hi[i]) hi[i] = b;
        }
        first = false;
    }
    for (int i = 0; i < n; ++i) {
        lo[i] -= margin;
        hi[i] += margin;
    }
    return CubicalGrid::box(n, edge, std::move(lo), std::move(hi));
}

void report_group(const GlobalOpts& g, const HomologyGroup& h,
                  const std::string& prefix)
{
    if (g.report == "lines") {
        std::cout << "dim=" << h.dim << " betti=" << h.betti << " torsion=";
        for (size_t i = 0; i < h.torsion.size(); ++i)
            std::cout << (i ? "," : "") << h.torsion[i];
        std::cout << " generators=" << h.generators.size() << '\n';
    } else {
        std::cout << "H_" << h.dim << " = " << h.format() << '\n';
    }
    for (size_t i = 0; i < h.generators.size(); ++i)
        write_chain(h.generators[i],
                    out_path(g, prefix + "_gen" + std::to_string(i) + ".chain"));
    for (size_t i = 0; i < h.torsion_generators.size(); ++i)
        write_chain(h.torsion_generators[i],
                    out_path(g, prefix + "_tor" + std::to_string(i) + ".chain"));
}

int run(int argc, char** argv)
{
    CLI::App app{"exact integer chain calculus on cell complexes"};
    app.require_subcommand(1);
    app.fallthrough();
    GlobalOpts g;
    app.add_option("--seed", g.seed, "deterministic seed (default 0)");
    app.add_option("--report", g.report, "report style: text|lines")
        ->check(CLI::IsMember({"text", "lines"}));
    app.add_option("--out-dir", g.out_dir, "directory for output files");

    // rasterize
    auto* cmd_raster = app.add_subcommand("rasterize", "rasterize a formula");
    std::string f_formula, f_out = "out.cx", f_bbox, f_edge = "1",
                f_scheme = "center";
    cmd_raster->add_option("--formula", f_formula, "formula file")->required();
    cmd_raster->add_option("--edge", f_edge, "grid edge p/q");
    cmd_raster->add_option("--bbox", f_bbox, "x0,y0,...,x1,y1,...")->required();
    cmd_raster->add_option("--scheme", f_scheme, "center|corners|both");
    cmd_raster->add_option("--out", f_out, "output complex file");

    // homology / relhomology
    auto* cmd_hom = app.add_subcommand("homology", "homology of a complex");
    std::string h_complex, h_prefix = "H";
    int h_dim = 0;
    cmd_hom->add_option("--complex", h_complex)->required();
    cmd_hom->add_option("--dim", h_dim)->required();
    cmd_hom->add_option("--prefix", h_prefix, "generator file prefix");

    auto* cmd_rel = app.add_subcommand("relhomology", "relative homology");
    std::string r_complex, r_sub, r_prefix = "relH";
    int r_dim = 0;
    cmd_rel->add_option("--complex", r_complex)->required();
    cmd_rel->add_option("--sub", r_sub)->required();
    cmd_rel->add_option("--dim", r_dim)->required();
    cmd_rel->add_option("--prefix", r_prefix);

    // minimize
    auto* cmd_min = app.add_subcommand("minimize", "optimal homologous chain");
    std::string m_complex, m_cycle, m_method = "auto", m_out = "minimizer.chain";
    int64_t m_budget = 50000;
    cmd_min->add_option("--complex", m_complex)->required();
    cmd_min->add_option("--cycle", m_cycle)->required();
    cmd_min->add_option("--method", m_method, "auto|lp|ilp|exhaustive");
    cmd_min->add_option("--node-budget", m_budget);
    cmd_min->add_option("--out", m_out);

    // systole
    auto* cmd_sys = app.add_subcommand("systole", "minimal non-bounding mass");
    std::string s_complex, s_out = "systole.chain";
    int s_dim = 1;
    cmd_sys->add_option("--complex", s_complex)->required();
    cmd_sys->add_option("--dim", s_dim)->required();
    cmd_sys->add_option("--out", s_out);

    // deform
    auto* cmd_def = app.add_subcommand("deform", "deform onto a coarse grid");
    std::string d_fine = "1", d_coarse = "1", d_in, d_prefix = "deformed",
                d_ceiling;
    cmd_def->add_option("--fine", d_fine, "fine edge p/q")->required();
    cmd_def->add_option("--coarse", d_coarse, "coarse edge p/q")->required();
    cmd_def->add_option("--kappa-ceiling", d_ceiling, "regression ceiling");
    cmd_def->add_option("input", d_in, "input chain file")->required();
    cmd_def->add_option("output", d_prefix, "output prefix for .P/.Q/.L");

    // slice
    auto* cmd_slice = app.add_subcommand("slice", "slice a cycle at a radius");
    std::string sl_edge = "1", sl_center, sl_radius, sl_in,
                sl_out = "slice.chain";
    cmd_slice->add_option("--edge", sl_edge)->required();
    cmd_slice->add_option("--center", sl_center, "x0 as p/q,...")->required();
    cmd_slice->add_option("--radius", sl_radius, "p/q")->required();
    cmd_slice->add_option("input", sl_in)->required();
    cmd_slice->add_option("--out", sl_out);

    // retract
    auto* cmd_ret = app.add_subcommand("retract", "retract a chain onto L");
    std::string re_complex, re_sub, re_in, re_out = "retracted.chain";
    cmd_ret->add_option("--complex", re_complex)->required();
    cmd_ret->add_option("--sub", re_sub)->required();
    cmd_ret->add_option("input", re_in)->required();
    cmd_ret->add_option("--out", re_out);

    // axioms / selftest
    auto* cmd_ax = app.add_subcommand("axioms", "run the axiom property suite");
    auto* cmd_self = app.add_subcommand("selftest", "fast acceptance subset");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;  // usage error
    }

    if (cmd_raster->parsed()) {
        SAFormula f = read_formula(f_formula);
        auto bbox = parse_rat_vec(f_bbox);
        int n = static_cast<int>(bbox.size()) / 2;
        if (n == 0 || static_cast<int>(bbox.size()) != 2 * n)
            throw ParseError("bbox needs 2n coordinates");
        std::vector<int64_t> lo(n), hi(n);
        Rat edge = parse_rat(f_edge);
        for (int i = 0; i < n; ++i) {
            Rat lo_idx = bbox[i] / edge, hi_idx = bbox[n + i] / edge;
            if (!rat_is_int(lo_idx) || !rat_is_int(hi_idx))
                throw ParseError("bbox corners must be multiples of the edge");
            lo[i] = int64_t(rat_num(lo_idx));
            hi[i] = int64_t(rat_num(hi_idx));
        }
        if (f.has_equality_atom())
            std::cerr << "warning: formula contains '=' atoms; center sampling "
                         "usually misses measure-zero sets. Consider relaxing "
                         "p = 0 to (and (<= p tol) (>= p (- 0 tol))).\n";
        Rasterization R = rasterize(
            f, CubicalGrid::box(n, edge, lo, hi), parse_scheme(f_scheme));
        write_complex(R.complex, out_path(g, f_out));
        std::cout << "top_cells=" << R.complex.cell_count(n)
                  << " cells=" << R.complex.total_cells()
                  << " scheme=" << scheme_str(R.scheme) << '\n';
        return 0;
    }
    if (cmd_hom->parsed()) {
        CellComplex X = read_complex(h_complex);
        report_group(g, homology(X, h_dim), h_prefix);
        return 0;
    }
    if (cmd_rel->parsed()) {
        CellComplex X = read_complex(r_complex);
        CellComplex A = read_complex(r_sub);
        report_group(g, relative_homology({X, A}, r_dim), r_prefix);
        return 0;
    }
    if (cmd_min->parsed()) {
        CellComplex X = read_complex(m_complex);
        Chain z = read_chain(m_cycle, X.kind());
        OHCPInstance inst{&X, &z};
        MinimizeOptions opts;
        opts.method = parse_method(m_method);
        opts.node_budget = m_budget;
        MinimizeResult res = optimal_homologous(inst, opts);
        write_chain(res.minimizer, out_path(g, m_out));
        write_chain(res.witness, out_path(g, m_out + ".witness"));
        std::cout << "optimal_mass=" << rat_str(res.optimal_mass)
                  << " method=" << res.method << " nodes=" << res.nodes
                  << " proved_optimal=" << (res.proved_optimal ? 1 : 0) << '\n';
        return 0;
    }
    if (cmd_sys->parsed()) {
        CellComplex X = read_complex(s_complex);
        auto res = systole(X, s_dim);
        if (!res) {
            std::cout << "systole=none\n";
        } else {
            write_chain(res->second, out_path(g, s_out));
            std::cout << "systole=" << rat_str(res->first) << '\n';
        }
        return 0;
    }
    if (cmd_def->parsed()) {
        Chain T = read_chain(d_in, CellKind::cubical);
        Rat fine_edge = parse_rat(d_fine), coarse_edge = parse_rat(d_coarse);
        Rat ratio = coarse_edge / fine_edge;
        if (!rat_is_int(ratio) || ratio < 1)
            throw DimensionMismatch("fine edge must divide the coarse edge");
        int64_t margin = 2 * int64_t(rat_num(ratio)) + 2;
        CubicalGrid fine = grid_around(T, fine_edge, margin);
        CubicalGrid coarse = fine;
        coarse.edge = coarse_edge;
        std::vector<const Chain*> batch = {&T};
        coarse.offset = select_offset(batch, fine, coarse, g.seed);
        DeformationResult res = deform(T, fine, coarse);
        write_chain(res.P, out_path(g, d_prefix + ".P.chain"));
        write_chain(res.Q, out_path(g, d_prefix + ".Q.chain"));
        write_chain(res.L, out_path(g, d_prefix + ".L.chain"));
        std::cout << "offset=" << rat_vec_str(res.coarse.offset)
                  << " common_edge=" << rat_str(res.common.edge)
                  << " support_radius=" << rat_str(res.support_radius);
        for (int i = 0; i < 4; ++i)
            std::cout << " kappa" << i + 1 << '='
                      << rat_str(res.kappa_observed[i]);
        std::cout << '\n';
        if (!d_ceiling.empty()) {
            Rat ceiling = parse_rat(d_ceiling);
            for (const Rat& kap : res.kappa_observed)
                if (kap > ceiling)
                    throw DomainError("KappaCeiling",
                                      "observed ratio exceeds the ceiling " +
                                          rat_str(ceiling));
        }
        return 0;
    }
    if (cmd_slice->parsed()) {
        Chain c = read_chain(sl_in, CellKind::cubical);
        Rat edge = parse_rat(sl_edge);
        CubicalGrid grid = grid_around(c, edge, 2);
        Chain s = slice(c, grid, parse_rat_vec(sl_center), parse_rat(sl_radius));
        write_chain(s, out_path(g, sl_out));
        std::cout << "slice_cells=" << s.size() << '\n';
        return 0;
    }
    if (cmd_ret->parsed()) {
        CellComplex K = read_complex(re_complex);
        CellComplex L = read_complex(re_sub);
        Chain c = read_chain(re_in, K.kind());
        RetractChainResult res = retract_chain(c, K, L);
        write_chain(res.image, out_path(g, re_out));
        std::cout << "subdivisions=" << res.subdivisions
                  << " image_cells=" << res.image.size() << '\n';
        return 0;
    }
    if (cmd_ax->parsed()) {
        auto results = axioms::run_all(g.seed);
        bool all = true;
        for (const auto& r : results) {
            std::cout << "check=" << r.name << " pass=" << (r.pass ? 1 : 0);
            if (!r.detail.empty() && g.report == "text")
                std::cout << "  (" << r.detail << ')';
            std::cout << '\n';
            all &= r.pass;
        }
        if (!all) throw DomainError("AxiomSuite", "some axiom checks failed");
        return 0;
    }
    if (cmd_self->parsed()) {
        SelftestResult res = run_selftest(g.seed);
        for (const auto& [name, ok] : res.checks)
            std::cout << "selftest " << name << " pass=" << (ok ? 1 : 0) << '\n';
        std::cout << "selftest pass=" << res.passed << " fail=" << res.failed
                  << '\n';
        if (res.failed > 0)
            throw DomainError("Selftest", "selftest failures present");
        return 0;
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv)
{
    try {
        return run(argc, argv);
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
