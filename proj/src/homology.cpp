#include "chaincal/homology.hpp"

#include <sstream>

namespace chaincal {

void RelativePair::validate() const
{
    if (!sub.is_subcomplex_of(ambient))
        throw SubNotContained("sub is not a subcomplex of ambient");
}

bool ClassCoordinates::is_zero() const
{
    for (const Int& v : free_coords)
        if (v != 0) return false;
    for (const Int& v : torsion_residues)
        if (v != 0) return false;
    return true;
}

std::string HomologyGroup::format() const
{
    std::ostringstream os;
    bool any = false;
    if (betti == 1) {
        os << "Z";
        any = true;
    } else if (betti > 1) {
        os << "Z^" << betti;
        any = true;
    }
    for (const Int& t : torsion) {
        if (any) os << " + ";
        os << "Z/" << t;
        any = true;
    }
    if (!any) os << "0";
    return os.str();
}

namespace {

struct QuotientData {
    std::vector<Cell> cells_k;
    std::map<Cell, int> index_k;
    IntMat dk;    // rows: quotient (k-1)-cells, cols: quotient k-cells
    IntMat dk1;   // rows: quotient k-cells, cols: quotient (k+1)-cells
    bool relative = false;
};

// Restrict D_k and D_{k+1} to the cells of X not in A (boundary mod A).
QuotientData quotient_matrices(const CellComplex& X, const CellComplex* A, int k)
{
    QuotientData q;
    q.relative = (A != nullptr);
    auto keep = [&](const Cell& c) { return !A || !A->contains(c); };

    std::vector<Cell> cells_km1, cells_k1;
    for (const Cell& c : X.cells(k - 1))
        if (keep(c)) cells_km1.push_back(c);
    for (const Cell& c : X.cells(k))
        if (keep(c)) q.cells_k.push_back(c);
    for (const Cell& c : X.cells(k + 1))
        if (keep(c)) cells_k1.push_back(c);

    std::map<Cell, int> index_km1;
    for (size_t i = 0; i < cells_km1.size(); ++i) index_km1[cells_km1[i]] = int(i);
    for (size_t i = 0; i < q.cells_k.size(); ++i) q.index_k[q.cells_k[i]] = int(i);

    q.dk = IntMat(int(cells_km1.size()), int(q.cells_k.size()));
    if (k >= 1)
        for (size_t j = 0; j < q.cells_k.size(); ++j)
            for (auto& [face, sign] : cell_faces(q.cells_k[j])) {
                auto it = index_km1.find(X.canonical(face));
                if (it != index_km1.end()) q.dk.at(it->second, int(j)) += sign;
            }

    q.dk1 = IntMat(int(q.cells_k.size()), int(cells_k1.size()));
    for (size_t j = 0; j < cells_k1.size(); ++j)
        for (auto& [face, sign] : cell_faces(cells_k1[j])) {
            auto it = q.index_k.find(X.canonical(face));
            if (it != q.index_k.end()) q.dk1.at(it->second, int(j)) += sign;
        }
    return q;
}

HomologyGroup homology_core(QuotientData q, int k)
{
    HomologyGroup H;
    H.dim = k;
    int n = q.dk.cols;

    // Cycle space: kernel of D_k.
    SNFResult snf_dk = smith_normal_form(q.dk);
    IntMat K = kernel_basis(snf_dk);
    int z = K.cols;

    // Express each boundary column in the kernel basis. The kernel of an
    // integer matrix is a direct summand, so the system K y = col is
    // solvable exactly when col is a cycle, which d d = 0 guarantees.
    SNFResult snf_k = smith_normal_form(K);
    IntMat M(z, q.dk1.cols);
    for (int j = 0; j < q.dk1.cols; ++j) {
        std::vector<Int> col(n);
        for (int i = 0; i < n; ++i) col[i] = q.dk1.at(i, j);
        auto y = solve_integer(snf_k, col);
        if (!y)
            throw NotACycle("boundary column is not a cycle; complex corrupt");
        for (int i = 0; i < z; ++i) M.at(i, j) = (*y)[i];
    }

    SNFResult snf_m = smith_normal_form(M);
    int r = snf_m.rank;
    H.betti = z - r;

    // New basis of the cycle space: G = K * Uinv of SNF(M). The first r
    // columns generate the boundary directions with multiplicities d_i.
    IntMat G = K.mul(snf_m.Uinv);
    for (int i = 0; i < r; ++i) {
        Int d = snf_m.S.at(i, i);
        if (d > 1) {
            H.torsion.push_back(d);
            std::vector<Int> col(G.rows);
            for (int t = 0; t < G.rows; ++t) col[t] = G.at(t, i);
            Chain g(k);
            for (size_t t = 0; t < q.cells_k.size(); ++t)
                if (col[t] != 0) g.add(q.cells_k[t], col[t]);
            H.torsion_generators.push_back(std::move(g));
        }
    }
    for (int i = r; i < z; ++i) {
        Chain g(k);
        for (size_t t = 0; t < q.cells_k.size(); ++t)
            if (G.at(int(t), i) != 0) g.add(q.cells_k[t], G.at(int(t), i));
        H.generators.push_back(std::move(g));
    }

    H.solver.cells = std::move(q.cells_k);
    H.solver.index = std::move(q.index_k);
    H.solver.relative = q.relative;
    H.solver.quotient_boundary = std::move(q.dk);
    H.solver.cycle_basis_snf = std::move(snf_k);
    H.solver.kernel = std::move(K);
    H.solver.um = std::move(snf_m.U);
    for (int i = 0; i < r; ++i) H.solver.diag.push_back(snf_m.S.at(i, i));
    return H;
}

}  // namespace

HomologyGroup homology(const CellComplex& X, int k)
{
    if (k < 0) throw DimensionOutOfRange("negative homology dimension");
    return homology_core(quotient_matrices(X, nullptr, k), k);
}

HomologyGroup relative_homology(const RelativePair& p, int k)
{
    if (k < 0) throw DimensionOutOfRange("negative homology dimension");
    p.validate();
    return homology_core(quotient_matrices(p.ambient, &p.sub, k), k);
}

std::optional<Chain> is_boundary(const Chain& z, const CellComplex& X)
{
    int k = z.dim();
    if (!X.carries(z)) throw NotInComplex("cycle has cells outside the complex");
    if (k >= 1 && !X.boundary_in(z).is_zero())
        throw NotACycle("is_boundary input has nonzero boundary");

    BoundaryOperator D(X);
    IntMat dk1 = D.dense(k + 1);
    if (k + 1 > X.top_dim()) dk1 = IntMat(int(X.cell_count(k)), 0);
    std::vector<Int> beta = chain_to_vector(z, X);
    auto x = solve_integer(smith_normal_form(dk1), beta);
    if (!x) return std::nullopt;
    return vector_to_chain(*x, X, k + 1);
}

ClassCoordinates class_coordinates(const Chain& z, const HomologyGroup& H)
{
    if (z.dim() != H.dim)
        throw DimensionMismatch("chain dimension does not match group");
    const auto& sv = H.solver;
    std::vector<Int> x(sv.cells.size(), Int(0));
    for (const auto& [cell, m] : z.terms()) {
        auto it = sv.index.find(cell);
        if (it == sv.index.end()) {
            if (sv.relative) continue;  // quotiented away (supported on A)
            throw NotInComplex("cycle has cells outside the complex: " +
                               cell.key());
        }
        x[it->second] = m;
    }
    // Relative cycle check: quotient boundary must vanish.
    for (const Int& v : sv.quotient_boundary.apply(x))
        if (v != 0) throw NotACycle("class_coordinates input is not a cycle");

    auto y = solve_integer(sv.cycle_basis_snf, x);
    if (!y) throw NotACycle("cycle is outside the cycle lattice");
    std::vector<Int> w = sv.um.apply(*y);

    ClassCoordinates out;
    int z_rank = sv.kernel.cols;
    int r = int(sv.diag.size());
    for (int i = r; i < z_rank; ++i) out.free_coords.push_back(w[i]);
    for (int i = 0; i < r; ++i) {
        const Int& d = sv.diag[i];
        if (d > 1) {
            Int res = w[i] % d;
            if (res < 0) res += d;
            out.torsion_residues.push_back(res);
        }
    }
    return out;
}

}  // namespace chaincal
