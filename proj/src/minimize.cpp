#include "chaincal/minimize.hpp"
#include <functional>

#include <algorithm>
#include <queue>

namespace chaincal {

namespace {

// Determinant of a small {-1,0,1}-seeded integer matrix by fraction-free
// Bareiss elimination; values stay within int64 for sizes <= 8.
int64_t small_det(std::vector<std::vector<int64_t>> m)
{
    int n = static_cast<int>(m.size());
    int64_t prev = 1;
    int sign = 1;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return 0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            sign = -sign;
        }
        for (int r = col + 1; r < n; ++r) {
            for (int c = col + 1; c < n; ++c)
                m[r][c] = (m[r][c] * m[col][col] - m[r][col] * m[col][c]) / prev;
            m[r][col] = 0;
        }
        prev = m[col][col];
    }
    return sign * m[n - 1][n - 1];
}

bool minors_ok(const IntMat& A, int size)
{
    std::vector<int> rows(size), cols(size);
    std::function<bool(int, int)> pick_cols = [&](int start, int chosen) {
        if (chosen == size) {
            std::vector<std::vector<int64_t>> sub(size,
                                                  std::vector<int64_t>(size));
            for (int i = 0; i < size; ++i)
                for (int j = 0; j < size; ++j)
                    sub[i][j] = static_cast<int64_t>(A.at(rows[i], cols[j]));
            int64_t d = small_det(std::move(sub));
            return d >= -1 && d <= 1;
        }
        for (int c = start; c < A.cols; ++c) {
            cols[chosen] = c;
            if (!pick_cols(c + 1, chosen + 1)) return false;
        }
        return true;
    };
    std::function<bool(int, int)> pick_rows = [&](int start, int chosen) {
        if (chosen == size) return pick_cols(0, 0);
        for (int r = start; r < A.rows; ++r) {
            rows[chosen] = r;
            if (!pick_rows(r + 1, chosen + 1)) return false;
        }
        return true;
    };
    return pick_rows(0, 0);
}

}  // namespace

bool is_totally_unimodular(const IntMat& A, int cap)
{
    for (const Int& v : A.a)
        if (v < -1 || v > 1) return false;
    if (A.rows == 0 || A.cols == 0) return true;
    if (A.rows > cap || A.cols > cap) return false;  // conservative path
    int limit = std::min(A.rows, A.cols);
    for (int size = 2; size <= limit; ++size)
        if (!minors_ok(A, size)) return false;
    return true;
}

LinearSystem boundary_system(const CellComplex& X, const Chain& z)
{
    LinearSystem sys;
    BoundaryOperator D(X);
    int k = z.dim();
    sys.D = D.dense(k + 1);
    if (k + 1 > X.top_dim()) sys.D = IntMat(int(X.cell_count(k)), 0);
    sys.beta = chain_to_vector(z, X);
    return sys;
}

std::optional<std::vector<Int>> solve_boundary_system(const LinearSystem& sys)
{
    if (static_cast<int>(sys.beta.size()) != sys.D.rows)
        throw DimensionMismatch("system dimensions are inconsistent");
    return solve_integer(smith_normal_form(sys.D), sys.beta);
}

void OHCPInstance::validate() const
{
    if (!complex || !cycle) throw DimensionMismatch("empty instance");
    if (!complex->carries(*cycle))
        throw NotInComplex("cycle has cells outside the complex");
    if (cycle->dim() >= 1 && !complex->boundary_in(*cycle).is_zero())
        throw NotACycle("instance chain is not a cycle");
}

MinimizeMethod parse_method(const std::string& s)
{
    if (s == "auto") return MinimizeMethod::automatic;
    if (s == "lp") return MinimizeMethod::lp;
    if (s == "ilp") return MinimizeMethod::ilp;
    if (s == "exhaustive") return MinimizeMethod::exhaustive;
    throw ParseError("unknown method: " + s);
}

// ---------------------------------------------------------------------
// Exact primal simplex, dense tableau, Bland's rule.

namespace {

struct Tableau {
    int m, n;  // rows, structural columns
    std::vector<std::vector<Rat>> t;  // m x (n+1), last column = rhs
    std::vector<int> basis;

    void pivot(int row, int col)
    {
        Rat p = t[row][col];
        for (auto& v : t[row]) v /= p;
        for (int r = 0; r < m; ++r) {
            if (r == row || t[r][col] == 0) continue;
            Rat f = t[r][col];
            for (int c = 0; c <= n; ++c) t[r][c] -= f * t[row][c];
        }
        basis[row] = col;
    }

    // Minimize c over the current feasible basis; returns false when
    // unbounded. `active` limits the entering columns.
    bool optimize(const std::vector<Rat>& cost, int active)
    {
        while (true) {
            // reduced costs via the basic cost vector
            int enter = -1;
            for (int j = 0; j < active; ++j) {
                bool basic = false;
                for (int r = 0; r < m; ++r)
                    if (basis[r] == j) basic = true;
                if (basic) continue;
                Rat rc = cost[j];
                for (int r = 0; r < m; ++r) {
                    if (t[r][j] == 0) continue;
                    rc -= cost[basis[r]] * t[r][j];
                }
                if (rc < 0) {
                    enter = j;
                    break;  // Bland: lowest index
                }
            }
            if (enter < 0) return true;
            int leave = -1;
            Rat best_ratio = 0;
            for (int r = 0; r < m; ++r) {
                if (t[r][enter] <= 0) continue;
                Rat ratio = t[r][n] / t[r][enter];
                if (leave < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis[r] < basis[leave])) {
                    leave = r;
                    best_ratio = ratio;
                }
            }
            if (leave < 0) return false;
            pivot(leave, enter);
        }
    }

    Rat objective(const std::vector<Rat>& cost) const
    {
        Rat v = 0;
        for (int r = 0; r < m; ++r) v += cost[basis[r]] * t[r][n];
        return v;
    }
};

}  // namespace

LPResult solve_lp(const std::vector<std::vector<Rat>>& A,
                  const std::vector<Rat>& b, const std::vector<Rat>& c)
{
    int m = static_cast<int>(A.size());
    int n = m ? static_cast<int>(A[0].size()) : static_cast<int>(c.size());

    Tableau tab;
    tab.m = m;
    tab.n = n + m;  // structural + artificial
    tab.t.assign(m, std::vector<Rat>(tab.n + 1, Rat(0)));
    tab.basis.resize(m);
    for (int r = 0; r < m; ++r) {
        Rat sign = (b[r] < 0) ? Rat(-1) : Rat(1);
        for (int j = 0; j < n; ++j) tab.t[r][j] = sign * A[r][j];
        tab.t[r][n + r] = 1;
        tab.t[r][tab.n] = sign * b[r];
        tab.basis[r] = n + r;
    }

    // Phase 1: minimize the artificial sum.
    std::vector<Rat> phase1(tab.n, Rat(0));
    for (int j = n; j < tab.n; ++j) phase1[j] = 1;
    tab.optimize(phase1, tab.n);
    if (tab.objective(phase1) > 0)
        return {LPResult::Status::infeasible, Rat(0), {}};

    // Drive leftover artificial basics out or drop their rows.
    for (int r = 0; r < m; ++r) {
        if (tab.basis[r] < n) continue;
        int col = -1;
        for (int j = 0; j < n; ++j)
            if (tab.t[r][j] != 0) {
                col = j;
                break;
            }
        if (col >= 0) tab.pivot(r, col);
        // else: redundant constraint; the artificial stays basic at zero
        // and never re-enters because phase 2 restricts entering columns.
    }

    // Phase 2.
    std::vector<Rat> cost(tab.n, Rat(0));
    for (int j = 0; j < n; ++j) cost[j] = c[j];
    if (!tab.optimize(cost, n))
        return {LPResult::Status::unbounded, Rat(0), {}};

    LPResult out;
    out.status = LPResult::Status::optimal;
    out.x.assign(n, Rat(0));
    for (int r = 0; r < m; ++r)
        if (tab.basis[r] < n) out.x[tab.basis[r]] = tab.t[r][tab.n];
    out.value = 0;
    for (int j = 0; j < n; ++j) out.value += c[j] * out.x[j];
    return out;
}

// ---------------------------------------------------------------------
// OHCP solver.

namespace {

struct OhcpData {
    const CellComplex* X = nullptr;
    int k = 0;
    IntMat D;                 // q x p
    std::vector<Int> z;       // q
    std::vector<Rat> w;       // q, positive cell weights
    int p = 0, q = 0;

    Rat mass_of(const std::vector<Int>& coeffs) const
    {
        Rat total = 0;
        for (int e = 0; e < q; ++e) {
            Int a = coeffs[e];
            if (a < 0) a = -a;
            total += Rat(a) * w[e];
        }
        return total;
    }

    std::vector<Int> apply_y(const std::vector<Int>& y) const
    {
        std::vector<Int> r = z;
        for (int j = 0; j < p; ++j) {
            if (y[j] == 0) continue;
            for (int e = 0; e < q; ++e)
                if (D.at(e, j) != 0) r[e] += D.at(e, j) * y[j];
        }
        return r;
    }
};

OhcpData build_data(const OHCPInstance& inst)
{
    inst.validate();
    OhcpData d;
    d.X = inst.complex;
    d.k = inst.cycle->dim();
    BoundaryOperator B(*d.X);
    d.D = B.dense(d.k + 1);
    if (d.k + 1 > d.X->top_dim())
        d.D = IntMat(int(d.X->cell_count(d.k)), 0);
    d.z = chain_to_vector(*inst.cycle, *d.X);
    d.q = d.D.rows;
    d.p = d.D.cols;
    const auto& cells = d.X->cells(d.k);
    d.w.resize(d.q);
    for (int e = 0; e < d.q; ++e) d.w[e] = d.X->weight(cells[e]);
    return d;
}

// LP relaxation of min sum w|z + D y| with optional bounds on y:
// variables y+, y-, t+, t- >= 0, rows D y+ - D y- - t+ + t- = -z,
// plus a slack row per bound.
struct Bound {
    int var;
    bool upper;
    Int value;
};

LPResult ohcp_lp(const OhcpData& d, const std::vector<Bound>& bounds)
{
    int p = d.p, q = d.q;
    int nb = static_cast<int>(bounds.size());
    int n = 2 * p + 2 * q + nb;
    int m = q + nb;
    std::vector<std::vector<Rat>> A(m, std::vector<Rat>(n, Rat(0)));
    std::vector<Rat> b(m), c(n, Rat(0));
    for (int e = 0; e < q; ++e) {
        for (int j = 0; j < p; ++j) {
            Rat v = Rat(d.D.at(e, j));
            A[e][j] = v;
            A[e][p + j] = -v;
        }
        A[e][2 * p + e] = -1;
        A[e][2 * p + q + e] = 1;
        b[e] = Rat(-d.z[e]);
        c[2 * p + e] = d.w[e];
        c[2 * p + q + e] = d.w[e];
    }
    for (int i = 0; i < nb; ++i) {
        int r = q + i;
        const Bound& bd = bounds[i];
        // y_j + s = u   or   y_j - s = l
        A[r][bd.var] = 1;
        A[r][p + bd.var] = -1;
        A[r][2 * p + 2 * q + i] = bd.upper ? Rat(1) : Rat(-1);
        b[r] = Rat(bd.value);
    }
    return solve_lp(A, b, c);
}

std::vector<Rat> extract_y(const OhcpData& d, const LPResult& lp)
{
    std::vector<Rat> y(d.p);
    for (int j = 0; j < d.p; ++j) y[j] = lp.x[j] - lp.x[d.p + j];
    return y;
}

std::vector<Int> round_y(const std::vector<Rat>& y)
{
    std::vector<Int> out(y.size());
    for (size_t j = 0; j < y.size(); ++j)
        out[j] = rat_floor(y[j] + Rat(1, 2));
    return out;
}

bool integral_y(const std::vector<Rat>& y)
{
    return std::all_of(y.begin(), y.end(), rat_is_int);
}

MinimizeResult package(const OhcpData& d, const std::vector<Int>& y,
                       const std::string& method, bool proved, int64_t nodes)
{
    MinimizeResult res;
    res.witness = vector_to_chain(y, *d.X, d.k + 1);
    std::vector<Int> zs = d.apply_y(y);
    res.minimizer = vector_to_chain(zs, *d.X, d.k);
    res.optimal_mass = d.mass_of(zs);
    res.method = method;
    res.proved_optimal = proved;
    res.nodes = nodes;
    return res;
}

MinimizeResult solve_branch_and_bound(const OhcpData& d, int64_t budget)
{
    struct Node {
        Rat bound;
        int64_t id;
        std::vector<Bound> bounds;
        std::vector<Rat> y;
        bool operator<(const Node& o) const
        {
            // priority_queue is a max-heap; invert for best-first.
            if (bound != o.bound) return bound > o.bound;
            return id > o.id;
        }
    };

    std::vector<Int> incumbent;
    Rat incumbent_mass;
    bool have_incumbent = false;
    auto offer = [&](const std::vector<Int>& y) {
        Rat mz = d.mass_of(d.apply_y(y));
        if (!have_incumbent || mz < incumbent_mass) {
            incumbent = y;
            incumbent_mass = mz;
            have_incumbent = true;
        }
    };
    offer(std::vector<Int>(d.p, Int(0)));

    std::priority_queue<Node> open;
    int64_t next_id = 0, nodes = 0;
    {
        LPResult root = ohcp_lp(d, {});
        if (root.status != LPResult::Status::optimal)
            throw SolverLimit("LP relaxation failed at the root");
        Node n{root.value, next_id++, {}, extract_y(d, root)};
        open.push(std::move(n));
    }

    while (!open.empty()) {
        Node node = open.top();
        open.pop();
        ++nodes;
        if (have_incumbent && node.bound >= incumbent_mass) continue;
        if (nodes > budget)
            return package(d, incumbent, "ilp", false, nodes);

        offer(round_y(node.y));
        if (have_incumbent && node.bound >= incumbent_mass) continue;

        if (integral_y(node.y)) {
            std::vector<Int> yi(d.p);
            for (int j = 0; j < d.p; ++j) yi[j] = rat_num(node.y[j]);
            offer(yi);
            continue;
        }
        // Branch on the most fractional coordinate, ties by lowest index.
        int var = -1;
        Rat best_frac = 0;
        for (int j = 0; j < d.p; ++j) {
            Rat f = node.y[j] - Rat(rat_floor(node.y[j]));
            Rat dist = std::min(f, Rat(1) - f);
            if (dist > best_frac) {
                best_frac = dist;
                var = j;
            }
        }
        Int lo = rat_floor(node.y[var]);
        for (int side = 0; side < 2; ++side) {
            std::vector<Bound> bounds = node.bounds;
            if (side == 0) bounds.push_back({var, true, lo});
            else bounds.push_back({var, false, lo + 1});
            LPResult lp = ohcp_lp(d, bounds);
            if (lp.status != LPResult::Status::optimal) continue;
            if (have_incumbent && lp.value >= incumbent_mass) continue;
            open.push(Node{lp.value, next_id++, std::move(bounds),
                           extract_y(d, lp)});
        }
    }
    return package(d, incumbent, "ilp", true, nodes);
}

MinimizeResult solve_exhaustive(const OhcpData& d)
{
    // Coefficient box from the optimality argument: any candidate whose
    // single coefficient already outweighs mass(z) cannot improve on y=0.
    Rat min_w = d.w.empty() ? Rat(1) : d.w[0];
    for (const Rat& v : d.w) min_w = std::min(min_w, v);
    Rat mz = d.mass_of(d.z);
    Int B = (min_w > 0) ? rat_ceil(mz / min_w) : Int(0);

    std::vector<std::vector<int>> rows_of_col(d.p);
    std::vector<int> remaining(d.q, 0);
    for (int j = 0; j < d.p; ++j)
        for (int e = 0; e < d.q; ++e)
            if (d.D.at(e, j) != 0) {
                rows_of_col[j].push_back(e);
                ++remaining[e];
            }
    Rat base = 0;
    for (int e = 0; e < d.q; ++e)
        if (remaining[e] == 0) base += Rat(abs(d.z[e])) * d.w[e];

    std::vector<Int> cur = d.z;
    std::vector<Int> y(d.p, Int(0)), best_y(d.p, Int(0));
    Rat best_mass = mz;

    // Candidate values ordered by magnitude for early pruning.
    std::vector<Int> values;
    values.push_back(0);
    for (Int v = 1; v <= B; ++v) {
        values.push_back(v);
        values.push_back(-v);
    }

    std::function<void(int, Rat)> dfs = [&](int j, Rat fixed) {
        if (fixed >= best_mass && j > 0) return;
        if (j == d.p) {
            if (fixed < best_mass) {
                best_mass = fixed;
                best_y = y;
            }
            return;
        }
        for (const Int& v : values) {
            y[j] = v;
            Rat delta = 0;
            for (int e : rows_of_col[j]) {
                cur[e] += d.D.at(e, j) * v;
                if (--remaining[e] == 0) delta += Rat(abs(cur[e])) * d.w[e];
            }
            dfs(j + 1, fixed + delta);
            for (int e : rows_of_col[j]) {
                ++remaining[e];
                cur[e] -= d.D.at(e, j) * v;
            }
            y[j] = 0;
        }
    };
    dfs(0, base);
    return package(d, best_y, "exhaustive", true, 0);
}

}  // namespace

OhcpLpRelaxation ohcp_lp_relaxation(const OHCPInstance& inst)
{
    OhcpData d = build_data(inst);
    LPResult lp = ohcp_lp(d, {});
    if (lp.status != LPResult::Status::optimal)
        throw SolverLimit("LP relaxation failed");
    OhcpLpRelaxation out;
    out.value = lp.value;
    out.y = extract_y(d, lp);
    out.integral = integral_y(out.y);
    return out;
}

MinimizeResult optimal_homologous(const OHCPInstance& inst,
                                  const MinimizeOptions& opts)
{
    OhcpData d = build_data(inst);

    if (opts.method == MinimizeMethod::exhaustive) return solve_exhaustive(d);

    if (opts.method == MinimizeMethod::automatic ||
        opts.method == MinimizeMethod::lp) {
        bool tu = is_totally_unimodular(d.D);
        if (tu || opts.method == MinimizeMethod::lp) {
            LPResult lp = ohcp_lp(d, {});
            if (lp.status == LPResult::Status::optimal) {
                std::vector<Rat> y = extract_y(d, lp);
                if (integral_y(y)) {
                    std::vector<Int> yi(d.p);
                    for (int j = 0; j < d.p; ++j) yi[j] = rat_num(y[j]);
                    MinimizeResult res = package(d, yi, "lp-tu", true, 1);
                    // The LP value bounds every integer candidate from
                    // below, so an integral vertex is globally optimal.
                    if (res.optimal_mass != lp.value)
                        throw SolverLimit("LP value does not match its vertex");
                    return res;
                }
            }
            if (opts.method == MinimizeMethod::lp)
                throw SolverLimit(
                    "LP relaxation is not integral; rerun with method=ilp");
        }
    }
    return solve_branch_and_bound(d, opts.node_budget);
}

std::optional<std::pair<Rat, Chain>> systole(const CellComplex& X, int k,
                                             const MinimizeOptions& opts)
{
    HomologyGroup H = homology(X, k);
    if (H.betti == 0 && H.torsion.empty()) return std::nullopt;

    int nfree = H.betti;
    int ntor = static_cast<int>(H.torsion.size());
    std::vector<Int> pattern(nfree, Int(0)), residue(ntor, Int(0));

    std::optional<std::pair<Rat, Chain>> best;
    std::function<void(int)> walk_res = [&](int t) {
        if (t == ntor) {
            bool all_zero = std::all_of(pattern.begin(), pattern.end(),
                                        [](const Int& v) { return v == 0; }) &&
                            std::all_of(residue.begin(), residue.end(),
                                        [](const Int& v) { return v == 0; });
            if (all_zero) return;
            Chain z(k);
            for (int i = 0; i < nfree; ++i)
                z += pattern[i] * Chain(H.generators[i]);
            for (int i = 0; i < ntor; ++i)
                z += residue[i] * Chain(H.torsion_generators[i]);
            OHCPInstance inst{&X, &z};
            MinimizeResult res = optimal_homologous(inst, opts);
            if (!res.proved_optimal)
                throw SolverLimit("systole subproblem hit the node budget");
            if (!best || res.optimal_mass < best->first)
                best = {res.optimal_mass, res.minimizer};
            return;
        }
        for (Int r = 0; r < H.torsion[t]; ++r) {
            residue[t] = r;
            walk_res(t + 1);
        }
        residue[t] = 0;
    };
    std::function<void(int)> walk = [&](int i) {
        if (i == nfree) {
            walk_res(0);
            return;
        }
        for (int v = -1; v <= 1; ++v) {
            pattern[i] = v;
            walk(i + 1);
        }
        pattern[i] = 0;
    };
    walk(0);
    return best;
}

}  // namespace chaincal
