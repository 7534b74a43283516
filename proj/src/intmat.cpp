#include "chaincal/intmat.hpp"

#include <algorithm>

namespace chaincal {

IntMat IntMat::identity(int n)
{
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::mul(const IntMat& o) const
{
    IntMat out(rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            const Int& v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < o.cols; ++j) {
                const Int& w = o.at(k, j);
                if (w != 0) out.at(i, j) += v * w;
            }
        }
    return out;
}

IntMat IntMat::transpose() const
{
    IntMat out(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) out.at(j, i) = at(i, j);
    return out;
}

bool IntMat::is_zero() const
{
    return std::all_of(a.begin(), a.end(), [](const Int& v) { return v == 0; });
}

std::vector<Int> IntMat::apply(const std::vector<Int>& x) const
{
    std::vector<Int> out(rows, Int(0));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (at(i, j) != 0 && x[j] != 0) out[i] += at(i, j) * x[j];
    return out;
}

void IntMat::swap_rows(int i, int j)
{
    if (i == j) return;
    for (int c = 0; c < cols; ++c) std::swap(at(i, c), at(j, c));
}

void IntMat::swap_cols(int i, int j)
{
    if (i == j) return;
    for (int r = 0; r < rows; ++r) std::swap(at(r, i), at(r, j));
}

void IntMat::negate_row(int i)
{
    for (int c = 0; c < cols; ++c) at(i, c) = -at(i, c);
}

void IntMat::negate_col(int j)
{
    for (int r = 0; r < rows; ++r) at(r, j) = -at(r, j);
}

void IntMat::addmul_row(int i, int j, const Int& c)
{
    if (c == 0) return;
    for (int t = 0; t < cols; ++t)
        if (at(j, t) != 0) at(i, t) += c * at(j, t);
}

void IntMat::addmul_col(int i, int j, const Int& c)
{
    if (c == 0) return;
    for (int t = 0; t < rows; ++t)
        if (at(t, j) != 0) at(t, i) += c * at(t, j);
}

IntMat IntMat::col_submatrix(const std::vector<int>& col_ids) const
{
    IntMat out(rows, static_cast<int>(col_ids.size()));
    for (int i = 0; i < rows; ++i)
        for (size_t j = 0; j < col_ids.size(); ++j)
            out.at(i, static_cast<int>(j)) = at(i, col_ids[j]);
    return out;
}

std::vector<Int> SNFResult::diag() const
{
    int n = std::min(S.rows, S.cols);
    std::vector<Int> out(n);
    for (int i = 0; i < n; ++i) out[i] = S.at(i, i);
    return out;
}

namespace {

// Elementary operations applied to S are mirrored into U/V and their
// inverses: a row op E on the left updates U <- E U and Uinv <- Uinv E^-1
// (a column op on Uinv); symmetrically for columns.
struct SnfWork {
    IntMat S, U, V, Uinv, Vinv;

    void row_swap(int i, int j)
    {
        S.swap_rows(i, j);
        U.swap_rows(i, j);
        Uinv.swap_cols(i, j);
    }
    void col_swap(int i, int j)
    {
        S.swap_cols(i, j);
        V.swap_cols(i, j);
        Vinv.swap_rows(i, j);
    }
    void row_addmul(int i, int j, const Int& c)
    {
        S.addmul_row(i, j, c);
        U.addmul_row(i, j, c);
        Uinv.addmul_col(j, i, -c);
    }
    void col_addmul(int i, int j, const Int& c)
    {
        S.addmul_col(i, j, c);
        V.addmul_col(i, j, c);
        Vinv.addmul_row(j, i, -c);
    }
    void row_negate(int i)
    {
        S.negate_row(i);
        U.negate_row(i);
        Uinv.negate_col(i);
    }
};

// Minimal |value| nonzero in S[t.., t..]; ties by lowest (row, col).
// Returns false when the block is all zero.
bool find_pivot(const IntMat& S, int t, int& pr, int& pc)
{
    bool found = false;
    Int best = 0;
    for (int i = t; i < S.rows; ++i)
        for (int j = t; j < S.cols; ++j) {
            const Int& v = S.at(i, j);
            if (v == 0) continue;
            Int av = abs(v);
            if (!found || av < best) {
                found = true;
                best = av;
                pr = i;
                pc = j;
                if (best == 1) return true;
            }
        }
    return found;
}

}  // namespace

SNFResult smith_normal_form(const IntMat& A)
{
    SnfWork w;
    w.S = A;
    w.U = IntMat::identity(A.rows);
    w.Uinv = IntMat::identity(A.rows);
    w.V = IntMat::identity(A.cols);
    w.Vinv = IntMat::identity(A.cols);

    int n = std::min(A.rows, A.cols);
    int t = 0;
    for (; t < n; ++t) {
        int pr, pc;
        if (!find_pivot(w.S, t, pr, pc)) break;
        w.row_swap(t, pr);
        w.col_swap(t, pc);

        while (true) {
            // Clear the pivot column and row, re-pivoting on any smaller
            // remainder that appears.
            bool dirty = false;
            for (int i = t + 1; i < w.S.rows; ++i) {
                if (w.S.at(i, t) == 0) continue;
                Int q = w.S.at(i, t) / w.S.at(t, t);
                w.row_addmul(i, t, -q);
                if (w.S.at(i, t) != 0) {
                    w.row_swap(t, i);  // remainder strictly smaller
                    dirty = true;
                }
            }
            for (int j = t + 1; j < w.S.cols; ++j) {
                if (w.S.at(t, j) == 0) continue;
                Int q = w.S.at(t, j) / w.S.at(t, t);
                w.col_addmul(j, t, -q);
                if (w.S.at(t, j) != 0) {
                    w.col_swap(t, j);
                    dirty = true;
                }
            }
            if (dirty) continue;

            // Row and column are clear; enforce divisibility of the
            // remaining block by folding an offending row into row t.
            bool divides = true;
            for (int i = t + 1; i < w.S.rows && divides; ++i)
                for (int j = t + 1; j < w.S.cols; ++j)
                    if (w.S.at(i, j) % w.S.at(t, t) != 0) {
                        w.row_addmul(t, i, Int(1));
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (w.S.at(t, t) < 0) w.row_negate(t);
    }

    SNFResult out;
    out.S = std::move(w.S);
    out.U = std::move(w.U);
    out.V = std::move(w.V);
    out.Uinv = std::move(w.Uinv);
    out.Vinv = std::move(w.Vinv);
    out.rank = t;
    return out;
}

std::optional<std::vector<Int>> solve_integer(const SNFResult& snf,
                                              const std::vector<Int>& b)
{
    // U A V = S, so A x = b iff S z = U b with x = V z.
    std::vector<Int> y = snf.U.apply(b);
    int n = snf.S.cols;
    std::vector<Int> z(n, Int(0));
    int d = std::min(snf.S.rows, snf.S.cols);
    for (int i = 0; i < snf.S.rows; ++i) {
        Int di = (i < d) ? snf.S.at(i, i) : Int(0);
        if (di == 0) {
            if (y[i] != 0) return std::nullopt;
        } else {
            if (y[i] % di != 0) return std::nullopt;
            z[i] = y[i] / di;
        }
    }
    return snf.V.apply(z);
}

IntMat kernel_basis(const SNFResult& snf)
{
    std::vector<int> free_cols;
    for (int j = snf.rank; j < snf.S.cols; ++j) free_cols.push_back(j);
    return snf.V.col_submatrix(free_cols);
}

}  // namespace chaincal
