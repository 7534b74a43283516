/**
 * Dense arbitrary-precision integer matrices and Smith normal form with
 * tracked unimodular transforms. Pivoting picks the minimal-absolute-value
 * nonzero entry, ties broken by lowest (row, col), which keeps coefficient
 * growth tame and results deterministic.
 */
#pragma once

#include <optional>
#include <vector>

#include "chaincal/numbers.hpp"

namespace chaincal {

struct IntMat {
    int rows = 0;
    int cols = 0;
    std::vector<Int> a;  // row-major

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(size_t(r) * size_t(c), Int(0)) {}

    Int& at(int i, int j) { return a[size_t(i) * cols + j]; }
    const Int& at(int i, int j) const { return a[size_t(i) * cols + j]; }

    static IntMat identity(int n);
    IntMat mul(const IntMat& o) const;
    IntMat transpose() const;
    bool is_zero() const;
    bool operator==(const IntMat& o) const
    {
        return rows == o.rows && cols == o.cols && a == o.a;
    }

    std::vector<Int> apply(const std::vector<Int>& x) const;  // A * x

    void swap_rows(int i, int j);
    void swap_cols(int i, int j);
    void negate_row(int i);
    void negate_col(int j);
    void addmul_row(int i, int j, const Int& c);  // row_i += c * row_j
    void addmul_col(int i, int j, const Int& c);  // col_i += c * col_j

    IntMat col_submatrix(const std::vector<int>& col_ids) const;
};

/// U * A * V = S with S diagonal, nonnegative, d1 | d2 | ...; U, V
/// unimodular. Uinv and Vinv are accumulated alongside.
struct SNFResult {
    IntMat U, V, S;
    IntMat Uinv, Vinv;
    int rank = 0;                 // number of nonzero diagonal entries
    std::vector<Int> diag() const;
};

SNFResult smith_normal_form(const IntMat& A);

/// Integer solution of A x = b through a precomputed SNF of A; nullopt
/// when no solution exists over Z. The particular solution is the
/// SNF-canonical one (zero free coordinates).
std::optional<std::vector<Int>> solve_integer(const SNFResult& snf,
                                              const std::vector<Int>& b);

/// Basis of ker(A) over Z: the columns of V at zero diagonal positions.
IntMat kernel_basis(const SNFResult& snf);

}  // namespace chaincal
