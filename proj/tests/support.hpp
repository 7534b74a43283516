/**
 * Shared test helpers: a deterministic RNG, random chain generators, and
 * the independent rank-over-Q oracle used to cross-check homology.
 */
#pragma once

#include <random>
#include <vector>

#include "chaincal/complex.hpp"
#include "chaincal/homology.hpp"

namespace testsupport {

using namespace chaincal;

class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}
    // Uniform in [0, n); avoids std::uniform_int_distribution so the
    // stream is identical across standard libraries.
    int64_t below(int64_t n) { return int64_t(eng_() % uint64_t(n)); }
    int64_t range(int64_t lo, int64_t hi)  // inclusive
    {
        return lo + below(hi - lo + 1);
    }
    bool coin() { return (eng_() & 1) != 0; }

private:
    std::mt19937_64 eng_;
};

/// Rank over Q by plain rational Gaussian elimination; independent of
/// the Smith-normal-form path.
inline int rank_over_q(const IntMat& a)
{
    int rows = a.rows, cols = a.cols;
    std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m[i][j] = Rat(a.at(i, j));
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int r = rank + 1; r < rows; ++r) {
            if (m[r][col] == 0) continue;
            Rat f = m[r][col] / m[rank][col];
            for (int c = col; c < cols; ++c) m[r][c] -= f * m[rank][c];
        }
        ++rank;
    }
    return rank;
}

/// Betti number from ranks over Q (homology has no torsion contribution
/// to rank): betti_k = n_k - rank(D_k) - rank(D_{k+1}).
inline int betti_by_rank(const CellComplex& X, int k)
{
    BoundaryOperator D(X);
    int nk = int(X.cell_count(k));
    if (nk == 0) return 0;
    int rk = (k >= 1) ? rank_over_q(D.dense(k)) : 0;
    int rk1 = (k + 1 <= X.top_dim()) ? rank_over_q(D.dense(k + 1)) : 0;
    return nk - rk - rk1;
}

/// Random chain over the k-cells of a complex with small coefficients.
inline Chain random_chain(const CellComplex& X, int k, Rng& rng,
                          int max_terms = 6, int max_coeff = 3)
{
    Chain c(k);
    const auto& cells = X.cells(k);
    if (cells.empty()) return c;
    int terms = int(rng.range(1, max_terms));
    for (int t = 0; t < terms; ++t) {
        const Cell& cell = cells[size_t(rng.below(int64_t(cells.size())))];
        int64_t m = rng.range(-max_coeff, max_coeff);
        if (m != 0) c.add(cell, Int(m));
    }
    return c;
}

/// Random k-cycle: boundary of a random (k+1)-chain (zero chain possible).
inline Chain random_cycle(const CellComplex& X, int k, Rng& rng,
                          int max_terms = 6)
{
    if (k + 1 > X.top_dim()) return Chain(k);
    Chain w = random_chain(X, k + 1, rng, max_terms);
    if (w.is_zero()) return Chain(k);
    return X.boundary_in(w);
}

}  // namespace testsupport
