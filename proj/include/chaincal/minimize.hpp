/**
 * Homological mass minimization: the optimal homologous chain problem
 * min mass(z + dy) over integer y, solved by an exact rational-simplex
 * LP relaxation (integral under total unimodularity), branch-and-bound
 * for the general case, and a pruned exhaustive search used as the
 * independent oracle method. Also the discrete systole: the minimal
 * mass of a non-bounding cycle.
 */
#pragma once

#include <optional>

#include "chaincal/homology.hpp"

namespace chaincal {

/// Every square submatrix has determinant in {-1, 0, +1}. Exhaustive
/// minor enumeration up to `cap` x `cap`; larger matrices take the
/// conservative `false` path (never an unsound `true`).
bool is_totally_unimodular(const IntMat& A, int cap = 8);

/// The system D x = beta of the mass-minimization proof: D is the
/// (k+1)-boundary matrix slice, beta the coefficient vector of a k-chain.
struct LinearSystem {
    IntMat D;
    std::vector<Int> beta;
};

LinearSystem boundary_system(const CellComplex& X, const Chain& z);

/// Some integer solution (SNF-canonical) or nullopt.
std::optional<std::vector<Int>> solve_boundary_system(const LinearSystem& sys);

struct OHCPInstance {
    const CellComplex* complex = nullptr;
    const Chain* cycle = nullptr;
    void validate() const;  // NotACycle / NotInComplex
};

enum class MinimizeMethod { automatic, lp, ilp, exhaustive };

MinimizeMethod parse_method(const std::string& s);

struct MinimizeOptions {
    MinimizeMethod method = MinimizeMethod::automatic;
    int64_t node_budget = 50000;
};

struct MinimizeResult {
    Chain minimizer;      // z* = z + boundary(witness), mass-minimal
    Chain witness;        // y with z* - z = boundary(y)
    std::string method;   // "lp-tu" | "ilp" | "exhaustive"
    Rat optimal_mass;
    bool proved_optimal = true;
    int64_t nodes = 0;    // branch-and-bound nodes (1 = root only)
};

MinimizeResult optimal_homologous(const OHCPInstance& inst,
                                  const MinimizeOptions& opts = {});

/// Minimal mass of a non-bounding k-cycle together with a realizing
/// cycle; nullopt when H_k is trivial (every cycle bounds). Searches the
/// coordinate patterns {-1,0,1}^betti x torsion residues.
std::optional<std::pair<Rat, Chain>> systole(const CellComplex& X, int k,
                                             const MinimizeOptions& opts = {});

/// Exact rational-simplex LP solver for min c.x, A x = b, x >= 0,
/// exposed for the integrality checks in the test suites.
struct LPResult {
    enum class Status { optimal, infeasible, unbounded } status;
    Rat value;
    std::vector<Rat> x;
};

LPResult solve_lp(const std::vector<std::vector<Rat>>& A,
                  const std::vector<Rat>& b, const std::vector<Rat>& c);

/// The OHCP LP relaxation bound (and its y part) for one instance; used
/// by the acceptance suite to compare the LP optimum with the ILP one.
struct OhcpLpRelaxation {
    Rat value;
    std::vector<Rat> y;
    bool integral = false;
};

OhcpLpRelaxation ohcp_lp_relaxation(const OHCPInstance& inst);

}  // namespace chaincal
