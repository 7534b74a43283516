/**
 * The discrete Eilenberg-Steenrod property suite: functoriality,
 * boundary naturality, pair-sequence exactness, homotopy invariance via
 * the prism, excision through the center-distance comparison set, and
 * the dimension axiom. Each check returns a named pass/fail record; the
 * CLI `axioms` subcommand and the acceptance suite both run it.
 */
#pragma once

#include <string>
#include <vector>

namespace chaincal {
namespace axioms {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

std::vector<CheckResult> functoriality(uint64_t seed, int pairs = 10);
std::vector<CheckResult> boundary_naturality();
std::vector<CheckResult> pair_exactness();
std::vector<CheckResult> homotopy_invariance();
std::vector<CheckResult> excision();
std::vector<CheckResult> dimension_axiom();

/// The whole suite in order (1)-(7).
std::vector<CheckResult> run_all(uint64_t seed = 0);

}  // namespace axioms
}  // namespace chaincal
