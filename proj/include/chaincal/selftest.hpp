/**
 * Fast self-check: a compact subset of the acceptance properties
 * (dimension axiom, homology corpus, deformation identity, annulus
 * minimization, systole, slicing, retraction identities), suitable for
 * the `selftest` CLI subcommand.
 */
#pragma once

#include <string>
#include <vector>

namespace chaincal {

struct SelftestResult {
    std::vector<std::pair<std::string, bool>> checks;
    int passed = 0;
    int failed = 0;
};

SelftestResult run_selftest(uint64_t seed = 0);

}  // namespace chaincal
