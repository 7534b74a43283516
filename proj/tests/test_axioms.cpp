#include <doctest.h>

#include "chaincal/axioms.hpp"

using namespace chaincal;

TEST_CASE("Eilenberg-Steenrod suite passes")
{
    auto results = axioms::run_all(0);
    CHECK(results.size() >= 17);
    int by_axiom[8] = {0};
    for (const auto& r : results) {
        INFO(r.name);
        CHECK(r.pass);
        if (r.name.rfind("axiom", 0) == 0) by_axiom[r.name[5] - '0']++;
    }
    CHECK(by_axiom[1] >= 1);  // identity
    CHECK(by_axiom[2] >= 1);  // composition
    CHECK(by_axiom[3] >= 5);  // boundary naturality pairs
    CHECK(by_axiom[4] >= 5);  // exactness triples
    CHECK(by_axiom[5] >= 5);  // homotopy pairs
    CHECK(by_axiom[6] >= 3);  // excision pairs
    CHECK(by_axiom[7] >= 1);  // dimension
}
