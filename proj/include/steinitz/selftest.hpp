#pragma once

#include <string>
#include <vector>

#include "steinitz/common.hpp"

namespace steinitz {

struct SelftestCheck {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct SelftestResult {
    bool ok = false;
    std::vector<SelftestCheck> checks;
};

// Brute-force sweeps of the elementary divisibility and congruence facts,
// plus the subgroup-lattice law battery on small abelian groups.
SelftestResult run_selftest();

}  // namespace steinitz
