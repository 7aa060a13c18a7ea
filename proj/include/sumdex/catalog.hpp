#pragma once

#include "sumdex/graph.hpp"

#include <vector>

namespace sumdex {

// Family instances with a closed-form sum index that is small enough to solve exactly:
// K_3..K_5, K_{m,n} with m + n <= 6, C_3..C_8, Q_2, Q_3, nK_3 for n <= 3, 2K_4,
// K_{2,1,1} and K_{2,2,1}.
std::vector<FamilySpec> closed_form_catalog();

}  // namespace sumdex
