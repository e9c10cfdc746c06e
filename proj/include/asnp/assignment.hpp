#pragma once

#include <cstdint>
#include <vector>

namespace asnp {

struct Assignment {
    std::int64_t cost = 0;
    // row i is matched to column column_of_row[i]
    std::vector<int> column_of_row;
};

// Minimum-cost perfect matching on a square integer cost matrix
// (shortest augmenting paths with potentials, O(n^3)). Costs may be negative.
Assignment solve_assignment(const std::vector<std::vector<std::int64_t>>& cost);

}  // namespace asnp
