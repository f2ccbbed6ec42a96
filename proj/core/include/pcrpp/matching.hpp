#ifndef PCRPP_MATCHING_HPP_
#define PCRPP_MATCHING_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "pcrpp/common.hpp"

namespace pcrpp {

struct WeightedPair {
  int u = 0;
  int v = 0;
  std::int64_t weight = 0;
};

// Maximum-weight matching on a general graph (Edmonds' blossom algorithm with
// dual variables, O(n^3)). With max_cardinality set, only maximum-cardinality
// matchings are considered. Returns mate[v] or -1.
std::vector<int> max_weight_matching(int vertex_count, const std::vector<WeightedPair>& edges,
                                     bool max_cardinality);

struct Pairing {
  std::vector<std::pair<int, int>> pairs;  // indices into the point list
  double cost = 0.0;
};

// Minimum-cost perfect matching of the points 0..k-1 under dist (k even).
// Costs are quantised to a dyadic grid fine enough to be exact for
// integer-valued inputs.
Pairing min_perfect_matching(const SymMatrix& dist);

// Exhaustive pairing DP over subsets, for k <= 16.
Pairing min_perfect_matching_dp(const SymMatrix& dist);

}  // namespace pcrpp

#endif  // PCRPP_MATCHING_HPP_
