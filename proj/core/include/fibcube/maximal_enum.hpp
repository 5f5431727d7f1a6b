#pragma once

#include <vector>

#include "fibcube/bigint.hpp"
#include "fibcube/bitstring.hpp"
#include "fibcube/induced_hypercube.hpp"

namespace fibcube {

// Zero-run profile (l_0 .. l_p) of a top-vertex candidate 0^l0 1 0^l1 ... 1 0^lp.
// A profile is the top of a maximal p-cube exactly when it satisfies the
// family constraint system (sum of runs = n - p in both):
//   fibonacci: l_0, l_p in {0,1},                        interior runs in {1,2}
//   lucas:     l_0, l_p in {0,1,2}, 1 <= l_0 + l_p <= 2, interior runs in {1,2}
struct TopVertexPattern {
  int dimension = 0;           // p
  std::vector<int> zero_runs;  // l_0 .. l_p

  int total_length() const;
  BitString top() const;
};

// All profiles of maximal p-cubes at length n. Dimension 0 is a corner case:
// the lone vertex 0^n is only maximal when it has no neighbors in the family,
// i.e. n = 0 (both families) and n = 1 (lucas).
std::vector<TopVertexPattern> enumerate_top_patterns(int n, int p, Family family);

// Top vertices of all maximal p-cubes, canonically ordered. Each is the top
// of exactly one maximal cube, whose bottom is 0^n.
std::vector<BitString> enumerate_tops(int n, int p, Family family);

// All maximal induced hypercubes via the top-vertex characterization: bottom
// 0^n, support = 1-positions of the top. Canonically sorted; agrees with
// oracle_maximal exactly. Polynomial in the output size, so usable far beyond
// the oracle cap.
std::vector<InducedHypercube> enumerate_maximal_cubes(int n, Family family);

// Closed-form count of maximal p-cubes:
//   fibonacci: C(p+1, n-2p+1)
//   lucas:     2 C(p, n-2p) + C(p-1, n-2p-1)  for p >= 1, which equals
//              (n/p) C(p, n-2p); the additive form stays in integer arithmetic.
// Dimension 0: 1 for n = 0 (both) and n = 1 (lucas), else 0.
BigInt count_maximal(int n, int p, Family family);

struct DimensionRange {
  int min_dim = 0;
  int max_dim = 0;

  friend bool operator==(const DimensionRange&, const DimensionRange&) = default;
};

// Dimensions p with count_maximal(n, p) != 0:
//   fibonacci: ceil(n/3) .. floor((n+1)/2)
//   lucas:     ceil(n/3) .. floor(n/2) for n >= 2, and {0, 0} for n in {0, 1}.
DimensionRange maximal_dimension_range(int n, Family family);

}  // namespace fibcube
