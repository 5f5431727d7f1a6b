#pragma once

#include <cstdint>
#include <vector>

#include "fibcube/bitstring.hpp"

namespace fibcube {

inline constexpr int kDefaultOracleCap = 12;
// Hard ceiling on the oracle cap: state keys pack (bottom, support) into one
// 64-bit word and root generation is exponential.
inline constexpr int kOracleCapLimit = 30;

// Canonical form of an induced hypercube of Q_n: the bottom vertex plus the
// support, the set of coordinates on which the cube's vertices vary. The
// bottom is 0 on every support coordinate, the top is the bottom with all
// support bits set, and the vertex set is every string agreeing with the
// bottom off the support. Dimension = |support|.
class InducedHypercube {
 public:
  // support_mask bit i-1 set means coordinate i is in the support.
  InducedHypercube(BitString bottom, std::uint64_t support_mask);

  static InducedHypercube single_vertex(const BitString& v);

  int n() const { return bottom_.length(); }
  const BitString& bottom() const { return bottom_; }
  std::uint64_t support_mask() const { return support_mask_; }
  std::vector<int> support() const;  // ascending 1-based coordinates
  int dimension() const;
  BitString top() const;

  // All 2^dimension member strings, canonically ordered.
  std::vector<BitString> vertex_set() const;

  friend bool operator==(const InducedHypercube&, const InducedHypercube&) = default;

 private:
  BitString bottom_;
  std::uint64_t support_mask_ = 0;
};

// Order by bottom, then by the support read as an ascending coordinate list.
bool cube_less(const InducedHypercube& a, const InducedHypercube& b);

// True iff every vertex of h satisfies the family membership predicate
// (checked by full expansion of the vertex set).
bool is_induced_in(const InducedHypercube& h, Family family);

// Every one-coordinate growth of h that stays inside the family, in canonical
// form. Growing along a coordinate where the bottom holds a 1 clears that bit
// of the bottom; otherwise the coordinate simply joins the support. h is
// maximal in the family exactly when this list is empty.
std::vector<InducedHypercube> extensions(const InducedHypercube& h, Family family);

// Brute-force enumeration of all maximal induced hypercubes: depth-first
// growth of (bottom, support) states from every vertex, memoized on the
// canonical pair, emitting the states with no extensions. Canonically sorted.
// Independent of the top-vertex characterization in maximal_enum.hpp so the
// two routes can cross-check each other. Throws ResourceLimitError when
// n > cap.
std::vector<InducedHypercube> oracle_maximal(int n, Family family,
                                             int cap = kDefaultOracleCap);

}  // namespace fibcube
