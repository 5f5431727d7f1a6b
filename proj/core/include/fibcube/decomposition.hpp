#pragma once

#include <vector>

#include "fibcube/bitstring.hpp"

namespace fibcube {

// Run-length view of a fibonacci/lucas string as blocks of 0s separated by
// single 1s: 0^l0 1 0^l1 ... 1 0^lp with p = weight and sum(l) = n - p.
// Interior runs are >= 1; lucas strings additionally satisfy l0 + lp >= 1
// whenever p >= 1.
struct ZeroBlockDecomposition {
  int weight = 0;              // p
  std::vector<int> zero_runs;  // l_0 .. l_p

  BitString reconstruct() const;
};

// Dual view as runs of 1s separated by single 0s: 1^k0 0 1^k1 ... 0 1^kq with
// q = n - weight, sum(k) = weight and every k in {0,1}. Lucas strings satisfy
// k0 + kq <= 1.
struct OneBlockDecomposition {
  int zero_count = 0;          // q
  std::vector<int> one_runs;   // k_0 .. k_q

  BitString reconstruct() const;
};

// Both throw std::domain_error naming the violated constraint when s is not a
// member of the requested family; family must be fibonacci or lucas.
ZeroBlockDecomposition decompose_zero_blocks(const BitString& s, Family family);
OneBlockDecomposition decompose_one_blocks(const BitString& s, Family family);

}  // namespace fibcube
