#include "fibcube/decomposition.hpp"

#include <stdexcept>
#include <string>

namespace fibcube {

namespace {

void require_member(const BitString& s, Family family, const char* op) {
  if (family != Family::fibonacci && family != Family::lucas)
    throw std::invalid_argument(std::string(op) + ": family must be fibonacci or lucas");
  if (!is_fibonacci(s))
    throw std::domain_error(std::string(op) + ": \"" + s.str() +
                            "\" has two adjacent 1s, not a fibonacci string");
  if (family == Family::lucas && !is_lucas(s))
    throw std::domain_error(std::string(op) + ": \"" + s.str() +
                            "\" starts and ends with 1, not a lucas string");
}

}  // namespace

BitString ZeroBlockDecomposition::reconstruct() const {
  int pos = 0;
  std::uint64_t word = 0;
  for (std::size_t block = 0; block < zero_runs.size(); ++block) {
    pos += zero_runs[block];
    if (block + 1 < zero_runs.size()) {
      word |= std::uint64_t{1} << pos;
      ++pos;
    }
  }
  return BitString(pos, word);
}

BitString OneBlockDecomposition::reconstruct() const {
  int pos = 0;
  std::uint64_t word = 0;
  for (std::size_t block = 0; block < one_runs.size(); ++block) {
    for (int j = 0; j < one_runs[block]; ++j) {
      word |= std::uint64_t{1} << pos;
      ++pos;
    }
    if (block + 1 < one_runs.size()) ++pos;  // separating 0
  }
  return BitString(pos, word);
}

ZeroBlockDecomposition decompose_zero_blocks(const BitString& s, Family family) {
  require_member(s, family, "decompose_zero_blocks");
  ZeroBlockDecomposition dec;
  dec.weight = s.weight();
  dec.zero_runs.assign(static_cast<std::size_t>(dec.weight) + 1, 0);
  std::size_t block = 0;
  for (int pos = 1; pos <= s.length(); ++pos) {
    if (s.bit(pos))
      ++block;
    else
      ++dec.zero_runs[block];
  }
  return dec;
}

OneBlockDecomposition decompose_one_blocks(const BitString& s, Family family) {
  require_member(s, family, "decompose_one_blocks");
  OneBlockDecomposition dec;
  dec.zero_count = s.length() - s.weight();
  dec.one_runs.assign(static_cast<std::size_t>(dec.zero_count) + 1, 0);
  std::size_t block = 0;
  for (int pos = 1; pos <= s.length(); ++pos) {
    if (s.bit(pos))
      ++dec.one_runs[block];
    else
      ++block;
  }
  return dec;
}

}  // namespace fibcube
