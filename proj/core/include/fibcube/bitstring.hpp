#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fibcube/bigint.hpp"

namespace fibcube {

enum class Family { hypercube, fibonacci, lucas };

std::string_view family_name(Family family);

// Fixed-length binary word over positions 1..n, position 1 being the leftmost
// character of the printed form. Internally position i maps to word bit i-1,
// which turns the "no two adjacent 1s" test into a single shift-and-mask.
// Length 0 is the empty string.
class BitString {
 public:
  static constexpr int kMaxLength = 64;

  BitString() = default;
  BitString(int length, std::uint64_t word);

  static BitString zeros(int length);
  static BitString parse(std::string_view text);

  int length() const { return length_; }
  std::uint64_t word() const { return word_; }
  int weight() const;

  // Positions are 1-based.
  bool bit(int pos) const;
  BitString with_bit(int pos, bool value) const;
  BitString flipped(int pos) const;

  // The string read as a binary numeral, leftmost digit most significant.
  std::uint64_t numeral() const;

  std::string str() const;

  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  int length_ = 0;
  std::uint64_t word_ = 0;
};

// Canonical order: shorter strings first, then ascending numeral value. For
// equal lengths this coincides with lexicographic order of the printed form.
bool canonical_less(const BitString& a, const BitString& b);

// No two adjacent 1s.
bool is_fibonacci(const BitString& s);

// Fibonacci and not both endpoints 1. For n = 1 only "0" qualifies; the empty
// string always does.
bool is_lucas(const BitString& s);

bool in_family(const BitString& s, Family family);

// Number of positions where u and v differ; lengths must match.
int hamming_distance(const BitString& u, const BitString& v);

// Exhaustive generation is exponential in n; requests above these lengths are
// rejected with ResourceLimitError.
inline constexpr int kHypercubeGenerationCap = 24;
inline constexpr int kFibonacciGenerationCap = 30;

// All member strings of the family at length n, canonically ordered. For
// n = 0 every family contains exactly the empty string.
std::vector<BitString> generate(int n, Family family);

// Number of family members of length n with exactly w ones. The fibonacci
// count has the closed form C(n-w+1, w); the lucas count is obtained by
// filtered generation (no closed form is claimed for it). family must be
// fibonacci or lucas.
BigInt count_by_weight(int n, int w, Family family);

}  // namespace fibcube
