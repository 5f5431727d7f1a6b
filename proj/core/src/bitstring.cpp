#include "fibcube/bitstring.hpp"

#include <bit>
#include <stdexcept>

#include "fibcube/errors.hpp"

namespace fibcube {

namespace {

std::uint64_t length_mask(int length) {
  return length >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << length) - 1;
}

// Emits all strings with positions pos..n still open, in lexicographic order
// of the printed form (a 0 at the current position sorts before a 1).
void generate_rec(int n, int pos, std::uint64_t word, bool previous_was_one,
                  bool fibonacci_only, std::vector<BitString>& out) {
  if (pos > n) {
    out.emplace_back(n, word);
    return;
  }
  generate_rec(n, pos + 1, word, false, fibonacci_only, out);
  if (!fibonacci_only || !previous_was_one) {
    generate_rec(n, pos + 1, word | (std::uint64_t{1} << (pos - 1)), true,
                 fibonacci_only, out);
  }
}

}  // namespace

std::string_view family_name(Family family) {
  switch (family) {
    case Family::hypercube: return "hypercube";
    case Family::fibonacci: return "fibonacci";
    case Family::lucas: return "lucas";
  }
  throw std::invalid_argument("unknown family");
}

BitString::BitString(int length, std::uint64_t word) : length_(length), word_(word) {
  if (length < 0 || length > kMaxLength)
    throw std::invalid_argument("BitString: length must be in [0, 64]");
  if ((word & ~length_mask(length)) != 0)
    throw std::invalid_argument("BitString: word has bits beyond its length");
}

BitString BitString::zeros(int length) { return BitString(length, 0); }

BitString BitString::parse(std::string_view text) {
  if (text.size() > kMaxLength)
    throw std::invalid_argument("BitString: string longer than 64");
  std::uint64_t word = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1')
      word |= std::uint64_t{1} << i;
    else if (text[i] != '0')
      throw std::invalid_argument("BitString: characters must be '0' or '1'");
  }
  return BitString(static_cast<int>(text.size()), word);
}

int BitString::weight() const { return std::popcount(word_); }

bool BitString::bit(int pos) const {
  if (pos < 1 || pos > length_)
    throw std::out_of_range("BitString: position out of range");
  return (word_ >> (pos - 1)) & 1;
}

BitString BitString::with_bit(int pos, bool value) const {
  if (pos < 1 || pos > length_)
    throw std::out_of_range("BitString: position out of range");
  const std::uint64_t mask = std::uint64_t{1} << (pos - 1);
  return BitString(length_, value ? (word_ | mask) : (word_ & ~mask));
}

BitString BitString::flipped(int pos) const {
  if (pos < 1 || pos > length_)
    throw std::out_of_range("BitString: position out of range");
  return BitString(length_, word_ ^ (std::uint64_t{1} << (pos - 1)));
}

std::uint64_t BitString::numeral() const {
  std::uint64_t value = 0;
  for (int pos = 1; pos <= length_; ++pos) value = (value << 1) | ((word_ >> (pos - 1)) & 1);
  return value;
}

std::string BitString::str() const {
  std::string out(static_cast<std::size_t>(length_), '0');
  for (int pos = 1; pos <= length_; ++pos)
    if ((word_ >> (pos - 1)) & 1) out[static_cast<std::size_t>(pos - 1)] = '1';
  return out;
}

bool canonical_less(const BitString& a, const BitString& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  return a.numeral() < b.numeral();
}

bool is_fibonacci(const BitString& s) {
  const std::uint64_t w = s.word();
  return (w & (w >> 1)) == 0;
}

bool is_lucas(const BitString& s) {
  if (!is_fibonacci(s)) return false;
  const int n = s.length();
  if (n == 0) return true;
  return !(s.bit(1) && s.bit(n));
}

bool in_family(const BitString& s, Family family) {
  switch (family) {
    case Family::hypercube: return true;
    case Family::fibonacci: return is_fibonacci(s);
    case Family::lucas: return is_lucas(s);
  }
  throw std::invalid_argument("unknown family");
}

int hamming_distance(const BitString& u, const BitString& v) {
  if (u.length() != v.length())
    throw std::invalid_argument("hamming_distance: lengths differ");
  return std::popcount(u.word() ^ v.word());
}

std::vector<BitString> generate(int n, Family family) {
  if (n < 0) throw std::invalid_argument("generate: n must be nonnegative");
  const int cap = family == Family::hypercube ? kHypercubeGenerationCap
                                              : kFibonacciGenerationCap;
  if (n > cap)
    throw ResourceLimitError("generate: n=" + std::to_string(n) + " exceeds the " +
                             std::string(family_name(family)) + " generation cap " +
                             std::to_string(cap));
  std::vector<BitString> out;
  generate_rec(n, 1, 0, false, family != Family::hypercube, out);
  if (family == Family::lucas) {
    std::erase_if(out, [](const BitString& s) { return !is_lucas(s); });
  }
  return out;
}

BigInt count_by_weight(int n, int w, Family family) {
  if (n < 0) throw std::invalid_argument("count_by_weight: n must be nonnegative");
  if (w < 0 || w > n) throw std::invalid_argument("count_by_weight: w out of [0, n]");
  switch (family) {
    case Family::fibonacci:
      return binomial(n - w + 1, w);
    case Family::lucas: {
      BigInt count = 0;
      for (const BitString& s : generate(n, Family::lucas))
        if (s.weight() == w) ++count;
      return count;
    }
    default:
      throw std::invalid_argument("count_by_weight: family must be fibonacci or lucas");
  }
}

}  // namespace fibcube
