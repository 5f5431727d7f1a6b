#include "fibcube/bigint.hpp"

namespace fibcube {

BigInt binomial(long long a, long long b) {
  if (b < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  BigInt result = 1;
  for (long long i = 1; i <= b; ++i) {
    result *= a - b + i;
    result /= i;  // exact: i consecutive integers always contain a multiple of i
  }
  return result;
}

}  // namespace fibcube
