#pragma once

#include <string>
#include <vector>

#include "fibcube/bigint.hpp"
#include "fibcube/bitstring.hpp"

namespace fibcube {

// Integer polynomial indexed by cube dimension; coefficient p counts the
// maximal p-cubes. Trailing zero coefficients are trimmed so equality is
// plain coefficient-vector comparison.
class CountingPolynomial {
 public:
  CountingPolynomial() = default;  // the zero polynomial
  explicit CountingPolynomial(std::vector<BigInt> coeffs);

  static CountingPolynomial constant(BigInt value);
  static CountingPolynomial monomial(BigInt coefficient, int power);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  // Coefficient of x^power; 0 outside the stored range.
  BigInt coeff(int power) const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  CountingPolynomial times_x() const;
  BigInt value_at(const BigInt& x) const;

  // Compact rendering: descending powers, zero terms omitted, unit
  // coefficients omitted, e.g. "4x^3+x^2", "2x", "1"; the zero polynomial
  // renders as "0".
  std::string str() const;

  friend CountingPolynomial operator+(const CountingPolynomial&, const CountingPolynomial&);
  friend CountingPolynomial operator-(const CountingPolynomial&, const CountingPolynomial&);
  friend bool operator==(const CountingPolynomial&, const CountingPolynomial&) = default;

 private:
  std::vector<BigInt> coeffs_;  // coeffs_[p] multiplies x^p; back() != 0
};

// Coefficients straight from the closed-form counts.
CountingPolynomial poly_by_formula(int n, Family family);

// The same polynomial by the order-3 recurrence P_n = x (P_{n-2} + P_{n-3}),
// seeded from the small-n base cases of each family.
CountingPolynomial poly_by_recurrence(int n, Family family);

// Power-series expansion of the family's bivariate generating function:
// row m holds the coefficient polynomial of y^m.
struct SeriesTable {
  int max_n = 0;
  std::vector<CountingPolynomial> rows;
};

// Expansion driven by the shared denominator 1 - x y^2 (1 + y): each row is
// x (row_{m-2} + row_{m-3}) plus the y^m term of the family's numerator
// (fibonacci: 1 + xy + xy^2; lucas: 1 + y + xy^2 + xy^3 - xy^4).
SeriesTable expand_generating_function(int max_n, Family family);

}  // namespace fibcube
