#pragma once

#include <map>
#include <string>
#include <vector>

#include "alcove/bigint.hpp"
#include "alcove/linalg.hpp"

// Exact arithmetic with products of cyclotomic polynomials in an
// indeterminate q.  Order polynomials of finite reductive groups and their
// ratios are kept in this factored form; reduction of a ratio is multiset
// subtraction of cyclotomic indices, so no polynomial GCD is ever needed.

namespace alcove {

// Coefficients of the n-th cyclotomic polynomial, ascending degree.
const std::vector<Int>& cyclotomic_poly(int n);

// q^d - 1 and q^d + 1 as cyclotomic multisets.
std::map<int, int> cyclo_of_qd_minus_1(int d);
std::map<int, int> cyclo_of_qd_plus_1(int d);

// A rational function  scalar * q^qpow * prod_n Phi_n(q)^{e_n}  with
// integer (possibly negative) exponents and a reduced integer scalar.
struct QFactored {
  Int scalar_num = 1;
  Int scalar_den = 1;
  Int qpow = 0;
  std::map<int, int> cyc;  // index -> exponent, zero entries removed

  void mul_qd_minus_1(int d, int mult = 1);
  void mul_qd_plus_1(int d, int mult = 1);
  void mul_cyc(int n, int mult = 1);
  void mul_scalar(Int num, Int den = 1);
  QFactored times(const QFactored& o) const;
  QFactored divided_by(const QFactored& o) const;
  bool is_polynomial() const;  // no denominator: all exponents >= 0, den 1
  int degree() const;

  // Dense coefficient vector; requires is_polynomial() and a polynomial
  // scalar (den = 1).
  std::vector<Int> expand() const;

  // Exact evaluation at an integer q >= 2.
  BigInt eval(Int q) const;
  // Numerator and denominator evaluated separately (always exact).
  std::pair<BigInt, BigInt> eval_pair(Int q) const;
  std::string to_string() const;  // deterministic, for reports
};

// Dense integer polynomial helpers used by expand().
std::vector<Int> poly_mul(const std::vector<Int>& a, const std::vector<Int>& b);
std::string poly_to_string(const std::vector<Int>& coeffs);

}  // namespace alcove
