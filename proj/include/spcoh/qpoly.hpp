#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace spcoh {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Polynomial in the indeterminate q with exact rational coefficients.
///
/// Coefficients are indexed by exponent and kept canonical: trailing zeros
/// are stripped, so the zero polynomial has no coefficients at all and two
/// polynomials are equal iff their coefficient vectors are.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs);
  QPoly(std::initializer_list<long> coeffs);

  static QPoly constant(const Rational& c);
  /// c * q^k
  static QPoly monomial(const Rational& c, int k);
  static QPoly q() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coeff(int k) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool has_integer_coeffs() const;

  QPoly operator-() const;
  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);

  /// Substitutes q^k for q.
  QPoly compose_power(int k) const;

  friend bool operator==(const QPoly&, const QPoly&) = default;

 private:
  void canonicalize();
  std::vector<Rational> coeffs_;
};

QPoly operator+(QPoly a, const QPoly& b);
QPoly operator-(QPoly a, const QPoly& b);
QPoly operator*(const QPoly& a, const QPoly& b);

/// Returns r with r * den == num. Throws NonExactDivision when den does not
/// divide num, and when den is zero.
QPoly exact_div(const QPoly& num, const QPoly& den);

/// q^k - 1 and q^k + 1, the factors of every degree formula.
QPoly q_minus_one(int k);
QPoly q_plus_one(int k);

Rational eval_at(const QPoly& p, const BigInt& q0);
inline Rational eval_at(const QPoly& p, long q0) { return eval_at(p, BigInt(q0)); }

/// "1/2*q^3 - q^2 + 3": descending exponents, unit coefficients elided.
std::string to_string(const QPoly& p);

}  // namespace spcoh
