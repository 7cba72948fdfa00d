#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace spcoh {

/// Element of a small finite field, identified by its coefficient vector over
/// F_p packed in base p (coefficient of x^k is digit k).
struct Element {
  std::uint16_t code = 0;
  friend auto operator<=>(const Element&, const Element&) = default;
};

/// F_{p^e} = F_p[x] / (f) for a fixed monic irreducible f taken from a table.
/// Arithmetic is tabulated at construction; orders above 256 are rejected.
class FiniteField {
 public:
  FiniteField(int p, int e);

  int characteristic() const { return p_; }
  int degree() const { return e_; }
  int order() const { return order_; }
  /// Coefficients of the defining polynomial, constant term first.
  const std::vector<int>& modulus() const { return modulus_; }

  Element zero() const { return {0}; }
  Element one() const { return {1}; }
  Element element(int code) const;
  /// The image of the integer k under Z -> F_p.
  Element from_int(long k) const;

  Element add(Element a, Element b) const { return {add_[a.code * order_ + b.code]}; }
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  Element mul(Element a, Element b) const { return {mul_[a.code * order_ + b.code]}; }
  Element neg(Element a) const { return {neg_[a.code]}; }
  /// Throws std::domain_error on zero.
  Element inv(Element a) const;
  Element pow(Element a, long k) const;
  /// a^(p^k).
  Element frobenius(Element a, int k) const;
  /// a^m for the subfield order m = p^k; valid k divide e, as a lookup table.
  std::vector<Element> power_map(long m) const;

 private:
  std::vector<int> digits(int code) const;
  int encode(const std::vector<int>& digits) const;

  int p_;
  int e_;
  int order_;
  std::vector<int> modulus_;
  std::vector<std::uint16_t> add_, mul_, neg_, inv_;
};

/// True when F_{p^e} can be built (p prime, table entry for e, order <= 256).
bool field_supported(int p, int e);

}  // namespace spcoh
