#include "spcoh/field.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "spcoh/errors.hpp"

namespace spcoh {

namespace {

// Monic irreducible (Conway) polynomials, constant term first, leading 1 omitted.
const std::map<std::pair<int, int>, std::vector<int>>& conway_table() {
  static const std::map<std::pair<int, int>, std::vector<int>> table = {
      {{2, 1}, {1}},          {{2, 2}, {1, 1}},          {{2, 3}, {1, 1, 0}},
      {{2, 4}, {1, 1, 0, 0}}, {{2, 5}, {1, 0, 1, 0, 0}}, {{2, 6}, {1, 1, 0, 1, 1, 0}},
      {{2, 7}, {1, 1, 0, 0, 0, 0, 0}}, {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0}},
      {{3, 1}, {1}},          {{3, 2}, {2, 2}},          {{3, 3}, {1, 2, 0}},
      {{3, 4}, {2, 0, 0, 2}}, {{3, 5}, {1, 2, 0, 0, 0}},
      {{5, 1}, {3}},          {{5, 2}, {2, 4}},          {{5, 3}, {3, 3, 0}},
      {{7, 1}, {4}},          {{7, 2}, {3, 6}},
      {{11, 1}, {9}},         {{11, 2}, {2, 7}},
      {{13, 1}, {11}},        {{13, 2}, {2, 12}},
  };
  return table;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

long ipow(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

bool field_supported(int p, int e) {
  if (!is_prime(p) || e < 1) return false;
  if (!conway_table().count({p, e})) return false;
  return ipow(p, e) <= 256;
}

FiniteField::FiniteField(int p, int e) : p_(p), e_(e) {
  if (!field_supported(p, e))
    throw ScaleGuard("no finite field table entry for p=" + std::to_string(p) + ", e=" + std::to_string(e));
  order_ = static_cast<int>(ipow(p, e));
  modulus_ = conway_table().at({p, e});
  modulus_.push_back(1);

  add_.resize(static_cast<std::size_t>(order_) * order_);
  mul_.resize(static_cast<std::size_t>(order_) * order_);
  neg_.resize(order_);
  inv_.assign(order_, 0);
  for (int a = 0; a < order_; ++a) {
    const auto da = digits(a);
    std::vector<int> n(e_);
    for (int k = 0; k < e_; ++k) n[k] = (p_ - da[k]) % p_;
    neg_[a] = static_cast<std::uint16_t>(encode(n));
    for (int b = 0; b < order_; ++b) {
      const auto db = digits(b);
      std::vector<int> s(e_);
      for (int k = 0; k < e_; ++k) s[k] = (da[k] + db[k]) % p_;
      add_[a * order_ + b] = static_cast<std::uint16_t>(encode(s));
      // Schoolbook product, then reduce by the monic modulus from the top.
      std::vector<int> prod(2 * e_ - 1, 0);
      for (int i = 0; i < e_; ++i)
        for (int j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
      for (int k = 2 * e_ - 2; k >= e_; --k) {
        const int c = prod[k];
        if (c == 0) continue;
        for (int j = 0; j <= e_; ++j) prod[k - e_ + j] = ((prod[k - e_ + j] - c * modulus_[j]) % p_ + p_) % p_;
      }
      prod.resize(e_);
      mul_[a * order_ + b] = static_cast<std::uint16_t>(encode(prod));
    }
  }
  for (int a = 1; a < order_; ++a)
    for (int b = 1; b < order_; ++b)
      if (mul_[a * order_ + b] == 1) {
        inv_[a] = static_cast<std::uint16_t>(b);
        break;
      }
  for (int a = 1; a < order_; ++a)
    if (inv_[a] == 0) throw std::logic_error("modulus for F_" + std::to_string(order_) + " is reducible");
}

std::vector<int> FiniteField::digits(int code) const {
  std::vector<int> d(e_);
  for (int k = 0; k < e_; ++k) {
    d[k] = code % p_;
    code /= p_;
  }
  return d;
}

int FiniteField::encode(const std::vector<int>& d) const {
  int code = 0;
  for (int k = e_ - 1; k >= 0; --k) code = code * p_ + d[k];
  return code;
}

Element FiniteField::element(int code) const {
  if (code < 0 || code >= order_) throw std::out_of_range("field element code out of range");
  return {static_cast<std::uint16_t>(code)};
}

Element FiniteField::from_int(long k) const { return {static_cast<std::uint16_t>(((k % p_) + p_) % p_)}; }

Element FiniteField::inv(Element a) const {
  if (a.code == 0) throw std::domain_error("inverse of zero");
  return {inv_[a.code]};
}

Element FiniteField::pow(Element a, long k) const {
  if (k < 0) return pow(inv(a), -k);
  Element r = one();
  Element b = a;
  while (k > 0) {
    if (k & 1) r = mul(r, b);
    b = mul(b, b);
    k >>= 1;
  }
  return r;
}

Element FiniteField::frobenius(Element a, int k) const { return pow(a, ipow(p_, k)); }

std::vector<Element> FiniteField::power_map(long m) const {
  std::vector<Element> table(order_);
  for (int c = 0; c < order_; ++c) table[c] = pow(Element{static_cast<std::uint16_t>(c)}, m);
  return table;
}

}  // namespace spcoh
