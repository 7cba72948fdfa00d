#include "spcoh/qpoly.hpp"

#include <algorithm>
#include <sstream>

#include "spcoh/errors.hpp"

namespace spcoh {

QPoly::QPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { canonicalize(); }

QPoly::QPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  canonicalize();
}

QPoly QPoly::constant(const Rational& c) { return QPoly(std::vector<Rational>{c}); }

QPoly QPoly::monomial(const Rational& c, int k) {
  std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
  v[k] = c;
  return QPoly(std::move(v));
}

void QPoly::canonicalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational QPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[k];
}

bool QPoly::has_integer_coeffs() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return denominator(c) == 1; });
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  canonicalize();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) { return *this += -o; }

QPoly& QPoly::operator*=(const QPoly& o) {
  *this = *this * o;
  return *this;
}

QPoly QPoly::compose_power(int k) const {
  if (is_zero() || k == 1) return *this;
  std::vector<Rational> v(static_cast<std::size_t>(degree()) * k + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * k] = coeffs_[i];
  return QPoly(std::move(v));
}

QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs().size() + b.coeffs().size() - 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) v[i + j] += a.coeffs()[i] * b.coeffs()[j];
  }
  return QPoly(std::move(v));
}

QPoly exact_div(const QPoly& num, const QPoly& den) {
  if (den.is_zero()) throw NonExactDivision("division by the zero polynomial");
  std::vector<Rational> rem = num.coeffs();
  const int dd = den.degree();
  const Rational& lead = den.coeffs().back();
  if (num.degree() < dd) {
    if (num.is_zero()) return {};
    throw NonExactDivision("(" + to_string(num) + ") / (" + to_string(den) + ") leaves a remainder");
  }
  std::vector<Rational> quot(static_cast<std::size_t>(num.degree() - dd) + 1);
  for (int k = num.degree(); k >= dd; --k) {
    if (rem[k] == 0) continue;
    Rational c = rem[k] / lead;
    quot[k - dd] = c;
    for (int j = 0; j <= dd; ++j) rem[k - dd + j] -= c * den.coeffs()[j];
  }
  for (int k = 0; k < dd; ++k) {
    if (rem[k] != 0)
      throw NonExactDivision("(" + to_string(num) + ") / (" + to_string(den) + ") leaves a remainder");
  }
  return QPoly(std::move(quot));
}

QPoly q_minus_one(int k) { return QPoly::monomial(1, k) - QPoly{1}; }
QPoly q_plus_one(int k) { return QPoly::monomial(1, k) + QPoly{1}; }

Rational eval_at(const QPoly& p, const BigInt& q0) {
  Rational acc = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * Rational(q0) + *it;
  return acc;
}

std::string to_string(const QPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    Rational c = p.coeff(k);
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << c;
      continue;
    }
    if (c != 1) out << c << '*';
    out << 'q';
    if (k > 1) out << '^' << k;
  }
  return out.str();
}

}  // namespace spcoh
