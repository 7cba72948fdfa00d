#include "spcoh/coxeter.hpp"

#include <algorithm>
#include <stdexcept>

#include "spcoh/errors.hpp"

namespace spcoh {

FrobEigenvalue::FrobEigenvalue(int sign, int exp) : sign(sign), exp(exp) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("eigenvalue sign must be +1 or -1");
  if (exp < 0) throw std::invalid_argument("eigenvalue exponent must be non-negative");
}

QPoly FrobEigenvalue::power(int n) const {
  const int s = (sign < 0 && n % 2 != 0) ? -1 : 1;
  return QPoly::monomial(s, exp * n);
}

std::string to_string(const FrobEigenvalue& e) {
  std::string s = e.sign < 0 ? "-" : "";
  if (e.exp == 0) return s + "1";
  return s + (e.exp == 1 ? "q" : "q^" + std::to_string(e.exp));
}

void GradedCohomology::add(int degree, CohomologyTerm term) {
  auto& bucket = terms_[degree];
  if (std::find(bucket.begin(), bucket.end(), term) != bucket.end())
    throw std::logic_error("duplicate summand in degree " + std::to_string(degree));
  bucket.push_back(std::move(term));
}

const std::vector<CohomologyTerm>& GradedCohomology::at(int degree) const {
  static const std::vector<CohomologyTerm> none;
  auto it = terms_.find(degree);
  return it == terms_.end() ? none : it->second;
}

std::vector<int> GradedCohomology::degrees() const {
  std::vector<int> out;
  for (const auto& [d, t] : terms_) out.push_back(d);
  return out;
}

Symbol coxeter_symbol_S(int theta, int i) {
  if (theta < 0 || i < 0 || i > theta) throw InvalidLabel("S index out of range");
  std::vector<int> top, bottom;
  for (int x = 0; x < theta - i; ++x) top.push_back(x);
  top.push_back(theta);
  for (int y = 1; y <= theta - i; ++y) bottom.push_back(y);
  return Symbol::normalize(std::move(top), std::move(bottom));
}

Symbol coxeter_symbol_T(int theta, int j) {
  if (j < 0 || j > theta - 2) throw InvalidLabel("T index out of range");
  std::vector<int> top, bottom;
  for (int x = 0; x < theta - j; ++x) top.push_back(x);
  top.push_back(theta);
  for (int y = 1; y <= theta - j - 2; ++y) bottom.push_back(y);
  return Symbol::normalize(std::move(top), std::move(bottom));
}

GradedCohomology coxeter_cohomology(int theta) {
  if (theta < 0) throw InvalidLabel("negative rank");
  GradedCohomology h;
  for (int i = 0; i <= theta; ++i) {
    h.add(theta + i, {coxeter_symbol_S(theta, i), {1, i}});
    if (i <= theta - 2) h.add(theta + i, {coxeter_symbol_T(theta, i), {-1, i + 1}});
  }
  return h;
}

QPoly lusztig_degree_S(int theta, int i) {
  if (i < 0 || i > theta) throw InvalidLabel("S index out of range");
  QPoly num = QPoly::monomial(1, (theta - i) * (theta - i));
  QPoly den{1};
  for (int s = 1; s <= theta - i; ++s) {
    num *= q_minus_one(s + i);
    den *= q_minus_one(s);
  }
  for (int s = 0; s <= theta - i - 1; ++s) {
    num *= q_plus_one(s + i);
    den *= q_plus_one(s);
  }
  return exact_div(num, den);
}

QPoly lusztig_degree_T(int theta, int j) {
  if (j < 0 || j > theta - 2) throw InvalidLabel("T index out of range");
  QPoly num = QPoly::monomial(1, (theta - j - 1) * (theta - j - 1)) * q_minus_one(theta - 1) * q_minus_one(theta);
  QPoly den = QPoly{2} * q_plus_one(1);
  for (int s = 1; s <= theta - j - 2; ++s) {
    num *= q_minus_one(s + j);
    den *= q_minus_one(s);
  }
  for (int s = 2; s <= theta - j - 1; ++s) {
    num *= q_plus_one(s + j);
    den *= q_plus_one(s);
  }
  return exact_div(num, den);
}

namespace {

using TermCounts = std::map<CohomologyTerm, int>;

}  // namespace

bool verify_restriction_identity(int theta) {
  if (theta < 2) throw InvalidLabel("restriction identity needs theta >= 2");
  const auto big = coxeter_cohomology(theta);
  const auto small = coxeter_cohomology(theta - 1);
  for (int i = 0; i <= theta; ++i) {
    TermCounts lhs, rhs;
    for (const auto& term : big.at(theta + i))
      for (const auto& [s, m] : restrict_sp(1, term.symbol)) lhs[{s, term.eigenvalue}] += m;
    for (const auto& term : small.at(theta - 1 + i)) rhs[term] += 1;
    for (const auto& term : small.at(theta - 1 + i - 1)) rhs[{term.symbol, term.eigenvalue.twisted(1)}] += 1;
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace spcoh
