#include "spcoh/strata.hpp"

#include <stdexcept>

#include "spcoh/errors.hpp"

namespace spcoh {

const E1Term& E1Page::at(int theta_prime, int i) const {
  auto it = cells_.find({theta_prime, i});
  if (it == cells_.end())
    throw std::out_of_range("no E1 cell (" + std::to_string(theta_prime) + "," + std::to_string(i) + ")");
  return it->second;
}

void E1Page::set(int theta_prime, int i, E1Term term) { cells_[{theta_prime, i}] = std::move(term); }

E1Page e1_page(int theta) {
  if (theta < 0) throw InvalidLabel("negative rank");
  E1Page page(theta);
  for (int tp = 0; tp <= theta; ++tp) {
    const auto cox = coxeter_cohomology(tp);
    for (int i = 0; i <= tp; ++i) {
      E1Term term;
      for (const auto& t : cox.at(tp + i)) {
        auto& target = t.eigenvalue.sign > 0 ? term.a : term.b;
        target.add(induce(theta - tp, t.symbol));
      }
      page.set(tp, i, std::move(term));
    }
  }
  return page;
}

namespace {

// beta = (a - d, 1^m) or (a - d + 1, 1^{m-1}); the second needs m >= 1.
std::vector<Partition> hook_options(int a_minus_d, int m) {
  std::vector<Partition> out;
  if (m < 0) return out;
  std::vector<int> first(static_cast<std::size_t>(m) + 1, 1);
  first[0] = a_minus_d;
  out.emplace_back(first);
  if (m >= 1) {
    std::vector<int> second(static_cast<std::size_t>(m), 1);
    second[0] = a_minus_d + 1;
    out.emplace_back(second);
  }
  return out;
}

RepMultiset closed_form_part(int delta, int a, int i, int ones) {
  RepMultiset out;
  if (ones < 0) return out;
  for (int d = 0; d <= a; ++d) {
    for (int s = 0; s <= std::min(d, i); ++s) {
      Partition alpha({i + d - s, s});
      for (const auto& beta : hook_options(a - d, ones)) {
        Symbol sym = label_to_symbol({delta, {alpha, beta}});
        if (!out.contains(sym)) out.add(sym);
      }
    }
  }
  return out;
}

}  // namespace

E1Term e1_closed_form(int theta, int theta_prime, int i) {
  if (i < 0 || i > theta_prime || theta_prime > theta) throw InvalidLabel("E1 cell out of range");
  const int a = theta - theta_prime;
  E1Term term;
  term.a = closed_form_part(0, a, i, theta_prime - i);
  if (i <= theta_prime - 2) term.b = closed_form_part(1, a, i, theta_prime - 2 - i);
  return term;
}

AbSplit ab_split(const E1Page& page, int theta_prime, int i) {
  const auto& cell = page.at(theta_prime, i);
  AbSplit out;
  for (const auto& [s, m] : cell.a) {
    const int r = symbol_to_label(s).bip.second.length();
    if (r == theta_prime - i) out.a0.add(s, m);
    else if (r == theta_prime + 1 - i) out.a1.add(s, m);
    else throw std::logic_error("A summand " + to_string(s) + " fits neither A0 nor A1");
  }
  for (const auto& [s, m] : cell.b) {
    const int r = symbol_to_label(s).bip.second.length();
    if (r == theta_prime - 2 - i) out.b0.add(s, m);
    else if (r == theta_prime - 1 - i) out.b1.add(s, m);
    else throw std::logic_error("B summand " + to_string(s) + " fits neither B0 nor B1");
  }
  return out;
}

AbSplit ab_split(int theta, int theta_prime, int i) { return ab_split(e1_page(theta), theta_prime, i); }

CohomologyOfS cohomology_of_S(int theta) {
  if (theta < 0) throw InvalidLabel("negative rank");
  CohomologyOfS h;
  h.theta = theta;
  for (int i = 0; i <= theta; ++i) {
    EvenCohomology piece;
    for (int s = 0; s <= std::min(i, theta - i); ++s) piece.plus.add(Symbol::normalize({s, theta + 1 - s}, {0}));
    for (int s = 0; s <= std::min(i - 1, theta - 1 - i); ++s) piece.minus.add(Symbol::normalize({0, s + 1, theta - s}, {}));
    h.even.push_back(std::move(piece));
  }
  return h;
}

QPoly total_degree(const RepMultiset& reps) {
  QPoly sum;
  for (const auto& [s, m] : reps) sum += QPoly{m} * degree(s);
  return sum;
}

QPoly point_count_S(int theta, int n) {
  if (n < 1) throw InvalidLabel("extension degree must be >= 1");
  const auto h = cohomology_of_S(theta);
  QPoly count;
  for (int i = 0; i <= theta; ++i) {
    count += FrobEigenvalue(1, i).power(n) * total_degree(h.h2i(i).plus);
    count += FrobEigenvalue(-1, i).power(n) * total_degree(h.h2i(i).minus);
  }
  return count;
}

QPoly point_count_stratum(const E1Page& page, int theta_prime, int n) {
  if (n < 1) throw InvalidLabel("extension degree must be >= 1");
  QPoly count;
  for (int i = 0; i <= theta_prime; ++i) {
    const auto& cell = page.at(theta_prime, i);
    QPoly trace = FrobEigenvalue(1, i).power(n) * total_degree(cell.a) +
                  FrobEigenvalue(-1, i + 1).power(n) * total_degree(cell.b);
    if ((theta_prime + i) % 2 != 0) trace = -trace;
    count += trace;
  }
  return count;
}

QPoly point_count_stratum(int theta, int theta_prime, int n) {
  if (theta_prime < 0 || theta_prime > theta) throw InvalidLabel("stratum index out of range");
  return point_count_stratum(e1_page(theta), theta_prime, n);
}

}  // namespace spcoh
