#include "spcoh/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "spcoh/coxeter.hpp"
#include "spcoh/oracle.hpp"
#include "spcoh/strata.hpp"

namespace spcoh {

namespace {

using Check = std::function<std::string()>;  // returns "" on success

CheckResult timed(const std::string& name, const Check& check) {
  const auto t0 = std::chrono::steady_clock::now();
  CheckResult r{name, false, "", 0};
  try {
    r.detail = check();
    r.passed = r.detail.empty();
  } catch (const std::exception& e) {
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::string symbols_suite(int theta_max) {
  const auto syms = enumerate_symbols(2);
  if (syms.size() != 6) return "rank 2 has " + std::to_string(syms.size()) + " symbols";
  for (int theta = 1; theta <= theta_max; ++theta) {
    std::size_t expected = 0;
    for (int delta = 0; delta * (delta + 1) <= theta; ++delta) expected += bipartitions_of(theta - delta * (delta + 1)).size();
    const auto all = enumerate_symbols(theta);
    if (all.size() != expected) return "census mismatch at rank " + std::to_string(theta);
    for (const auto& s : all) {
      if (s.rank() != theta) return "wrong rank for " + to_string(s);
      if (label_to_symbol(symbol_to_label(s)) != s) return "label round trip failed for " + to_string(s);
    }
  }
  return "";
}

std::string degrees_suite(int theta_max) {
  for (int theta = 1; theta <= theta_max; ++theta) {
    for (int i = 0; i <= theta; ++i)
      if (degree(coxeter_symbol_S(theta, i)) != lusztig_degree_S(theta, i))
        return "S degree mismatch at theta=" + std::to_string(theta) + ", i=" + std::to_string(i);
    for (int j = 0; j <= theta - 2; ++j)
      if (degree(coxeter_symbol_T(theta, j)) != lusztig_degree_T(theta, j))
        return "T degree mismatch at theta=" + std::to_string(theta) + ", j=" + std::to_string(j);
    if (degree(steinberg_symbol(theta)) != QPoly::monomial(1, theta * theta)) return "Steinberg degree";
  }
  return "";
}

std::string restriction_suite(int theta_max) {
  for (int theta = 2; theta <= theta_max; ++theta)
    if (!verify_restriction_identity(theta)) return "fails at theta=" + std::to_string(theta);
  return "";
}

std::string e1_suite(int theta_max) {
  for (int theta = 0; theta <= theta_max; ++theta) {
    const auto page = e1_page(theta);
    for (const auto& [key, cell] : page.cells())
      if (!(e1_closed_form(theta, key.first, key.second) == cell))
        return "cell (" + std::to_string(key.first) + "," + std::to_string(key.second) + ") of theta=" + std::to_string(theta);
  }
  return "";
}

std::string ladder_suite(int theta_max) {
  for (int theta = 1; theta <= theta_max; ++theta) {
    const auto page = e1_page(theta);
    for (int i = 0; i <= theta; ++i) {
      const auto top = ab_split(page, theta, i);
      if (!top.a1.empty() || !top.b1.empty()) return "A1/B1 nonzero on the last column";
    }
    for (int tp = 0; tp < theta; ++tp)
      for (int i = 0; i <= tp; ++i) {
        const auto lo = ab_split(page, tp, i), hi = ab_split(page, tp + 1, i);
        if (!(lo.a1 == hi.a0)) return "A ladder at (" + std::to_string(tp) + "," + std::to_string(i) + ")";
        if (i + 2 <= tp && !(lo.b1 == hi.b0)) return "B ladder at (" + std::to_string(tp) + "," + std::to_string(i) + ")";
      }
  }
  return "";
}

std::string cohomology_suite(int theta_max) {
  for (int theta = 0; theta <= theta_max; ++theta) {
    const auto h = cohomology_of_S(theta);
    const auto page = e1_page(theta);
    for (int i = 0; i <= theta; ++i) {
      RepMultiset expected_plus = ab_split(page, i, i).a0;
      RepMultiset expected_minus;
      if (i >= 1 && i + 1 <= theta) expected_minus = ab_split(page, i + 1, i - 1).b0;
      if (!(h.h2i(i).plus == expected_plus) || !(h.h2i(i).minus == expected_minus))
        return "H^" + std::to_string(2 * i) + " of S_" + std::to_string(theta) + " differs from A0+B0";
      for (const auto& [s, m] : h.h2i(i).plus)
        if (m != 1) return "plus part not multiplicity free";
      const auto& mirror = h.h2i(theta - i);
      if (!(mirror.plus == h.h2i(i).plus) || !(mirror.minus == h.h2i(i).minus)) return "Poincare symmetry";
    }
  }
  return "";
}

QPoly lagrangian_count(int theta) {
  QPoly p{1};
  for (int i = 1; i <= theta; ++i) p *= q_plus_one(i);
  return p;
}

std::string euler_suite(int theta_max) {
  for (int theta = 0; theta <= std::min(theta_max, 4); ++theta)
    if (point_count_S(theta, 1) != lagrangian_count(theta)) return "theta=" + std::to_string(theta);
  return "";
}

std::string lefschetz_suite(int theta_max) {
  struct Case {
    int theta, q, n;
  };
  const Case cases[] = {{1, 2, 1}, {1, 2, 2}, {1, 3, 2}, {2, 2, 1}, {2, 2, 2}, {2, 3, 1}, {2, 3, 2}, {3, 2, 1}, {3, 2, 2}};
  for (const auto& c : cases) {
    if (c.theta > theta_max) continue;
    const auto counts = oracle_counts(c.theta, c.q, 1, c.n);
    const auto predicted = eval_at(point_count_S(c.theta, c.n), c.q);
    std::ostringstream tag;
    tag << "(theta=" << c.theta << ", q=" << c.q << ", n=" << c.n << ")";
    if (Rational(counts.total) != predicted) return "total " + tag.str();
    const auto page = e1_page(c.theta);
    for (int tp = 0; tp <= c.theta; ++tp)
      if (Rational(counts.per_stratum.at(tp)) != eval_at(point_count_stratum(page, tp, c.n), c.q))
        return "stratum " + std::to_string(tp) + " " + tag.str();
  }
  return "";
}

std::string properties_suite(int theta_max) {
  // Shift invariance on random symbols.
  std::mt19937 rng(20240601);
  for (int trial = 0; trial < 200; ++trial) {
    const int theta = 1 + static_cast<int>(rng() % std::max(1, std::min(theta_max, 6)));
    const auto all = enumerate_symbols(theta);
    const auto& s = all[rng() % all.size()];
    SymbolRows rows = s.rows();
    const int shifts = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < shifts; ++k) rows = shift(rows);
    if (rank(rows) != s.rank() || defect(rows) != s.defect() || hooks(rows) != hooks(s) || cohooks(rows) != cohooks(s) ||
        degree(rows) != degree(s))
      return "shift invariance fails for " + to_string(s);
  }
  // Strip duality.
  for (int size = 0; size <= 8; ++size)
    for (const auto& t : partitions_of(size))
      for (int d = 0; d <= 4; ++d)
        for (const auto& u : add_strip(t, d))
          if (!remove_strip(u, d).count(t)) return "strip duality for " + to_string(t);
  // Reciprocity.
  for (int theta = 0; theta <= std::min(theta_max, 5); ++theta)
    for (int a = 0; a <= std::min(theta, 3); ++a)
      for (const auto& t : enumerate_symbols(theta))
        for (const auto& s : theta - a >= 1 ? enumerate_symbols(theta - a) : std::vector<Symbol>{cuspidal_symbol(0)})
          if (induce(a, s).contains(t) != restrict_sp(a, t).contains(s)) return "reciprocity";
  // Integral degrees.
  for (int theta = 1; theta <= std::min(theta_max, 5); ++theta)
    for (const auto& s : enumerate_symbols(theta)) {
      const auto d = degree(s);
      for (int q0 : {2, 3, 4, 5, 7, 9}) {
        const auto v = eval_at(d, q0);
        if (denominator(v) != 1 || v <= 0) return "degree of " + to_string(s) + " at q=" + std::to_string(q0);
      }
    }
  return "";
}

const std::vector<std::pair<std::string, std::string (*)(int)>>& suites() {
  static const std::vector<std::pair<std::string, std::string (*)(int)>> table = {
      {"symbols", symbols_suite}, {"degrees", degrees_suite},     {"restriction", restriction_suite},
      {"e1", e1_suite},           {"ladder", ladder_suite},       {"cohomology", cohomology_suite},
      {"euler", euler_suite},     {"lefschetz", lefschetz_suite}, {"properties", properties_suite},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : suites()) v.push_back(name);
    return v;
  }();
  return names;
}

std::vector<CheckResult> run_suite(const std::string& suite, int theta_max) {
  std::vector<CheckResult> out;
  for (const auto& [name, fn] : suites()) {
    if (suite != "all" && suite != name) continue;
    out.push_back(timed(name, [fn = fn, theta_max] { return fn(theta_max); }));
  }
  if (out.empty()) throw std::invalid_argument("unknown suite '" + suite + "'");
  return out;
}

}  // namespace spcoh
