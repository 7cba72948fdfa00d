#include "spcoh/oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <string>


#include "spcoh/errors.hpp"
#include "oracle_detail.hpp"

namespace spcoh {

FieldMatrix rref(const FiniteField& f, FieldMatrix m) {
  int lead = 0;
  for (int c = 0; c < m.cols() && lead < m.rows(); ++c) {
    int pivot = -1;
    for (int r = lead; r < m.rows(); ++r)
      if (m(r, c).code != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != lead)
      for (int k = 0; k < m.cols(); ++k) std::swap(m(pivot, k), m(lead, k));
    const Element scale = f.inv(m(lead, c));
    for (int k = 0; k < m.cols(); ++k) m(lead, k) = f.mul(m(lead, k), scale);
    for (int r = 0; r < m.rows(); ++r) {
      if (r == lead || m(r, c).code == 0) continue;
      const Element factor = m(r, c);
      for (int k = 0; k < m.cols(); ++k) m(r, k) = f.sub(m(r, k), f.mul(factor, m(lead, k)));
    }
    ++lead;
  }
  FieldMatrix out(lead, m.cols());
  for (int r = 0; r < lead; ++r)
    for (int k = 0; k < m.cols(); ++k) out(r, k) = m(r, k);
  return out;
}

int rank(const FiniteField& f, const FieldMatrix& m) { return rref(f, m).rows(); }

FieldMatrix symplectic_gram(const FiniteField& f, int theta) {
  const int n = 2 * theta;
  FieldMatrix g(n, n);
  for (int j = 0; j < n; ++j) g(j, n - 1 - j) = j < theta ? f.one() : f.neg(f.one());
  return g;
}

bool is_lagrangian(const FiniteField& f, const SubspaceBasis& s) {
  const auto& m = s.mat();
  if (2 * m.rows() != m.cols()) return false;
  for (int a = 0; a < m.rows(); ++a)
    for (int b = a; b < m.rows(); ++b)
      if (detail::pairing(f, m, a, m, b).code != 0) return false;
  return true;
}

SubspaceBasis tau(const FiniteField& f, const SubspaceBasis& s, long q0) {
  const auto frob = f.power_map(q0);
  FieldMatrix m = s.mat();
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) m(r, c) = frob[m(r, c).code];
  return SubspaceBasis::span(f, m);
}

std::vector<int> intersection_profile(const FiniteField& f, const SubspaceBasis& s, long q0, int depth) {
  return detail::profile(f, s.mat(), f.power_map(q0), depth);
}

std::optional<int> stratum_index(const std::vector<int>& profile, int theta) {
  std::optional<int> found;
  for (int tp = 0; tp <= theta && tp < static_cast<int>(profile.size()); ++tp) {
    if (profile[tp] != theta - tp) continue;
    if (found) return std::nullopt;
    found = tp;
  }
  return found;
}

void check_scale(int theta, int field_order, const ScaleLimits& limits) {
  if (theta < 0) throw InvalidLabel("negative rank");
  if (!limits.enforce) return;
  if (theta > limits.max_theta)
    throw ScaleGuard("theta=" + std::to_string(theta) + " exceeds the enumeration bound " + std::to_string(limits.max_theta));
  if (field_order > limits.max_field_order)
    throw ScaleGuard("field order " + std::to_string(field_order) + " exceeds the enumeration bound " +
                     std::to_string(limits.max_field_order));
  const double work = std::pow(static_cast<double>(field_order), theta * theta);
  if (work > limits.max_work)
    throw ScaleGuard("estimated work " + std::to_string(work) + " exceeds the bound " + std::to_string(limits.max_work));
}

namespace detail {

Element pairing(const FiniteField& f, const FieldMatrix& u, int ur, const FieldMatrix& v, int vr) {
  // <u, v> = sum_c v_c <u, e_c>, and <u, e_c> = +-u_{2theta-1-c}.
  const int n = u.cols();
  const int theta = n / 2;
  Element acc = f.zero();
  for (int c = 0; c < n; ++c) {
    const Element vc = v(vr, c);
    if (vc.code == 0) continue;
    Element t = f.mul(u(ur, n - 1 - c), vc);
    acc = c >= theta ? f.add(acc, t) : f.sub(acc, t);
  }
  return acc;
}

std::vector<int> profile(const FiniteField& f, const FieldMatrix& m, const std::vector<Element>& frob, int depth) {
  const int n = m.cols();
  RowReducer reducer(f, n);
  FieldMatrix cur = m;
  for (int r = 0; r < cur.rows(); ++r) reducer.insert(cur, r);
  std::vector<int> out;
  for (int k = 1; k <= depth; ++k) {
    for (int r = 0; r < cur.rows(); ++r)
      for (int c = 0; c < n; ++c) cur(r, c) = frob[cur(r, c).code];
    for (int r = 0; r < cur.rows(); ++r) reducer.insert(cur, r);
    out.push_back(n - reducer.rank());
  }
  return out;
}

RowReducer::RowReducer(const FiniteField& f, int cols) : f_(f), basis_(cols, cols), pivot_row_(cols, -1) {}

bool RowReducer::insert(const FieldMatrix& m, int r) {
  const int n = basis_.cols();
  std::vector<Element> v(n);
  for (int c = 0; c < n; ++c) v[c] = m(r, c);
  for (int c = 0; c < n; ++c) {
    if (v[c].code == 0 || pivot_row_[c] < 0) continue;
    const int b = pivot_row_[c];
    const Element factor = v[c];
    for (int k = c; k < n; ++k) v[k] = f_.sub(v[k], f_.mul(factor, basis_(b, k)));
  }
  int lead = -1;
  for (int c = 0; c < n; ++c)
    if (v[c].code != 0) {
      lead = c;
      break;
    }
  if (lead < 0) return false;
  const Element scale = f_.inv(v[lead]);
  for (int k = 0; k < n; ++k) basis_(rank_, k) = f_.mul(v[k], scale);
  pivot_row_[lead] = rank_++;
  return true;
}

Classifier::Classifier(const FiniteField& f, int theta, long q0)
    : f_(f), theta_(theta), frob_(f.power_map(q0)) {}

int Classifier::classify(const FieldMatrix& m) const {
  const auto prof = profile(f_, m, frob_, theta_ + 1);
  if (prof[0] < theta_ - 1) return kOutside;
  auto tp = stratum_index(prof, theta_);
  return tp ? *tp : kUnassigned;
}

namespace {

// Row r of the echelon matrix under construction has its pivot at pivots[r]
// and free entries in the non-pivot columns to the right of it.
struct Builder {
  const FiniteField& f;
  int theta;
  std::vector<int> pivots;
  std::vector<std::vector<int>> free_cols;
  FieldMatrix m;

  Builder(const FiniteField& field, int t, std::vector<int> piv) : f(field), theta(t), pivots(std::move(piv)), m(t, 2 * t) {
    const int n = 2 * theta;
    std::vector<bool> is_pivot(n, false);
    for (int p : pivots) is_pivot[p] = true;
    free_cols.resize(theta);
    for (int r = 0; r < theta; ++r) {
      for (int c = pivots[r] + 1; c < n; ++c)
        if (!is_pivot[c]) free_cols[r].push_back(c);
      m(r, pivots[r]) = f.one();
    }
  }

  void assign_row(int r, long code) {
    for (int c : free_cols[r]) {
      m(r, c) = {static_cast<std::uint16_t>(code % f.order())};
      code /= f.order();
    }
  }

  // Solves <row s, row r> = 0 for all s < r in the free entries of row r and
  // visits every completion.
  template <typename Visit>
  void extend(int r, Visit& visit) {
    if (r == theta) {
      visit(m);
      return;
    }
    const auto& cols = free_cols[r];
    const int k = static_cast<int>(cols.size());
    // Augmented system: one equation per earlier row.
    FieldMatrix sys(r, k + 1);
    for (int s = 0; s < r; ++s) {
      for (int j = 0; j < k; ++j) sys(s, j) = gram_entry(s, cols[j]);
      sys(s, k) = f.neg(gram_entry(s, pivots[r]));
    }
    FieldMatrix red = rref(f, sys);
    std::vector<int> lead_col(red.rows());
    std::vector<bool> bound(k, false);
    for (int e = 0; e < red.rows(); ++e) {
      int c = 0;
      while (red(e, c).code == 0) ++c;
      if (c == k) return;  // inconsistent
      lead_col[e] = c;
      bound[c] = true;
    }
    std::vector<int> unbound;
    for (int j = 0; j < k; ++j)
      if (!bound[j]) unbound.push_back(j);
    long combos = 1;
    for (std::size_t u = 0; u < unbound.size(); ++u) combos *= f.order();
    for (long code = 0; code < combos; ++code) {
      long rest = code;
      for (int j : unbound) {
        m(r, cols[j]) = {static_cast<std::uint16_t>(rest % f.order())};
        rest /= f.order();
      }
      for (int e = 0; e < red.rows(); ++e) {
        Element v = red(e, k);
        for (int j : unbound) v = f.sub(v, f.mul(red(e, j), m(r, cols[j])));
        m(r, cols[lead_col[e]]) = v;
      }
      extend(r + 1, visit);
    }
    for (int c : cols) m(r, c) = f.zero();
  }

  // <row s, e_c>
  Element gram_entry(int s, int c) const {
    const int n = 2 * theta;
    const Element u = m(s, n - 1 - c);
    return c >= theta ? u : f.neg(u);
  }
};

struct WorkItem {
  std::size_t pivot_set;
  long row0_code;
};

std::vector<std::vector<int>> pivot_sets(int theta) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  const int n = 2 * theta;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == theta) {
      out.push_back(cur);
      return;
    }
    for (int c = start; c < n; ++c) {
      cur.push_back(c);
      rec(c + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

}  // namespace

std::vector<std::vector<int>> all_pivot_sets(int theta) { return pivot_sets(theta); }

}  // namespace detail

void enumerate_lagrangians(int theta, const FiniteField& f, const ScaleLimits& limits,
                           const std::function<void(const SubspaceBasis&)>& visit) {
  check_scale(theta, f.order(), limits);
  if (theta == 0) {
    visit(SubspaceBasis::from_rref(FieldMatrix(0, 0)));
    return;
  }
  auto emit = [&](const FieldMatrix& m) { visit(SubspaceBasis::from_rref(m)); };
  for (const auto& piv : detail::pivot_sets(theta)) {
    detail::Builder b(f, theta, piv);
    b.extend(0, emit);
  }
}

OracleCounts oracle_counts(int theta, int p, int e, int n, const ScaleLimits& limits) {
  if (n < 1 || e < 1) throw InvalidLabel("extension degrees must be >= 1");
  const FiniteField f(p, e * n);
  check_scale(theta, f.order(), limits);
  long q0 = 1;
  for (int k = 0; k < e; ++k) q0 *= p;
  const detail::Classifier classifier(f, theta, q0);

  OracleCounts out;
  if (theta == 0) {
    out.lagrangians = out.total = 1;
    out.per_stratum[0] = 1;
    return out;
  }

  const auto sets = detail::pivot_sets(theta);
  std::vector<detail::WorkItem> items;
  for (std::size_t s = 0; s < sets.size(); ++s) {
    detail::Builder probe(f, theta, sets[s]);
    long combos = 1;
    for (std::size_t j = 0; j < probe.free_cols[0].size(); ++j) combos *= f.order();
    for (long code = 0; code < combos; ++code) items.push_back({s, code});
  }

  // Slots 0..theta are strata, then "outside S_theta", then "no stratum".
  const int slots = theta + 3;
  std::vector<long> counts(slots, 0);
  long* acc = counts.data();
  const long num_items = static_cast<long>(items.size());
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : acc[:slots])
  for (long it = 0; it < num_items; ++it) {
    detail::Builder b(f, theta, sets[items[it].pivot_set]);
    b.assign_row(0, items[it].row0_code);
    auto tally = [&](const FieldMatrix& m) {
      const int k = classifier.classify(m);
      acc[k == detail::Classifier::kOutside ? theta + 1 : k == detail::Classifier::kUnassigned ? theta + 2 : k] += 1;
    };
    b.extend(1, tally);
  }
  return detail::finish_counts(counts, theta);
}

namespace detail {

OracleCounts finish_counts(const std::vector<long>& counts, int theta) {
  if (counts[theta + 2] != 0)
    throw std::logic_error(std::to_string(counts[theta + 2]) + " points of S_theta fall in no stratum");
  OracleCounts out;
  for (int tp = 0; tp <= theta; ++tp) {
    out.per_stratum[tp] = counts[tp];
    out.total += counts[tp];
  }
  out.lagrangians = out.total + counts[theta + 1];
  return out;
}

}  // namespace detail

}  // namespace spcoh
