// Serial brute-force reference for the Lagrangian enumeration and the
// point counts. Kept deliberately naive: it walks every reduced echelon
// matrix of rank theta and tests isotropy afterwards.

#include <vector>

#include "spcoh/errors.hpp"
#include "spcoh/oracle.hpp"
#include "oracle_detail.hpp"

namespace spcoh {

void enumerate_lagrangians_reference(int theta, const FiniteField& f, const ScaleLimits& limits,
                                     const std::function<void(const SubspaceBasis&)>& visit) {
  check_scale(theta, f.order(), limits);
  if (theta == 0) {
    visit(SubspaceBasis::from_rref(FieldMatrix(0, 0)));
    return;
  }
  const int n = 2 * theta;
  for (const auto& piv : detail::all_pivot_sets(theta)) {
    std::vector<bool> is_pivot(n, false);
    for (int p : piv) is_pivot[p] = true;
    std::vector<std::pair<int, int>> slots;
    FieldMatrix m(theta, n);
    for (int r = 0; r < theta; ++r) {
      m(r, piv[r]) = f.one();
      for (int c = piv[r] + 1; c < n; ++c)
        if (!is_pivot[c]) slots.emplace_back(r, c);
    }
    // Odometer over all entries of the free slots.
    std::vector<int> digit(slots.size(), 0);
    while (true) {
      for (std::size_t k = 0; k < slots.size(); ++k) m(slots[k].first, slots[k].second) = f.element(digit[k]);
      auto s = SubspaceBasis::from_rref(m);
      if (is_lagrangian(f, s)) visit(s);
      std::size_t k = 0;
      while (k < digit.size() && ++digit[k] == f.order()) digit[k++] = 0;
      if (k == digit.size()) break;
    }
  }
}

OracleCounts oracle_counts_reference(int theta, int p, int e, int n, const ScaleLimits& limits) {
  if (n < 1 || e < 1) throw InvalidLabel("extension degrees must be >= 1");
  const FiniteField f(p, e * n);
  long q0 = 1;
  for (int k = 0; k < e; ++k) q0 *= p;
  std::vector<long> counts(theta + 3, 0);
  enumerate_lagrangians_reference(theta, f, limits, [&](const SubspaceBasis& s) {
    const auto prof = intersection_profile(f, s, q0, theta + 1);
    if (theta > 0 && prof[0] < theta - 1) {
      ++counts[theta + 1];
      return;
    }
    auto tp = stratum_index(prof, theta);
    ++counts[tp ? *tp : theta + 2];
  });
  return detail::finish_counts(counts, theta);
}

}  // namespace spcoh
