#pragma once

#include <map>
#include <utility>
#include <vector>

#include "spcoh/coxeter.hpp"
#include "spcoh/harish_chandra.hpp"
#include "spcoh/qpoly.hpp"

namespace spcoh {

/// One cell of the first page: A carries eigenvalue q^i, B carries -q^{i+1}.
struct E1Term {
  RepMultiset a;
  RepMultiset b;

  friend bool operator==(const E1Term&, const E1Term&) = default;
};

/// First page of the spectral sequence of the stratification of S_theta.
/// Cell (theta', i), 0 <= i <= theta' <= theta, sits in total degree theta' + i.
class E1Page {
 public:
  explicit E1Page(int theta) : theta_(theta) {}

  int theta() const { return theta_; }
  const E1Term& at(int theta_prime, int i) const;
  void set(int theta_prime, int i, E1Term term);
  const std::map<std::pair<int, int>, E1Term>& cells() const { return cells_; }

 private:
  int theta_;
  std::map<std::pair<int, int>, E1Term> cells_;
};

/// Harish-Chandra induction of the Coxeter cohomology of every stratum.
E1Page e1_page(int theta);

/// The same cell from the explicit bipartition lists (two-row alpha, hook-shaped beta).
E1Term e1_closed_form(int theta, int theta_prime, int i);

/// A_eps collects the rho_{0,alpha,beta} whose beta has theta' + eps - i parts,
/// B_eps the rho_{1,gamma,delta} whose delta has theta' - 2 + eps - i parts.
struct AbSplit {
  RepMultiset a0, a1, b0, b1;

  friend bool operator==(const AbSplit&, const AbSplit&) = default;
};

AbSplit ab_split(const E1Page& page, int theta_prime, int i);
AbSplit ab_split(int theta, int theta_prime, int i);

/// H^{2i}(S_theta): `plus` carries eigenvalue q^i, `minus` carries -q^i.
struct EvenCohomology {
  RepMultiset plus;
  RepMultiset minus;

  friend bool operator==(const EvenCohomology&, const EvenCohomology&) = default;
};

/// Cohomology of S_theta. Odd degrees vanish, so only H^{2i} is stored.
struct CohomologyOfS {
  int theta = 0;
  std::vector<EvenCohomology> even;  // index i holds H^{2i}

  const EvenCohomology& h2i(int i) const { return even.at(i); }
};

CohomologyOfS cohomology_of_S(int theta);

/// Sum of hook-formula degrees, with multiplicity.
QPoly total_degree(const RepMultiset& reps);

/// |S_theta(F_{q^n})| by the Lefschetz trace formula, as a polynomial in q.
QPoly point_count_S(int theta, int n);
/// Points of the stratum theta' of S_theta over F_{q^n}, from the E1 cells.
QPoly point_count_stratum(int theta, int theta_prime, int n);
QPoly point_count_stratum(const E1Page& page, int theta_prime, int n);

}  // namespace spcoh
