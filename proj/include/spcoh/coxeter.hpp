#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "spcoh/harish_chandra.hpp"
#include "spcoh/qpoly.hpp"
#include "spcoh/symbols.hpp"

namespace spcoh {

/// The Frobenius eigenvalue sign * q^exp.
struct FrobEigenvalue {
  int sign = 1;
  int exp = 0;

  FrobEigenvalue() = default;
  FrobEigenvalue(int sign, int exp);

  /// Tate twist (-k): multiplies the eigenvalue by q^k.
  FrobEigenvalue twisted(int k) const { return {sign, exp + k}; }
  /// Value of (sign * q^exp)^n as a polynomial in q.
  QPoly power(int n) const;

  friend auto operator<=>(const FrobEigenvalue&, const FrobEigenvalue&) = default;
};

std::string to_string(const FrobEigenvalue& e);

struct CohomologyTerm {
  Symbol symbol;
  FrobEigenvalue eigenvalue;

  friend auto operator<=>(const CohomologyTerm&, const CohomologyTerm&) = default;
};

/// Cohomology degree -> summands with their Frobenius eigenvalues.
class GradedCohomology {
 public:
  /// Throws std::logic_error if the pair is already present in that degree.
  void add(int degree, CohomologyTerm term);
  /// Summands in `degree`, empty if none.
  const std::vector<CohomologyTerm>& at(int degree) const;
  std::vector<int> degrees() const;
  const std::map<int, std::vector<CohomologyTerm>>& terms() const { return terms_; }

 private:
  std::map<int, std::vector<CohomologyTerm>> terms_;
};

/// (0 .. theta-i-1, theta ; 1 .. theta-i): the q^i eigenspace in degree theta+i.
Symbol coxeter_symbol_S(int theta, int i);
/// (0 .. theta-j-1, theta ; 1 .. theta-j-2): the -q^{j+1} eigenspace in degree theta+j.
Symbol coxeter_symbol_T(int theta, int j);

/// Compactly supported cohomology of the Coxeter variety of Sp(2 theta).
/// theta = 0 is accepted and gives the point.
GradedCohomology coxeter_cohomology(int theta);

/// Closed-form degrees of the S and T eigenspaces.
QPoly lusztig_degree_S(int theta, int i);
QPoly lusztig_degree_T(int theta, int j);

/// Checks that restricting H^{theta+i}_c(X^theta) to Sp(2(theta-1)) gives
/// H^{theta-1+i}_c(X^{theta-1}) + H^{theta-2+i}_c(X^{theta-1})(-1), eigenvalues
/// included, in every degree.
bool verify_restriction_identity(int theta);

}  // namespace spcoh
