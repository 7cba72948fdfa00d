#pragma once

#include <vector>

#include "spcoh/oracle.hpp"

namespace spcoh::detail {

/// <row ur of u, row vr of v> for the standard symplectic form.
Element pairing(const FiniteField& f, const FieldMatrix& u, int ur, const FieldMatrix& v, int vr);

/// Incremental row echelon basis; insert() reports whether the row was new.
class RowReducer {
 public:
  RowReducer(const FiniteField& f, int cols);
  bool insert(const FieldMatrix& m, int r);
  int rank() const { return rank_; }

 private:
  const FiniteField& f_;
  FieldMatrix basis_;
  std::vector<int> pivot_row_;
  int rank_ = 0;
};

/// Intersection profile of the Lagrangian spanned by the rows of m.
std::vector<int> profile(const FiniteField& f, const FieldMatrix& m, const std::vector<Element>& frob, int depth);

/// Places a Lagrangian into its stratum of S_theta.
class Classifier {
 public:
  static constexpr int kOutside = -1;
  static constexpr int kUnassigned = -2;

  Classifier(const FiniteField& f, int theta, long q0);
  /// Stratum index, kOutside if not in S_theta, kUnassigned if no stratum fits.
  int classify(const FieldMatrix& m) const;

 private:
  const FiniteField& f_;
  int theta_;
  std::vector<Element> frob_;
};

std::vector<std::vector<int>> all_pivot_sets(int theta);

/// counts: strata 0..theta, then outside, then unassigned.
OracleCounts finish_counts(const std::vector<long>& counts, int theta);

}  // namespace spcoh::detail
