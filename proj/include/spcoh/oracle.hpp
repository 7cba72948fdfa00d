#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "spcoh/field.hpp"

namespace spcoh {

/// Dense row-major matrix over a FiniteField.
class FieldMatrix {
 public:
  FieldMatrix() = default;
  FieldMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Element& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  Element operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  friend auto operator<=>(const FieldMatrix&, const FieldMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Element> data_;
};

/// Reduced row-echelon form; zero rows are dropped.
FieldMatrix rref(const FiniteField& f, FieldMatrix m);
int rank(const FiniteField& f, const FieldMatrix& m);

/// A subspace of F^{2 theta}, held as its reduced row-echelon basis. Two
/// bases compare equal iff they span the same subspace.
class SubspaceBasis {
 public:
  static SubspaceBasis span(const FiniteField& f, const FieldMatrix& rows) { return SubspaceBasis(rref(f, rows)); }
  /// `m` must already be in reduced row-echelon form without zero rows.
  static SubspaceBasis from_rref(FieldMatrix m) { return SubspaceBasis(std::move(m)); }

  const FieldMatrix& mat() const { return mat_; }
  int dim() const { return mat_.rows(); }
  int ambient() const { return mat_.cols(); }

  friend auto operator<=>(const SubspaceBasis&, const SubspaceBasis&) = default;

 private:
  explicit SubspaceBasis(FieldMatrix m) : mat_(std::move(m)) {}
  FieldMatrix mat_;
};

/// Gram matrix ((0, A), (-A, 0)) of size 2 theta, A the antidiagonal of ones.
FieldMatrix symplectic_gram(const FiniteField& f, int theta);
bool is_lagrangian(const FiniteField& f, const SubspaceBasis& s);

/// Entrywise x -> x^{q0}, re-echelonized.
SubspaceBasis tau(const FiniteField& f, const SubspaceBasis& s, long q0);

/// [dim(U & tau U), dim(U & tau U & tau^2 U), ...] for a Lagrangian U, `depth` entries.
std::vector<int> intersection_profile(const FiniteField& f, const SubspaceBasis& s, long q0, int depth);

/// The stratum theta' with dim(U & ... & tau^{theta'+1} U) = theta - theta', given
/// a profile of depth >= theta + 1. Empty when no unique index matches.
std::optional<int> stratum_index(const std::vector<int>& profile, int theta);

/// Work bounds for the exhaustive enumerations.
struct ScaleLimits {
  int max_theta = 3;
  int max_field_order = 81;
  /// Estimated work |k|^{theta^2}.
  double max_work = 1e7;
  bool enforce = true;
};

/// Throws ScaleGuard when (theta, |k|) exceeds the limits.
void check_scale(int theta, int field_order, const ScaleLimits& limits);

/// Streams every Lagrangian of F^{2 theta} exactly once, in canonical form.
/// Rows are added one at a time; each new row solves the linear conditions
/// of being orthogonal to the rows already chosen.
void enumerate_lagrangians(int theta, const FiniteField& f, const ScaleLimits& limits,
                           const std::function<void(const SubspaceBasis&)>& visit);

/// Serial reference: every echelon matrix of rank theta, kept if isotropic.
void enumerate_lagrangians_reference(int theta, const FiniteField& f, const ScaleLimits& limits,
                                     const std::function<void(const SubspaceBasis&)>& visit);

struct OracleCounts {
  long lagrangians = 0;
  /// Points of S_theta: Lagrangians with dim(U & tau U) >= theta - 1.
  long total = 0;
  std::map<int, long> per_stratum;

  friend bool operator==(const OracleCounts&, const OracleCounts&) = default;
};

/// Counts S_theta(F_{q0^n}) for q0 = p^e, bucketed by stratum. Parallel over
/// enumeration blocks with OpenMP.
OracleCounts oracle_counts(int theta, int p, int e, int n, const ScaleLimits& limits = {});

/// Same counts from the brute-force serial enumeration.
OracleCounts oracle_counts_reference(int theta, int p, int e, int n, const ScaleLimits& limits = {});

}  // namespace spcoh
