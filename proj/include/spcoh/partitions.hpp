#pragma once

#include <compare>
#include <initializer_list>
#include <set>
#include <string>
#include <vector>

namespace spcoh {

/// Integer partition, parts stored non-increasing and strictly positive.
/// Construction normalizes: zero parts are dropped and the rest sorted.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  /// Number of boxes.
  int size() const;
  /// Number of nonzero parts.
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// Part i, or 0 past the end.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

struct Bipartition {
  Partition first;
  Partition second;

  int size() const { return first.size() + second.size(); }
  friend auto operator<=>(const Bipartition&, const Bipartition&) = default;
};

/// All partitions of n.
std::vector<Partition> partitions_of(int n);
/// All bipartitions of n.
std::vector<Bipartition> bipartitions_of(int n);

/// Partitions obtained from t by adding a horizontal strip of d boxes.
std::set<Partition> add_strip(const Partition& t, int d);
/// Partitions obtained from t by removing a horizontal strip of d boxes.
std::set<Partition> remove_strip(const Partition& t, int d);

/// Union over 0 <= d <= a of add_strip(first, d) x add_strip(second, a - d).
std::set<Bipartition> bipartition_expansions(const Bipartition& b, int a);
/// Union over 0 <= d <= a of remove_strip(first, d) x remove_strip(second, a - d).
std::set<Bipartition> bipartition_contractions(const Bipartition& b, int a);

std::string to_string(const Partition& p);
std::string to_string(const Bipartition& b);

}  // namespace spcoh
