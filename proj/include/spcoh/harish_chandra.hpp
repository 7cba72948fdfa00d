#pragma once

#include <map>
#include <vector>

#include "spcoh/symbols.hpp"

namespace spcoh {

/// Multiset of unipotent representations, keyed by reduced symbol.
class RepMultiset {
 public:
  RepMultiset() = default;
  RepMultiset(std::initializer_list<Symbol> symbols);

  void add(const Symbol& s, int multiplicity = 1);
  void add(const RepMultiset& other);

  int multiplicity(const Symbol& s) const;
  bool contains(const Symbol& s) const { return multiplicity(s) > 0; }
  /// Total count with multiplicity.
  int size() const;
  int distinct() const { return static_cast<int>(counts_.size()); }
  bool empty() const { return counts_.empty(); }
  bool multiplicity_free() const;
  std::vector<Symbol> support() const;

  const std::map<Symbol, int>& counts() const { return counts_; }
  auto begin() const { return counts_.begin(); }
  auto end() const { return counts_.end(); }

  friend bool operator==(const RepMultiset&, const RepMultiset&) = default;

 private:
  std::map<Symbol, int> counts_;
};

/// Harish-Chandra induction of 1 x rho_s from GL(a) x Sp(2 rank(s)) to
/// Sp(2 (rank(s) + a)), computed by Pieri strips on the bipartition label.
RepMultiset induce(int a, const Symbol& s);
/// Induction applied to each member, multiplicities added.
RepMultiset induce(int a, const RepMultiset& reps);

/// Harish-Chandra restriction to the symplectic factor of GL(a) x Sp(2 (rank(s) - a)).
/// Throws RankUnderflow when a > rank(s).
RepMultiset restrict_sp(int a, const Symbol& s);
RepMultiset restrict_sp(int a, const RepMultiset& reps);

}  // namespace spcoh
