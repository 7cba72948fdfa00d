#include "spcoh/harish_chandra.hpp"

#include <algorithm>

#include "spcoh/errors.hpp"

namespace spcoh {

RepMultiset::RepMultiset(std::initializer_list<Symbol> symbols) {
  for (const auto& s : symbols) add(s);
}

void RepMultiset::add(const Symbol& s, int multiplicity) {
  if (multiplicity <= 0) return;
  counts_[s] += multiplicity;
}

void RepMultiset::add(const RepMultiset& other) {
  for (const auto& [s, m] : other.counts_) add(s, m);
}

int RepMultiset::multiplicity(const Symbol& s) const {
  auto it = counts_.find(s);
  return it == counts_.end() ? 0 : it->second;
}

int RepMultiset::size() const {
  int n = 0;
  for (const auto& [s, m] : counts_) n += m;
  return n;
}

bool RepMultiset::multiplicity_free() const {
  return std::all_of(counts_.begin(), counts_.end(), [](const auto& kv) { return kv.second == 1; });
}

std::vector<Symbol> RepMultiset::support() const {
  std::vector<Symbol> out;
  for (const auto& [s, m] : counts_) out.push_back(s);
  return out;
}

RepMultiset induce(int a, const Symbol& s) {
  if (a < 0) throw InvalidLabel("induction by a negative rank");
  const auto label = symbol_to_label(s);
  RepMultiset out;
  for (const auto& b : bipartition_expansions(label.bip, a)) out.add(label_to_symbol({label.delta, b}));
  return out;
}

RepMultiset induce(int a, const RepMultiset& reps) {
  RepMultiset out;
  for (const auto& [s, m] : reps)
    for (const auto& [t, k] : induce(a, s)) out.add(t, m * k);
  return out;
}

RepMultiset restrict_sp(int a, const Symbol& s) {
  if (a < 0) throw InvalidLabel("restriction by a negative rank");
  if (a > s.rank())
    throw RankUnderflow("cannot restrict a rank-" + std::to_string(s.rank()) + " symbol by " + std::to_string(a));
  const auto label = symbol_to_label(s);
  RepMultiset out;
  for (const auto& b : bipartition_contractions(label.bip, a)) out.add(label_to_symbol({label.delta, b}));
  return out;
}

RepMultiset restrict_sp(int a, const RepMultiset& reps) {
  RepMultiset out;
  for (const auto& [s, m] : reps)
    for (const auto& [t, k] : restrict_sp(a, s)) out.add(t, m * k);
  return out;
}

}  // namespace spcoh
