#include "spcoh/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "spcoh/errors.hpp"

namespace spcoh {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (std::any_of(parts_.begin(), parts_.end(), [](int p) { return p < 0; }))
    throw InvalidLabel("partition with a negative part");
  std::erase(parts_, 0);
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

// Horizontal strips are exactly the interleavings
//   new[0] >= old[0] >= new[1] >= old[1] >= ... >= new[len] >= 0
// (adding) or old[0] >= new[0] >= old[1] >= ... (removing).
void strips_rec(const Partition& t, bool adding, std::size_t row, int left, std::vector<int>& cur,
                std::set<Partition>& out) {
  const std::size_t rows = static_cast<std::size_t>(t.length()) + (adding ? 1 : 0);
  if (row == rows) {
    if (left == 0) out.emplace(cur);
    return;
  }
  const int old = t[row];
  int lo, hi;
  if (adding) {
    lo = old;
    hi = row == 0 ? old + left : t[row - 1];
  } else {
    lo = t[row + 1];
    hi = old;
  }
  for (int v = lo; v <= hi; ++v) {
    const int used = adding ? v - old : old - v;
    if (used > left) continue;
    cur.push_back(v);
    strips_rec(t, adding, row + 1, left - used, cur, out);
    cur.pop_back();
  }
}

std::set<Bipartition> combine(const Bipartition& b, int a,
                              std::set<Partition> (*strip)(const Partition&, int)) {
  std::set<Bipartition> out;
  for (int d = 0; d <= a; ++d) {
    auto firsts = strip(b.first, d);
    if (firsts.empty()) continue;
    auto seconds = strip(b.second, a - d);
    for (const auto& f : firsts)
      for (const auto& s : seconds) out.insert({f, s});
  }
  return out;
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

std::vector<Bipartition> bipartitions_of(int n) {
  std::vector<Bipartition> out;
  for (int k = n; k >= 0; --k)
    for (const auto& f : partitions_of(k))
      for (const auto& s : partitions_of(n - k)) out.push_back({f, s});
  return out;
}

std::set<Partition> add_strip(const Partition& t, int d) {
  std::set<Partition> out;
  if (d < 0) return out;
  std::vector<int> cur;
  strips_rec(t, true, 0, d, cur, out);
  return out;
}

std::set<Partition> remove_strip(const Partition& t, int d) {
  std::set<Partition> out;
  if (d < 0 || d > t.size()) return out;
  std::vector<int> cur;
  strips_rec(t, false, 0, d, cur, out);
  return out;
}

std::set<Bipartition> bipartition_expansions(const Bipartition& b, int a) {
  return combine(b, a, &add_strip);
}

std::set<Bipartition> bipartition_contractions(const Bipartition& b, int a) {
  return combine(b, a, &remove_strip);
}

std::string to_string(const Partition& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p.parts()[i]);
  }
  return s + ")";
}

std::string to_string(const Bipartition& b) {
  return "(" + to_string(b.first) + "," + to_string(b.second) + ")";
}

}  // namespace spcoh
