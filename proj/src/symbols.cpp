#include "spcoh/symbols.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "spcoh/errors.hpp"

namespace spcoh {

namespace {

bool strictly_increasing_nonneg(const std::vector<int>& row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i] < 0) return false;
    if (i && row[i] <= row[i - 1]) return false;
  }
  return true;
}

bool contains(const std::vector<int>& row, int v) { return std::binary_search(row.begin(), row.end(), v); }

std::vector<int> multiset_union(const SymbolRows& s) {
  std::vector<int> all = s.top;
  all.insert(all.end(), s.bottom.begin(), s.bottom.end());
  std::sort(all.begin(), all.end());
  return all;
}

int binom2(int m) { return m < 2 ? 0 : m * (m - 1) / 2; }

// For every z in `row` and 1 <= k <= z with z - k missing from `other`,
// records k.
void collect(const std::vector<int>& row, const std::vector<int>& other, std::vector<int>& out) {
  for (int z : row)
    for (int k = 1; k <= z; ++k)
      if (!contains(other, z - k)) out.push_back(k);
}

}  // namespace

SymbolRows shift(const SymbolRows& rows) {
  SymbolRows out;
  out.top.push_back(0);
  for (int x : rows.top) out.top.push_back(x + 1);
  out.bottom.push_back(0);
  for (int y : rows.bottom) out.bottom.push_back(y + 1);
  return out;
}

Symbol Symbol::normalize(std::vector<int> top, std::vector<int> bottom) {
  if (!strictly_increasing_nonneg(top) || !strictly_increasing_nonneg(bottom))
    throw InvalidSymbol("symbol rows must be strictly increasing non-negative integers");
  const long d = static_cast<long>(top.size()) - static_cast<long>(bottom.size());
  if (d <= 0 || d % 2 == 0) throw InvalidSymbol("symbol defect must be a positive odd integer, got " + std::to_string(d));
  while (!top.empty() && !bottom.empty() && top.front() == 0 && bottom.front() == 0) {
    top.erase(top.begin());
    bottom.erase(bottom.begin());
    for (int& x : top) --x;
    for (int& y : bottom) --y;
  }
  return Symbol(SymbolRows{std::move(top), std::move(bottom)});
}

int Symbol::rank() const { return spcoh::rank(rows_); }

int rank(const SymbolRows& s) {
  const int n = static_cast<int>(s.top.size() + s.bottom.size());
  const int sum = std::accumulate(s.top.begin(), s.top.end(), 0) + std::accumulate(s.bottom.begin(), s.bottom.end(), 0);
  return sum - (n - 1) * (n - 1) / 4;
}

int defect(const SymbolRows& s) { return static_cast<int>(s.top.size()) - static_cast<int>(s.bottom.size()); }

std::vector<int> hooks(const SymbolRows& s) {
  std::vector<int> out;
  collect(s.top, s.top, out);
  collect(s.bottom, s.bottom, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> cohooks(const SymbolRows& s) {
  std::vector<int> out;
  collect(s.top, s.bottom, out);
  collect(s.bottom, s.top, out);
  std::sort(out.begin(), out.end());
  return out;
}

int a_value(const SymbolRows& s) {
  // Sum of min over unordered pairs of positions: in ascending order the k-th
  // entry is the minimum of exactly (n - 1 - k) pairs.
  const auto all = multiset_union(s);
  const int n = static_cast<int>(all.size());
  int a = 0;
  for (int k = 0; k < n; ++k) a += all[k] * (n - 1 - k);
  for (int i = 1; n - 2 * i >= 2; ++i) a -= binom2(n - 2 * i);
  return a;
}

int b_prime(const SymbolRows& s) {
  const int n = static_cast<int>(s.top.size() + s.bottom.size());
  int common = 0;
  for (int x : s.top) common += contains(s.bottom, x) ? 1 : 0;
  return (n - 1) / 2 - common;
}

QPoly degree(const SymbolRows& s) {
  const int theta = rank(s);
  QPoly num = QPoly::monomial(1, a_value(s));
  for (int i = 1; i <= theta; ++i) num *= q_minus_one(2 * i);
  const int b = b_prime(s);
  QPoly den = QPoly::constant(b >= 0 ? Rational(BigInt(1) << b) : Rational(1, BigInt(1) << -b));
  for (int h : hooks(s)) den *= q_minus_one(h);
  for (int c : cohooks(s)) den *= q_plus_one(c);
  return exact_div(num, den);
}

Symbol cuspidal_symbol(int delta) {
  std::vector<int> top(2 * delta + 1);
  std::iota(top.begin(), top.end(), 0);
  return Symbol::normalize(std::move(top), {});
}

Symbol core(const Symbol& s) { return cuspidal_symbol(s.delta()); }

bool is_cuspidal(const Symbol& s) { return s == core(s); }

Symbol trivial_symbol(int theta) { return Symbol::normalize({theta}, {}); }

Symbol steinberg_symbol(int theta) {
  std::vector<int> top(theta + 1), bottom(theta);
  std::iota(top.begin(), top.end(), 0);
  std::iota(bottom.begin(), bottom.end(), 1);
  return Symbol::normalize(std::move(top), std::move(bottom));
}

UnipotentLabel symbol_to_label(const Symbol& s) {
  // With r = #bottom, shifting S_delta r times gives rows (0..2delta+r ; 0..r-1),
  // which match the row lengths of s.
  std::vector<int> alpha, beta;
  for (std::size_t i = 0; i < s.top().size(); ++i) alpha.push_back(s.top()[i] - static_cast<int>(i));
  for (std::size_t j = 0; j < s.bottom().size(); ++j) beta.push_back(s.bottom()[j] - static_cast<int>(j));
  return {s.delta(), {Partition(std::move(alpha)), Partition(std::move(beta))}};
}

Symbol label_to_symbol(const UnipotentLabel& label) {
  if (label.delta < 0) throw InvalidLabel("negative delta");
  const int d = 2 * label.delta + 1;
  const int r = std::max({label.bip.second.length(), label.bip.first.length() - d, 0});
  std::vector<int> top(r + d), bottom(r);
  // Partitions are stored decreasingly; the rows need them ascending and padded.
  for (int i = 0; i < r + d; ++i) top[i] = label.bip.first[r + d - 1 - i] + i;
  for (int j = 0; j < r; ++j) bottom[j] = label.bip.second[r - 1 - j] + j;
  return Symbol::normalize(std::move(top), std::move(bottom));
}

Symbol label_to_symbol(const UnipotentLabel& label, int theta) {
  if (label.rank() != theta)
    throw InvalidLabel("label of rank " + std::to_string(label.rank()) + " requested at rank " + std::to_string(theta));
  return label_to_symbol(label);
}

std::vector<Symbol> enumerate_symbols(int theta) {
  std::vector<Symbol> out;
  for (int delta = 0; delta * (delta + 1) <= theta; ++delta)
    for (const auto& b : bipartitions_of(theta - delta * (delta + 1))) out.push_back(label_to_symbol({delta, b}));
  return out;
}

std::string to_string(const Symbol& s) {
  std::ostringstream out;
  for (std::size_t i = 0; i < s.top().size(); ++i) out << (i ? "," : "") << s.top()[i];
  out << ';';
  for (std::size_t i = 0; i < s.bottom().size(); ++i) out << (i ? "," : "") << s.bottom()[i];
  return out.str();
}

namespace {

std::vector<int> parse_row(const std::string& text) {
  std::vector<int> row;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    std::erase_if(item, [](unsigned char c) { return std::isspace(c); });
    if (item.empty()) throw ParseError("empty entry in symbol row '" + text + "'");
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw ParseError("bad integer '" + item + "' in symbol");
    }
    if (used != item.size()) throw ParseError("bad integer '" + item + "' in symbol");
    row.push_back(v);
  }
  return row;
}

bool blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

}  // namespace

Symbol parse_symbol(const std::string& text) {
  const auto semi = text.find(';');
  if (semi == std::string::npos || text.find(';', semi + 1) != std::string::npos)
    throw ParseError("symbol '" + text + "' must contain exactly one ';'");
  const std::string top = text.substr(0, semi), bottom = text.substr(semi + 1);
  return Symbol::normalize(blank(top) ? std::vector<int>{} : parse_row(top),
                           blank(bottom) ? std::vector<int>{} : parse_row(bottom));
}

}  // namespace spcoh
