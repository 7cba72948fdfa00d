#pragma once

#include <compare>
#include <string>
#include <vector>

#include "spcoh/partitions.hpp"
#include "spcoh/qpoly.hpp"

namespace spcoh {

/// Two strictly increasing rows of non-negative integers, not reduced modulo
/// shift. Every symbol statistic is defined on rows and is shift-invariant;
/// the free functions below accept arbitrary representatives so that this
/// can be tested.
struct SymbolRows {
  std::vector<int> top;
  std::vector<int> bottom;

  friend bool operator==(const SymbolRows&, const SymbolRows&) = default;
};

/// ({0} + (X+1), {0} + (Y+1)).
SymbolRows shift(const SymbolRows& rows);

/// Lusztig symbol of positive odd defect, stored in reduced form (the rows do
/// not both contain 0). Labels a unipotent representation of Sp(2*rank).
class Symbol {
 public:
  /// Reduces (top, bottom) modulo shift. Throws InvalidSymbol unless both
  /// rows are strictly increasing and non-negative with positive odd defect.
  static Symbol normalize(std::vector<int> top, std::vector<int> bottom);
  static Symbol normalize(const SymbolRows& rows) { return normalize(rows.top, rows.bottom); }

  const std::vector<int>& top() const { return rows_.top; }
  const std::vector<int>& bottom() const { return rows_.bottom; }
  const SymbolRows& rows() const { return rows_; }

  int rank() const;
  int defect() const { return static_cast<int>(rows_.top.size() - rows_.bottom.size()); }
  /// (defect - 1) / 2, the Harish-Chandra series index.
  int delta() const { return (defect() - 1) / 2; }

  friend auto operator<=>(const Symbol& a, const Symbol& b) {
    if (auto c = a.rows_.top <=> b.rows_.top; c != 0) return c;
    return a.rows_.bottom <=> b.rows_.bottom;
  }
  friend bool operator==(const Symbol&, const Symbol&) = default;

 private:
  explicit Symbol(SymbolRows rows) : rows_(std::move(rows)) {}
  SymbolRows rows_;
};

/// Alternate label (delta, alpha, beta) of a unipotent representation.
struct UnipotentLabel {
  int delta = 0;
  Bipartition bip;

  int rank() const { return delta * (delta + 1) + bip.size(); }
  friend auto operator<=>(const UnipotentLabel&, const UnipotentLabel&) = default;
};

int rank(const SymbolRows& s);
int defect(const SymbolRows& s);

/// Lengths of the hooks of s, sorted ascending (a multiset).
std::vector<int> hooks(const SymbolRows& s);
/// Lengths of the cohooks of s, sorted ascending.
std::vector<int> cohooks(const SymbolRows& s);
inline std::vector<int> hooks(const Symbol& s) { return hooks(s.rows()); }
inline std::vector<int> cohooks(const Symbol& s) { return cohooks(s.rows()); }

/// Exponents in the hook formula.
int a_value(const SymbolRows& s);
int b_prime(const SymbolRows& s);

/// Generic degree of the unipotent character, by the hook formula.
QPoly degree(const SymbolRows& s);
inline QPoly degree(const Symbol& s) { return degree(s.rows()); }

/// The cuspidal symbol (0, 1, ..., 2*delta ; -) of rank delta*(delta+1).
Symbol cuspidal_symbol(int delta);
Symbol core(const Symbol& s);
bool is_cuspidal(const Symbol& s);

/// (theta ; -), the trivial representation.
Symbol trivial_symbol(int theta);
/// (0 .. theta ; 1 .. theta), the Steinberg representation.
Symbol steinberg_symbol(int theta);

UnipotentLabel symbol_to_label(const Symbol& s);
Symbol label_to_symbol(const UnipotentLabel& label);
/// As above, but throws InvalidLabel unless the label has rank theta.
Symbol label_to_symbol(const UnipotentLabel& label, int theta);

/// All reduced symbols of rank theta and odd defect, ordered by delta and
/// then by bipartition.
std::vector<Symbol> enumerate_symbols(int theta);

/// Text form "0,2;1": rows comma separated, a semicolon between rows.
std::string to_string(const Symbol& s);
Symbol parse_symbol(const std::string& text);

}  // namespace spcoh
