#include <doctest.h>

#include "spcoh/errors.hpp"
#include "spcoh/harish_chandra.hpp"

using namespace spcoh;

namespace {

const Partition E{};

Symbol sym(std::vector<int> top, std::vector<int> bottom) { return Symbol::normalize(std::move(top), std::move(bottom)); }
Symbol lab(int delta, Partition a, Partition b) { return label_to_symbol(UnipotentLabel{delta, {std::move(a), std::move(b)}}); }

std::vector<Symbol> symbols_of_rank(int theta) {
  if (theta == 0) return {cuspidal_symbol(0)};
  return enumerate_symbols(theta);
}

QPoly product_minus(int from, int to, int step) {
  QPoly p{1};
  for (int k = from; k <= to; ++k) p *= q_minus_one(step * k);
  return p;
}

}  // namespace

TEST_CASE("induction examples") {
  CHECK(induce(1, sym({0, 1}, {1})) == RepMultiset{lab(0, {1}, {1}), lab(0, E, {2}), lab(0, E, {1, 1})});
  CHECK(induce(1, sym({0, 1, 2}, {})) == RepMultiset{lab(1, {1}, E), lab(1, E, {1})});
  for (const auto& s : enumerate_symbols(3)) CHECK(induce(0, s) == RepMultiset{s});
  for (const auto& t : induce(1, sym({0, 1, 2}, {}))) CHECK(t.first.rank() == 3);
}

TEST_CASE("restriction examples") {
  CHECK(restrict_sp(1, sym({0, 2}, {1})) == RepMultiset{lab(0, E, {1}), lab(0, {1}, E)});
  CHECK(restrict_sp(1, sym({0, 1, 2}, {})).empty());
  for (const auto& s : enumerate_symbols(3)) CHECK(restrict_sp(0, s) == RepMultiset{s});
  CHECK_THROWS_AS(restrict_sp(3, sym({2}, {})), RankUnderflow);
  CHECK(restrict_sp(2, sym({2}, {})) == RepMultiset{cuspidal_symbol(0)});
}

TEST_CASE("multiset bookkeeping") {
  RepMultiset m;
  m.add(sym({1}, {}));
  m.add(sym({1}, {}), 2);
  m.add(sym({0, 1}, {1}));
  CHECK(m.size() == 4);
  CHECK(m.distinct() == 2);
  CHECK(m.multiplicity(sym({1}, {})) == 3);
  CHECK_FALSE(m.multiplicity_free());
  CHECK_FALSE(m.contains(sym({2}, {})));
}

TEST_CASE("reciprocity, defect and multiplicity") {
  for (int theta = 0; theta <= 5; ++theta)
    for (int a = 0; a <= std::min(theta, 3); ++a)
      for (const auto& t : symbols_of_rank(theta)) {
        const auto down = restrict_sp(a, t);
        CHECK(down.multiplicity_free());
        for (const auto& [s, m] : down) CHECK(s.defect() == t.defect());
        for (const auto& s : symbols_of_rank(theta - a)) CHECK(induce(a, s).contains(t) == down.contains(s));
      }
  for (int theta = 0; theta <= 5; ++theta)
    for (int a = 0; a <= 3; ++a)
      for (const auto& s : symbols_of_rank(theta)) {
        const auto up = induce(a, s);
        CHECK(up.multiplicity_free());
        for (const auto& [t, m] : up) {
          CHECK(t.defect() == s.defect());
          CHECK(t.rank() == theta + a);
        }
      }
}

TEST_CASE("induced degree is the parabolic index times the degree") {
  for (int theta = 0; theta <= 5; ++theta)
    for (int a = 1; a <= 3; ++a) {
      const QPoly index = exact_div(product_minus(1, theta + a, 2), product_minus(1, a, 1) * product_minus(1, theta, 2));
      for (const auto& s : symbols_of_rank(theta)) {
        QPoly total;
        for (const auto& [t, m] : induce(a, s)) total += QPoly::constant(m) * degree(t);
        CHECK(total == index * degree(s));
      }
    }
}

TEST_CASE("iterated induction") {
  for (int theta = 0; theta <= 3; ++theta)
    for (int a = 1; a <= 2; ++a)
      for (int b = 1; a + b + theta <= 5; ++b)
        for (const auto& s : symbols_of_rank(theta)) {
          const auto one_step = induce(a + b, s);
          const auto ab = induce(a, induce(b, s));
          const auto ba = induce(b, induce(a, s));
          CHECK(ab == ba);
          for (const auto& t : one_step.support()) CHECK(ab.contains(t));
          for (const auto& t : ab.support()) CHECK(t.rank() == theta + a + b);
        }
}
