#include <doctest.h>

#include "spcoh/strata.hpp"

using namespace spcoh;

namespace {

const Partition E{};

Symbol sym(std::vector<int> top, std::vector<int> bottom) { return Symbol::normalize(std::move(top), std::move(bottom)); }
Symbol lab(int delta, Partition a, Partition b) { return label_to_symbol(UnipotentLabel{delta, {std::move(a), std::move(b)}}); }

QPoly lagrangians(int theta) {
  QPoly p{1};
  for (int i = 1; i <= theta; ++i) p *= q_plus_one(i);
  return p;
}

RepMultiset symbol_union(const EvenCohomology& h) {
  RepMultiset m = h.plus;
  m.add(h.minus);
  return m;
}

}  // namespace

TEST_CASE("first page examples") {
  const auto page = e1_page(2);
  CHECK(page.at(1, 0).a == RepMultiset{sym({0, 1}, {2}), sym({0, 1, 2}, {1, 2}), sym({0, 2}, {1})});
  CHECK(page.at(1, 0).b.empty());
  CHECK(page.at(2, 0).a == RepMultiset{steinberg_symbol(2)});
  CHECK(page.at(2, 0).b == RepMultiset{sym({0, 1, 2}, {})});
  CHECK(page.at(0, 0).a == induce(2, cuspidal_symbol(0)));
  for (int theta = 1; theta <= 6; ++theta) {
    const auto p = e1_page(theta);
    for (int i = 0; i <= theta; ++i) CHECK(p.at(theta, i).a == RepMultiset{coxeter_symbol_S(theta, i)});
  }
}

TEST_CASE("cell bookkeeping") {
  for (int theta = 1; theta <= 5; ++theta) {
    const auto page = e1_page(theta);
    for (const auto& [key, cell] : page.cells()) {
      const auto [tp, i] = key;
      CHECK(0 <= i);
      CHECK(i <= tp);
      CHECK(tp <= theta);
      if (i > tp - 2) CHECK(cell.b.empty());
      CHECK(cell.a.multiplicity_free());
      for (const auto& [s, m] : cell.a) CHECK(s.rank() == theta);
      for (const auto& [s, m] : cell.b) CHECK(s.defect() == 3);
    }
  }
}

TEST_CASE("closed form agrees with induction") {
  CHECK(e1_closed_form(2, 1, 0) == e1_page(2).at(1, 0));
  for (int theta = 0; theta <= 5; ++theta) {
    const auto page = e1_page(theta);
    for (int tp = 0; tp <= theta; ++tp)
      for (int i = 0; i <= tp; ++i) CHECK(e1_closed_form(theta, tp, i) == page.at(tp, i));
  }
  for (int theta = 1; theta <= 5; ++theta)
    for (int i = 0; i <= theta; ++i) CHECK(e1_closed_form(theta, theta, i).a == RepMultiset{coxeter_symbol_S(theta, i)});
}

TEST_CASE("split examples") {
  const auto s = ab_split(2, 1, 0);
  CHECK(s.a0 == RepMultiset{lab(0, E, {2}), lab(0, {1}, {1})});
  CHECK(s.a1 == RepMultiset{lab(0, E, {1, 1})});
  CHECK(s.b0.empty());
  CHECK(s.b1.empty());
  for (int theta = 1; theta <= 5; ++theta)
    for (int i = 0; i <= theta; ++i) {
      const auto top = ab_split(theta, theta, i);
      CHECK(top.a1.empty());
      CHECK(top.b1.empty());
    }
}

TEST_CASE("ladders") {
  for (int theta = 1; theta <= 5; ++theta) {
    const auto page = e1_page(theta);
    for (int tp = 0; tp < theta; ++tp)
      for (int i = 0; i <= tp; ++i) {
        const auto lo = ab_split(page, tp, i), hi = ab_split(page, tp + 1, i);
        CHECK(lo.a1 == hi.a0);
        if (i <= tp - 2) CHECK(lo.b1 == hi.b0);
      }
  }
}

TEST_CASE("cohomology of S_1 and S_2") {
  const auto h1 = cohomology_of_S(1);
  CHECK(h1.h2i(0).plus == RepMultiset{trivial_symbol(1)});
  CHECK(h1.h2i(1).plus == RepMultiset{trivial_symbol(1)});
  CHECK(h1.h2i(1).minus.empty());
  const auto h2 = cohomology_of_S(2);
  CHECK(h2.h2i(1).plus == RepMultiset{lab(0, {2}, E), lab(0, {1, 1}, E)});
  CHECK(h2.h2i(1).minus == RepMultiset{cuspidal_symbol(1)});
}

TEST_CASE("cohomology of S_theta structure") {
  for (int theta = 0; theta <= 8; ++theta) {
    const auto h = cohomology_of_S(theta);
    CHECK(h.even.size() == static_cast<std::size_t>(theta + 1));
    CHECK(h.h2i(0).plus == RepMultiset{trivial_symbol(theta)});
    CHECK(h.h2i(theta).plus == RepMultiset{trivial_symbol(theta)});
    CHECK(h.h2i(0).minus.empty());
    CHECK(h.h2i(theta).minus.empty());
    for (int i = 0; i <= theta; ++i) {
      CHECK(symbol_union(h.h2i(i)) == symbol_union(h.h2i(theta - i)));
      CHECK(h.h2i(i).plus.multiplicity_free());
      for (const auto& [s, m] : h.h2i(i).minus) CHECK(s.defect() == 3);
    }
  }
  for (int theta = 0; theta <= 6; ++theta) {
    const auto h = cohomology_of_S(theta);
    const auto page = e1_page(theta);
    for (int i = 0; i <= theta; ++i) {
      CHECK(h.h2i(i).plus == ab_split(page, i, i).a0);
      const RepMultiset b = (i >= 1 && i + 1 <= theta) ? ab_split(page, i + 1, i - 1).b0 : RepMultiset{};
      CHECK(h.h2i(i).minus == b);
    }
  }
}

TEST_CASE("cohomology of S_theta in label form") {
  for (int theta = 0; theta <= 8; ++theta) {
    const auto h = cohomology_of_S(theta);
    for (int i = 0; i <= theta; ++i) {
      RepMultiset plus, minus;
      for (int s = 0; s <= std::min(i, theta - i); ++s) plus.add(lab(0, {theta - s, s}, E));
      for (int s = 0; s <= std::min(i - 1, theta - 1 - i); ++s) minus.add(lab(1, {theta - 2 - s, s}, E));
      CHECK(h.h2i(i).plus == plus);
      CHECK(h.h2i(i).minus == minus);
    }
    int cuspidal = 0;
    for (const auto& part : h.even)
      for (const auto& reps : {part.plus, part.minus})
        for (const auto& [s, m] : reps) cuspidal += is_cuspidal(s) && s.rank() > 0;
    CHECK(cuspidal == (theta == 2 ? 1 : 0));
  }
}

TEST_CASE("point counts") {
  for (int n = 1; n <= 4; ++n) CHECK(point_count_S(1, n) == QPoly::monomial(1, n) + QPoly{1});
  for (int theta = 0; theta <= 4; ++theta) CHECK(point_count_S(theta, 1) == lagrangians(theta));
  for (int n = 1; n <= 4; ++n) CHECK(point_count_stratum(1, 1, n) == QPoly::monomial(1, n) - QPoly{0, 1});
  for (int theta = 1; theta <= 4; ++theta)
    for (int n = 1; n <= 3; ++n) {
      const auto page = e1_page(theta);
      CHECK(point_count_stratum(page, 0, n) == lagrangians(theta));
      QPoly sum;
      for (int tp = 0; tp <= theta; ++tp) sum += point_count_stratum(page, tp, n);
      CHECK(sum == point_count_S(theta, n));
    }
}

TEST_CASE("total degree") {
  CHECK(total_degree(RepMultiset{}) == QPoly{});
  CHECK(total_degree(RepMultiset{trivial_symbol(2), steinberg_symbol(2)}) == QPoly{1, 0, 0, 0, 1});
  for (int theta = 1; theta <= 4; ++theta)
    CHECK(total_degree(e1_page(theta).at(0, 0).a) == lagrangians(theta));
}
