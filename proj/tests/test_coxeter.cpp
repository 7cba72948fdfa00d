#include <doctest.h>

#include <set>

#include "spcoh/coxeter.hpp"

using namespace spcoh;

namespace {

Symbol sym(std::vector<int> top, std::vector<int> bottom) { return Symbol::normalize(std::move(top), std::move(bottom)); }

Partition column(int n) { return Partition(std::vector<int>(n, 1)); }

// Lefschetz number of F^n on the Coxeter variety of rank theta.
QPoly coxeter_points(int theta, int n) {
  QPoly total;
  const auto h = coxeter_cohomology(theta);
  for (const auto& [deg, terms] : h.terms())
    for (const auto& t : terms) {
      const QPoly tr = t.eigenvalue.power(n) * degree(t.symbol);
      total += (deg % 2 == 0) ? tr : -tr;
    }
  return total;
}

}  // namespace

TEST_CASE("eigenvalues") {
  CHECK(FrobEigenvalue(-1, 2).power(1) == QPoly{0, 0, -1});
  CHECK(FrobEigenvalue(-1, 2).power(2) == QPoly::monomial(1, 4));
  CHECK(FrobEigenvalue(1, 1).twisted(1) == FrobEigenvalue(1, 2));
  CHECK(to_string(FrobEigenvalue(-1, 2)) == "-q^2");
  CHECK(to_string(FrobEigenvalue(1, 0)) == "1");
  CHECK_THROWS(FrobEigenvalue(2, 0));
}

TEST_CASE("rank one") {
  const auto h = coxeter_cohomology(1);
  CHECK(h.degrees() == std::vector<int>{1, 2});
  REQUIRE(h.at(1).size() == 1);
  CHECK(h.at(1)[0].symbol == sym({0, 1}, {1}));
  CHECK(h.at(1)[0].eigenvalue == FrobEigenvalue(1, 0));
  REQUIRE(h.at(2).size() == 1);
  CHECK(h.at(2)[0].symbol == sym({1}, {}));
  CHECK(h.at(2)[0].eigenvalue == FrobEigenvalue(1, 1));
}

TEST_CASE("rank two holds the cuspidal") {
  const auto h = coxeter_cohomology(2);
  bool found = false;
  for (const auto& t : h.at(2))
    if (t.symbol == sym({0, 1, 2}, {})) found = t.eigenvalue == FrobEigenvalue(-1, 1);
  CHECK(found);
}

TEST_CASE("table shape") {
  for (int theta = 1; theta <= 8; ++theta) {
    const auto h = coxeter_cohomology(theta);
    CHECK(h.degrees().front() == theta);
    CHECK(h.degrees().back() == 2 * theta);
    REQUIRE(h.at(2 * theta).size() == 1);
    CHECK(h.at(2 * theta)[0].symbol == trivial_symbol(theta));
    CHECK(h.at(2 * theta)[0].eigenvalue == FrobEigenvalue(1, theta));
    CHECK(h.at(theta - 1).empty());
    std::set<Symbol> seen;
    int count = 0;
    for (const auto& [deg, terms] : h.terms())
      for (const auto& t : terms) {
        seen.insert(t.symbol);
        ++count;
        CHECK(t.symbol.rank() == theta);
      }
    CHECK(static_cast<int>(seen.size()) == count);
    CHECK(count == 2 * theta);
  }
  CHECK(coxeter_cohomology(0).at(0).size() == 1);
}

TEST_CASE("labels of the Coxeter symbols") {
  for (int theta = 1; theta <= 8; ++theta) {
    for (int i = 0; i <= theta; ++i)
      CHECK(symbol_to_label(coxeter_symbol_S(theta, i)) == UnipotentLabel{0, {Partition{i}, column(theta - i)}});
    for (int j = 0; j <= theta - 2; ++j)
      CHECK(symbol_to_label(coxeter_symbol_T(theta, j)) == UnipotentLabel{1, {Partition{j}, column(theta - 2 - j)}});
  }
  CHECK(coxeter_symbol_S(3, 0) == steinberg_symbol(3));
}

TEST_CASE("closed-form degrees") {
  CHECK(lusztig_degree_S(1, 0) == QPoly{0, 1});
  for (int theta = 1; theta <= 6; ++theta) CHECK(lusztig_degree_S(theta, theta) == QPoly{1});
  const QPoly t30 = exact_div(QPoly::monomial(1, 4) * q_minus_one(2) * q_minus_one(3), QPoly{2, 2});
  CHECK(lusztig_degree_T(3, 0) == t30);
  for (int theta = 1; theta <= 6; ++theta) {
    for (int i = 0; i <= theta; ++i) CHECK(degree(coxeter_symbol_S(theta, i)) == lusztig_degree_S(theta, i));
    for (int j = 0; j <= theta - 2; ++j) CHECK(degree(coxeter_symbol_T(theta, j)) == lusztig_degree_T(theta, j));
  }
}

TEST_CASE("defect three degrees in rank four") {
  const Partition e{};
  const QPoly common = exact_div(q_minus_one(3) * q_minus_one(4), QPoly{2, 2});
  CHECK(degree(label_to_symbol(UnipotentLabel{1, {e, {1, 1}}})) == QPoly::monomial(1, 9) * common);
  CHECK(degree(label_to_symbol(UnipotentLabel{1, {{2}, e}})) == QPoly{0, 1} * common);
  CHECK(coxeter_symbol_T(4, 0) == label_to_symbol(UnipotentLabel{1, {e, {1, 1}}}));
  CHECK(coxeter_symbol_T(4, 2) == label_to_symbol(UnipotentLabel{1, {{2}, e}}));
  CHECK(coxeter_symbol_T(3, 1) == label_to_symbol(UnipotentLabel{1, {{1}, e}}));
}

TEST_CASE("restriction identity") {
  for (int theta = 2; theta <= 6; ++theta) CHECK(verify_restriction_identity(theta));
}

TEST_CASE("no rational points below the Coxeter number") {
  CHECK(coxeter_points(1, 1).is_zero());
  CHECK(coxeter_points(1, 2) == QPoly{0, -1, 1});
  for (int theta = 1; theta <= 5; ++theta)
    for (int n = 1; n < 2 * theta; ++n) CHECK(coxeter_points(theta, n).is_zero());
  for (int theta = 2; theta <= 4; ++theta) CHECK_FALSE(coxeter_points(theta, 2 * theta).is_zero());
}
