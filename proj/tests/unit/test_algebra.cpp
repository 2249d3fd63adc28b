#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qorder/group.hpp"
#include "qorder/permutation.hpp"

using namespace qorder;

namespace {

std::vector<FiniteGroup> sample_groups() {
  return {cyclic_group(1), cyclic_group(2), cyclic_group(3), cyclic_group(4), cyclic_group(6),
          direct_product(cyclic_group(2), cyclic_group(2)), symmetric_group(3)};
}

}  // namespace

TEST_CASE("group_from_table accepts Z3 and rejects a non-permutation row") {
  const auto z3 = group_from_table(Table::from_rows({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}), 0);
  CHECK(z3.size() == 3);
  CHECK(z3.is_abelian());

  try {
    (void)group_from_table(Table::from_rows({{0, 1}, {1, 1}}), 0);
    FAIL("expected NotAGroup");
  } catch (const NotAGroup& e) {
    CHECK(e.reason() == "row 1 is not a permutation");
    CHECK(e.witness() == std::vector<Element>{1});
  }
}

TEST_CASE("group_from_table reports identity and associativity failures") {
  // Latin square that is not a group: rows/columns fine, 0 is not an identity
  CHECK_THROWS_AS(group_from_table(Table::from_rows({{1, 0}, {0, 1}}), 0), NotAGroup);
  // identity holds but associativity fails (a loop of order 5)
  const auto loop = Table::from_rows({{0, 1, 2, 3, 4},
                                      {1, 0, 3, 4, 2},
                                      {2, 4, 0, 1, 3},
                                      {3, 2, 4, 0, 1},
                                      {4, 3, 1, 2, 0}});
  try {
    (void)group_from_table(loop, 0);
    FAIL("expected NotAGroup");
  } catch (const NotAGroup& e) {
    CHECK(e.reason().rfind("associativity", 0) == 0);
    const auto& w = e.witness();
    REQUIRE(w.size() == 3);
    CHECK(loop(loop(w[0], w[1]), w[2]) != loop(w[0], loop(w[1], w[2])));
  }
  CHECK_THROWS_AS(Table::from_rows({{0, 1}, {1}}), ShapeError);
  CHECK_THROWS_AS(Table::from_rows({{0, 2}, {1, 0}}), ShapeError);
}

TEST_CASE("S3 from a hand-built composition table is a non-abelian group") {
  const auto s3 = group_from_table(oracle::sym3_table(), 0);
  CHECK(s3.size() == 6);
  CHECK_FALSE(s3.is_abelian());
  CHECK(s3 == symmetric_group(3));
}

TEST_CASE("cyclic_group") {
  CHECK(cyclic_group(1).size() == 1);
  CHECK(cyclic_group(3).table() == Table::from_rows({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}));
  CHECK(cyclic_group(4).is_abelian());
}

TEST_CASE("direct_product uses the (a,b) -> a*|h|+b encoding") {
  const auto v4 = direct_product(cyclic_group(2), cyclic_group(2));
  CHECK(v4.size() == 4);
  for (Element x = 0; x < 4; ++x) {
    CHECK(v4.multiply(x, x) == v4.identity());
  }

  const auto z1z3 = direct_product(cyclic_group(1), cyclic_group(3));
  CHECK(z1z3 == cyclic_group(3));

  const auto z2z3 = direct_product(cyclic_group(2), cyclic_group(3));
  CHECK(z2z3.size() == 6);
  // (1,1) -> 1*3+1 = 4
  CHECK(z2z3.element_order(4) == 6);
  // (1,2)·(1,2) = (0,1) -> 1
  CHECK(z2z3.multiply(5, 5) == 1);
}

TEST_CASE("translations in every accepted group are bijections") {
  for (const auto& g : sample_groups()) {
    for (Element x = 0; x < g.size(); ++x) {
      CHECK(is_bijection(g.left_multiplication(x).images()));
      CHECK(is_bijection(g.right_multiplication(x).images()));
    }
  }
}

TEST_CASE("group automorphisms") {
  const auto z5 = cyclic_group(5);
  const auto doubling = GroupAutomorphism::power_map(z5, 2);
  CHECK(doubling.map() == std::vector<Element>{0, 2, 4, 1, 3});
  CHECK_THROWS_AS(GroupAutomorphism(z5, {0, 1, 1, 3, 4}), NotAnAutomorphism);
  CHECK_THROWS_AS(GroupAutomorphism(z5, {1, 0, 2, 3, 4}), NotAnAutomorphism);
  // squaring is not a homomorphism of S3
  CHECK_THROWS_AS(GroupAutomorphism::power_map(symmetric_group(3), 2), NotAnAutomorphism);
  CHECK(GroupAutomorphism::power_map(cyclic_group(4), -1).map() == std::vector<Element>{0, 3, 2, 1});
}

TEST_CASE("Permutation basics") {
  CHECK_THROWS_AS(Permutation({0, 0, 1}), NotAPermutation);
  const Permutation p({1, 2, 0});
  const Permutation q({1, 0, 2});
  CHECK((p * q).images()[0] == p(q(0)));
  CHECK((p * p.inverse()).is_identity());
  CHECK(p.order() == 3);
  CHECK(Permutation({1, 0, 3, 2}).cycle_string() == "(0 1)(2 3)");
  CHECK(Permutation::identity(3).cycle_string() == "()");
}

TEST_CASE("closure examples") {
  const Permutation id3 = Permutation::identity(3);
  CHECK(closure(std::vector{id3}, 3).order() == 1);
  CHECK(closure(std::vector{Permutation({1, 2, 0})}, 3).order() == 3);
  // x -> -x mod 3 and x -> 2 - x mod 3
  const std::vector gens{Permutation({0, 2, 1}), Permutation({2, 1, 0})};
  const auto sym3 = closure(gens, 3);
  CHECK(sym3.order() == 6);
  CHECK(sym3.order() == oracle::saturate(3, {{0, 2, 1}, {2, 1, 0}}).size());
  CHECK_THROWS_AS(closure(std::vector{Permutation({1, 0})}, 3), NotAPermutation);
  CHECK_THROWS_AS(closure(gens, 3, 5), ResourceLimit);
}

TEST_CASE("is_cyclic and is_semiregular examples") {
  const auto trivial = closure(std::vector{Permutation::identity(4)}, 4);
  CHECK(is_cyclic(trivial));
  CHECK(is_semiregular(trivial));

  CHECK(is_cyclic(closure(std::vector{Permutation({1, 2, 3, 0})}, 4)));

  const auto sym3 = closure(std::vector{Permutation({0, 2, 1}), Permutation({2, 1, 0})}, 3);
  CHECK_FALSE(is_cyclic(sym3));
  CHECK(max_element_order(sym3) == 3);

  CHECK(is_semiregular(closure(std::vector{Permutation({1, 0, 3, 2})}, 4)));
  const auto swap01 = closure(std::vector{Permutation({1, 0, 2})}, 3);
  CHECK_FALSE(is_semiregular(swap01));
  const auto fixed = nonidentity_fixed_point(swap01);
  REQUIRE(fixed);
  CHECK(fixed->second == 2);
}

TEST_CASE("closure properties on random generator sets") {
  std::mt19937 rng(20261018);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t degree = 1 + rng() % 6;
    const std::size_t count = rng() % 3;
    std::vector<Permutation> gens;
    std::vector<oracle::Perm> raw;
    for (std::size_t k = 0; k < count; ++k) {
      oracle::Perm p(degree);
      std::iota(p.begin(), p.end(), Element{0});
      std::shuffle(p.begin(), p.end(), rng);
      raw.push_back(p);
      gens.emplace_back(p);
    }
    const auto g = closure(gens, degree);

    std::size_t fact = 1;
    for (std::size_t k = 2; k <= degree; ++k) fact *= k;
    CHECK(fact % g.order() == 0);
    for (const auto& x : gens) CHECK(g.contains(x));
    CHECK(closure(g.elements(), degree).elements() == g.elements());

    const auto sat = oracle::saturate(degree, raw);
    CHECK(sat.size() == g.order());

    // both semiregularity formulations agree
    CHECK(is_semiregular(g) == is_semiregular_by_fixed_points(g));

    // cyclicity against element orders computed by hand
    bool cyclic = false;
    for (const auto& p : sat) {
      oracle::Perm x = p;
      std::size_t ord = 1;
      while (!std::is_sorted(x.begin(), x.end())) {
        oracle::Perm y(degree);
        for (Element i = 0; i < degree; ++i) y[i] = p[x[i]];
        x = y;
        ++ord;
      }
      cyclic = cyclic || ord == sat.size();
    }
    CHECK(is_cyclic(g) == cyclic);
  }
}

TEST_CASE("MixedRadix round trip and ordering") {
  const MixedRadix enc({2, 3, 4});
  CHECK(enc.total() == 24);
  for (Element i = 0; i < 24; ++i) CHECK(enc.encode(enc.decode(i)) == i);
  const Element digits[3] = {1, 2, 3};
  CHECK(enc.encode(digits) == (1 * 3 + 2) * 4 + 3);
}
