#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qorder/qorder.hpp"

using namespace qorder;

namespace {

const FiniteQuandle& three_element() {
  static const FiniteQuandle q =
      quandle_from_table(Table::from_rows({{0, 0, 1}, {1, 1, 0}, {2, 2, 2}}));
  return q;
}

std::vector<oracle::Perm> maps_for(const FiniteQuandle& q, Property p) {
  std::vector<oracle::Perm> maps;
  if (p != Property::LeftCircular) {
    auto r = oracle::right_translations(q);
    maps.insert(maps.end(), r.begin(), r.end());
  }
  if (p != Property::RightCircular) {
    auto l = oracle::left_translations(q);
    maps.insert(maps.end(), l.begin(), l.end());
  }
  return maps;
}

bool oracle_answer(const FiniteQuandle& q, Property p) {
  switch (p) {
    case Property::RightOrder: return !oracle::ordering_rankings(q, true).empty();
    case Property::LeftOrder: return !oracle::ordering_rankings(q, false).empty();
    default: return oracle::invariant_count(q.size(), maps_for(q, p)) > 0;
  }
}

std::size_t oracle_space_size(const FiniteQuandle& q, Property p) {
  switch (p) {
    case Property::RightOrder: return oracle::ordering_rankings(q, true).size();
    case Property::LeftOrder: return oracle::ordering_rankings(q, false).size();
    default: {
      if (q.size() <= 2) return 1;
      return oracle::invariant_arrangements(q.size(), maps_for(q, p)).size();
    }
  }
}

constexpr Property kAll[] = {Property::RightCircular, Property::LeftCircular, Property::BiCircular,
                             Property::RightOrder, Property::LeftOrder};

DecideOptions fast() {
  DecideOptions o;
  o.tier = Tier::Fast;
  return o;
}

std::vector<Permutation> perms(std::initializer_list<std::vector<Element>> images) {
  std::vector<Permutation> out;
  for (const auto& i : images) out.emplace_back(i);
  return out;
}

}  // namespace

TEST_CASE("property names round trip") {
  for (Property p : kAll) CHECK(property_from_string(to_string(p)) == p);
  CHECK(std::string(to_string(Property::BiCircular)) == "bi-circular");
  CHECK_FALSE(property_from_string("sideways"));
}

TEST_CASE("enumeration sizes") {
  CHECK(enumerate_circular_orderings(1).size() == 1);
  CHECK(enumerate_circular_orderings(2).size() == 1);
  CHECK(enumerate_circular_orderings(3).size() == 2);
  CHECK(enumerate_circular_orderings(4).size() == 6);
  CHECK(enumerate_circular_orderings(6).size() == 120);
  CHECK(enumerate_linear_orderings(3).size() == 6);
  CHECK_THROWS_AS(enumerate_circular_orderings(11), ResourceLimit);
  CHECK_THROWS_AS(enumerate_linear_orderings(9), ResourceLimit);
  Caps small;
  small.max_circular_n = 4;
  CHECK_THROWS_AS(enumerate_circular_orderings(5, small), ResourceLimit);
  CHECK_THROWS_AS(enumerate_circular_orderings(0), ShapeError);
}

TEST_CASE("order spaces of small examples") {
  const auto t3 = trivial_quandle(3);
  CHECK(enumerate_rco(t3).size() == 2);
  CHECK(enumerate_lco(t3).empty());
  CHECK(enumerate_bicircular(t3).empty());
  CHECK(enumerate_right_orderings(t3).size() == 6);
  CHECK(enumerate_left_orderings(t3).empty());
  CHECK(enumerate_bi_orderings(t3).empty());

  const auto t2 = trivial_quandle(2);
  CHECK(enumerate_bicircular(t2).size() == 1);
  CHECK(enumerate_left_orderings(t2).empty());
  CHECK(enumerate_right_orderings(t2).size() == 2);

  CHECK(enumerate_rco(dihedral_quandle(3)).empty());
  CHECK(enumerate_rco(three_element()).empty());
  CHECK(enumerate_lco(three_element()).empty());
  CHECK(enumerate_space(t3, Property::RightCircular).kind == SpaceKind::RCO);
}

TEST_CASE("cyclic witnesses for permutation sets") {
  auto w = cyclic_witness_for_permutations(perms({{0, 1, 2}}), 3);
  REQUIRE(w);
  CHECK(*w == CyclicOrder::from_arrangement({0, 1, 2}));

  w = cyclic_witness_for_permutations(perms({{1, 2, 0}}), 3);
  REQUIRE(w);
  CHECK(*w == CyclicOrder::from_arrangement({0, 1, 2}));

  CHECK_FALSE(cyclic_witness_for_permutations(perms({{1, 0, 2}}), 3));

  // (0 2)(1 3) generates a semiregular group with orbits {0,2}, {1,3}
  w = cyclic_witness_for_permutations(perms({{2, 3, 0, 1}}), 4);
  REQUIRE(w);
  CHECK(*w == CyclicOrder::from_arrangement({0, 1, 2, 3}));

  const auto result = analyze_cyclic_witness(perms({{1, 0, 2}, {0, 2, 1}}), 3);
  CHECK_FALSE(result.witness);
  REQUIRE(result.obstruction);
  CHECK(result.obstruction->kind == CertificateKind::NonCyclicAction);
  CHECK(result.group_order == 6);
  CHECK(result.obstruction->max_element_order == 3);

  CHECK(cyclic_witness_for_permutations(perms({{1, 0}}), 2) == CyclicOrder::identity(2));
}

TEST_CASE("witnesses from random cyclic semiregular groups are preserved") {
  std::mt19937 rng(20261018);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t k = 1 + rng() % 3, m = 1 + rng() % 4;  // k orbits of size m
    const std::size_t n = k * m;
    if (n < 3) continue;
    std::vector<Element> points(n);
    std::iota(points.begin(), points.end(), Element{0});
    std::shuffle(points.begin(), points.end(), rng);
    std::vector<Element> g(n);
    for (std::size_t o = 0; o < k; ++o)
      for (std::size_t i = 0; i < m; ++i) g[points[o * m + i]] = points[o * m + (i + 1) % m];
    const auto w = cyclic_witness_for_permutations(perms({g}), n);
    REQUIRE(w);
    CHECK(preserves(*w, g));
    const auto arrangement = std::vector<Element>(w->arrangement().begin(), w->arrangement().end());
    CHECK(oracle::map_preserves(arrangement, g));
  }
}

TEST_CASE("decisions for named examples") {
  const auto& q = three_element();
  const auto r = decide_right_circular(q);
  CHECK_FALSE(r.answer);
  REQUIRE(r.certificate);
  CHECK(r.certificate->kind == CertificateKind::NonSemiregularAction);
  CHECK(r.certificate->fixing_element == Permutation({1, 0, 2}));
  CHECK(r.certificate->fixed_point == 2);
  CHECK(r.tier == Tier::Checked);
  CHECK(r.oracle_checked);

  const auto l = decide_left_circular(q);
  CHECK_FALSE(l.answer);
  REQUIRE(l.certificate);
  CHECK(l.certificate->kind == CertificateKind::NonInjectiveLeftTranslation);
  CHECK(l.certificate->base == 0);
  CHECK(l.certificate->describe() == "L_0 sends 0 and 1 to the same element");

  const auto d = decide_right_circular(dihedral_quandle(3));
  CHECK_FALSE(d.answer);
  CHECK(d.certificate->kind == CertificateKind::NonCyclicAction);
  CHECK(d.certificate->group_order == 6);

  const auto t2 = decide_bicircular(trivial_quandle(2));
  CHECK(t2.answer);
  CHECK(std::get<CyclicOrder>(t2.witness) == CyclicOrder::identity(2));
  CHECK_FALSE(decide_left_orderable(trivial_quandle(2)).answer);
  CHECK(decide_left_orderable(trivial_quandle(1)).answer);

  const auto t4 = decide_right_orderable(trivial_quandle(4));
  CHECK(t4.answer);
  CHECK(std::get<LinearOrder>(t4.witness) == LinearOrder::from_ranking({0, 1, 2, 3}));

  const auto ro = decide_right_orderable(dihedral_quandle(5));
  CHECK_FALSE(ro.answer);
  CHECK(ro.certificate->kind == CertificateKind::NonIdentityTranslation);

  // R_s on the affine quandle Z5 with alpha = 2 is x -> 2x - s: all of them
  // lie in the affine group, which is not cyclic.
  CHECK_FALSE(decide_right_circular(affine_quandle(5, 2)).answer);
}

TEST_CASE("conjugation quandles of groups with three or more elements are not left-circular") {
  const std::vector<FiniteGroup> groups = {cyclic_group(3), cyclic_group(4),
                                           direct_product(cyclic_group(2), cyclic_group(2)),
                                           symmetric_group(3), cyclic_group(7)};
  for (const auto& g : groups) {
    const auto v = decide_left_circular(conj_quandle(g));
    CHECK_FALSE(v.answer);
    REQUIRE(v.certificate);
    CHECK(v.certificate->kind == CertificateKind::NonInjectiveLeftTranslation);
    CHECK(recheck_verdict(v, conj_quandle(g)));
  }
}

TEST_CASE("conjugation quandle of a cyclic group is bi-circular; of S3 it is not") {
  for (std::size_t n = 1; n <= 6; ++n) {
    // abelian: trivial quandle, so right-circular; left side needs n <= 2
    const auto q = conj_quandle(cyclic_group(n));
    CHECK(decide_right_circular(q).answer);
    CHECK(decide_bicircular(q).answer == (n <= 2));
  }
  CHECK_FALSE(decide_right_circular(conj_quandle(symmetric_group(3))).answer);
}

TEST_CASE("fast decisions match brute force on every quandle of order <= 5") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& q : generate_all_quandles(n, true)) {
      for (Property p : kAll) {
        const auto v = decide(q, p, fast());
        CHECK(v.answer == oracle_answer(q, p));
        CHECK(recheck_verdict(v, q));
        CHECK(enumerate_space(q, p).size() == oracle_space_size(q, p));
      }
    }
  }
}

TEST_CASE("checked tier agrees with both tiers") {
  for (const auto& q : generate_all_quandles(4, true)) {
    for (Property p : kAll) {
      const auto checked = decide(q, p);
      DecideOptions o;
      o.tier = Tier::Oracle;
      const auto brute = decide(q, p, o);
      CHECK(checked.oracle_checked);
      CHECK(checked.answer == brute.answer);
      CHECK(recheck_verdict(brute, q));
      if (!brute.answer) CHECK(brute.certificate->kind == CertificateKind::ExhaustiveSearch);
    }
  }
}

TEST_CASE("checked tier skips the oracle above its size limit") {
  DecideOptions o;
  o.oracle_max_n = 3;
  const auto v = decide(trivial_quandle(4), Property::RightCircular, o);
  CHECK(v.tier == Tier::Checked);
  CHECK_FALSE(v.oracle_checked);
}

TEST_CASE("fast tier scales past the enumeration caps") {
  const auto t = trivial_quandle(40);
  const auto v = decide(t, Property::RightCircular);
  CHECK(v.answer);
  CHECK_FALSE(v.oracle_checked);
  CHECK(recheck_verdict(v, t));
  CHECK_FALSE(decide(dihedral_quandle(31), Property::RightCircular).answer);

  DecideOptions o;
  o.tier = Tier::Oracle;
  CHECK_THROWS_AS(decide(trivial_quandle(11), Property::RightCircular, o), ResourceLimit);
  CHECK_THROWS_AS(decide(trivial_quandle(9), Property::RightOrder, o), ResourceLimit);

  o.tier = Tier::Fast;
  o.search.caps.max_closure_order = 2;
  CHECK_THROWS_AS(decide(dihedral_quandle(3), Property::RightCircular, o), ResourceLimit);
}

TEST_CASE("recheck_verdict rejects tampered verdicts") {
  auto v = decide_right_circular(trivial_quandle(3));
  REQUIRE(v.answer);
  v.witness = CyclicOrder::identity(4);
  CHECK_FALSE(recheck_verdict(v, trivial_quandle(3)));

  auto no = decide_right_circular(three_element());
  no.certificate->fixed_point = 0;
  CHECK_FALSE(recheck_verdict(no, three_element()));

  auto left = decide_left_circular(three_element());
  left.certificate->points = {0, 2};
  CHECK_FALSE(recheck_verdict(left, three_element()));

  Verdict fake;
  fake.property = Property::RightCircular;
  fake.answer = false;
  fake.certificate = Certificate{};
  CHECK_FALSE(recheck_verdict(fake, trivial_quandle(3)));
}

TEST_CASE("orderability implies circular orderability on the same side") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& q : generate_all_quandles(n, false)) {
      const auto ro = enumerate_right_orderings(q);
      const auto rco = enumerate_rco(q);
      if (rco.empty()) CHECK(ro.empty());
      for (const auto& o : ro.linear) {
        CHECK(std::binary_search(rco.circular.begin(), rco.circular.end(), circular_from_linear(o)));
      }
      const auto lo = enumerate_left_orderings(q);
      if (enumerate_lco(q).empty()) CHECK(lo.empty());
    }
  }
}

TEST_CASE("order spaces are sorted and thread-count independent") {
  for (const auto& q : generate_all_quandles(5, true)) {
    SearchOptions one, many;
    one.threads = 1;
    many.threads = 4;
    const auto a = enumerate_rco(q, one), b = enumerate_rco(q, many);
    CHECK(a.circular == b.circular);
    CHECK(std::is_sorted(a.circular.begin(), a.circular.end()));
    CHECK(enumerate_right_orderings(q, one).linear == enumerate_right_orderings(q, many).linear);
  }
  SearchOptions many;
  many.threads = 3;
  CHECK(enumerate_rco(trivial_quandle(8), many).circular ==
        enumerate_circular_orderings(8));
}

TEST_CASE("embedding of linear orderings into circular orderings") {
  const auto r3 = embedding_image(trivial_quandle(3), Side::Right);
  CHECK(r3.domain.size() == 6);
  CHECK(r3.image.size() == 2);
  CHECK_FALSE(r3.injective());
  CHECK(r3.image_in_space);
  REQUIRE(r3.fibers.size() == 2);
  for (const auto& f : r3.fibers) {
    CHECK(f.preimage.size() == 3);
    for (const auto& o : f.preimage) CHECK(circular_from_linear(o) == f.target);
  }

  const auto r2 = embedding_image(trivial_quandle(2), Side::Right);
  CHECK(r2.domain.size() == 2);
  CHECK(r2.image.size() == 1);

  const auto r1 = embedding_image(trivial_quandle(1), Side::Left);
  CHECK(r1.domain.size() == 1);
  CHECK(r1.injective());

  const auto l3 = embedding_image(trivial_quandle(3), Side::Left);
  CHECK(l3.domain.empty());
  CHECK(l3.image.empty());
  CHECK(l3.image_in_space);
}

TEST_CASE("subbasic sets") {
  const auto t3 = trivial_quandle(3);
  const auto s = subbasic_right(t3, {0, 1, 2});
  REQUIRE(s.size() == 1);
  CHECK(s[0] == CyclicOrder::from_arrangement({0, 1, 2}));
  CHECK(subbasic_right(t3, {0, 2, 1}) == std::vector{CyclicOrder::from_arrangement({0, 2, 1})});
  CHECK(subbasic_left(t3, {0, 1, 2}).empty());
  CHECK_THROWS_AS(subbasic_right(t3, {0, 0, 1}), DegenerateTriple);
  CHECK_THROWS_AS(subbasic_right(t3, {0, 1, 5}), ShapeError);

  const auto lin = subbasic_linear(t3, Side::Right, 0, 2);
  CHECK(lin.size() == 3);
  for (const auto& o : lin) CHECK(o.less(0, 2));
  CHECK_THROWS_AS(subbasic_linear(t3, Side::Right, 1, 1), DiagonalPair);

  // the two opposite subbasic sets partition RCO for every triple
  const auto t4 = trivial_quandle(4);
  const auto total = enumerate_rco(t4).size();
  for (const auto& [x, y, z] : oracle::nondegenerate_triples(4)) {
    CHECK(subbasic_right(t4, {x, y, z}).size() + subbasic_right(t4, {x, z, y}).size() == total);
  }
}
