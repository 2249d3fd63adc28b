#include "qorder/group.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace qorder {

namespace {

std::string tuple_string(std::initializer_list<Element> xs) {
  std::string s = "(";
  bool first = true;
  for (Element x : xs) {
    if (!first) s += ",";
    s += std::to_string(x);
    first = false;
  }
  return s + ")";
}

}  // namespace

NotAGroup::NotAGroup(std::string reason, std::vector<Element> witness)
    : Error("not a group: " + reason), reason_(std::move(reason)), witness_(std::move(witness)) {}

NotAnAutomorphism::NotAnAutomorphism(std::string reason, std::vector<Element> witness)
    : Error("not an automorphism: " + reason), witness_(std::move(witness)) {}

FiniteGroup FiniteGroup::from_table(Table table, Element identity) {
  const auto n = static_cast<Element>(table.size());
  if (n == 0) throw NotAGroup("empty carrier", {});
  if (identity >= n) throw NotAGroup("identity index out of range", {identity});

  for (Element i = 0; i < n; ++i) {
    if (!is_bijection(table.row(i))) {
      throw NotAGroup("row " + std::to_string(i) + " is not a permutation", {i});
    }
  }
  for (Element j = 0; j < n; ++j) {
    if (!is_bijection(table.column(j))) {
      throw NotAGroup("column " + std::to_string(j) + " is not a permutation", {j});
    }
  }
  for (Element x = 0; x < n; ++x) {
    if (table(identity, x) != x || table(x, identity) != x) {
      throw NotAGroup("identity fails at " + std::to_string(x), {identity, x});
    }
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      const Element ab = table(a, b);
      for (Element c = 0; c < n; ++c) {
        if (table(ab, c) != table(a, table(b, c))) {
          throw NotAGroup("associativity fails at " + tuple_string({a, b, c}), {a, b, c});
        }
      }
    }
  }

  FiniteGroup g;
  g.table_ = std::move(table);
  g.identity_ = identity;
  g.inverse_.resize(n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (g.table_(a, b) == identity) g.inverse_[a] = b;
    }
  }
  return g;
}

bool FiniteGroup::is_abelian() const {
  const auto n = static_cast<Element>(size());
  for (Element a = 0; a < n; ++a) {
    for (Element b = a + 1; b < n; ++b) {
      if (table_(a, b) != table_(b, a)) return false;
    }
  }
  return true;
}

std::size_t FiniteGroup::element_order(Element a) const {
  std::size_t k = 1;
  for (Element x = a; x != identity_; x = table_(x, a)) ++k;
  return k;
}

Permutation FiniteGroup::left_multiplication(Element g) const {
  return Permutation(std::vector<Element>(table_.row(g).begin(), table_.row(g).end()));
}

Permutation FiniteGroup::right_multiplication(Element g) const {
  return Permutation(table_.column(g));
}

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw ShapeError("cyclic group order must be positive");
  Table t(n);
  for (Element i = 0; i < n; ++i) {
    for (Element j = 0; j < n; ++j) t(i, j) = static_cast<Element>((i + j) % n);
  }
  return FiniteGroup::from_table(std::move(t), 0);
}

FiniteGroup symmetric_group(std::size_t degree) {
  if (degree == 0 || degree > 6) throw ResourceLimit("symmetric group degree must be in 1..6");
  std::vector<Permutation> perms;
  std::vector<Element> images(degree);
  std::iota(images.begin(), images.end(), Element{0});
  do {
    perms.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));

  const std::size_t n = perms.size();
  Table t(n);
  for (Element i = 0; i < n; ++i) {
    for (Element j = 0; j < n; ++j) {
      const auto product = perms[i] * perms[j];
      const auto it = std::lower_bound(perms.begin(), perms.end(), product);
      t(i, j) = static_cast<Element>(it - perms.begin());
    }
  }
  return FiniteGroup::from_table(std::move(t), 0);
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const MixedRadix enc({g.size(), h.size()});
  Table t(enc.total());
  for (Element x = 0; x < enc.total(); ++x) {
    const auto dx = enc.decode(x);
    for (Element y = 0; y < enc.total(); ++y) {
      const auto dy = enc.decode(y);
      const Element digits[2] = {g.multiply(dx[0], dy[0]), h.multiply(dx[1], dy[1])};
      t(x, y) = enc.encode(digits);
    }
  }
  const Element ids[2] = {g.identity(), h.identity()};
  return FiniteGroup::from_table(std::move(t), enc.encode(ids));
}

GroupAutomorphism::GroupAutomorphism(FiniteGroup group, std::vector<Element> map)
    : group_(std::move(group)), map_(std::move(map)) {
  const auto n = static_cast<Element>(group_.size());
  if (map_.size() != n) {
    throw NotAnAutomorphism("map has " + std::to_string(map_.size()) + " entries, group has " +
                                std::to_string(n),
                            {});
  }
  if (!is_bijection(map_)) throw NotAnAutomorphism("map is not a bijection", {});
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (map_[group_.multiply(a, b)] != group_.multiply(map_[a], map_[b])) {
        throw NotAnAutomorphism("map(" + std::to_string(a) + "·" + std::to_string(b) +
                                    ") differs from map(a)·map(b)",
                                {a, b});
      }
    }
  }
}

GroupAutomorphism GroupAutomorphism::identity(const FiniteGroup& group) {
  std::vector<Element> id(group.size());
  std::iota(id.begin(), id.end(), Element{0});
  return GroupAutomorphism(group, std::move(id));
}

GroupAutomorphism GroupAutomorphism::power_map(const FiniteGroup& group, long long k) {
  const auto n = static_cast<Element>(group.size());
  std::vector<Element> map(n);
  for (Element x = 0; x < n; ++x) {
    const Element base = k < 0 ? group.inverse(x) : x;
    const unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k)
                                       : static_cast<unsigned long long>(k);
    Element acc = group.identity();
    for (unsigned long long i = 0; i < e % group.element_order(x); ++i) {
      acc = group.multiply(acc, base);
    }
    map[x] = acc;
  }
  return GroupAutomorphism(group, std::move(map));
}

}  // namespace qorder
