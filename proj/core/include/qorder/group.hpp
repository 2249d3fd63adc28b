#pragma once

#include <cstddef>
#include <vector>

#include "qorder/permutation.hpp"
#include "qorder/table.hpp"

namespace qorder {

/// A finite group given by its Cayley table; entry (i, j) is i·j.
class FiniteGroup {
 public:
  /// Validates the table. Throws NotAGroup naming the first failed axiom,
  /// checked in the order: rows bijective, columns bijective, identity,
  /// associativity.
  static FiniteGroup from_table(Table table, Element identity);

  std::size_t size() const noexcept { return table_.size(); }
  Element identity() const noexcept { return identity_; }
  const Table& table() const noexcept { return table_; }

  Element multiply(Element a, Element b) const noexcept { return table_(a, b); }
  Element inverse(Element a) const noexcept { return inverse_[a]; }

  bool is_abelian() const;
  std::size_t element_order(Element a) const;

  /// x ↦ g·x and x ↦ x·g as permutations of the carrier.
  Permutation left_multiplication(Element g) const;
  Permutation right_multiplication(Element g) const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.identity_ == b.identity_ && a.table_ == b.table_;
  }

 private:
  Table table_;
  Element identity_ = 0;
  std::vector<Element> inverse_;
};

inline FiniteGroup group_from_table(Table table, Element identity) {
  return FiniteGroup::from_table(std::move(table), identity);
}

/// Z_n under addition mod n.
FiniteGroup cyclic_group(std::size_t n);

/// Sym(degree); elements are the permutations in lexicographic order
/// (element 0 is the identity), product (p·q)(x) = p(q(x)).
FiniteGroup symmetric_group(std::size_t degree);

/// g × h with (a, b) encoded as a·|h| + b.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

/// A bijective endomorphism of a finite group.
class GroupAutomorphism {
 public:
  /// Throws NotAnAutomorphism unless `map` is a bijective homomorphism.
  GroupAutomorphism(FiniteGroup group, std::vector<Element> map);

  static GroupAutomorphism identity(const FiniteGroup& group);

  /// x ↦ x^k (k reduced modulo nothing; negative k uses inverses).
  static GroupAutomorphism power_map(const FiniteGroup& group, long long k);

  const FiniteGroup& group() const noexcept { return group_; }
  const std::vector<Element>& map() const noexcept { return map_; }
  Element operator()(Element x) const noexcept { return map_[x]; }

 private:
  FiniteGroup group_;
  std::vector<Element> map_;
};

}  // namespace qorder
