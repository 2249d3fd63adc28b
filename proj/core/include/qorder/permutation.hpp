#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qorder/error.hpp"

namespace qorder {

/// A bijection of {0..degree-1}, stored as its image array.
class Permutation {
 public:
  Permutation() = default;

  /// Throws NotAPermutation unless `images` is a bijection of {0..size-1}.
  explicit Permutation(std::vector<Element> images);

  static Permutation identity(std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  Element operator()(Element x) const noexcept { return images_[x]; }
  std::span<const Element> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  std::size_t order() const;

  /// Cycle notation, fixed points omitted, e.g. "(0 1)(2 3)" or "()".
  std::string cycle_string() const;

  /// Composition (p * q)(x) = p(q(x)).
  friend Permutation operator*(const Permutation& p, const Permutation& q);

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Element> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

/// True iff `map` is a bijection of {0..map.size()-1}.
bool is_bijection(std::span<const Element> map) noexcept;

inline constexpr std::size_t kDefaultMaxClosureOrder = 1'000'000;

/// A finite permutation group, stored as its full element list sorted
/// lexicographically (so the identity comes first).
class PermutationGroup {
 public:
  /// Breadth-first closure of `generators` under composition. Throws
  /// NotAPermutation for a generator of the wrong degree and ResourceLimit
  /// when the group would exceed `max_order` elements.
  static PermutationGroup closure(std::span<const Permutation> generators, std::size_t degree,
                                  std::size_t max_order = kDefaultMaxClosureOrder);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  bool contains(const Permutation& p) const;

  /// Orbits on {0..degree-1}, each sorted, ordered by smallest member.
  std::vector<std::vector<Element>> orbits() const;

 private:
  std::size_t degree_ = 0;
  std::vector<Permutation> elements_;
};

inline PermutationGroup closure(std::span<const Permutation> generators, std::size_t degree,
                                std::size_t max_order = kDefaultMaxClosureOrder) {
  return PermutationGroup::closure(generators, degree, max_order);
}

/// Lexicographically least element generating the whole group, if any.
std::optional<Permutation> cyclic_generator(const PermutationGroup& g);

bool is_cyclic(const PermutationGroup& g);

/// Largest element order in the group.
std::size_t max_element_order(const PermutationGroup& g);

/// Orbit formulation: every orbit has exactly |g| points.
bool is_semiregular(const PermutationGroup& g);

/// Stabilizer formulation: |g| divides the degree and only the identity has
/// a fixed point.
bool is_semiregular_by_fixed_points(const PermutationGroup& g);

/// First (lexicographic) non-identity element with a fixed point, with the
/// smallest point it fixes.
std::optional<std::pair<Permutation, Element>> nonidentity_fixed_point(const PermutationGroup& g);

}  // namespace qorder
