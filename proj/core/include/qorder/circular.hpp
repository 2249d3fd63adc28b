#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qorder/quandle.hpp"

namespace qorder {

/// True iff two of the three entries coincide.
constexpr bool is_degenerate_triple(Element x, Element y, Element z) noexcept {
  return x == y || y == z || x == z;
}

/// A nondegenerate circular ordering on {0..n-1}, held as a cyclic
/// arrangement rotated to start at 0. Two circular orderings are equal iff
/// their arrangements are equal.
///
/// For n <= 2 the only circular ordering is the zero function; it is held as
/// the identity arrangement.
class CyclicOrder {
 public:
  /// Canonicalizes by rotation. Throws NotAPermutation unless `arrangement`
  /// lists every element of {0..n-1} exactly once.
  static CyclicOrder from_arrangement(std::vector<Element> arrangement);

  /// The arrangement (0, 1, ..., n-1).
  static CyclicOrder identity(std::size_t n);

  std::size_t size() const noexcept { return arrangement_.size(); }
  std::span<const Element> arrangement() const noexcept { return arrangement_; }

  /// 0 on degenerate triples; +1 iff walking the arrangement from x meets y
  /// before z; -1 otherwise.
  int eval(Element x, Element y, Element z) const noexcept;

  std::size_t position(Element x) const noexcept { return position_[x]; }
  Element successor(Element x) const noexcept {
    return arrangement_[(position_[x] + 1) % arrangement_.size()];
  }

  friend bool operator==(const CyclicOrder& a, const CyclicOrder& b) {
    return a.arrangement_ == b.arrangement_;
  }
  friend auto operator<=>(const CyclicOrder& a, const CyclicOrder& b) {
    return a.arrangement_ <=> b.arrangement_;
  }

 private:
  std::vector<Element> arrangement_;
  std::vector<std::size_t> position_;
};

inline int eval_cyclic(const CyclicOrder& c, Element x, Element y, Element z) noexcept {
  return c.eval(x, y, z);
}

/// A map c: Q³ → {-1, 0, +1}, stored densely.
class TripleFunction {
 public:
  TripleFunction() = default;
  /// The zero function on an n-element carrier.
  explicit TripleFunction(std::size_t n);

  std::size_t size() const noexcept { return n_; }

  int operator()(Element x, Element y, Element z) const noexcept {
    return values_[(x * n_ + y) * n_ + z];
  }
  void set(Element x, Element y, Element z, int value);

  friend bool operator==(const TripleFunction&, const TripleFunction&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::int8_t> values_;
};

/// A strict total order, held as the ranking from least to greatest.
class LinearOrder {
 public:
  /// Throws NotAPermutation unless the ranking is a permutation.
  static LinearOrder from_ranking(std::vector<Element> ranking);

  std::size_t size() const noexcept { return ranking_.size(); }
  std::span<const Element> ranking() const noexcept { return ranking_; }
  std::size_t rank(Element x) const noexcept { return rank_[x]; }
  bool less(Element a, Element b) const noexcept { return rank_[a] < rank_[b]; }

  friend bool operator==(const LinearOrder& a, const LinearOrder& b) {
    return a.ranking_ == b.ranking_;
  }
  friend auto operator<=>(const LinearOrder& a, const LinearOrder& b) {
    return a.ranking_ <=> b.ranking_;
  }

 private:
  std::vector<Element> ranking_;
  std::vector<std::size_t> rank_;
};

using Quadruple = std::array<Element, 4>;

/// d_W(f) = f(t1,t2,t3) - f(t1,t2,t4) + f(t1,t3,t4) - f(t2,t3,t4).
int cocycle_defect(const TripleFunction& f, const Quadruple& w);

struct CircularViolation {
  enum class Kind { ZeroPattern, Cocycle };
  Kind kind;
  /// A triple for ZeroPattern, a quadruple for Cocycle.
  std::vector<Element> witness;
};

const char* to_string(CircularViolation::Kind kind) noexcept;

/// Empty iff f vanishes exactly on degenerate triples and every cocycle
/// defect is zero. Scans in lexicographic order and reports the first
/// failure.
std::optional<CircularViolation> validate_triple_function(const TripleFunction& f);

TripleFunction cyclic_to_function(const CyclicOrder& c);

/// Throws SmallCarrier for n <= 2 and NotACircularOrdering if validation
/// fails.
CyclicOrder function_to_cyclic(const TripleFunction& f);

/// The circular ordering induced by a linear order: the ranking read
/// cyclically.
CyclicOrder circular_from_linear(const LinearOrder& o);

/// A tuple (s, x, y, z) where c(x,y,z) differs from c at the translated
/// triple: (s∗x, s∗y, s∗z) for the left side, (x∗s, y∗s, z∗s) for the right.
struct InvarianceViolation {
  Element s, x, y, z;
  int before, after;
};

/// True iff c(m(x), m(y), m(z)) = c(x, y, z) for all triples. Bijections are
/// checked by the successor test (a bijection preserves the ordering iff it
/// rotates the arrangement); non-injective maps fail for n >= 3.
bool preserves(const CyclicOrder& c, std::span<const Element> map);

/// First witness, or nullopt when c is invariant on the given side.
std::optional<InvarianceViolation> find_invariance_violation(const CyclicOrder& c,
                                                             const FiniteQuandle& q, Side side);

/// Exhaustive scan over (s, x, y, z) ∈ Q⁴. Stops at the first witness unless
/// `all` is set.
std::vector<InvarianceViolation> invariance_violations(const TripleFunction& f,
                                                       const FiniteQuandle& q, Side side,
                                                       bool all = false);

bool is_invariant(const CyclicOrder& c, const FiniteQuandle& q, Side side);
bool is_invariant(const TripleFunction& f, const FiniteQuandle& q, Side side);

inline bool is_right_invariant(const CyclicOrder& c, const FiniteQuandle& q) {
  return is_invariant(c, q, Side::Right);
}
inline bool is_left_invariant(const CyclicOrder& c, const FiniteQuandle& q) {
  return is_invariant(c, q, Side::Left);
}
inline bool is_right_invariant(const TripleFunction& f, const FiniteQuandle& q) {
  return is_invariant(f, q, Side::Right);
}
inline bool is_left_invariant(const TripleFunction& f, const FiniteQuandle& q) {
  return is_invariant(f, q, Side::Left);
}

/// Every translation on `side` is strictly increasing for o.
bool is_order(const LinearOrder& o, const FiniteQuandle& q, Side side);
inline bool is_right_order(const LinearOrder& o, const FiniteQuandle& q) {
  return is_order(o, q, Side::Right);
}
inline bool is_left_order(const LinearOrder& o, const FiniteQuandle& q) {
  return is_order(o, q, Side::Left);
}

}  // namespace qorder
