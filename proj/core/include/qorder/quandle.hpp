#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qorder/group.hpp"
#include "qorder/permutation.hpp"
#include "qorder/table.hpp"

namespace qorder {

enum class Side { Left, Right };

const char* to_string(Side side) noexcept;

/// A finite quandle on {0..n-1}. Entry (i, j) of the table is i∗j; column j
/// is the right translation R_j.
///
/// Every instance satisfies, checked eagerly at construction:
///   s∗s = s;
///   each R_j : t ↦ t∗j is a bijection;
///   (a∗b)∗c = (a∗c)∗(b∗c).
class FiniteQuandle {
 public:
  /// Throws NotAQuandle with the first violated axiom and a violating tuple
  /// (a pair for idempotency/invertibility, a triple for distributivity).
  static FiniteQuandle from_table(Table table);

  std::size_t size() const noexcept { return table_.size(); }
  const Table& table() const noexcept { return table_; }

  Element op(Element a, Element b) const noexcept { return table_(a, b); }

  /// The dual operation: s ∗⁻¹ r is the unique t with t∗r = s.
  Element dual(Element s, Element r) const noexcept { return dual_(s, r); }

  friend bool operator==(const FiniteQuandle& a, const FiniteQuandle& b) {
    return a.table_ == b.table_;
  }

 private:
  Table table_;
  Table dual_;
};

inline FiniteQuandle quandle_from_table(Table table) {
  return FiniteQuandle::from_table(std::move(table));
}

FiniteQuandle trivial_quandle(std::size_t n);

/// Z_n with i∗j = 2j - i.
FiniteQuandle dihedral_quandle(std::size_t n);

/// Z_n with i∗j = alpha·i + (1 - alpha)·j. Throws NotInvertible unless
/// gcd(alpha, n) = 1.
FiniteQuandle affine_quandle(std::size_t n, long long alpha);

/// g∗h = h⁻¹gh.
FiniteQuandle conj_quandle(const FiniteGroup& g);

/// g∗h = hg⁻¹h.
FiniteQuandle core_quandle(const FiniteGroup& g);

/// g∗h = phi(gh⁻¹)h.
FiniteQuandle generalized_alexander_quandle(const GroupAutomorphism& phi);

/// Componentwise product, elements encoded by MixedRadix in factor order.
FiniteQuandle product_quandle(std::span<const FiniteQuandle> factors);

/// The quandle (Q, ∗⁻¹).
FiniteQuandle dual_op(const FiniteQuandle& q);

/// R_s or L_s as a plain map. Right translations are always bijections.
struct Translation {
  Side side;
  Element base;
  std::vector<Element> map;
};

Translation right_translation(const FiniteQuandle& q, Element s);
Translation left_translation(const FiniteQuandle& q, Element s);
Translation translation(const FiniteQuandle& q, Side side, Element s);

/// The permutation group generated by all right translations.
PermutationGroup inner_group(const FiniteQuandle& q,
                             std::size_t max_order = kDefaultMaxClosureOrder);

bool is_latin(const FiniteQuandle& q);
bool is_semi_latin(const FiniteQuandle& q);
bool is_involutory(const FiniteQuandle& q);
bool is_trivial_quandle(const FiniteQuandle& q);
/// Elements e with s∗e = s for all s.
std::vector<Element> stabilizer_elements(const FiniteQuandle& q);
/// Orbits of the inner group.
std::vector<std::vector<Element>> orbits(const FiniteQuandle& q);
/// True iff the (nonempty) subset is closed under ∗.
bool is_subquandle(const FiniteQuandle& q, std::span<const Element> subset);

}  // namespace qorder
