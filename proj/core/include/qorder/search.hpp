#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qorder/circular.hpp"
#include "qorder/permutation.hpp"
#include "qorder/quandle.hpp"

namespace qorder {

/// Explicit resource caps. Exceeding one raises ResourceLimit; nothing is
/// ever truncated silently.
struct Caps {
  std::size_t max_circular_n = 10;  ///< (n-1)! arrangements
  std::size_t max_linear_n = 8;     ///< n! rankings
  std::size_t max_closure_order = kDefaultMaxClosureOrder;
  std::size_t max_catalog_n = 5;
};

struct SearchOptions {
  Caps caps;
  /// Worker threads for filtering scans. Results never depend on this.
  unsigned threads = 1;
};

enum class Property { RightCircular, LeftCircular, BiCircular, RightOrder, LeftOrder };

const char* to_string(Property p) noexcept;
std::optional<Property> property_from_string(std::string_view name) noexcept;

/// Fast: structural decision only. Oracle: exhaustive enumeration only.
/// Checked: structural decision, diffed against the oracle whenever the
/// carrier is small enough; a disagreement raises OracleMismatch.
enum class Tier { Fast, Oracle, Checked };

const char* to_string(Tier t) noexcept;

struct DecideOptions {
  SearchOptions search;
  Tier tier = Tier::Checked;
  std::size_t oracle_max_n = 8;
};

/// Which translations generate an action.
enum class Translations { Right, Left, Both };

const char* to_string(Translations t) noexcept;

enum class CertificateKind {
  NonCyclicAction,              ///< generated group is not cyclic
  NonSemiregularAction,         ///< a non-identity element fixes a point
  NonInjectiveLeftTranslation,  ///< L_s(a) = L_s(b) with a ≠ b
  NonIdentityTranslation,       ///< a translation moves a point; no finite order allows it
  ExhaustiveSearch,             ///< every candidate was checked and rejected
};

const char* to_string(CertificateKind k) noexcept;

/// Reason for a "no" answer together with data that can be re-checked.
struct Certificate {
  CertificateKind kind = CertificateKind::ExhaustiveSearch;
  Translations translations = Translations::Right;
  std::size_t group_order = 0;
  std::size_t max_element_order = 0;
  std::optional<Permutation> fixing_element;
  Element fixed_point = 0;
  Side side = Side::Right;
  Element base = 0;
  /// NonInjectiveLeftTranslation: {a, b}. NonIdentityTranslation: {t, image of t}.
  std::vector<Element> points;
  std::size_t candidates_checked = 0;

  std::string describe() const;
};

using Witness = std::variant<std::monostate, CyclicOrder, LinearOrder>;

struct Verdict {
  Property property = Property::RightCircular;
  bool answer = false;
  Witness witness;
  std::optional<Certificate> certificate;
  Tier tier = Tier::Fast;
  bool oracle_checked = false;
};

enum class SpaceKind { RCO, LCO, BCO, RO, LO, BO };

const char* to_string(SpaceKind k) noexcept;

/// A finite space of orderings of one quandle, canonical and sorted.
struct OrderSpace {
  SpaceKind kind = SpaceKind::RCO;
  std::size_t carrier_size = 0;
  std::vector<CyclicOrder> circular;  ///< RCO, LCO, BCO
  std::vector<LinearOrder> linear;    ///< RO, LO, BO

  bool is_circular() const noexcept {
    return kind == SpaceKind::RCO || kind == SpaceKind::LCO || kind == SpaceKind::BCO;
  }
  std::size_t size() const noexcept { return is_circular() ? circular.size() : linear.size(); }
  bool empty() const noexcept { return size() == 0; }
};

/// All circular orderings of an n-element carrier in lexicographic order of
/// their arrangements: one for n <= 2, (n-1)! otherwise.
std::vector<CyclicOrder> enumerate_circular_orderings(std::size_t n, const Caps& caps = {});

/// All n! rankings in lexicographic order.
std::vector<LinearOrder> enumerate_linear_orderings(std::size_t n, const Caps& caps = {});

OrderSpace enumerate_rco(const FiniteQuandle& q, const SearchOptions& opts = {});
OrderSpace enumerate_lco(const FiniteQuandle& q, const SearchOptions& opts = {});
OrderSpace enumerate_bicircular(const FiniteQuandle& q, const SearchOptions& opts = {});
OrderSpace enumerate_right_orderings(const FiniteQuandle& q, const SearchOptions& opts = {});
OrderSpace enumerate_left_orderings(const FiniteQuandle& q, const SearchOptions& opts = {});
OrderSpace enumerate_bi_orderings(const FiniteQuandle& q, const SearchOptions& opts = {});
OrderSpace enumerate_space(const FiniteQuandle& q, Property p, const SearchOptions& opts = {});

/// Outcome of the structural witness engine.
struct CyclicWitnessResult {
  std::optional<CyclicOrder> witness;
  /// NonCyclicAction or NonSemiregularAction when there is no witness.
  std::optional<Certificate> obstruction;
  std::size_t group_order = 0;
};

/// Finds a circular ordering preserved by every map, or proves none exists.
/// The maps generate a group G; an ordering of n >= 3 points is preserved
/// by G iff G acts by rotations, i.e. iff G is cyclic and semiregular. The
/// witness lists the smallest orbit representatives, then their images under
/// the lexicographically least generator g, then under g², and so on.
CyclicWitnessResult analyze_cyclic_witness(std::span<const Permutation> maps, std::size_t n,
                                           std::size_t max_closure_order = kDefaultMaxClosureOrder);

std::optional<CyclicOrder> cyclic_witness_for_permutations(
    std::span<const Permutation> maps, std::size_t n,
    std::size_t max_closure_order = kDefaultMaxClosureOrder);

Verdict decide(const FiniteQuandle& q, Property p, const DecideOptions& opts = {});

inline Verdict decide_right_circular(const FiniteQuandle& q, const DecideOptions& opts = {}) {
  return decide(q, Property::RightCircular, opts);
}
inline Verdict decide_left_circular(const FiniteQuandle& q, const DecideOptions& opts = {}) {
  return decide(q, Property::LeftCircular, opts);
}
inline Verdict decide_bicircular(const FiniteQuandle& q, const DecideOptions& opts = {}) {
  return decide(q, Property::BiCircular, opts);
}
inline Verdict decide_right_orderable(const FiniteQuandle& q, const DecideOptions& opts = {}) {
  return decide(q, Property::RightOrder, opts);
}
inline Verdict decide_left_orderable(const FiniteQuandle& q, const DecideOptions& opts = {}) {
  return decide(q, Property::LeftOrder, opts);
}

/// Independently re-checks a verdict: a witness against the corder-core
/// invariance/order predicates, a certificate against the algebra-core
/// predicates (closure order, cyclicity, semiregularity, fixed points) or
/// the quandle table. Exhaustive certificates are re-run.
bool recheck_verdict(const Verdict& v, const FiniteQuandle& q, const SearchOptions& opts = {});

/// Image of RO(q) (side = Right) or LO(q) (side = Left) under o ↦ c_o.
struct EmbeddingReport {
  struct Fiber {
    CyclicOrder target;
    std::vector<LinearOrder> preimage;
  };

  Side side = Side::Right;
  std::vector<LinearOrder> domain;
  std::vector<CyclicOrder> image;
  std::vector<Fiber> fibers;  ///< sorted by target
  bool image_in_space = false;

  bool injective() const noexcept { return domain.size() == image.size(); }
};

EmbeddingReport embedding_image(const FiniteQuandle& q, Side side, const SearchOptions& opts = {});

using Triple = std::array<Element, 3>;

/// {c ∈ RCO(q) | c(S) = +1}. Throws DegenerateTriple when S repeats an entry.
std::vector<CyclicOrder> subbasic_right(const FiniteQuandle& q, const Triple& s,
                                        const SearchOptions& opts = {});
/// {c ∈ LCO(q) | c(S) = +1}.
std::vector<CyclicOrder> subbasic_left(const FiniteQuandle& q, const Triple& s,
                                       const SearchOptions& opts = {});
/// {o ∈ RO(q) or LO(q) | a < b}. Throws DiagonalPair when a = b.
std::vector<LinearOrder> subbasic_linear(const FiniteQuandle& q, Side side, Element a, Element b,
                                         const SearchOptions& opts = {});

}  // namespace qorder
