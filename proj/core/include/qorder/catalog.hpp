#pragma once

#include <cstddef>
#include <vector>

#include "qorder/permutation.hpp"
#include "qorder/quandle.hpp"
#include "qorder/search.hpp"

namespace qorder {

/// The quandle with elements renamed by sigma: (σa)∗'(σb) = σ(a∗b).
FiniteQuandle relabel(const FiniteQuandle& q, const Permutation& sigma);

/// Lexicographically least table over all n! relabelings. Two quandles are
/// isomorphic iff their canonical tables are equal.
Table canonical_table(const FiniteQuandle& q);

/// Direct search for a relabeling carrying a onto b.
bool are_isomorphic(const FiniteQuandle& a, const FiniteQuandle& b);

std::size_t automorphism_count(const FiniteQuandle& q);

/// Every quandle on {0..n-1} (labelled), found by column-wise backtracking
/// over permutations fixing the diagonal with distributivity pruning; with
/// `up_to_iso` one canonical representative per isomorphism class. Output
/// is sorted by table. Throws ResourceLimit for n > caps.max_catalog_n.
std::vector<FiniteQuandle> generate_all_quandles(std::size_t n, bool up_to_iso,
                                                 const Caps& caps = {});

struct CensusRecord {
  std::size_t order = 0;
  std::size_t class_id = 0;  ///< position within its order, 0-based
  FiniteQuandle representative;

  bool right_circular = false;
  bool left_circular = false;
  bool bi_circular = false;
  bool right_orderable = false;
  bool left_orderable = false;

  bool latin = false;
  bool involutory = false;
  bool trivial = false;
  std::vector<std::size_t> orbit_sizes;
  std::size_t automorphisms = 0;

  std::size_t rco_size = 0;
  std::size_t lco_size = 0;
  std::size_t bco_size = 0;
  std::size_t ro_size = 0;
  std::size_t lo_size = 0;
};

/// One record per isomorphism class of every order 1..max_n.
std::vector<CensusRecord> census(std::size_t max_n, const DecideOptions& opts = {});

}  // namespace qorder
