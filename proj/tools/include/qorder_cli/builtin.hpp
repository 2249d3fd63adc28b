#pragma once

#include <string_view>

#include "qorder/qorder.hpp"

namespace qorder::cli {

/// Group specs:
///   Zn        cyclic group of order n
///   Sn        symmetric group on n points (n <= 5)
///   G1xG2     direct product, e.g. Z2xZ2
///   @FILE     group document
FiniteGroup parse_group_spec(std::string_view spec);

/// Quandle specs:
///   trivial:n  dihedral:n  affine:n:alpha
///   conj:GROUP  core:GROUP  alexander:GROUP:k  (automorphism x ↦ x^k)
///   product:SPEC+SPEC+...
/// Throws ParseError for unknown syntax.
FiniteQuandle parse_builtin(std::string_view spec);

}  // namespace qorder::cli
