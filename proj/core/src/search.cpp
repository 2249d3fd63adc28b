#include "qorder/search.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "parallel.hpp"

namespace qorder {

const char* to_string(Property p) noexcept {
  switch (p) {
    case Property::RightCircular: return "right-circular";
    case Property::LeftCircular: return "left-circular";
    case Property::BiCircular: return "bi-circular";
    case Property::RightOrder: return "right-order";
    case Property::LeftOrder: return "left-order";
  }
  return "unknown";
}

std::optional<Property> property_from_string(std::string_view name) noexcept {
  for (auto p : {Property::RightCircular, Property::LeftCircular, Property::BiCircular,
                 Property::RightOrder, Property::LeftOrder}) {
    if (name == to_string(p)) return p;
  }
  return std::nullopt;
}

const char* to_string(Tier t) noexcept {
  switch (t) {
    case Tier::Fast: return "fast";
    case Tier::Oracle: return "oracle";
    case Tier::Checked: return "checked";
  }
  return "unknown";
}

const char* to_string(Translations t) noexcept {
  switch (t) {
    case Translations::Right: return "right";
    case Translations::Left: return "left";
    case Translations::Both: return "both";
  }
  return "unknown";
}

const char* to_string(CertificateKind k) noexcept {
  switch (k) {
    case CertificateKind::NonCyclicAction: return "non-cyclic-action";
    case CertificateKind::NonSemiregularAction: return "non-semiregular-action";
    case CertificateKind::NonInjectiveLeftTranslation: return "non-injective-left-translation";
    case CertificateKind::NonIdentityTranslation: return "non-identity-translation";
    case CertificateKind::ExhaustiveSearch: return "exhaustive-search";
  }
  return "unknown";
}

const char* to_string(SpaceKind k) noexcept {
  switch (k) {
    case SpaceKind::RCO: return "RCO";
    case SpaceKind::LCO: return "LCO";
    case SpaceKind::BCO: return "BCO";
    case SpaceKind::RO: return "RO";
    case SpaceKind::LO: return "LO";
    case SpaceKind::BO: return "BO";
  }
  return "unknown";
}

std::string Certificate::describe() const {
  std::ostringstream out;
  switch (kind) {
    case CertificateKind::NonCyclicAction:
      out << "the group generated by the " << to_string(translations)
          << " translations has order " << group_order << " but no element of that order (max "
          << max_element_order << ")";
      break;
    case CertificateKind::NonSemiregularAction:
      out << "the group generated by the " << to_string(translations)
          << " translations (order " << group_order << ") contains "
          << (fixing_element ? fixing_element->cycle_string() : std::string("?"))
          << " fixing point " << fixed_point;
      break;
    case CertificateKind::NonInjectiveLeftTranslation:
      out << "L_" << base << " sends " << points.at(0) << " and " << points.at(1)
          << " to the same element";
      break;
    case CertificateKind::NonIdentityTranslation:
      out << (side == Side::Left ? "L_" : "R_") << base << " moves " << points.at(0) << " to "
          << points.at(1);
      break;
    case CertificateKind::ExhaustiveSearch:
      out << "all " << candidates_checked << " candidates rejected";
      break;
  }
  return out.str();
}

namespace {

std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

bool is_circular(Property p) {
  return p == Property::RightCircular || p == Property::LeftCircular ||
         p == Property::BiCircular;
}

}  // namespace

std::vector<CyclicOrder> enumerate_circular_orderings(std::size_t n, const Caps& caps) {
  if (n == 0) throw ShapeError("carrier must be nonempty");
  if (n > caps.max_circular_n) {
    throw ResourceLimit("enumerating circular orderings of " + std::to_string(n) +
                        " elements exceeds the cap n <= " + std::to_string(caps.max_circular_n));
  }
  std::vector<CyclicOrder> out;
  if (n <= 2) {
    out.push_back(CyclicOrder::identity(n));
    return out;
  }
  out.reserve(factorial(n - 1));
  std::vector<Element> a(n);
  std::iota(a.begin(), a.end(), Element{0});
  do {
    out.push_back(CyclicOrder::from_arrangement(a));
  } while (std::next_permutation(a.begin() + 1, a.end()));
  return out;
}

std::vector<LinearOrder> enumerate_linear_orderings(std::size_t n, const Caps& caps) {
  if (n == 0) throw ShapeError("carrier must be nonempty");
  if (n > caps.max_linear_n) {
    throw ResourceLimit("enumerating linear orderings of " + std::to_string(n) +
                        " elements exceeds the cap n <= " + std::to_string(caps.max_linear_n));
  }
  std::vector<LinearOrder> out;
  out.reserve(factorial(n));
  std::vector<Element> r(n);
  std::iota(r.begin(), r.end(), Element{0});
  do {
    out.push_back(LinearOrder::from_ranking(r));
  } while (std::next_permutation(r.begin(), r.end()));
  return out;
}

namespace {

OrderSpace circular_space(const FiniteQuandle& q, SpaceKind kind, const SearchOptions& opts) {
  OrderSpace space{kind, q.size(), {}, {}};
  const auto all = enumerate_circular_orderings(q.size(), opts.caps);
  space.circular = detail::parallel_filter(
      all,
      [&](const CyclicOrder& c) {
        switch (kind) {
          case SpaceKind::RCO: return is_invariant(c, q, Side::Right);
          case SpaceKind::LCO: return is_invariant(c, q, Side::Left);
          default: return is_invariant(c, q, Side::Right) && is_invariant(c, q, Side::Left);
        }
      },
      opts.threads);
  return space;
}

OrderSpace linear_space(const FiniteQuandle& q, SpaceKind kind, const SearchOptions& opts) {
  OrderSpace space{kind, q.size(), {}, {}};
  const auto all = enumerate_linear_orderings(q.size(), opts.caps);
  space.linear = detail::parallel_filter(
      all,
      [&](const LinearOrder& o) {
        switch (kind) {
          case SpaceKind::RO: return is_order(o, q, Side::Right);
          case SpaceKind::LO: return is_order(o, q, Side::Left);
          default: return is_order(o, q, Side::Right) && is_order(o, q, Side::Left);
        }
      },
      opts.threads);
  return space;
}

}  // namespace

OrderSpace enumerate_rco(const FiniteQuandle& q, const SearchOptions& opts) {
  return circular_space(q, SpaceKind::RCO, opts);
}
OrderSpace enumerate_lco(const FiniteQuandle& q, const SearchOptions& opts) {
  return circular_space(q, SpaceKind::LCO, opts);
}
OrderSpace enumerate_bicircular(const FiniteQuandle& q, const SearchOptions& opts) {
  return circular_space(q, SpaceKind::BCO, opts);
}
OrderSpace enumerate_right_orderings(const FiniteQuandle& q, const SearchOptions& opts) {
  return linear_space(q, SpaceKind::RO, opts);
}
OrderSpace enumerate_left_orderings(const FiniteQuandle& q, const SearchOptions& opts) {
  return linear_space(q, SpaceKind::LO, opts);
}
OrderSpace enumerate_bi_orderings(const FiniteQuandle& q, const SearchOptions& opts) {
  return linear_space(q, SpaceKind::BO, opts);
}

OrderSpace enumerate_space(const FiniteQuandle& q, Property p, const SearchOptions& opts) {
  switch (p) {
    case Property::RightCircular: return enumerate_rco(q, opts);
    case Property::LeftCircular: return enumerate_lco(q, opts);
    case Property::BiCircular: return enumerate_bicircular(q, opts);
    case Property::RightOrder: return enumerate_right_orderings(q, opts);
    case Property::LeftOrder: return enumerate_left_orderings(q, opts);
  }
  throw Error("unknown property");
}

CyclicWitnessResult analyze_cyclic_witness(std::span<const Permutation> maps, std::size_t n,
                                           std::size_t max_closure_order) {
  const auto group = PermutationGroup::closure(maps, n, max_closure_order);
  CyclicWitnessResult result;
  result.group_order = group.order();
  if (n <= 2) {
    result.witness = CyclicOrder::identity(n);
    return result;
  }
  const auto generator = cyclic_generator(group);
  if (!generator) {
    Certificate cert;
    cert.kind = CertificateKind::NonCyclicAction;
    cert.group_order = group.order();
    cert.max_element_order = max_element_order(group);
    result.obstruction = std::move(cert);
    return result;
  }
  if (auto fixed = nonidentity_fixed_point(group)) {
    Certificate cert;
    cert.kind = CertificateKind::NonSemiregularAction;
    cert.group_order = group.order();
    cert.fixing_element = std::move(fixed->first);
    cert.fixed_point = fixed->second;
    result.obstruction = std::move(cert);
    return result;
  }
  // semiregular: all orbits have |G| points
  std::vector<Element> reps;
  for (const auto& orbit : group.orbits()) reps.push_back(orbit.front());
  std::vector<Element> arrangement;
  arrangement.reserve(n);
  std::vector<Element> layer = reps;
  for (std::size_t p = 0; p < group.order(); ++p) {
    arrangement.insert(arrangement.end(), layer.begin(), layer.end());
    for (auto& x : layer) x = (*generator)(x);
  }
  result.witness = CyclicOrder::from_arrangement(std::move(arrangement));
  return result;
}

std::optional<CyclicOrder> cyclic_witness_for_permutations(std::span<const Permutation> maps,
                                                           std::size_t n,
                                                           std::size_t max_closure_order) {
  return analyze_cyclic_witness(maps, n, max_closure_order).witness;
}

namespace {

std::optional<Certificate> non_injective_left(const FiniteQuandle& q) {
  const auto n = static_cast<Element>(q.size());
  for (Element s = 0; s < n; ++s) {
    std::vector<Element> first(n, n);
    for (Element t = 0; t < n; ++t) {
      const Element v = q.op(s, t);
      if (first[v] != n) {
        Certificate cert;
        cert.kind = CertificateKind::NonInjectiveLeftTranslation;
        cert.side = Side::Left;
        cert.base = s;
        cert.points = {first[v], t};
        return cert;
      }
      first[v] = t;
    }
  }
  return std::nullopt;
}

std::optional<Certificate> non_identity_translation(const FiniteQuandle& q, Side side) {
  const auto n = static_cast<Element>(q.size());
  for (Element s = 0; s < n; ++s) {
    for (Element t = 0; t < n; ++t) {
      const Element v = side == Side::Left ? q.op(s, t) : q.op(t, s);
      if (v != t) {
        Certificate cert;
        cert.kind = CertificateKind::NonIdentityTranslation;
        cert.side = side;
        cert.base = s;
        cert.points = {t, v};
        return cert;
      }
    }
  }
  return std::nullopt;
}

Verdict fast_circular(const FiniteQuandle& q, Property p, const Caps& caps) {
  Verdict v;
  v.property = p;
  v.tier = Tier::Fast;
  const auto n = q.size();
  if (n <= 2) {
    v.answer = true;
    v.witness = CyclicOrder::identity(n);
    return v;
  }
  const bool use_right = p != Property::LeftCircular;
  const bool use_left = p != Property::RightCircular;
  if (use_left) {
    // A circular ordering of n >= 3 points is nonzero on distinct triples,
    // so a left translation identifying two points cannot preserve it.
    if (auto cert = non_injective_left(q)) {
      v.answer = false;
      v.certificate = std::move(cert);
      return v;
    }
  }
  std::vector<Permutation> maps;
  for (Element s = 0; s < n; ++s) {
    if (use_right) maps.emplace_back(right_translation(q, s).map);
    if (use_left) maps.emplace_back(left_translation(q, s).map);
  }
  auto result = analyze_cyclic_witness(maps, n, caps.max_closure_order);
  if (result.witness) {
    v.answer = true;
    v.witness = std::move(*result.witness);
  } else {
    v.answer = false;
    result.obstruction->translations = p == Property::RightCircular  ? Translations::Right
                                       : p == Property::LeftCircular ? Translations::Left
                                                                     : Translations::Both;
    v.certificate = std::move(result.obstruction);
  }
  return v;
}

Verdict fast_linear(const FiniteQuandle& q, Property p) {
  // On a finite chain a strictly increasing self-map is the identity. Right
  // orderable therefore means every R_s is the identity; left orderable
  // means every L_s is the identity, which forces n = 1.
  Verdict v;
  v.property = p;
  v.tier = Tier::Fast;
  std::optional<Certificate> cert;
  if (p == Property::RightOrder) {
    cert = non_identity_translation(q, Side::Right);
  } else {
    cert = non_injective_left(q);
    if (!cert) cert = non_identity_translation(q, Side::Left);
  }
  if (cert) {
    v.answer = false;
    v.certificate = std::move(cert);
  } else {
    v.answer = true;
    std::vector<Element> r(q.size());
    std::iota(r.begin(), r.end(), Element{0});
    v.witness = LinearOrder::from_ranking(std::move(r));
  }
  return v;
}

Verdict oracle_decide(const FiniteQuandle& q, Property p, const SearchOptions& opts) {
  Verdict v;
  v.property = p;
  v.tier = Tier::Oracle;
  const auto space = enumerate_space(q, p, opts);
  v.answer = !space.empty();
  if (v.answer) {
    if (space.is_circular()) {
      v.witness = space.circular.front();
    } else {
      v.witness = space.linear.front();
    }
  } else {
    Certificate cert;
    cert.kind = CertificateKind::ExhaustiveSearch;
    cert.candidates_checked = is_circular(p) ? (q.size() <= 2 ? 1 : factorial(q.size() - 1))
                                             : factorial(q.size());
    v.certificate = std::move(cert);
  }
  return v;
}

}  // namespace

Verdict decide(const FiniteQuandle& q, Property p, const DecideOptions& opts) {
  if (opts.tier == Tier::Oracle) return oracle_decide(q, p, opts.search);

  Verdict v = is_circular(p) ? fast_circular(q, p, opts.search.caps) : fast_linear(q, p);
  if (opts.tier == Tier::Checked) {
    const std::size_t cap = is_circular(p) ? opts.search.caps.max_circular_n
                                           : opts.search.caps.max_linear_n;
    if (q.size() <= std::min(opts.oracle_max_n, cap)) {
      const Verdict oracle = oracle_decide(q, p, opts.search);
      if (oracle.answer != v.answer) {
        throw OracleMismatch(std::string("structural and exhaustive decisions disagree on ") +
                             to_string(p));
      }
      v.oracle_checked = true;
    }
    v.tier = Tier::Checked;
  }
  return v;
}

bool recheck_verdict(const Verdict& v, const FiniteQuandle& q, const SearchOptions& opts) {
  if (v.answer) {
    if (const auto* c = std::get_if<CyclicOrder>(&v.witness)) {
      if (c->size() != q.size()) return false;
      switch (v.property) {
        case Property::RightCircular: return is_right_invariant(*c, q);
        case Property::LeftCircular: return is_left_invariant(*c, q);
        case Property::BiCircular: return is_right_invariant(*c, q) && is_left_invariant(*c, q);
        default: return false;
      }
    }
    if (const auto* o = std::get_if<LinearOrder>(&v.witness)) {
      if (o->size() != q.size()) return false;
      switch (v.property) {
        case Property::RightOrder: return is_right_order(*o, q);
        case Property::LeftOrder: return is_left_order(*o, q);
        default: return false;
      }
    }
    return false;
  }
  if (!v.certificate) return false;
  const auto& cert = *v.certificate;
  const auto n = q.size();
  switch (cert.kind) {
    case CertificateKind::NonCyclicAction:
    case CertificateKind::NonSemiregularAction: {
      if (n <= 2) return false;
      std::vector<Permutation> maps;
      for (Element s = 0; s < n; ++s) {
        if (cert.translations != Translations::Left) maps.emplace_back(right_translation(q, s).map);
        if (cert.translations != Translations::Right) {
          const auto l = left_translation(q, s).map;
          if (!is_bijection(l)) return false;
          maps.emplace_back(l);
        }
      }
      const auto g = PermutationGroup::closure(maps, n, opts.caps.max_closure_order);
      if (g.order() != cert.group_order) return false;
      if (cert.kind == CertificateKind::NonCyclicAction) return !is_cyclic(g);
      return cert.fixing_element && !cert.fixing_element->is_identity() &&
             g.contains(*cert.fixing_element) && cert.fixed_point < n &&
             (*cert.fixing_element)(cert.fixed_point) == cert.fixed_point &&
             !is_semiregular(g) && !is_semiregular_by_fixed_points(g);
    }
    case CertificateKind::NonInjectiveLeftTranslation: {
      if (cert.points.size() != 2 || cert.base >= n) return false;
      const Element a = cert.points[0], b = cert.points[1];
      if (a >= n || b >= n || a == b || q.op(cert.base, a) != q.op(cert.base, b)) return false;
      // refutes circular orderings only when a third point exists
      return !is_circular(v.property) || n >= 3;
    }
    case CertificateKind::NonIdentityTranslation: {
      if (is_circular(v.property) || cert.points.size() != 2 || cert.base >= n) return false;
      const Element t = cert.points[0];
      if (t >= n) return false;
      const Element image = cert.side == Side::Left ? q.op(cert.base, t) : q.op(t, cert.base);
      const Side needed = v.property == Property::RightOrder ? Side::Right : Side::Left;
      return cert.side == needed && image == cert.points[1] && image != t;
    }
    case CertificateKind::ExhaustiveSearch:
      return enumerate_space(q, v.property, opts).empty();
  }
  return false;
}

EmbeddingReport embedding_image(const FiniteQuandle& q, Side side, const SearchOptions& opts) {
  EmbeddingReport report;
  report.side = side;
  report.domain = side == Side::Right ? enumerate_right_orderings(q, opts).linear
                                      : enumerate_left_orderings(q, opts).linear;
  for (const auto& o : report.domain) {
    auto c = circular_from_linear(o);
    auto it = std::lower_bound(report.fibers.begin(), report.fibers.end(), c,
                               [](const auto& f, const CyclicOrder& x) { return f.target < x; });
    if (it == report.fibers.end() || it->target != c) {
      it = report.fibers.insert(it, EmbeddingReport::Fiber{std::move(c), {}});
    }
    it->preimage.push_back(o);
  }
  report.image_in_space = true;
  for (const auto& f : report.fibers) {
    report.image.push_back(f.target);
    report.image_in_space = report.image_in_space && is_invariant(f.target, q, side);
  }
  return report;
}

namespace {

void check_triple(const FiniteQuandle& q, const Triple& s) {
  for (Element x : s) {
    if (x >= q.size()) throw ShapeError("triple entry out of range");
  }
  if (is_degenerate_triple(s[0], s[1], s[2])) {
    throw DegenerateTriple("subbasic sets are indexed by triples with distinct entries");
  }
}

std::vector<CyclicOrder> positive_on(std::vector<CyclicOrder> members, const Triple& s) {
  std::erase_if(members, [&](const CyclicOrder& c) { return c.eval(s[0], s[1], s[2]) != 1; });
  return members;
}

}  // namespace

std::vector<CyclicOrder> subbasic_right(const FiniteQuandle& q, const Triple& s,
                                        const SearchOptions& opts) {
  check_triple(q, s);
  return positive_on(enumerate_rco(q, opts).circular, s);
}

std::vector<CyclicOrder> subbasic_left(const FiniteQuandle& q, const Triple& s,
                                       const SearchOptions& opts) {
  check_triple(q, s);
  return positive_on(enumerate_lco(q, opts).circular, s);
}

std::vector<LinearOrder> subbasic_linear(const FiniteQuandle& q, Side side, Element a, Element b,
                                         const SearchOptions& opts) {
  if (a >= q.size() || b >= q.size()) throw ShapeError("pair entry out of range");
  if (a == b) throw DiagonalPair("subbasic sets are indexed by pairs off the diagonal");
  auto members = side == Side::Right ? enumerate_right_orderings(q, opts).linear
                                     : enumerate_left_orderings(q, opts).linear;
  std::erase_if(members, [&](const LinearOrder& o) { return !o.less(a, b); });
  return members;
}

}  // namespace qorder
