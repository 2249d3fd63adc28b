#include "qorder/circular.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace qorder {

namespace {

void check_size(std::size_t got, std::size_t want) {
  if (got != want) {
    throw ShapeError("carrier size mismatch: " + std::to_string(got) + " vs " +
                     std::to_string(want));
  }
}

}  // namespace

CyclicOrder CyclicOrder::from_arrangement(std::vector<Element> arrangement) {
  if (!is_bijection(arrangement)) {
    throw NotAPermutation("arrangement is not a permutation of the carrier");
  }
  CyclicOrder c;
  if (!arrangement.empty()) {
    const auto zero = std::find(arrangement.begin(), arrangement.end(), Element{0});
    std::rotate(arrangement.begin(), zero, arrangement.end());
  }
  c.arrangement_ = std::move(arrangement);
  c.position_.resize(c.arrangement_.size());
  for (std::size_t i = 0; i < c.arrangement_.size(); ++i) c.position_[c.arrangement_[i]] = i;
  return c;
}

CyclicOrder CyclicOrder::identity(std::size_t n) {
  std::vector<Element> a(n);
  std::iota(a.begin(), a.end(), Element{0});
  return from_arrangement(std::move(a));
}

int CyclicOrder::eval(Element x, Element y, Element z) const noexcept {
  if (is_degenerate_triple(x, y, z)) return 0;
  const std::size_t n = arrangement_.size();
  const std::size_t px = position_[x];
  const std::size_t dy = (position_[y] + n - px) % n;
  const std::size_t dz = (position_[z] + n - px) % n;
  return dy < dz ? 1 : -1;
}

TripleFunction::TripleFunction(std::size_t n) : n_(n), values_(n * n * n, 0) {}

void TripleFunction::set(Element x, Element y, Element z, int value) {
  if (value < -1 || value > 1) throw ShapeError("triple function values lie in {-1,0,1}");
  values_[(x * n_ + y) * n_ + z] = static_cast<std::int8_t>(value);
}

LinearOrder LinearOrder::from_ranking(std::vector<Element> ranking) {
  if (!is_bijection(ranking)) throw NotAPermutation("ranking is not a permutation of the carrier");
  LinearOrder o;
  o.ranking_ = std::move(ranking);
  o.rank_.resize(o.ranking_.size());
  for (std::size_t i = 0; i < o.ranking_.size(); ++i) o.rank_[o.ranking_[i]] = i;
  return o;
}

int cocycle_defect(const TripleFunction& f, const Quadruple& w) {
  const auto [t1, t2, t3, t4] = w;
  return f(t1, t2, t3) - f(t1, t2, t4) + f(t1, t3, t4) - f(t2, t3, t4);
}

const char* to_string(CircularViolation::Kind kind) noexcept {
  return kind == CircularViolation::Kind::ZeroPattern ? "zero-pattern" : "cocycle";
}

std::optional<CircularViolation> validate_triple_function(const TripleFunction& f) {
  const auto n = static_cast<Element>(f.size());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        if ((f(x, y, z) == 0) != is_degenerate_triple(x, y, z)) {
          return CircularViolation{CircularViolation::Kind::ZeroPattern, {x, y, z}};
        }
      }
    }
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      for (Element c = 0; c < n; ++c) {
        for (Element d = 0; d < n; ++d) {
          if (cocycle_defect(f, {a, b, c, d}) != 0) {
            return CircularViolation{CircularViolation::Kind::Cocycle, {a, b, c, d}};
          }
        }
      }
    }
  }
  return std::nullopt;
}

TripleFunction cyclic_to_function(const CyclicOrder& c) {
  const auto n = static_cast<Element>(c.size());
  TripleFunction f(n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) f.set(x, y, z, c.eval(x, y, z));
    }
  }
  return f;
}

CyclicOrder function_to_cyclic(const TripleFunction& f) {
  if (f.size() <= 2) {
    throw SmallCarrier("carriers with at most two elements have only the zero circular ordering");
  }
  if (auto v = validate_triple_function(f)) {
    throw NotACircularOrdering(std::string("triple function fails the ") + to_string(v->kind) +
                               " condition");
  }
  // Reading from 0, y precedes z iff f(0, y, z) = +1.
  std::vector<Element> rest(f.size() - 1);
  std::iota(rest.begin(), rest.end(), Element{1});
  std::sort(rest.begin(), rest.end(), [&](Element y, Element z) { return f(0, y, z) == 1; });
  rest.insert(rest.begin(), 0);
  return CyclicOrder::from_arrangement(std::move(rest));
}

CyclicOrder circular_from_linear(const LinearOrder& o) {
  return CyclicOrder::from_arrangement({o.ranking().begin(), o.ranking().end()});
}

bool preserves(const CyclicOrder& c, std::span<const Element> map) {
  const std::size_t n = c.size();
  check_size(map.size(), n);
  if (n <= 2) return true;
  if (!is_bijection(map)) return false;
  const auto a = c.arrangement();
  for (std::size_t i = 0; i < n; ++i) {
    if (c.successor(map[a[i]]) != map[a[(i + 1) % n]]) return false;
  }
  return true;
}

namespace {

Element image(const FiniteQuandle& q, Side side, Element s, Element x) {
  return side == Side::Left ? q.op(s, x) : q.op(x, s);
}

}  // namespace

std::optional<InvarianceViolation> find_invariance_violation(const CyclicOrder& c,
                                                             const FiniteQuandle& q, Side side) {
  check_size(c.size(), q.size());
  const auto n = static_cast<Element>(q.size());
  for (Element s = 0; s < n; ++s) {
    const auto t = translation(q, side, s);
    if (preserves(c, t.map)) continue;
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        for (Element z = 0; z < n; ++z) {
          const int before = c.eval(x, y, z);
          const int after = c.eval(t.map[x], t.map[y], t.map[z]);
          if (before != after) return InvarianceViolation{s, x, y, z, before, after};
        }
      }
    }
  }
  return std::nullopt;
}

std::vector<InvarianceViolation> invariance_violations(const TripleFunction& f,
                                                       const FiniteQuandle& q, Side side,
                                                       bool all) {
  check_size(f.size(), q.size());
  const auto n = static_cast<Element>(q.size());
  std::vector<InvarianceViolation> out;
  for (Element s = 0; s < n; ++s) {
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        for (Element z = 0; z < n; ++z) {
          const int before = f(x, y, z);
          const int after = f(image(q, side, s, x), image(q, side, s, y), image(q, side, s, z));
          if (before != after) {
            out.push_back({s, x, y, z, before, after});
            if (!all) return out;
          }
        }
      }
    }
  }
  return out;
}

bool is_invariant(const CyclicOrder& c, const FiniteQuandle& q, Side side) {
  check_size(c.size(), q.size());
  for (Element s = 0; s < q.size(); ++s) {
    if (!preserves(c, translation(q, side, s).map)) return false;
  }
  return true;
}

bool is_invariant(const TripleFunction& f, const FiniteQuandle& q, Side side) {
  return invariance_violations(f, q, side, false).empty();
}

bool is_order(const LinearOrder& o, const FiniteQuandle& q, Side side) {
  check_size(o.size(), q.size());
  const auto r = o.ranking();
  for (Element s = 0; s < q.size(); ++s) {
    for (std::size_t i = 0; i + 1 < r.size(); ++i) {
      if (!o.less(image(q, side, s, r[i]), image(q, side, s, r[i + 1]))) return false;
    }
  }
  return true;
}

}  // namespace qorder
