#include "qorder/permutation.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

namespace qorder {

bool is_bijection(std::span<const Element> map) noexcept {
  std::vector<bool> seen(map.size(), false);
  for (Element y : map) {
    if (y >= map.size() || seen[y]) return false;
    seen[y] = true;
  }
  return true;
}

Permutation::Permutation(std::vector<Element> images) : images_(std::move(images)) {
  if (!is_bijection(images_)) {
    throw NotAPermutation("image array is not a bijection of {0.." +
                          std::to_string(images_.size()) + "-1}");
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Element> id(degree);
  std::iota(id.begin(), id.end(), Element{0});
  return Permutation(std::move(id));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Element> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Element>(i);
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

std::size_t Permutation::order() const {
  // lcm of cycle lengths
  std::vector<bool> seen(images_.size(), false);
  std::size_t result = 1;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    for (Element x = static_cast<Element>(start); !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::string Permutation::cycle_string() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    out += '(';
    bool first = true;
    for (Element x = static_cast<Element>(start); !seen[x]; x = images_[x]) {
      seen[x] = true;
      if (!first) out += ' ';
      out += std::to_string(x);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw NotAPermutation("composing permutations of different degree");
  std::vector<Element> r(q.degree());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = p.images_[q.images_[i]];
  Permutation out;
  out.images_ = std::move(r);
  return out;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (Element x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return h;
}

PermutationGroup PermutationGroup::closure(std::span<const Permutation> generators,
                                           std::size_t degree, std::size_t max_order) {
  for (const auto& g : generators) {
    if (g.degree() != degree) {
      throw NotAPermutation("generator has degree " + std::to_string(g.degree()) +
                            ", expected " + std::to_string(degree));
    }
  }
  // Right-multiplying by generators from the identity reaches every element:
  // in a finite group inverses are positive powers.
  std::vector<Permutation> gens;
  for (const auto& g : generators) {
    if (!g.is_identity() && std::find(gens.begin(), gens.end(), g) == gens.end()) {
      gens.push_back(g);
    }
  }
  std::unordered_set<Permutation, PermutationHash> seen;
  std::deque<Permutation> queue;
  auto id = Permutation::identity(degree);
  seen.insert(id);
  queue.push_back(std::move(id));
  while (!queue.empty()) {
    Permutation x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      Permutation y = x * g;
      if (seen.insert(y).second) {
        if (seen.size() > max_order) {
          throw ResourceLimit("permutation group closure exceeds the cap of " +
                              std::to_string(max_order) + " elements");
        }
        queue.push_back(std::move(y));
      }
    }
  }
  PermutationGroup group;
  group.degree_ = degree;
  group.elements_.assign(seen.begin(), seen.end());
  std::sort(group.elements_.begin(), group.elements_.end());
  return group;
}

bool PermutationGroup::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

std::vector<std::vector<Element>> PermutationGroup::orbits() const {
  std::vector<std::vector<Element>> out;
  std::vector<bool> seen(degree_, false);
  for (Element x = 0; x < degree_; ++x) {
    if (seen[x]) continue;
    std::vector<Element> orbit;
    for (const auto& g : elements_) {
      Element y = g(x);
      if (!seen[y]) {
        seen[y] = true;
        orbit.push_back(y);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

std::optional<Permutation> cyclic_generator(const PermutationGroup& g) {
  for (const auto& p : g.elements()) {
    if (p.order() == g.order()) return p;
  }
  return std::nullopt;
}

bool is_cyclic(const PermutationGroup& g) { return cyclic_generator(g).has_value(); }

std::size_t max_element_order(const PermutationGroup& g) {
  std::size_t best = 1;
  for (const auto& p : g.elements()) best = std::max(best, p.order());
  return best;
}

bool is_semiregular(const PermutationGroup& g) {
  const auto orbits = g.orbits();
  return std::all_of(orbits.begin(), orbits.end(),
                     [&](const auto& orbit) { return orbit.size() == g.order(); });
}

std::optional<std::pair<Permutation, Element>> nonidentity_fixed_point(const PermutationGroup& g) {
  for (const auto& p : g.elements()) {
    if (p.is_identity()) continue;
    for (Element x = 0; x < p.degree(); ++x) {
      if (p(x) == x) return std::make_pair(p, x);
    }
  }
  return std::nullopt;
}

bool is_semiregular_by_fixed_points(const PermutationGroup& g) {
  return g.degree() % g.order() == 0 && !nonidentity_fixed_point(g).has_value();
}

}  // namespace qorder
