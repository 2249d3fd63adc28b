#include "qorder/quandle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace qorder {

const char* to_string(QuandleAxiom axiom) noexcept {
  switch (axiom) {
    case QuandleAxiom::Idempotency: return "idempotency";
    case QuandleAxiom::RightInvertibility: return "right-invertibility";
    case QuandleAxiom::RightDistributivity: return "right-distributivity";
  }
  return "unknown";
}

const char* to_string(Side side) noexcept { return side == Side::Left ? "left" : "right"; }

namespace {

std::string witness_string(const std::vector<Element>& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s + ")";
}

long long mod(long long a, long long n) { return ((a % n) + n) % n; }

}  // namespace

NotAQuandle::NotAQuandle(QuandleAxiom axiom, std::vector<Element> witness)
    : Error(std::string("not a quandle: ") + to_string(axiom) + " fails at " +
            witness_string(witness)),
      axiom_(axiom),
      witness_(std::move(witness)) {}

FiniteQuandle FiniteQuandle::from_table(Table table) {
  const auto n = static_cast<Element>(table.size());
  if (n == 0) throw ShapeError("quandle carrier must be nonempty");

  for (Element s = 0; s < n; ++s) {
    if (table(s, s) != s) throw NotAQuandle(QuandleAxiom::Idempotency, {s, s});
  }

  Table dual(n);
  for (Element j = 0; j < n; ++j) {
    std::vector<Element> preimage(n, n);
    for (Element i = 0; i < n; ++i) {
      const Element v = table(i, j);
      if (preimage[v] != n) {
        // two distinct elements with the same product under column j
        throw NotAQuandle(QuandleAxiom::RightInvertibility, {preimage[v], i, j});
      }
      preimage[v] = i;
    }
    for (Element v = 0; v < n; ++v) dual(v, j) = preimage[v];
  }

  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      const Element ab = table(a, b);
      for (Element c = 0; c < n; ++c) {
        if (table(ab, c) != table(table(a, c), table(b, c))) {
          throw NotAQuandle(QuandleAxiom::RightDistributivity, {a, b, c});
        }
      }
    }
  }

  FiniteQuandle q;
  q.table_ = std::move(table);
  q.dual_ = std::move(dual);
  return q;
}

FiniteQuandle trivial_quandle(std::size_t n) {
  Table t(n);
  for (Element i = 0; i < n; ++i) {
    for (Element j = 0; j < n; ++j) t(i, j) = i;
  }
  return FiniteQuandle::from_table(std::move(t));
}

FiniteQuandle dihedral_quandle(std::size_t n) {
  const auto m = static_cast<long long>(n);
  Table t(n);
  for (Element i = 0; i < n; ++i) {
    for (Element j = 0; j < n; ++j) t(i, j) = static_cast<Element>(mod(2LL * j - i, m));
  }
  return FiniteQuandle::from_table(std::move(t));
}

FiniteQuandle affine_quandle(std::size_t n, long long alpha) {
  const auto m = static_cast<long long>(n);
  if (m == 0) throw ShapeError("quandle carrier must be nonempty");
  const long long a = mod(alpha, m);
  if (std::gcd(a, m) != 1 && m != 1) {
    throw NotInvertible("alpha = " + std::to_string(alpha) + " is not invertible mod " +
                        std::to_string(n));
  }
  Table t(n);
  for (Element i = 0; i < n; ++i) {
    for (Element j = 0; j < n; ++j) {
      t(i, j) = static_cast<Element>(mod(a * i + (1 - a) * static_cast<long long>(j), m));
    }
  }
  return FiniteQuandle::from_table(std::move(t));
}

FiniteQuandle conj_quandle(const FiniteGroup& g) {
  const auto n = static_cast<Element>(g.size());
  Table t(n);
  for (Element i = 0; i < n; ++i) {
    for (Element j = 0; j < n; ++j) t(i, j) = g.multiply(g.multiply(g.inverse(j), i), j);
  }
  return FiniteQuandle::from_table(std::move(t));
}

FiniteQuandle core_quandle(const FiniteGroup& g) {
  const auto n = static_cast<Element>(g.size());
  Table t(n);
  for (Element i = 0; i < n; ++i) {
    for (Element j = 0; j < n; ++j) t(i, j) = g.multiply(g.multiply(j, g.inverse(i)), j);
  }
  return FiniteQuandle::from_table(std::move(t));
}

FiniteQuandle generalized_alexander_quandle(const GroupAutomorphism& phi) {
  const auto& g = phi.group();
  const auto n = static_cast<Element>(g.size());
  Table t(n);
  for (Element i = 0; i < n; ++i) {
    for (Element j = 0; j < n; ++j) {
      t(i, j) = g.multiply(phi(g.multiply(i, g.inverse(j))), j);
    }
  }
  return FiniteQuandle::from_table(std::move(t));
}

FiniteQuandle product_quandle(std::span<const FiniteQuandle> factors) {
  if (factors.empty()) throw ShapeError("product of an empty list of quandles");
  std::vector<std::size_t> radices;
  for (const auto& f : factors) radices.push_back(f.size());
  const MixedRadix enc(radices);
  const auto n = static_cast<Element>(enc.total());

  std::vector<std::vector<Element>> digits(n);
  for (Element x = 0; x < n; ++x) digits[x] = enc.decode(x);

  Table t(n);
  std::vector<Element> z(factors.size());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (std::size_t k = 0; k < factors.size(); ++k) {
        z[k] = factors[k].op(digits[x][k], digits[y][k]);
      }
      t(x, y) = enc.encode(z);
    }
  }
  return FiniteQuandle::from_table(std::move(t));
}

FiniteQuandle dual_op(const FiniteQuandle& q) {
  const auto n = static_cast<Element>(q.size());
  Table t(n);
  for (Element s = 0; s < n; ++s) {
    for (Element r = 0; r < n; ++r) t(s, r) = q.dual(s, r);
  }
  return FiniteQuandle::from_table(std::move(t));
}

Translation right_translation(const FiniteQuandle& q, Element s) {
  return {Side::Right, s, q.table().column(s)};
}

Translation left_translation(const FiniteQuandle& q, Element s) {
  const auto row = q.table().row(s);
  return {Side::Left, s, std::vector<Element>(row.begin(), row.end())};
}

Translation translation(const FiniteQuandle& q, Side side, Element s) {
  return side == Side::Left ? left_translation(q, s) : right_translation(q, s);
}

PermutationGroup inner_group(const FiniteQuandle& q, std::size_t max_order) {
  std::vector<Permutation> gens;
  gens.reserve(q.size());
  for (Element s = 0; s < q.size(); ++s) gens.emplace_back(q.table().column(s));
  return PermutationGroup::closure(gens, q.size(), max_order);
}

bool is_latin(const FiniteQuandle& q) {
  for (Element s = 0; s < q.size(); ++s) {
    if (!is_bijection(q.table().row(s))) return false;
  }
  return true;
}

bool is_semi_latin(const FiniteQuandle& q) {
  const auto n = q.size();
  for (Element s = 0; s < n; ++s) {
    const auto row = q.table().row(s);
    std::vector<bool> seen(n, false);
    for (Element v : row) {
      if (seen[v]) return false;
      seen[v] = true;
    }
  }
  return true;
}

bool is_involutory(const FiniteQuandle& q) {
  for (Element s = 0; s < q.size(); ++s) {
    for (Element t = 0; t < q.size(); ++t) {
      if (q.op(q.op(t, s), s) != t) return false;
    }
  }
  return true;
}

std::vector<Element> stabilizer_elements(const FiniteQuandle& q) {
  std::vector<Element> out;
  for (Element e = 0; e < q.size(); ++e) {
    bool fixes_all = true;
    for (Element s = 0; s < q.size() && fixes_all; ++s) fixes_all = q.op(s, e) == s;
    if (fixes_all) out.push_back(e);
  }
  return out;
}

bool is_trivial_quandle(const FiniteQuandle& q) { return stabilizer_elements(q).size() == q.size(); }

std::vector<std::vector<Element>> orbits(const FiniteQuandle& q) {
  // Orbits of the group generated by the R_s are the connected components of
  // the graph with edges t ~ t∗s; no need to materialize the group.
  const auto n = q.size();
  std::vector<Element> parent(n);
  std::iota(parent.begin(), parent.end(), Element{0});
  auto find = [&](Element x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Element t = 0; t < n; ++t) {
    for (Element s = 0; s < n; ++s) {
      const Element a = find(t), b = find(q.op(t, s));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::vector<Element>> out;
  std::vector<int> slot(n, -1);
  for (Element x = 0; x < n; ++x) {
    const Element r = find(x);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[static_cast<std::size_t>(slot[r])].push_back(x);
  }
  return out;
}

bool is_subquandle(const FiniteQuandle& q, std::span<const Element> subset) {
  if (subset.empty()) return false;
  std::vector<bool> member(q.size(), false);
  for (Element x : subset) {
    if (x >= q.size()) return false;
    member[x] = true;
  }
  for (Element a : subset) {
    for (Element b : subset) {
      if (!member[q.op(a, b)]) return false;
    }
  }
  return true;
}

}  // namespace qorder
