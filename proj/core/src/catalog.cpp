#include "qorder/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace qorder {

FiniteQuandle relabel(const FiniteQuandle& q, const Permutation& sigma) {
  const auto n = static_cast<Element>(q.size());
  if (sigma.degree() != n) throw NotAPermutation("relabeling has the wrong degree");
  Table t(n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) t(sigma(a), sigma(b)) = sigma(q.op(a, b));
  }
  return FiniteQuandle::from_table(std::move(t));
}

namespace {

template <class Visit>
void for_each_relabeling(std::size_t n, Visit visit) {
  std::vector<Element> images(n);
  std::iota(images.begin(), images.end(), Element{0});
  do {
    if (!visit(images)) return;
  } while (std::next_permutation(images.begin(), images.end()));
}

}  // namespace

Table canonical_table(const FiniteQuandle& q) {
  const auto n = static_cast<Element>(q.size());
  Table best = q.table();
  Table candidate(n);
  for_each_relabeling(n, [&](const std::vector<Element>& sigma) {
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) candidate(sigma[a], sigma[b]) = sigma[q.op(a, b)];
    }
    if (candidate < best) best = candidate;
    return true;
  });
  return best;
}

namespace {

bool is_isomorphism(const FiniteQuandle& a, const FiniteQuandle& b,
                    const std::vector<Element>& sigma) {
  const auto n = static_cast<Element>(a.size());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (sigma[a.op(x, y)] != b.op(sigma[x], sigma[y])) return false;
    }
  }
  return true;
}

}  // namespace

bool are_isomorphic(const FiniteQuandle& a, const FiniteQuandle& b) {
  if (a.size() != b.size()) return false;
  bool found = false;
  for_each_relabeling(a.size(), [&](const std::vector<Element>& sigma) {
    found = is_isomorphism(a, b, sigma);
    return !found;
  });
  return found;
}

std::size_t automorphism_count(const FiniteQuandle& q) {
  std::size_t count = 0;
  for_each_relabeling(q.size(), [&](const std::vector<Element>& sigma) {
    if (is_isomorphism(q, q, sigma)) ++count;
    return true;
  });
  return count;
}

namespace {

class QuandleBacktracker {
 public:
  explicit QuandleBacktracker(std::size_t n) : n_(static_cast<Element>(n)), table_(n) {
    // candidate columns: permutations fixing the diagonal entry
    candidates_.resize(n);
    std::vector<Element> p(n);
    std::iota(p.begin(), p.end(), Element{0});
    do {
      for (Element j = 0; j < n_; ++j) {
        if (p[j] == j) candidates_[j].push_back(p);
      }
    } while (std::next_permutation(p.begin(), p.end()));
  }

  std::vector<FiniteQuandle> run() {
    place(0);
    return std::move(found_);
  }

 private:
  void place(Element col) {
    if (col == n_) {
      found_.push_back(FiniteQuandle::from_table(table_));
      return;
    }
    for (const auto& perm : candidates_[col]) {
      for (Element i = 0; i < n_; ++i) table_(i, col) = perm[i];
      if (consistent(col)) place(col + 1);
    }
  }

  // (a∗b)∗c = (a∗c)∗(b∗c) on every triple whose columns b, c and b∗c are
  // assigned, skipping triples already checked at an earlier column.
  bool consistent(Element col) const {
    for (Element b = 0; b <= col; ++b) {
      for (Element c = 0; c <= col; ++c) {
        const Element bc = table_(b, c);
        if (bc > col) continue;
        if (b != col && c != col && bc != col) continue;
        for (Element a = 0; a < n_; ++a) {
          if (table_(table_(a, b), c) != table_(table_(a, c), bc)) return false;
        }
      }
    }
    return true;
  }

  Element n_;
  Table table_;
  std::vector<std::vector<std::vector<Element>>> candidates_;
  std::vector<FiniteQuandle> found_;
};

}  // namespace

std::vector<FiniteQuandle> generate_all_quandles(std::size_t n, bool up_to_iso, const Caps& caps) {
  if (n == 0) throw ShapeError("quandle carrier must be nonempty");
  if (n > caps.max_catalog_n) {
    throw ResourceLimit("quandle generation of order " + std::to_string(n) +
                        " exceeds the cap n <= " + std::to_string(caps.max_catalog_n));
  }
  auto labelled = QuandleBacktracker(n).run();
  std::sort(labelled.begin(), labelled.end(),
            [](const auto& a, const auto& b) { return a.table() < b.table(); });
  if (!up_to_iso) return labelled;

  std::set<Table> classes;
  for (const auto& q : labelled) classes.insert(canonical_table(q));
  std::vector<FiniteQuandle> reps;
  reps.reserve(classes.size());
  for (const auto& t : classes) reps.push_back(FiniteQuandle::from_table(t));
  return reps;
}

std::vector<CensusRecord> census(std::size_t max_n, const DecideOptions& opts) {
  std::vector<CensusRecord> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    const auto reps = generate_all_quandles(n, true, opts.search.caps);
    for (std::size_t id = 0; id < reps.size(); ++id) {
      const auto& q = reps[id];
      CensusRecord r;
      r.order = n;
      r.class_id = id;
      r.representative = q;
      r.right_circular = decide_right_circular(q, opts).answer;
      r.left_circular = decide_left_circular(q, opts).answer;
      r.bi_circular = decide_bicircular(q, opts).answer;
      r.right_orderable = decide_right_orderable(q, opts).answer;
      r.left_orderable = decide_left_orderable(q, opts).answer;
      r.latin = is_latin(q);
      r.involutory = is_involutory(q);
      r.trivial = is_trivial_quandle(q);
      for (const auto& orbit : orbits(q)) r.orbit_sizes.push_back(orbit.size());
      std::sort(r.orbit_sizes.begin(), r.orbit_sizes.end());
      r.automorphisms = automorphism_count(q);
      r.rco_size = enumerate_rco(q, opts.search).size();
      r.lco_size = enumerate_lco(q, opts.search).size();
      r.bco_size = enumerate_bicircular(q, opts.search).size();
      r.ro_size = enumerate_right_orderings(q, opts.search).size();
      r.lo_size = enumerate_left_orderings(q, opts.search).size();
      out.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace qorder
