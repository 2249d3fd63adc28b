#include "qorder_cli/verify_paper.hpp"

#include <chrono>
#include <functional>

namespace qorder::cli {

namespace {

// 1-indexed on purpose, so the check also exercises input normalization.
constexpr const char* kThreeElementDocument =
    R"({"kind":"quandle","index_base":1,"table":[[1,1,2],[2,2,1],[3,3,3]]})";

struct Outcome {
  bool passed = true;
  Json detail = Json::object();

  void require(bool condition, const std::string& what) {
    if (!condition) {
      passed = false;
      detail["failures"].push_back(what);
    }
  }
};

Json space_json(const OrderSpace& s) { return to_json(s); }

Outcome three_element(const SearchOptions& opts) {
  Outcome out;
  const auto q = std::get<FiniteQuandle>(parse_input_text(kThreeElementDocument).value);
  const auto rco = enumerate_rco(q, opts);
  const auto lco = enumerate_lco(q, opts);
  out.require(rco.empty(), "RCO is nonempty");
  out.require(lco.empty(), "LCO is nonempty");
  DecideOptions d{opts, Tier::Checked, 8};
  const auto right = decide_right_circular(q, d);
  const auto left = decide_left_circular(q, d);
  out.require(!right.answer && recheck_verdict(right, q, opts), "right verdict");
  out.require(!left.answer && recheck_verdict(left, q, opts), "left verdict");
  out.detail["rco"] = space_json(rco);
  out.detail["lco"] = space_json(lco);
  out.detail["right"] = to_json(right);
  out.detail["left"] = to_json(left);
  return out;
}

Outcome dihedral3(const SearchOptions& opts) {
  Outcome out;
  const auto q = dihedral_quandle(3);
  const auto rco = enumerate_rco(q, opts);
  const auto lco = enumerate_lco(q, opts);
  out.require(rco.empty(), "RCO is nonempty");
  out.require(lco.empty(), "LCO is nonempty");
  const auto right = decide_right_circular(q, DecideOptions{opts, Tier::Checked, 8});
  const auto left = decide_left_circular(q, DecideOptions{opts, Tier::Checked, 8});
  out.require(!right.answer && right.certificate &&
                  right.certificate->kind == CertificateKind::NonCyclicAction &&
                  right.certificate->group_order == 6 && recheck_verdict(right, q, opts),
              "right certificate is not a non-cyclic action of order 6");
  out.require(!left.answer && recheck_verdict(left, q, opts), "left verdict");
  out.detail["rco_count"] = rco.size();
  out.detail["lco_count"] = lco.size();
  out.detail["right"] = to_json(right);
  out.detail["left"] = to_json(left);
  return out;
}

Outcome trivial2(const SearchOptions& opts) {
  Outcome out;
  const auto q = trivial_quandle(2);
  const auto bco = enumerate_bicircular(q, opts);
  out.require(bco.size() == 1, "expected exactly one bi-circular ordering");
  if (bco.size() == 1) {
    out.require(cyclic_to_function(bco.circular.front()) == TripleFunction(2),
                "the ordering is not the zero function");
  }
  // and the quandle is not left orderable
  out.require(enumerate_left_orderings(q, opts).empty(), "trivial(2) has a left ordering");
  out.detail["bco"] = space_json(bco);
  return out;
}

Outcome conj_lemma(const SearchOptions& opts) {
  Outcome out;
  const std::vector<std::pair<std::string, FiniteGroup>> groups = {
      {"Z3", cyclic_group(3)},
      {"Z4", cyclic_group(4)},
      {"Z2xZ2", direct_product(cyclic_group(2), cyclic_group(2))},
      {"S3", symmetric_group(3)}};
  for (const auto& [name, g] : groups) {
    const auto lco = enumerate_lco(conj_quandle(g), opts);
    out.require(lco.empty(), "LCO(Conj(" + name + ")) is nonempty");
    out.detail[name] = lco.size();
  }
  return out;
}

Outcome ordering_lemma(const SearchOptions& opts) {
  Outcome out;
  std::size_t quandles = 0, right_orders = 0, left_orders = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& q : generate_all_quandles(n, false, opts.caps)) {
      ++quandles;
      const auto rco = enumerate_rco(q, opts).circular;
      const auto lco = enumerate_lco(q, opts).circular;
      for (const auto& o : enumerate_right_orderings(q, opts).linear) {
        ++right_orders;
        out.require(std::binary_search(rco.begin(), rco.end(), circular_from_linear(o)),
                    "a right ordering maps outside RCO");
      }
      for (const auto& o : enumerate_left_orderings(q, opts).linear) {
        ++left_orders;
        out.require(std::binary_search(lco.begin(), lco.end(), circular_from_linear(o)),
                    "a left ordering maps outside LCO");
      }
    }
  }
  out.detail["quandles"] = quandles;
  out.detail["right_orderings"] = right_orders;
  out.detail["left_orderings"] = left_orders;
  return out;
}

Outcome subbasis(const SearchOptions& opts) {
  Outcome out;
  const auto q = trivial_quandle(3);
  const auto rco = enumerate_rco(q, opts);
  const auto rs = subbasic_right(q, {0, 1, 2}, opts);
  out.require(rco.size() == 2 && rs.size() == 1, "R_(0,1,2) should hold one of two orderings");
  bool rejected = false;
  try {
    (void)subbasic_right(q, {0, 0, 1}, opts);
  } catch (const DegenerateTriple&) {
    rejected = true;
  }
  out.require(rejected, "degenerate triple was accepted");
  Json pairs = Json::array();
  for (Element a = 0; a < 3; ++a) {
    for (Element b = 0; b < 3; ++b) {
      if (a == b) continue;
      const auto v = subbasic_linear(q, Side::Right, a, b, opts);
      out.require(v.size() == 3, "V_(a,b) does not have 3 members");
      pairs.push_back(Json{{"pair", {a, b}}, {"count", v.size()}});
    }
  }
  out.detail["R_(0,1,2)"] = rs.empty() ? Json(nullptr) : to_json(rs.front());
  out.detail["V"] = std::move(pairs);
  return out;
}

Outcome embedding(const SearchOptions& opts) {
  Outcome out;
  const auto q = trivial_quandle(3);
  const auto report = embedding_image(q, Side::Right, opts);
  const auto rco = enumerate_rco(q, opts).circular;
  out.require(report.domain.size() == 6, "domain size is not 6");
  out.require(report.image.size() == 2, "image size is not 2");
  for (const auto& f : report.fibers) out.require(f.preimage.size() == 3, "fiber size is not 3");
  out.require(report.image_in_space, "image fails right invariance");
  for (const auto& c : report.image) {
    out.require(std::binary_search(rco.begin(), rco.end(), c), "image member outside RCO");
  }
  out.detail["report"] = to_json(report);
  return out;
}

Outcome conj_of_bi_invariant(const SearchOptions& opts) {
  // A circular ordering of G invariant under both multiplications is a
  // right circular ordering of Conj(G).
  Outcome out;
  struct Case {
    std::string name;
    FiniteGroup group;
    bool cyclic;
  };
  std::vector<Case> groups;
  for (std::size_t n = 1; n <= 6; ++n) groups.push_back({"Z" + std::to_string(n), cyclic_group(n), true});
  groups.push_back({"Z2xZ2", direct_product(cyclic_group(2), cyclic_group(2)), false});
  groups.push_back({"S3", symmetric_group(3), false});
  for (const auto& [name, g, cyclic] : groups) {
    std::size_t bi_invariant = 0;
    const auto conj = conj_quandle(g);
    for (const auto& c : enumerate_circular_orderings(g.size(), opts.caps)) {
      bool invariant = true;
      for (Element x = 0; x < g.size() && invariant; ++x) {
        invariant = preserves(c, g.left_multiplication(x).images()) &&
                    preserves(c, g.right_multiplication(x).images());
      }
      if (!invariant) continue;
      ++bi_invariant;
      out.require(is_right_invariant(c, conj), "Conj(" + name + ") loses right invariance");
    }
    if (cyclic) {
      out.require(bi_invariant > 0, name + " should carry its rotation ordering");
    }
    out.detail[name] = bi_invariant;
  }
  return out;
}

}  // namespace

std::vector<NamedCheck> verify_paper(const SearchOptions& opts) {
  struct Spec {
    const char* name;
    const char* statement;
    std::function<Outcome(const SearchOptions&)> run;
  };
  const std::vector<Spec> specs = {
      {"example:three-element-neither",
       "RCO and LCO of the 3-element quandle with orbits {0,1},{2} are empty",
       three_element},
      {"example:dihedral3-neither",
       "RCO and LCO of dihedral(3) are empty; the right action is non-cyclic of order 6", dihedral3},
      {"example:trivial-2-bicircular",
       "BCO of trivial(2) is exactly the zero ordering; LO of trivial(2) is empty",
       trivial2},
      {"lemma:conj-not-left-circular",
       "LCO(Conj(G)) is empty for G in Z3, Z4, Z2xZ2, S3", conj_lemma},
      {"lemma:ordering",
       "c_o lies in RCO (LCO) for every o in RO (LO), all quandles of order <= 4", ordering_lemma},
      {"subbasis:trivial3", "R_(0,1,2) has one member, degenerate S is rejected, each V_(a,b) has 3 members on trivial(3)",
       subbasis},
      {"embedding:trivial3-right", "RO -> RCO on trivial(3): domain 6, image 2, fibers of size 3",
       embedding},
      {"proposition:conj-bi-invariant",
       "circular orderings of G invariant on both sides are right-invariant for Conj(G)",
       conj_of_bi_invariant},
  };

  std::vector<NamedCheck> results;
  for (const auto& spec : specs) {
    NamedCheck check{spec.name, spec.statement, false, Json::object(), 0.0};
    const auto t0 = std::chrono::steady_clock::now();
    try {
      auto outcome = spec.run(opts);
      check.passed = outcome.passed;
      check.detail = std::move(outcome.detail);
    } catch (const std::exception& e) {
      check.passed = false;
      check.detail = Json{{"error", error_to_json(e)}};
    }
    check.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    results.push_back(std::move(check));
  }
  return results;
}

Json to_json(const NamedCheck& check) {
  return Json{{"name", check.name},
              {"statement", check.statement},
              {"passed", check.passed},
              {"detail", check.detail}};
}

}  // namespace qorder::cli
