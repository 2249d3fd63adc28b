#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "qorder_cli/builtin.hpp"
#include "qorder_cli/io.hpp"
#include "qorder_cli/runner.hpp"
#include "qorder_cli/verify_paper.hpp"

using namespace qorder;
using namespace qorder::cli;

namespace {

namespace fs = std::filesystem;

class TempFile {
 public:
  TempFile(const std::string& stem, const std::string& contents) {
    path_ = fs::temp_directory_path() /
            ("qorder-test-" + stem + "-" + std::to_string(counter_++) + ".json");
    std::ofstream(path_) << contents;
  }
  ~TempFile() {
    std::error_code ec;
    fs::remove(path_, ec);
  }
  std::string path() const { return path_.string(); }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

struct RunResult {
  int code;
  Json report;
};

RunResult run_json(const RunConfig& c) {
  std::ostringstream out;
  const int code = run(c, out);
  return {code, Json::parse(out.str())};
}

RunConfig builtin_config(Command cmd, const std::string& spec,
                         std::optional<Property> p = std::nullopt) {
  RunConfig c;
  c.command = cmd;
  c.builtin = spec;
  c.property = p;
  return c;
}

}  // namespace

TEST_CASE("parse_input reads quandle documents in either index base") {
  const auto zero = parse_input_text(R"({"kind":"quandle","table":[[0,0,1],[1,1,0],[2,2,2]]})");
  const auto one = parse_input_text(
      R"({"kind":"quandle","index_base":1,"name":"x","table":[[1,1,2],[2,2,1],[3,3,3]]})");
  REQUIRE(zero.is_quandle());
  REQUIRE(one.is_quandle());
  CHECK(std::get<FiniteQuandle>(zero.value).table() == std::get<FiniteQuandle>(one.value).table());
  CHECK(one.index_base == 1);
  CHECK(one.name == "x");
  CHECK_FALSE(zero.name);
}

TEST_CASE("parse_input reads group documents") {
  const auto g = parse_input_text(R"({"kind":"group","identity":0,"table":[[0,1],[1,0]]})");
  REQUIRE_FALSE(g.is_quandle());
  CHECK(std::get<FiniteGroup>(g.value).size() == 2);
  CHECK_THROWS_AS(parse_input_text(R"({"kind":"group","table":[[0,1],[1,0]]})"), ParseError);
  CHECK_THROWS_AS(parse_input_text(R"({"kind":"group","identity":0,"table":[[0,1],[1,1]]})"),
                  NotAGroup);
}

TEST_CASE("parse_input rejects malformed documents") {
  CHECK_THROWS_AS(parse_input_text("{"), ParseError);
  CHECK_THROWS_AS(parse_input_text("[]"), ParseError);
  CHECK_THROWS_AS(parse_input_text(R"({"table":[[0]]})"), ParseError);
  CHECK_THROWS_AS(parse_input_text(R"({"kind":"loop","table":[[0]]})"), ParseError);
  CHECK_THROWS_AS(parse_input_text(R"({"kind":"quandle","table":[[0,1],[1]]})"), ParseError);
  CHECK_THROWS_AS(parse_input_text(R"({"kind":"quandle","table":[[0,2],[1,1]]})"), ParseError);
  CHECK_THROWS_AS(parse_input_text(R"({"kind":"quandle","index_base":2,"table":[[0]]})"), ParseError);
  CHECK_THROWS_AS(parse_input_text(R"({"kind":"quandle","table":[]})"), ParseError);
  CHECK_THROWS_AS(parse_input_text(R"({"kind":"quandle","table":[[0,"a"],[1,1]]})"), ParseError);
  CHECK_THROWS_AS(parse_input_text(R"({"kind":"quandle","table":[[1,1],[0,0]]})"), NotAQuandle);
}

TEST_CASE("serialize and parse round trip") {
  for (const auto& q : generate_all_quandles(4, false)) {
    const auto back = parse_input(serialize(q, "q"));
    CHECK(std::get<FiniteQuandle>(back.value).table() == q.table());
    CHECK(back.name == "q");
  }
  const auto g = symmetric_group(3);
  const auto back = parse_input(serialize(g));
  CHECK(std::get<FiniteGroup>(back.value).table() == g.table());
}

TEST_CASE("ordering JSON round trips") {
  for (const auto& a : oracle::all_arrangements(5)) {
    const auto c = CyclicOrder::from_arrangement(a);
    CHECK(cyclic_order_from_json(to_json(c)) == c);
    const auto f = cyclic_to_function(c);
    CHECK(triple_function_from_json(to_json(f), 5) == f);
    CHECK(to_json(f).size() == 60);
  }
  const auto o = LinearOrder::from_ranking({2, 0, 1});
  CHECK(linear_order_from_json(to_json(o)) == o);
  CHECK_THROWS_AS(cyclic_order_from_json(Json{{"arrangement", {0, 3}}}), ParseError);
  CHECK_THROWS_AS(triple_function_from_json(Json::array({Json::array({0, 0, 1, 1})}), 3), ParseError);
  CHECK_THROWS_AS(triple_function_from_json(Json::array({Json::array({0, 1, 2, 5})}), 3), ParseError);
}

TEST_CASE("verdict JSON") {
  const auto j = to_json(decide_right_circular(dihedral_quandle(3)));
  CHECK(j["property"] == "right-circular");
  CHECK(j["answer"] == "no");
  CHECK(j["witness"].is_null());
  CHECK(j["certificate"]["kind"] == "non-cyclic-action");
  CHECK(j["certificate"]["group_order"] == 6);
  const auto y = to_json(decide_right_circular(trivial_quandle(3)));
  CHECK(y["answer"] == "yes");
  CHECK(y["witness"]["arrangement"] == Json::array({0, 1, 2}));
}

TEST_CASE("error JSON echoes witnesses in the input base") {
  try {
    parse_input_text(R"({"kind":"quandle","index_base":1,"table":[[2,1],[1,2]]})");
    FAIL("expected NotAQuandle");
  } catch (const NotAQuandle& e) {
    const auto j = error_to_json(e, 1);
    CHECK(j["kind"] == "NotAQuandle");
    CHECK(j["axiom"] == "idempotency");
    CHECK(j["witness"] == Json::array({0, 0}));
    CHECK(j["witness_in_input_base"] == Json::array({1, 1}));
  }
}

TEST_CASE("builtin specs") {
  CHECK(parse_builtin("trivial:4").table() == trivial_quandle(4).table());
  CHECK(parse_builtin("dihedral:5").table() == dihedral_quandle(5).table());
  CHECK(parse_builtin("affine:7:3").table() == affine_quandle(7, 3).table());
  CHECK(parse_builtin("conj:S3").table() == conj_quandle(symmetric_group(3)).table());
  CHECK(parse_builtin("core:Z5").table() == dihedral_quandle(5).table());
  CHECK(parse_builtin("conj:Z2xZ2").size() == 4);
  CHECK(parse_builtin("alexander:Z5:2").table() ==
        generalized_alexander_quandle(GroupAutomorphism::power_map(cyclic_group(5), 2)).table());
  CHECK(parse_builtin("product:trivial:2+dihedral:3").size() == 6);
  CHECK(parse_group_spec("S4").size() == 24);
  CHECK(parse_group_spec("Z2xZ3").is_abelian());
  CHECK_THROWS_AS(parse_builtin("cube:3"), ParseError);
  CHECK_THROWS_AS(parse_builtin("trivial:x"), ParseError);
  CHECK_THROWS_AS(parse_builtin("trivial:0"), Error);
  CHECK_THROWS_AS(parse_builtin("affine:6:2"), NotInvertible);
  CHECK_THROWS_AS(parse_builtin("alexander:Z4:2"), NotAnAutomorphism);
  CHECK_THROWS_AS(parse_group_spec("Q8"), ParseError);

  const TempFile g("group", serialize(symmetric_group(3)).dump());
  CHECK(parse_builtin("conj:@" + g.path()).table() == conj_quandle(symmetric_group(3)).table());
}

TEST_CASE("run: check reports and exit codes") {
  auto r = run_json(builtin_config(Command::Check, "dihedral:3", Property::RightCircular));
  CHECK(r.code == kExitOk);
  CHECK(r.report["command"] == "check");
  CHECK(r.report["verdict"]["answer"] == "no");
  CHECK(r.report["input"]["builtin"] == "dihedral:3");

  auto c = builtin_config(Command::Check, "conj:S3", Property::RightCircular);
  c.fail_on_no = true;
  CHECK(run_json(c).code == kExitAnswerNo);
  c.builtin = "trivial:3";
  CHECK(run_json(c).code == kExitOk);

  auto missing = builtin_config(Command::Check, "trivial:3");
  r = run_json(missing);
  CHECK(r.code == kExitInputError);
  CHECK(r.report["error"]["kind"] == "ConfigError");

  auto both = builtin_config(Command::Check, "trivial:3", Property::RightOrder);
  both.input_file = "whatever.json";
  CHECK(run_json(both).code == kExitInputError);

  auto big = builtin_config(Command::Check, "trivial:11", Property::RightCircular);
  big.tier = Tier::Oracle;
  r = run_json(big);
  CHECK(r.code == kExitResourceLimit);
  CHECK(r.report["error"]["kind"] == "ResourceLimit");
  big.tier = Tier::Fast;
  CHECK(run_json(big).code == kExitOk);
}

TEST_CASE("run: file inputs") {
  const TempFile good("good", R"({"kind":"quandle","index_base":1,"name":"ex",
                                  "table":[[1,1,2],[2,2,1],[3,3,3]]})");
  RunConfig c;
  c.command = Command::Check;
  c.input_file = good.path();
  c.property = Property::LeftCircular;
  auto r = run_json(c);
  CHECK(r.code == kExitOk);
  CHECK(r.report["input"]["name"] == "ex");
  CHECK(r.report["verdict"]["certificate"]["kind"] == "non-injective-left-translation");

  const TempFile bad("bad", R"({"kind":"quandle","index_base":1,"table":[[2,1],[1,2]]})");
  c.input_file = bad.path();
  r = run_json(c);
  CHECK(r.code == kExitInputError);
  CHECK(r.report["error"]["witness_in_input_base"] == Json::array({1, 1}));

  const TempFile group("grp", serialize(cyclic_group(3)).dump());
  c.input_file = group.path();
  r = run_json(c);
  CHECK(r.code == kExitInputError);
  CHECK(r.report["error"]["kind"] == "ConfigError");

  c.input_file = "/nonexistent/qorder.json";
  r = run_json(c);
  CHECK(r.code == kExitInputError);
  CHECK(r.report["error"]["kind"] == "ParseError");
}

TEST_CASE("run: enumerate, witness, census") {
  auto r = run_json(builtin_config(Command::Enumerate, "trivial:3", Property::RightCircular));
  CHECK(r.code == kExitOk);
  CHECK(r.report["space"]["count"] == 2);
  CHECK(r.report["space"]["members"][1]["arrangement"] == Json::array({0, 2, 1}));

  auto cap = builtin_config(Command::Enumerate, "trivial:6", Property::RightOrder);
  cap.caps.max_linear_n = 5;
  CHECK(run_json(cap).code == kExitResourceLimit);

  r = run_json(builtin_config(Command::Witness, "trivial:2", Property::LeftOrder));
  CHECK(r.code == kExitOk);
  CHECK(r.report["witness"].is_null());

  RunConfig c;
  c.command = Command::Census;
  c.census_max_order = 4;
  r = run_json(c);
  CHECK(r.code == kExitOk);
  CHECK(r.report["records"].size() == 12);
  CHECK(r.report["summary"][3]["classes"] == 7);
}

TEST_CASE("run: reports are deterministic and respect --output") {
  auto c = builtin_config(Command::Enumerate, "dihedral:4", Property::RightCircular);
  c.threads = 3;
  std::ostringstream a, b;
  run(c, a);
  c.threads = 1;
  run(c, b);
  CHECK(a.str() == b.str());

  const TempFile out("out", "");
  c.output = out.path();
  std::ostringstream silent;
  CHECK(run(c, silent) == kExitOk);
  CHECK(silent.str().empty());
  std::ifstream in(out.path());
  std::stringstream text;
  text << in.rdbuf();
  CHECK(text.str() == a.str());
}

TEST_CASE("verify-paper checks all pass") {
  const auto checks = verify_paper();
  CHECK(checks.size() >= 8);
  for (const auto& c : checks) {
    INFO(c.name);
    CHECK(c.passed);
    CHECK_FALSE(to_json(c).contains("seconds"));
  }
  RunConfig c;
  c.command = Command::VerifyPaper;
  const auto r = run_json(c);
  CHECK(r.code == kExitOk);
  CHECK(r.report["passed"] == true);
}
