#include "qorder_cli/runner.hpp"

#include <fstream>

#include "qorder_cli/builtin.hpp"
#include "qorder_cli/io.hpp"
#include "qorder_cli/verify_paper.hpp"

namespace qorder::cli {

const char* to_string(Command c) noexcept {
  switch (c) {
    case Command::Check: return "check";
    case Command::Enumerate: return "enumerate";
    case Command::Witness: return "witness";
    case Command::Census: return "census";
    case Command::VerifyPaper: return "verify-paper";
  }
  return "unknown";
}

namespace {

class ConfigError : public Error {
 public:
  using Error::Error;
};

struct LoadedQuandle {
  FiniteQuandle quandle;
  Json source;
};

LoadedQuandle load_quandle(const RunConfig& config) {
  if (config.input_file.has_value() == config.builtin.has_value()) {
    throw ConfigError("exactly one of --input and --builtin is required");
  }
  if (config.builtin) {
    return {parse_builtin(*config.builtin), Json{{"builtin", *config.builtin}}};
  }
  auto parsed = load_input_file(*config.input_file);
  if (!parsed.is_quandle()) {
    throw ConfigError("input is a group document; build a quandle from it with --builtin "
                      "conj:@FILE, core:@FILE or alexander:@FILE:k");
  }
  Json source{{"file", *config.input_file}};
  if (parsed.name) source["name"] = *parsed.name;
  return {std::get<FiniteQuandle>(std::move(parsed.value)), std::move(source)};
}

// Index base of the input file, for echoing validation witnesses.
std::size_t peek_index_base(const RunConfig& config) {
  if (!config.input_file) return 0;
  std::ifstream in(*config.input_file);
  const auto doc = nlohmann::json::parse(in, nullptr, false);
  if (doc.is_object() && doc.contains("index_base") && doc["index_base"] == 1) return 1;
  return 0;
}

SearchOptions search_options(const RunConfig& config) {
  return SearchOptions{config.caps, config.threads};
}

DecideOptions decide_options(const RunConfig& config) {
  DecideOptions d;
  d.search = search_options(config);
  d.tier = config.tier;
  return d;
}

Json check_report(const RunConfig& config, bool& answer_no) {
  const auto loaded = load_quandle(config);
  const auto v = decide(loaded.quandle, *config.property, decide_options(config));
  answer_no = !v.answer;
  return Json{{"command", "check"},
              {"input", loaded.source},
              {"carrier_size", loaded.quandle.size()},
              {"verdict", to_json(v)}};
}

Json enumerate_report(const RunConfig& config, bool& answer_no) {
  const auto loaded = load_quandle(config);
  const auto space = enumerate_space(loaded.quandle, *config.property, search_options(config));
  answer_no = space.empty();
  return Json{{"command", "enumerate"},
              {"input", loaded.source},
              {"property", to_string(*config.property)},
              {"carrier_size", loaded.quandle.size()},
              {"space", to_json(space)}};
}

Json witness_report(const RunConfig& config, bool& answer_no) {
  const auto loaded = load_quandle(config);
  const auto v = decide(loaded.quandle, *config.property, decide_options(config));
  answer_no = !v.answer;
  Json witness = nullptr;
  if (const auto* c = std::get_if<CyclicOrder>(&v.witness)) witness = to_json(*c);
  if (const auto* o = std::get_if<LinearOrder>(&v.witness)) witness = to_json(*o);
  return Json{{"command", "witness"},
              {"input", loaded.source},
              {"property", to_string(*config.property)},
              {"witness", std::move(witness)}};
}

Json census_report(const RunConfig& config) {
  const auto records = census(config.census_max_order, decide_options(config));
  Json rows = Json::array();
  Json summary = Json::array();
  for (std::size_t n = 1; n <= config.census_max_order; ++n) {
    std::size_t classes = 0, rc = 0, lc = 0, bc = 0, ro = 0, lo = 0;
    for (const auto& r : records) {
      if (r.order != n) continue;
      ++classes;
      rc += r.right_circular;
      lc += r.left_circular;
      bc += r.bi_circular;
      ro += r.right_orderable;
      lo += r.left_orderable;
    }
    summary.push_back(Json{{"order", n},
                           {"classes", classes},
                           {"right_circular", rc},
                           {"left_circular", lc},
                           {"bi_circular", bc},
                           {"right_orderable", ro},
                           {"left_orderable", lo}});
  }
  for (const auto& r : records) rows.push_back(to_json(r));
  return Json{{"command", "census"},
              {"max_order", config.census_max_order},
              {"summary", std::move(summary)},
              {"records", std::move(rows)}};
}

Json verify_report(const RunConfig& config, bool& any_failed) {
  Json checks = Json::array();
  any_failed = false;
  for (const auto& c : verify_paper(search_options(config))) {
    any_failed = any_failed || !c.passed;
    checks.push_back(to_json(c));
  }
  return Json{{"command", "verify-paper"}, {"passed", !any_failed}, {"checks", std::move(checks)}};
}

void emit(const RunConfig& config, const Json& report, std::ostream& out) {
  const std::string text = report.dump(config.pretty ? 2 : -1) + "\n";
  if (config.output) {
    std::ofstream file(*config.output);
    if (!file) throw ConfigError("cannot write report to " + *config.output);
    file << text;
  } else {
    out << text;
  }
}

}  // namespace

int run(const RunConfig& config, std::ostream& out) {
  try {
    const bool needs_property = config.command == Command::Check ||
                                config.command == Command::Enumerate ||
                                config.command == Command::Witness;
    if (needs_property && !config.property) {
      throw ConfigError(std::string("--property is required for ") + to_string(config.command));
    }
    if (config.threads == 0) throw ConfigError("--threads must be positive");

    bool no = false;
    Json report;
    switch (config.command) {
      case Command::Check: report = check_report(config, no); break;
      case Command::Enumerate: report = enumerate_report(config, no); break;
      case Command::Witness: report = witness_report(config, no); break;
      case Command::Census: report = census_report(config); break;
      case Command::VerifyPaper: {
        bool failed = false;
        report = verify_report(config, failed);
        emit(config, report, out);
        return failed ? kExitAnswerNo : kExitOk;
      }
    }
    emit(config, report, out);
    return (config.fail_on_no && no) ? kExitAnswerNo : kExitOk;
  } catch (const ResourceLimit& e) {
    emit(config, Json{{"command", to_string(config.command)}, {"error", error_to_json(e)}}, out);
    return kExitResourceLimit;
  } catch (const NotAQuandle& e) {
    emit(config,
         Json{{"command", to_string(config.command)}, {"error", error_to_json(e, peek_index_base(config))}},
         out);
    return kExitInputError;
  } catch (const NotAGroup& e) {
    emit(config,
         Json{{"command", to_string(config.command)}, {"error", error_to_json(e, peek_index_base(config))}},
         out);
    return kExitInputError;
  } catch (const std::exception& e) {
    Json err = error_to_json(e);
    if (dynamic_cast<const ConfigError*>(&e)) err["kind"] = "ConfigError";
    try {
      emit(config, Json{{"command", to_string(config.command)}, {"error", std::move(err)}}, out);
    } catch (const std::exception&) {
      out << Json{{"error", error_to_json(e)}}.dump() << "\n";
    }
    return kExitInputError;
  }
}

}  // namespace qorder::cli
