#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qorder_cli/io.hpp"
#include "qorder_cli/runner.hpp"

namespace {

using qorder::cli::Command;
using qorder::cli::RunConfig;

struct Flags {
  std::string input;
  std::string builtin;
  std::string property;
  std::string tier = "checked";
  std::string output;
  std::size_t max_enum = 0;
  std::size_t max_order = 5;
  unsigned threads = 1;
  bool fail_on_no = false;
  bool pretty = false;
};

void add_common(CLI::App* sub, Flags& f) {
  sub->add_option("--max-enum", f.max_enum,
                  "largest carrier for exhaustive enumeration (circular and linear)");
  sub->add_option("--threads", f.threads, "worker threads for enumeration scans");
  sub->add_option("--output", f.output, "write the report to FILE instead of stdout");
  sub->add_flag("--pretty", f.pretty, "indent the JSON report");
  sub->add_flag("--fail-on-no", f.fail_on_no, "exit 1 when the answer is no");
  sub->add_option("--tier", f.tier, "fast | oracle | checked")
      ->check(CLI::IsMember({"fast", "oracle", "checked"}));
}

void add_input(CLI::App* sub, Flags& f) {
  sub->add_option("--input", f.input, "quandle JSON document");
  sub->add_option("--builtin", f.builtin,
                  "built-in family, e.g. trivial:3, dihedral:3, affine:5:2, conj:S3, "
                  "core:Z4, alexander:Z5:2, product:trivial:2+dihedral:3");
  sub->add_option("--property", f.property)
      ->check(CLI::IsMember(
          {"right-circular", "left-circular", "bi-circular", "right-order", "left-order"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Circular and linear orderability of finite quandles"};
  app.require_subcommand(1);

  Flags flags;
  Command command = Command::Check;
  auto* check = app.add_subcommand("check", "decide a property, with witness or certificate");
  auto* enumerate = app.add_subcommand("enumerate", "list every ordering with a property");
  auto* witness = app.add_subcommand("witness", "print a witness ordering only");
  auto* census = app.add_subcommand("census", "classify all quandles up to a given order");
  auto* verify = app.add_subcommand("verify-paper", "run the named checks of the finite claims");

  for (auto* sub : {check, enumerate, witness}) add_input(sub, flags);
  for (auto* sub : {check, enumerate, witness, census, verify}) add_common(sub, flags);
  census->add_option("--max-order", flags.max_order, "largest quandle order (<= 5)");

  check->callback([&] { command = Command::Check; });
  enumerate->callback([&] { command = Command::Enumerate; });
  witness->callback([&] { command = Command::Witness; });
  census->callback([&] { command = Command::Census; });
  verify->callback([&] { command = Command::VerifyPaper; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cout << qorder::cli::Json{{"error", {{"kind", "UsageError"}, {"message", e.what()}}}}.dump()
              << "\n";
    return qorder::cli::kExitInputError;
  }

  RunConfig config;
  config.command = command;
  if (!flags.input.empty()) config.input_file = flags.input;
  if (!flags.builtin.empty()) config.builtin = flags.builtin;
  if (!flags.property.empty()) config.property = qorder::property_from_string(flags.property);
  if (!flags.output.empty()) config.output = flags.output;
  if (flags.max_enum > 0) {
    config.caps.max_circular_n = flags.max_enum;
    config.caps.max_linear_n = flags.max_enum;
  }
  config.threads = flags.threads;
  config.census_max_order = flags.max_order;
  config.fail_on_no = flags.fail_on_no;
  config.pretty = flags.pretty;
  config.tier = flags.tier == "fast"     ? qorder::Tier::Fast
                : flags.tier == "oracle" ? qorder::Tier::Oracle
                                         : qorder::Tier::Checked;

  return qorder::cli::run(config, std::cout);
}
