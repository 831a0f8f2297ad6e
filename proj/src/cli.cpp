#include "unitwreath/cli.hpp"

#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "unitwreath/catalog.hpp"
#include "unitwreath/construct.hpp"
#include "unitwreath/errors.hpp"
#include "unitwreath/report.hpp"

namespace unitwreath {

namespace {

WitnessConstraints parse_witness(const FiniteGroup& g, const std::string& text) {
  WitnessConstraints w;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw Error("witness item '" + item + "' is not of the form key=word");
    const std::string key = item.substr(0, eq);
    const auto x = g.parse_word(item.substr(eq + 1));
    if (!x) throw Error("cannot parse witness word '" + item.substr(eq + 1) + "'");
    if (key == "a")
      w.a = x;
    else if (key == "b")
      w.b = x;
    else if (key == "z")
      w.z = x;
    else
      throw Error("unknown witness key '" + key + "' (expected a, b or z)");
  }
  return w;
}

int run_check(const CommandConfig& c, std::ostream& out) {
  const FiniteGroup g = load_file(c.input);
  const auto r = check_hypotheses(g);
  if (c.json)
    out << to_json(g, r).dump(2) << '\n';
  else
    out << to_text(g, r);
  return r.pass ? kExitPass : kExitHypothesisFail;
}

int run_construct(const CommandConfig& c, std::ostream& out, std::ostream& err) {
  const FiniteGroup g = load_file(c.input);
  const WitnessConstraints fixed = c.witness ? parse_witness(g, *c.witness) : WitnessConstraints{};
  const auto hyp = check_hypotheses(g);
  if (!hyp.pass) {
    if (c.json)
      out << to_json(g, hyp).dump(2) << '\n';
    else
      out << to_text(g, hyp);
    return kExitHypothesisFail;
  }
  SectionOptions options;
  options.oracle = c.oracle || c.subcommand == "verify";
  options.cap = c.cap;
  try {
    const Witness w = select_witness(g, hyp, fixed);
    const BaseOrbit orbit = build_orbit(g, w);
    const BaseGroup base = verify_base_group(orbit);
    const SectionReport r = build_section(g, w, orbit, base, options);
    if (c.json)
      out << to_json(g, r).dump(2) << '\n';
    else
      out << to_text(g, r);
    return r.verdict ? kExitPass : kExitVerificationFail;
  } catch (const NoWitnessError& e) {
    err << "no witness: " << e.what() << '\n';
  } catch (const ConstructionError& e) {
    err << "construction failed: " << e.what() << '\n';
  } catch (const CapExceededError& e) {
    err << "closure cap exceeded: " << e.what() << '\n';
  }
  return kExitVerificationFail;
}

int run_verify_all(const CommandConfig& c, std::ostream& out, std::ostream& err) {
  SectionOptions options;
  options.oracle = true;
  options.cap = c.cap;
  const auto v = verify_all(c.input, c.order, c.fail_fast ? VerifyMode::first_failure : VerifyMode::collect_all, options);
  if (c.json)
    out << to_json(v).dump(2) << '\n';
  else
    out << to_text(v);
  if (v.vacuous) err << "warning: nothing to verify under " << c.input << '\n';
  if (!v.errors.empty()) return kExitInputError;
  return v.pass ? kExitPass : kExitVerificationFail;
}

int run_scan(const CommandConfig& c, std::ostream& out, std::ostream& err) {
  const auto census = scan(c.input, c.order);
  if (c.json)
    out << to_json(census).dump(2) << '\n';
  else
    out << to_text(census);
  for (const auto& e : census.errors) err << "error: " << e.path.string() << ": " << e.message << '\n';
  return census.errors.empty() ? kExitPass : kExitInputError;
}

int run_model(const CommandConfig& c, std::ostream& out) {
  int s = 0;
  try {
    std::size_t used = 0;
    s = std::stoi(c.input, &used);
    if (used != c.input.size()) throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw Error("model expects an integer s, got '" + c.input + "'");
  }
  if (s < 1) throw Error("model expects s >= 1");
  const WreathModel w = reference_wreath(s);
  if (c.json) {
    out << to_json(w).dump() << '\n';
  } else {
    const auto t = w.table();
    out << "C2 wr C_" << w.width() << ": order " << w.order() << ", base generators";
    for (std::size_t i = 0; i < w.width(); ++i) out << ' ' << w.base_generator(i);
    out << ", top generator " << w.top_generator() << '\n';
    for (std::size_t x = 0; x < t.order(); ++x) {
      for (std::size_t y = 0; y < t.order(); ++y) out << (y ? " " : "") << t(x, y);
      out << '\n';
    }
  }
  return kExitPass;
}

}  // namespace

std::optional<CommandConfig> parse_command_line(const std::vector<std::string>& args, std::ostream& out,
                                                std::ostream& err, int& exit_code) {
  CommandConfig c;
  CLI::App app{"Constructs and verifies wreath-product sections C2 wr G' in unit groups of modular group algebras",
               "unitwreath"};
  app.require_subcommand(1);

  auto* check = app.add_subcommand("check", "Check the hypotheses on a presentation file");
  auto* construct = app.add_subcommand("construct", "Build the witness, orbit, base group and section");
  auto* verify = app.add_subcommand("verify", "construct plus oracle cross-checks; a directory verifies every qualifying group");
  auto* scan_cmd = app.add_subcommand("scan", "Census of hypothesis-passing groups in a corpus directory");
  auto* model = app.add_subcommand("model", "Dump the reference wreath product C2 wr C_(2^s)");

  for (auto* sub : {check, construct, verify}) sub->add_option("file", c.input, "presentation file (.pc2)")->required();
  scan_cmd->add_option("dir", c.input, "corpus directory")->required();
  model->add_option("s", c.input, "log2 of the top group order")->required();
  for (auto* sub : {check, construct, verify, scan_cmd, model}) sub->add_flag("--json", c.json, "emit JSON");
  for (auto* sub : {construct, verify}) {
    sub->add_flag("--oracle", c.oracle, "enable oracle cross-checks (closure and isomorphism search)");
    sub->add_option("--witness", c.witness, "override the witness: a=<word>,b=<word>,z=<word> (any subset)");
    sub->add_option("--cap", c.cap, "element cap for unit-group closures");
  }
  for (auto* sub : {verify, scan_cmd}) sub->add_option("--order", c.order, "only groups of this order");
  verify->add_flag("--fail-fast", c.fail_fast, "stop a directory sweep at the first failure");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    exit_code = app.exit(e, out, err);
    if (exit_code != 0) exit_code = kExitInputError;
    return std::nullopt;
  }
  c.subcommand = app.get_subcommands().front()->get_name();
  return c;
}

int run(const CommandConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.subcommand == "check") return run_check(config, out);
    if (config.subcommand == "construct") return run_construct(config, out, err);
    if (config.subcommand == "verify") {
      if (std::filesystem::is_directory(config.input)) return run_verify_all(config, out, err);
      return run_construct(config, out, err);
    }
    if (config.subcommand == "scan") return run_scan(config, out, err);
    if (config.subcommand == "model") return run_model(config, out);
    err << "unknown subcommand '" << config.subcommand << "'\n";
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitInputError;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  int code = kExitPass;
  const auto config = parse_command_line(args, out, err, code);
  if (!config) return code;
  return run(*config, out, err);
}

}  // namespace unitwreath
