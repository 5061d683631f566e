#include "mproc/cli.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mproc/diagonal.hpp"
#include "mproc/dsl.hpp"
#include "mproc/executor.hpp"
#include "mproc/quote.hpp"
#include "mproc/repeatability.hpp"
#include "mproc/world_config.hpp"

namespace mproc::cli {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Common {
  std::string format = "human";
  std::uint64_t seed = kDefaultSeed;
  std::size_t budget = kDefaultBudget;
  std::string world_path;

  bool json_out() const { return format == "json"; }
};

void add_common(CLI::App* app, Common& c, bool with_world = true) {
  app->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"human", "json"}))->capture_default_str();
  app->add_option("--seed", c.seed, "World seed")->capture_default_str();
  app->add_option("--budget", c.budget, "Step budget")->check(CLI::PositiveNumber)->capture_default_str();
  if (with_world) app->add_option("--world", c.world_path, "World configuration (JSON)");
}

ordered_json header(std::string_view command, const Common& c) {
  ordered_json j;
  j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  j["command"] = command;
  j["seed"] = c.seed;
  j["budget"] = c.budget;
  return j;
}

struct LoadedWorld {
  WorldConfig config;
  std::string digest = "none";
};

LoadedWorld load_world(const std::string& path) {
  LoadedWorld w;
  if (path.empty()) return w;
  const auto text = read_file(path);
  w.config = parse_world_config(text);
  w.digest = digest(text);
  return w;
}

ordered_json outcome_json(const RunOutcome& o) {
  ordered_json j;
  j["status"] = to_string(o.status);
  j["result"] = o.result ? json(*o.result) : json(nullptr);
  j["steps"] = o.steps;
  if (!o.error.empty()) j["error"] = o.error;
  if (!o.trace.empty()) {
    auto& t = j["trace"] = ordered_json::array();
    for (const auto& e : o.trace) {
      ordered_json row{{"step", e.step}, {"state", to_string(e.state)}, {"head", e.head},
                       {"read", std::string(1, e.read)}, {"instruction", e.instruction}};
      if (e.response) row["response"] = to_string(*e.response);
      t.push_back(row);
    }
  }
  return j;
}

void print_outcome_human(std::ostream& out, const RunOutcome& o) {
  out << "status  " << to_string(o.status) << '\n';
  out << "result  " << (o.result ? "\"" + *o.result + "\"" : std::string("-")) << '\n';
  out << "steps   " << o.steps << '\n';
  if (!o.error.empty()) out << "error   " << o.error << '\n';
  for (const auto& e : o.trace) {
    out << "  " << std::setw(6) << e.step << "  " << std::setw(6) << to_string(e.state) << "  head " << std::setw(4)
        << e.head << "  " << e.instruction;
    if (e.response) out << "  -> " << to_string(*e.response);
    out << '\n';
  }
}

void print_human_header(std::ostream& out, const Common& c) {
  out << kToolName << ' ' << kToolVersion << "  seed " << c.seed << "  budget " << c.budget << '\n';
}

int cmd_validate(const std::string& path, const Common& c, std::ostream& out) {
  const auto text = read_file(path);
  const Machine m = parse_dsl_unchecked(text);
  const auto report = validate_machine(m);
  if (c.json_out()) {
    auto j = header("validate", c);
    j["inputs"] = {{"machine", {{"path", path}, {"digest", digest(text)}}}};
    j["valid"] = report.valid();
    auto& v = j["violations"] = ordered_json::array();
    for (const auto& x : report.violations) {
      v.push_back({{"kind", to_string(x.kind)},
                   {"message", x.message},
                   {"informational", x.kind == ViolationKind::UnreachableState}});
    }
    out << j.dump(2) << '\n';
  } else {
    out << path << ": " << (report.valid() ? "valid" : "invalid") << '\n';
    for (const auto& x : report.violations) {
      out << "  " << (x.kind == ViolationKind::UnreachableState ? "note: " : "error: ") << x.message << '\n';
    }
  }
  return report.valid() ? kOk : kNegative;
}

int cmd_run(const std::string& path, const std::string& input, bool trace, const Common& c, std::ostream& out) {
  const auto text = read_file(path);
  const Machine m = parse_dsl(text);
  const auto world = load_world(c.world_path);
  ProviderSet providers = build_world(world.config, c.seed);
  const auto outcome =
      run(m, input, providers, {.budget = c.budget, .trace = trace ? TraceLevel::Steps : TraceLevel::None});
  if (c.json_out()) {
    auto j = header("run", c);
    j["inputs"] = {{"machine", {{"path", path}, {"digest", digest(text)}}},
                   {"world", {{"path", c.world_path}, {"digest", world.digest}}},
                   {"input", input}};
    j["outcome"] = outcome_json(outcome);
    out << j.dump(2) << '\n';
  } else {
    print_human_header(out, c);
    print_outcome_human(out, outcome);
  }
  return kOk;
}

int cmd_quote(const std::string& path, const Common& c, std::ostream& out) {
  const auto text = read_file(path);
  const auto code = quote(parse_dsl(text));
  if (c.json_out()) {
    ordered_json j;
    j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
    j["command"] = "quote";
    j["inputs"] = {{"machine", {{"path", path}, {"digest", digest(text)}}}};
    j["quote"] = code;
    out << j.dump(2) << '\n';
  } else {
    out << code << '\n';
  }
  return kOk;
}

int cmd_unquote(const std::string& code, std::ostream& out) {
  out << render_dsl(unquote(code));
  return kOk;
}

int cmd_trials(const std::string& path, const std::string& input, const std::string& seeds_text, std::size_t count,
               std::optional<int> sigfigs, const Common& c, std::ostream& out) {
  const auto text = read_file(path);
  const Machine m = parse_dsl(text);
  const auto world = load_world(c.world_path);
  std::vector<std::uint64_t> seeds;
  if (!seeds_text.empty()) {
    seeds = parse_seed_list(seeds_text);
  } else {
    for (std::size_t i = 0; i < count; ++i) seeds.push_back(c.seed + i);
  }
  const auto config = world.config;
  const auto set = run_trials(
      m, input, [&config](std::uint64_t seed) { return build_world(config, seed); }, seeds, c.budget);
  const auto plain = is_repeatable(set);
  std::optional<RepeatabilityVerdict> truncated;
  std::string truncation_error;
  if (sigfigs) {
    try {
      truncated = repeatable_after_truncation(set, *sigfigs);
    } catch (const std::invalid_argument& e) {
      truncation_error = e.what();
    }
  }

  if (c.json_out()) {
    auto j = header("trials", c);
    j["inputs"] = {{"machine", {{"path", path}, {"digest", digest(text)}}},
                   {"world", {{"path", c.world_path}, {"digest", world.digest}}},
                   {"input", input}};
    auto& rows = j["trials"] = ordered_json::array();
    for (const auto& t : set.trials) {
      rows.push_back({{"seed", t.seed},
                      {"status", to_string(t.outcome.status)},
                      {"result", t.outcome.result ? json(*t.outcome.result) : json(nullptr)},
                      {"steps", t.outcome.steps}});
    }
    j["repeatable"] = {{"repeatable", plain.repeatable},
                       {"reason", plain.reason},
                       {"distinct_results", plain.distinct_results}};
    if (sigfigs) {
      ordered_json tj{{"sigfigs", *sigfigs}};
      if (truncated) {
        tj["repeatable"] = truncated->repeatable;
        tj["reason"] = truncated->reason;
        tj["distinct_results"] = truncated->distinct_results;
      } else {
        tj["repeatable"] = false;
        tj["error"] = truncation_error;
      }
      j["truncated"] = tj;
    }
    out << j.dump(2) << '\n';
  } else {
    print_human_header(out, c);
    out << std::setw(8) << "seed" << "  " << std::setw(16) << "status" << "  " << std::setw(8) << "steps"
        << "  result\n";
    for (const auto& t : set.trials) {
      out << std::setw(8) << t.seed << "  " << std::setw(16) << to_string(t.outcome.status) << "  " << std::setw(8)
          << t.outcome.steps << "  " << t.outcome.result.value_or("-") << '\n';
    }
    out << "repeatable: " << (plain.repeatable ? "yes" : "no") << " (" << plain.reason << ")\n";
    if (sigfigs) {
      out << "repeatable at " << *sigfigs << " significant figures: ";
      if (truncated) {
        out << (truncated->repeatable ? "yes" : "no") << " (" << truncated->reason << ")\n";
      } else {
        out << "no (" << truncation_error << ")\n";
      }
    }
  }
  return truncation_error.empty() ? kOk : kNegative;
}

ordered_json report_json(const RefutationReport& r) {
  ordered_json j;
  j["candidate"] = {{"id", r.candidate_id}, {"budget", r.candidate_budget}};
  j["verdict"] = r.verdict ? json(std::string(1, *r.verdict)) : json(nullptr);
  j["branch"] = r.branch ? json(std::string(to_string(*r.branch))) : json(nullptr);
  j["outcome"] = outcome_json(r.outcome);
  if (r.reference) j["reference_result"] = *r.reference;
  j["actual_behavior"] = to_string(r.actual);
  j["contradiction"] = r.contradiction;
  j["core_quote"] = r.core_quote;
  j["self_application_quote"] = {{"length", r.green_quote.size()}, {"digest", digest(r.green_quote)},
                                 {"quote", r.green_quote}};
  j["transcript"] = r.transcript;
  return j;
}

void print_report_human(std::ostream& out, const RefutationReport& r) {
  for (const auto& line : r.transcript) out << line << '\n';
  out << "contradiction: " << (r.contradiction ? "yes" : "no") << '\n';
}

int cmd_refute(const std::string& candidate, const Common& c, std::ostream& out) {
  const auto world = load_world(c.world_path);
  const auto params = world.config.thermometer();
  const auto blue = parse_verifier(candidate, params, c.seed);
  const auto report = refute_verifier(blue, params, c.budget, c.seed);
  if (c.json_out()) {
    auto j = header("refute", c);
    j["inputs"] = {{"world", {{"path", c.world_path}, {"digest", world.digest}}},
                   {"thermometer", {{"true_temp", params.true_temp}, {"noise_sigma", params.noise_sigma}}}};
    j["report"] = report_json(report);
    out << j.dump(2) << '\n';
  } else {
    print_human_header(out, c);
    print_report_human(out, report);
  }
  return report.contradiction ? kOk : kNegative;
}

int cmd_demo_halting(const std::string& candidate, const Common& c, std::ostream& out) {
  const auto h = parse_halting_decider(candidate);
  const auto report = refute_halting_decider(h, c.budget);
  if (c.json_out()) {
    auto j = header("demo-halting", c);
    j["report"] = report_json(report);
    out << j.dump(2) << '\n';
  } else {
    print_human_header(out, c);
    print_report_human(out, report);
  }
  return report.contradiction ? kOk : kNegative;
}

}  // namespace

std::string digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 0x100000001b3ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::vector<std::uint64_t> parse_seed_list(std::string_view text) {
  auto num = [&](std::string_view s) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
      throw std::invalid_argument("bad seed list '" + std::string(text) + "'");
    }
    return v;
  };
  std::vector<std::uint64_t> out;
  if (const auto dots = text.find(".."); dots != std::string_view::npos) {
    const auto lo = num(text.substr(0, dots));
    const auto hi = num(text.substr(dots + 2));
    if (hi < lo || hi - lo >= 1000000) throw std::invalid_argument("bad seed range '" + std::string(text) + "'");
    for (auto s = lo; s <= hi; ++s) out.push_back(s);
    return out;
  }
  std::size_t start = 0;
  for (;;) {
    const auto comma = text.find(',', start);
    out.push_back(num(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extended Turing machines for measurement procedures", std::string(kToolName)};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  Common common;
  std::string file;
  std::string input;
  bool trace = false;
  std::string code;
  std::string seeds;
  std::size_t count = 10;
  std::optional<int> sigfigs;
  std::string candidate;

  auto* validate = app.add_subcommand("validate", "Check a machine file for determinism and declarations");
  validate->add_option("file", file, "Machine file")->required();
  add_common(validate, common, false);

  auto* run_cmd = app.add_subcommand("run", "Run a machine");
  run_cmd->add_option("file", file, "Machine file")->required();
  run_cmd->add_option("--input", input, "Input written on cells 0..len-1");
  run_cmd->add_flag("--trace", trace, "Record every step");
  add_common(run_cmd, common);

  auto* quote_cmd = app.add_subcommand("quote", "Print the quoted description of a machine");
  quote_cmd->add_option("file", file, "Machine file")->required();
  add_common(quote_cmd, common, false);

  auto* unquote_cmd = app.add_subcommand("unquote", "Print the canonical machine a quoted description denotes");
  unquote_cmd->add_option("code", code, "Quoted description")->required();

  auto* trials = app.add_subcommand("trials", "Run a machine over many seeded worlds and judge repeatability");
  trials->add_option("file", file, "Machine file")->required();
  trials->add_option("--input", input, "Input written on cells 0..len-1");
  trials->add_option("--seeds", seeds, "Seed list: a..b or a,b,c (default: --count seeds from --seed)");
  trials->add_option("--count", count, "Number of seeds when --seeds is absent")->capture_default_str();
  trials->add_option("--sigfigs", sigfigs, "Also judge results rounded to this many significant figures")
      ->check(CLI::Range(1, 5));
  add_common(trials, common);

  auto* refute = app.add_subcommand("refute", "Build the diagonal machine against a candidate verifier");
  refute->add_option("--candidate", candidate, "const-yes, const-no or sim:<budget>")->required();
  add_common(refute, common);

  auto* halting = app.add_subcommand("demo-halting", "Build the diagonal machine against a candidate halting decider");
  halting->add_option("--candidate", candidate, "const-H, const-N or sim:<budget>")->required();
  add_common(halting, common, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*validate) return cmd_validate(file, common, out);
    if (*run_cmd) return cmd_run(file, input, trace, common, out);
    if (*quote_cmd) return cmd_quote(file, common, out);
    if (*unquote_cmd) return cmd_unquote(code, out);
    if (*trials) return cmd_trials(file, input, seeds, count, sigfigs, common, out);
    if (*refute) return cmd_refute(candidate, common, out);
    if (*halting) return cmd_demo_halting(candidate, common, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << file << ":" << e.what() << '\n';
    return kUsage;
  } catch (const InvalidMachine& e) {
    err << "error: " << e.what() << '\n';
    return kNegative;
  } catch (const DecodeError& e) {
    err << "error: cannot decode: " << e.what() << '\n';
    return kNegative;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace mproc::cli
