#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "schlicht/catalog.hpp"
#include "schlicht/classify.hpp"
#include "schlicht/error.hpp"
#include "schlicht/harness.hpp"
#include "schlicht/json_io.hpp"
#include "schlicht/operators.hpp"
#include "schlicht/random.hpp"
#include "schlicht/spec_parse.hpp"

namespace schlicht::cli {

namespace {

using Json = nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Data sink: the file at `path`, or `fallback` when path is empty or "-".
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty() && path != "-") {
      file_.open(path);
      if (!file_) throw UsageError("cannot write '" + path + "'");
      stream_ = &file_;
    }
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

std::string num(double x) {
  if (!std::isfinite(x)) return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
  return format_number(x);
}

std::string complex_text(Complex z) { return "[" + num(z.real()) + ", " + num(z.imag()) + "]"; }

// ---- classify ----------------------------------------------------------

struct ClassifyArgs {
  std::string fn;
  std::string cls;
  std::string companion;
  std::string grid = "default";
  int order = 64;
  int max_order = 4096;
  bool strict = false;
  bool assert_member = false;
  bool json = false;
  std::string format = "json";
  std::string out;
};

int do_classify(const ClassifyArgs& a, std::ostream& out, std::ostream& err) {
  const AnalyticFunction f = parse_function(a.fn);
  const ClassSpec spec = parse_class(a.cls);
  const DiskGrid grid = parse_grid(a.grid);
  std::optional<AnalyticFunction> g;
  if (!a.companion.empty()) g = parse_function(a.companion);
  CertifyOptions opts;
  opts.eval.series_order = a.order;
  opts.eval.max_series_order = std::max(a.order, a.max_order);
  opts.strict = a.strict;
  const Verdict v = spec.lift ? certify_lifted_pair(f, spec, grid, g, opts) : certify(f, spec, grid, g, opts);

  Sink sink(a.out, out);
  const std::string format = a.json ? "json" : a.format;
  if (format == "json") {
    *sink << verdict_to_json(v, f.label(), grid);
  } else if (format == "csv") {
    *sink << "radius,margin\n";
    for (std::size_t i = 0; i < grid.radii.size(); ++i) {
      *sink << num(grid.radii[i]) << "," << num(v.radius_margins[i]) << "\n";
    }
  } else {
    *sink << "function   " << f.label() << "\n"
          << "class      " << v.class_label << "\n"
          << "status     " << status_name(v.status) << "\n"
          << "margin     " << num(v.margin) << "\n"
          << "witness    " << complex_text(v.witness) << "\n"
          << "reliable   " << (v.reliable ? "yes" : "no") << "\n";
    if (spec.checks_nondegeneracy()) {
      *sink << "nondegen.  " << (v.nondegeneracy_ok ? "ok" : "failed") << " (gap " << num(v.nondegeneracy_gap) << ")\n";
    }
    *sink << "grid       " << grid.radii.size() << " radii x " << grid.angles_per_radius << " angles, outer "
          << num(grid.radii.back()) << "\n";
  }
  if (a.assert_member && v.status != Status::member) {
    err << "classify: " << f.label() << " is " << status_name(v.status) << " for " << v.class_label << "\n";
    return kExitNotMember;
  }
  return kExitOk;
}

// ---- apply -------------------------------------------------------------

struct ApplyArgs {
  std::string op;
  std::string fn;
  int order = 64;
  std::string out;
};

int do_apply(const ApplyArgs& a, std::ostream& out) {
  if (a.order < 1) throw UsageError("--order must be >= 1");
  const OperatorSpec op = parse_operator(a.op);
  const AnalyticFunction f = parse_function(a.fn);
  const Series s = apply_multiplier(op, f.to_series(a.order));
  Sink sink(a.out, out);
  *sink << series_to_json(s);
  return kExitOk;
}

// ---- identities --------------------------------------------------------

struct IdentityArgs {
  bool all = false;
  std::vector<std::string> ids;
  int trials = 100;
  std::uint64_t seed = 1;
  int order = 64;
  std::vector<double> cs{-0.5, 0.0, 1.0, 2.5};
  std::vector<double> sigmas{0.5, 1.0, 2.0};
  std::string report;
  std::string format = "csv";
};

Series random_normalized(std::uint64_t seed, int order) {
  Rng rng(seed);
  std::vector<Complex> c(static_cast<std::size_t>(order) + 1);
  c[1] = 1.0;
  for (int n = 2; n <= order; ++n) c[static_cast<std::size_t>(n)] = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
  return Series(std::move(c));
}

int do_identities(const IdentityArgs& a, std::ostream& out, std::ostream& err) {
  if (a.trials < 1) throw UsageError("--trials must be >= 1");
  if (a.order < 2) throw UsageError("--order must be >= 2");
  std::vector<IdentityId> ids;
  if (a.all || a.ids.empty()) {
    ids.assign(kAllIdentities.begin(), kAllIdentities.end());
  } else {
    for (const auto& name : a.ids) ids.push_back(parse_identity(name));
  }
  struct Row {
    IdentityId id;
    double c, sigma, max_residual, max_relative;
  };
  std::vector<Row> rows;
  bool all_pass = true;
  for (IdentityId id : ids) {
    for (double c : a.cs) {
      for (double sigma : a.sigmas) {
        Row r{id, c, sigma, 0.0, 0.0};
        for (int t = 0; t < a.trials; ++t) {
          const Series s = random_normalized(mix_seed(a.seed, static_cast<std::uint64_t>(t)), a.order);
          double scale = 0.0;
          for (Complex v : s.coeffs()) scale = std::max(scale, std::abs(v));
          const double res = check_identity(id, s, c, sigma);
          r.max_residual = std::max(r.max_residual, res);
          r.max_relative = std::max(r.max_relative, res / scale);
        }
        all_pass = all_pass && r.max_relative <= 1e-12;
        rows.push_back(r);
      }
    }
  }
  Sink sink(a.report, out);
  if (a.format == "json") {
    Json arr = Json::array();
    for (const Row& r : rows) {
      arr.push_back({{"identity", identity_name(r.id)}, {"c", r.c}, {"sigma", r.sigma}, {"order", a.order},
                     {"trials", a.trials}, {"max_residual", r.max_residual}, {"max_relative_residual", r.max_relative}});
    }
    *sink << Json{{"schema", kReportSchema}, {"seed", a.seed}, {"rows", arr}}.dump(2) << "\n";
  } else if (a.format == "csv") {
    *sink << "identity,c,sigma,order,trials,max_residual,max_relative_residual\n";
    for (const Row& r : rows) {
      *sink << identity_name(r.id) << "," << num(r.c) << "," << num(r.sigma) << "," << a.order << "," << a.trials << ","
            << num(r.max_residual) << "," << num(r.max_relative) << "\n";
    }
  } else {
    *sink << std::left << std::setw(10) << "identity" << std::setw(8) << "c" << std::setw(8) << "sigma"
          << "max relative residual\n";
    for (const Row& r : rows) {
      *sink << std::left << std::setw(10) << identity_name(r.id) << std::setw(8) << num(r.c) << std::setw(8)
            << num(r.sigma) << num(r.max_relative) << "\n";
    }
  }
  if (!all_pass) {
    err << "identities: some residuals exceed 1e-12 relative to max|a_n|\n";
    return kExitFailure;
  }
  return kExitOk;
}

// ---- verify-theorem ----------------------------------------------------

struct VerifyArgs {
  std::vector<std::string> ids;
  bool all = false;
  int samples = 50;
  std::uint64_t seed = 1;
  int levels = 2;
  std::vector<std::string> points;
  std::string grid = "default";
  int order = 64;
  int max_order = 4096;
  std::string companion_variant = "as_stated";
  int threads = 0;
  std::string json_path;
  std::string format = "json";
};

void summary_table(std::ostream& os, const std::vector<const ExperimentReport*>& reports) {
  os << std::left << std::setw(11) << "theorem" << std::setw(8) << "points" << std::setw(11) << "confirmed"
     << std::setw(9) << "vacuous" << std::setw(14) << "inconclusive" << std::setw(9) << "flagged"
     << "hypothesis hit rate\n";
  for (const ExperimentReport* r : reports) {
    os << std::left << std::setw(11) << theorem_name(r->config.theorem) << std::setw(8) << r->points.size()
       << std::setw(11) << r->counts.confirmed << std::setw(9) << r->counts.vacuous << std::setw(14)
       << r->counts.inconclusive << std::setw(9) << r->counts.counterexample_flagged << num(r->hypothesis_hit_rate())
       << "\n";
  }
}

void summary_csv(std::ostream& os, const std::vector<const ExperimentReport*>& reports) {
  os << "theorem,points,samples,confirmed,vacuous,inconclusive,counterexample_flagged,hypothesis_hit_rate\n";
  for (const ExperimentReport* r : reports) {
    os << theorem_name(r->config.theorem) << "," << r->points.size() << "," << r->samples.size() << ","
       << r->counts.confirmed << "," << r->counts.vacuous << "," << r->counts.inconclusive << ","
       << r->counts.counterexample_flagged << "," << num(r->hypothesis_hit_rate()) << "\n";
  }
}

int do_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  if (a.all == !a.ids.empty()) throw UsageError("verify-theorem needs exactly one of --id or --all");
  if (a.all && !a.points.empty()) throw UsageError("--point cannot be combined with --all");
  ExperimentConfig cfg;
  cfg.sample_count = a.samples;
  cfg.seed = a.seed;
  cfg.refinement_levels = a.levels;
  cfg.grid = parse_grid(a.grid);
  cfg.eval.series_order = a.order;
  cfg.eval.max_series_order = std::max(a.order, a.max_order);
  cfg.threads = a.threads;
  if (a.companion_variant == "as_stated") {
    cfg.companion_variant = CompanionVariant::as_stated;
  } else if (a.companion_variant == "symmetric") {
    cfg.companion_variant = CompanionVariant::symmetric;
  } else {
    throw UsageError("--companion-variant must be as_stated or symmetric");
  }
  for (const auto& p : a.points) cfg.points.push_back(parse_point(p));

  CatalogReport catalog;
  catalog.seed = cfg.seed;
  if (a.all) {
    catalog = run_catalog(cfg);
  } else {
    for (const auto& name : a.ids) {
      ExperimentConfig one = cfg;
      one.theorem = parse_theorem(name);
      catalog.theorems.push_back(run_theorem(one));
    }
  }
  std::vector<const ExperimentReport*> refs;
  int flagged = 0;
  for (const auto& r : catalog.theorems) {
    refs.push_back(&r);
    flagged += r.counts.counterexample_flagged;
  }

  Sink sink(a.json_path, out);
  if (!a.json_path.empty() || a.format == "json") {
    *sink << (a.all || catalog.theorems.size() > 1 ? catalog_to_json(catalog) : report_to_json(catalog.theorems.front()));
    if (!a.json_path.empty() && a.format != "json") {
      a.format == "csv" ? summary_csv(out, refs) : summary_table(out, refs);
    }
  } else if (a.format == "csv") {
    summary_csv(*sink, refs);
  } else {
    summary_table(*sink, refs);
  }
  if (flagged > 0) err << "verify-theorem: " << flagged << " counterexample(s) flagged; see \"counterexamples\"\n";
  return kExitOk;
}

// ---- report ------------------------------------------------------------

int do_report(const std::string& in_path, const std::string& format, std::ostream& out) {
  std::ifstream in(in_path);
  if (!in) throw UsageError("cannot read '" + in_path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(in_path + ": " + e.what());
  }
  if (!j.is_object() || j.value("schema", 0) != kReportSchema) {
    throw ParseError(in_path + ": not a schema-1 report");
  }
  std::vector<Json> theorems;
  if (j.contains("theorems")) {
    for (const auto& t : j["theorems"]) theorems.push_back(t);
  } else {
    theorems.push_back(j);
  }
  if (format == "json") {
    Json arr = Json::array();
    for (const auto& t : theorems) {
      arr.push_back({{"theorem", t["theorem"]}, {"counts", t["counts"]}, {"hypothesis_hit_rate", t["hypothesis_hit_rate"]}});
    }
    out << arr.dump(2) << "\n";
    return kExitOk;
  }
  const bool csv = format == "csv";
  if (csv) {
    out << "theorem,samples,confirmed,vacuous,inconclusive,counterexample_flagged,hypothesis_hit_rate\n";
  } else {
    out << std::left << std::setw(11) << "theorem" << std::setw(9) << "samples" << std::setw(11) << "confirmed"
        << std::setw(9) << "vacuous" << std::setw(14) << "inconclusive" << std::setw(9) << "flagged"
        << "hypothesis hit rate\n";
  }
  for (const auto& t : theorems) {
    const auto& c = t.at("counts");
    const int total = c.at("confirmed").get<int>() + c.at("vacuous").get<int>() + c.at("inconclusive").get<int>() +
                      c.at("counterexample_flagged").get<int>();
    const std::string rate = num(t.at("hypothesis_hit_rate").get<double>());
    if (csv) {
      out << t.at("theorem").get<std::string>() << "," << total << "," << c.at("confirmed") << "," << c.at("vacuous")
          << "," << c.at("inconclusive") << "," << c.at("counterexample_flagged") << "," << rate << "\n";
    } else {
      out << std::left << std::setw(11) << t.at("theorem").get<std::string>() << std::setw(9) << total
          << std::setw(11) << c.at("confirmed").get<int>() << std::setw(9) << c.at("vacuous").get<int>()
          << std::setw(14) << c.at("inconclusive").get<int>() << std::setw(9)
          << c.at("counterexample_flagged").get<int>() << rate << "\n";
    }
  }
  return kExitOk;
}

// ---- config file -------------------------------------------------------

std::string json_scalar(const Json& v, const std::string& key) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number()) return format_number(v.get<double>());
  throw UsageError("config key '" + key + "' must be a string or number");
}

bool given_on_command_line(const std::vector<std::string>& args, const std::string& flag) {
  return std::any_of(args.begin(), args.end(),
                     [&](const std::string& a) { return a == flag || a.starts_with(flag + "="); });
}

// Expands `--config FILE` into command-line arguments placed before the
// user's own, which therefore take precedence.
std::vector<std::string> expand_config(const std::vector<std::string>& args, const CLI::App& app) {
  auto it = std::find_if(args.begin(), args.end(),
                         [](const std::string& a) { return a == "--config" || a.starts_with("--config="); });
  if (it == args.end()) return args;
  std::string path;
  std::vector<std::string> rest(args.begin(), it);
  if (it->starts_with("--config=")) {
    path = it->substr(9);
    rest.insert(rest.end(), it + 1, args.end());
  } else {
    if (it + 1 == args.end()) throw UsageError("--config needs a file");
    path = *(it + 1);
    rest.insert(rest.end(), it + 2, args.end());
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError("config '" + path + "': " + e.what());
  }
  if (!j.is_object()) throw UsageError("config '" + path + "' must hold a JSON object");

  std::string command;
  std::vector<std::string> user = rest;
  if (!user.empty() && !user.front().starts_with("-")) command = user.front();
  if (j.contains("command")) {
    const std::string c = j["command"].is_string() ? j["command"].get<std::string>() : "";
    if (!command.empty() && command != c) throw UsageError("config command '" + c + "' conflicts with '" + command + "'");
    if (command.empty()) {
      command = c;
      user.insert(user.begin(), c);
    }
  }
  if (command.empty()) throw UsageError("config '" + path + "' needs a \"command\"");
  const CLI::App* sub = nullptr;
  try {
    sub = app.get_subcommand(command);
  } catch (const CLI::OptionNotFound&) {
    throw UsageError("unknown command '" + command + "'");
  }

  std::vector<std::string> injected;
  for (auto kv = j.begin(); kv != j.end(); ++kv) {
    if (kv.key() == "command") continue;
    std::string name = kv.key();
    std::replace(name.begin(), name.end(), '_', '-');
    const std::string flag = "--" + name;
    const CLI::Option* opt = sub->get_option_no_throw(flag);
    if (opt == nullptr) throw UsageError("unknown config key '" + kv.key() + "' for " + command);
    if (given_on_command_line(user, flag)) continue;
    const Json& v = kv.value();
    if (v.is_boolean()) {
      if (v.get<bool>()) injected.push_back(flag);
    } else if (v.is_array()) {
      for (const auto& e : v) {
        injected.push_back(flag);
        injected.push_back(json_scalar(e, kv.key()));
      }
    } else {
      injected.push_back(flag);
      injected.push_back(json_scalar(v, kv.key()));
    }
  }
  std::vector<std::string> out;
  out.push_back(user.front());
  out.insert(out.end(), injected.begin(), injected.end());
  out.insert(out.end(), user.begin() + 1, user.end());
  return out;
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"schlicht: integral operators and class certification on the unit disk", "schlicht"};
  app.require_subcommand(1, 1);
  std::string config_path;
  app.add_option("--config", config_path, "JSON file with option values for the command");
  const std::vector<std::string> formats{"json", "csv", "pretty"};

  ClassifyArgs ca;
  auto* classify = app.add_subcommand("classify", "Certify a function in a class over a disk grid");
  classify->add_option("--fn", ca.fn, "Function spec, e.g. koebe:lambda=0,x=1")->required();
  classify->add_option("--class", ca.cls, "Class spec, e.g. starlike:lambda=0.5 or convex:lambda=0,c=1")->required();
  classify->add_option("--companion", ca.companion, "Companion g for close-to-convex and quasi-convex classes");
  classify->add_option("--grid", ca.grid, "default, default:level=L or radii=a/b/c,angles=M")->capture_default_str();
  classify->add_option("--order", ca.order, "Starting series order for operator images")->capture_default_str();
  classify->add_option("--max-order", ca.max_order, "Largest series order")->capture_default_str();
  classify->add_flag("--strict", ca.strict, "Also certify the companion in its class");
  classify->add_flag("--assert-member", ca.assert_member, "Exit 1 unless the verdict is Member");
  classify->add_flag("--json", ca.json, "Same as --format json");
  classify->add_option("--format", ca.format)->check(CLI::IsMember(formats))->capture_default_str();
  classify->add_option("--out", ca.out, "Output file (default: standard output)");

  ApplyArgs aa;
  auto* apply = app.add_subcommand("apply", "Apply an operator to a function's Taylor coefficients");
  apply->add_option("--op", aa.op, "bernardi:c=<c>, jks:sigma=<s> or libera")->required();
  apply->add_option("--fn", aa.fn, "Function spec")->required();
  apply->add_option("--order", aa.order, "Series order")->capture_default_str();
  apply->add_option("--out", aa.out, "Series JSON output file (default: standard output)");

  IdentityArgs ia;
  auto* identities = app.add_subcommand("identities", "Check the operator identities on random series");
  identities->add_flag("--all", ia.all, "All identities (the default)");
  identities->add_option("--id", ia.ids, "Identity name, e.g. Id_1_7 or Commute");
  identities->add_option("--trials", ia.trials, "Random series per parameter pair")->capture_default_str();
  identities->add_option("--seed", ia.seed)->capture_default_str();
  identities->add_option("--order", ia.order, "Series order")->capture_default_str();
  identities->add_option("--c", ia.cs, "Bernardi parameters")->capture_default_str();
  identities->add_option("--sigma", ia.sigmas, "JKS parameters")->capture_default_str();
  identities->add_option("--report", ia.report, "Output file (default: standard output)");
  identities->add_option("--format", ia.format)->check(CLI::IsMember(formats))->capture_default_str();

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify-theorem", "Run generate-check-refine experiments for catalog theorems");
  verify->add_option("--id", va.ids, "Theorem id, e.g. T2_7 (repeatable)");
  verify->add_flag("--all", va.all, "Run the full catalog");
  verify->add_option("--samples", va.samples, "Samples per parameter point")->capture_default_str();
  verify->add_option("--seed", va.seed)->capture_default_str();
  verify->add_option("--levels", va.levels, "Refinement levels for flagged samples")->capture_default_str();
  verify->add_option("--point", va.points, "Parameter point, e.g. lambda=0.25,c=0.25 (repeatable)");
  verify->add_option("--grid", va.grid)->capture_default_str();
  verify->add_option("--order", va.order)->capture_default_str();
  verify->add_option("--max-order", va.max_order)->capture_default_str();
  verify->add_option("--companion-variant", va.companion_variant, "as_stated or symmetric")->capture_default_str();
  verify->add_option("--threads", va.threads, "Worker threads (0: SCHLICHT_THREADS or hardware)");
  verify->add_option("--json", va.json_path, "Write the JSON report to this file");
  verify->add_option("--format", va.format, "Standard output format when no --json file is given")
      ->check(CLI::IsMember(formats))
      ->capture_default_str();

  std::string report_in;
  std::string report_format = "pretty";
  auto* report = app.add_subcommand("report", "Summarize a verify-theorem JSON report");
  report->add_option("--in", report_in, "Report JSON file")->required();
  report->add_option("--format", report_format)->check(CLI::IsMember(formats))->capture_default_str();

  try {
    std::vector<std::string> args = expand_config(raw_args, app);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "schlicht: " << e.what() << "\n(run 'schlicht --help' for usage)\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "schlicht: " << e.what() << "\n(run 'schlicht --help' for usage)\n";
    return kExitUsage;
  }

  try {
    if (*classify) return do_classify(ca, out, err);
    if (*apply) return do_apply(aa, out);
    if (*identities) return do_identities(ia, out, err);
    if (*verify) return do_verify(va, out, err);
    if (*report) return do_report(report_in, report_format, out);
  } catch (const UsageError& e) {
    err << "schlicht: " << e.what() << "\n(run 'schlicht --help' for usage)\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "schlicht: parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConfigError& e) {
    err << "schlicht: config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidParameter& e) {
    err << "schlicht: invalid parameter: " << e.what() << "\n";
    return kExitUsage;
  } catch (const MissingCompanion& e) {
    err << "schlicht: " << e.what() << " (use --companion)\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "schlicht: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace schlicht::cli
