#include "sympf/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <random>
#include <sstream>

#include "sympf/chart.hpp"
#include "sympf/errors.hpp"
#include "sympf/json_io.hpp"
#include "sympf/oracle.hpp"
#include "sympf/points.hpp"
#include "sympf/relations.hpp"
#include "sympf/straighten.hpp"
#include "sympf/tableau.hpp"

namespace sympf {

namespace {

using nlohmann::json;

struct Outcome {
  json results = json::array();
  json failures = json::array();
  std::string text;  // body for --report text
};

void require_n(const RunConfig& cfg) {
  if (cfg.n < 4 || cfg.n % 2 != 0) throw UsageError("--n must be even and at least 4");
}

void require_degree(const RunConfig& cfg) {
  if (cfg.degree < 0) throw UsageError("--degree must be given and non-negative");
}

json config_json(const std::string& command, const RunConfig& cfg) {
  json c;
  c["n"] = cfg.n;
  if (command == "dim") c["field"] = cfg.field.to_string();
  if ((command == "count" || command == "dim" || command == "enumerate") && cfg.degree >= 0) c["degree"] = cfg.degree;
  if (command == "enumerate" && !cfg.shape.empty()) c["shape"] = cfg.shape;
  if (command == "verify" || command == "sample" || command == "chart") c["seed"] = cfg.seed;
  if (command == "verify") c["points"] = cfg.points;
  if (command == "chart") c["count"] = cfg.count;
  if (command == "straighten") c["mode"] = cfg.mode;
  return c;
}

Outcome cmd_count(const RunConfig& cfg) {
  require_n(cfg);
  require_degree(cfg);
  auto c = count_symplectic_standard_even(cfg.degree, cfg.n / 2);
  Outcome o;
  o.results.push_back({{"degree", cfg.degree}, {"count", c}});
  o.text = std::to_string(c) + "\n";
  return o;
}

Outcome cmd_enumerate(const RunConfig& cfg) {
  require_n(cfg);
  const int r = cfg.n / 2;
  std::vector<Tableau> tabs;
  if (!cfg.shape.empty()) {
    tabs = enumerate_symplectic_standard_even(Shape(cfg.shape), r);
  } else {
    require_degree(cfg);
    tabs = symplectic_basis(cfg.degree, r);
  }
  Outcome o;
  for (const auto& t : tabs) {
    o.results.push_back(tableau_to_json(t));
    o.text += tableau_to_json(t).dump() + "\n";
  }
  return o;
}

Outcome cmd_dim(const RunConfig& cfg) {
  require_n(cfg);
  require_degree(cfg);
  cfg.field.require_valid_for(cfg.n / 2);
  IdealOracle oracle(cfg.n, cfg.field);
  std::size_t dim = oracle.dimension(cfg.degree);
  std::uint64_t basis = count_symplectic_standard_even(cfg.degree, cfg.n / 2);
  Outcome o;
  o.results.push_back({{"degree", cfg.degree}, {"dimension", dim}, {"basis_count", basis}});
  if (dim != basis) {
    o.failures.push_back({{"check", "dimension equals basis count"}, {"dimension", dim}, {"basis_count", basis}});
  }
  o.text = std::to_string(dim) + "\n";
  return o;
}

json read_json_input(const std::string& path) {
  try {
    if (path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open input file '" + path + "'");
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("malformed JSON input: ") + e.what());
  }
}

Outcome cmd_straighten(const RunConfig& cfg) {
  require_n(cfg);
  if (cfg.mode != "dcp" && cfg.mode != "symp") throw UsageError("--mode must be 'dcp' or 'symp'");
  TabCombo in = combo_from_json(read_json_input(cfg.input), cfg.n / 2);
  Straightener s(cfg.n / 2);
  TabCombo result = cfg.mode == "dcp" ? s.dcp_straighten(in) : s.symp_normal_form(in);
  Outcome o;
  o.results.push_back({{"combo", combo_to_json(result)},
                       {"pair_rewrites", s.stats().dcp_steps},
                       {"symplectic_rewrites", s.stats().symplectic_steps}});
  o.text = combo_to_json(result).dump() + "\n";
  return o;
}

Outcome cmd_sample(const RunConfig& cfg) {
  require_n(cfg);
  std::mt19937_64 rng(cfg.seed);
  PointV p = sample_point(cfg.n, rng);
  Outcome o;
  o.results.push_back({{"point", matrix_to_json(p.matrix())}});
  o.text = matrix_to_json(p.matrix()).dump() + "\n";
  return o;
}

Outcome cmd_verify(const RunConfig& cfg) {
  require_n(cfg);
  if (cfg.points < 0) throw UsageError("--points must be non-negative");
  std::mt19937_64 rng(cfg.seed);
  Outcome o;
  std::size_t total = 0;
  for (int k = 0; k < cfg.points; ++k) {
    PointV p = sample_point(cfg.n, rng);
    RelationReport rep = verify_point_relations(p.matrix());
    total += rep.total_checks();
    o.results.push_back({{"point", k}, {"checks", rep.checks}, {"ok", rep.ok()}});
    for (const auto& f : rep.failures) {
      o.failures.push_back({{"point", k}, {"family", f.family}, {"instance", f.instance}, {"residual", f.residual}});
    }
  }
  o.text = "points: " + std::to_string(cfg.points) + "\nchecks: " + std::to_string(total) +
           "\nfailures: " + std::to_string(o.failures.size()) + "\n";
  for (const auto& f : o.failures) o.text += f.dump() + "\n";
  return o;
}

Outcome cmd_chart(const RunConfig& cfg) {
  require_n(cfg);
  if (cfg.n % 4 != 0) throw UsageError("chart needs n divisible by 4");
  if (cfg.count < 0) throw UsageError("--count must be non-negative");
  const int r = cfg.n / 2;
  std::mt19937_64 rng(cfg.seed);
  Outcome o;
  for (int k = 0; k < cfg.count; ++k) {
    ChartDatum d = random_chart_datum(r, rng);
    json item{{"index", k}};
    Rational tr = trace_identity_check(d);
    item["trace"] = format_rational(tr);
    if (sgn(tr) != 0) o.failures.push_back({{"index", k}, {"check", "trace identity"}, {"value", format_rational(tr)}});
    try {
      PointV p = chart_point(d);
      Rational f = f_minor(p.matrix());
      item["f"] = format_rational(f);
      item["point_ok"] = true;
      if (sgn(f) == 0) o.failures.push_back({{"index", k}, {"check", "f-minor nonzero"}, {"value", "0/1"}});
    } catch (const UsageError& e) {
      item["point_ok"] = false;
      o.failures.push_back({{"index", k}, {"check", "point equations"}, {"value", e.what()}});
    }
    o.results.push_back(std::move(item));
  }
  o.text = "charts: " + std::to_string(cfg.count) + "\nfailures: " + std::to_string(o.failures.size()) + "\n";
  for (const auto& f : o.failures) o.text += f.dump() + "\n";
  return o;
}

void add_report_option(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--report", cfg.report, "Output format")->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--output", cfg.output, "Write the report to this file");
  sub->add_flag("--timing", cfg.timing, "Include wall-clock timing in JSON reports");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::string field_text = "q";
  CLI::App app{"Pfaffian straightening and coordinate-ring checks for the symplectic nilpotent scheme"};
  app.name("sympf");
  app.require_subcommand(1);

  auto* count = app.add_subcommand("count", "Count symplectic standard even-tableaux of a degree");
  auto* enumerate = app.add_subcommand("enumerate", "List symplectic standard even-tableaux");
  auto* straighten = app.add_subcommand("straighten", "Rewrite a tableau combination into the basis");
  auto* dim = app.add_subcommand("dim", "Graded dimension by exact elimination");
  auto* verify = app.add_subcommand("verify", "Check the relation suite at sampled points");
  auto* sample = app.add_subcommand("sample", "Print a sampled point");
  auto* chart = app.add_subcommand("chart", "Check points produced by the affine chart");

  for (auto* sub : {count, enumerate, straighten, dim, verify, sample, chart}) {
    sub->add_option("--n", cfg.n, "Matrix size n = 2r")->required();
    add_report_option(sub, cfg);
  }
  for (auto* sub : {count, enumerate, dim}) sub->add_option("--degree", cfg.degree, "Degree m (2m cells)");
  enumerate->add_option("--shape", cfg.shape, "Even shape, e.g. --shape 2 2")->delimiter(',');
  dim->add_option("--field", field_text, "q or fp:P with P prime > r");
  straighten->add_option("--input", cfg.input, "Combination JSON file, '-' for stdin");
  straighten->add_option("--mode", cfg.mode, "dcp or symp")->check(CLI::IsMember({"dcp", "symp"}));
  for (auto* sub : {verify, sample, chart}) sub->add_option("--seed", cfg.seed, "Random seed");
  verify->add_option("--points", cfg.points, "Number of sampled points");
  chart->add_option("--count", cfg.count, "Number of random chart data");

  std::vector<std::string> argv_store{"sympf"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg;
    app.exit(e, msg, msg);
    err << msg.str();
    return kExitUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  try {
    cfg.field = FieldSpec::parse(field_text);
    auto start = std::chrono::steady_clock::now();
    Outcome o = command == "count"        ? cmd_count(cfg)
                : command == "enumerate"  ? cmd_enumerate(cfg)
                : command == "straighten" ? cmd_straighten(cfg)
                : command == "dim"        ? cmd_dim(cfg)
                : command == "verify"     ? cmd_verify(cfg)
                : command == "sample"     ? cmd_sample(cfg)
                                          : cmd_chart(cfg);
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    std::string body;
    if (cfg.report == "json") {
      json report;
      report["command"] = command;
      report["config"] = config_json(command, cfg);
      report["results"] = o.results;
      report["failures"] = o.failures;
      report["timing"] = cfg.timing ? json{{"seconds", seconds}} : json(nullptr);
      body = report.dump(2) + "\n";
    } else {
      body = o.text;
    }
    if (cfg.output.empty()) {
      out << body;
    } else {
      std::ofstream f(cfg.output);
      if (!f) throw UsageError("cannot write output file '" + cfg.output + "'");
      f << body;
    }
    return o.failures.empty() ? kExitPass : kExitViolation;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace sympf
