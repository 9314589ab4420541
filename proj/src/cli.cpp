#include "seriate/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "seriate/checker.hpp"
#include "seriate/model_file.hpp"
#include "seriate/statement.hpp"

namespace seriate::cli {

namespace {

struct CheckArgs {
  std::string theorem;
  bool all = false;
  std::string semantics;
  check::Bounds bounds;
  unsigned jobs = 1;
  std::string format = "text";
  bool timing = false;
};

struct EvalArgs {
  std::string model, stmt, file, semantics = "interval";
  std::vector<std::string> binds;
};

struct MapArgs {
  int rows = 3, cols = 3, countries = 5;
  bool exhaustive = false;
};

int run_check(const CheckArgs& a, std::ostream& out, std::ostream& err) {
  if (a.all == !a.theorem.empty()) {
    err << "check: give exactly one of --theorem or --all\n";
    return kUsage;
  }
  check::Options opt;
  opt.bounds = a.bounds;
  opt.jobs = a.jobs;
  opt.timing = a.timing;
  if (!a.semantics.empty()) {
    opt.semantics = check::semantics_from(a.semantics);
    if (!opt.semantics) {
      err << "check: unknown semantics '" << a.semantics << "'\n";
      return kUsage;
    }
  }

  std::vector<std::string> ids;
  if (a.all) {
    for (const check::TheoremInfo& t : check::registry()) {
      if (!opt.semantics || std::find(t.modes.begin(), t.modes.end(), *opt.semantics) != t.modes.end()) ids.push_back(t.id);
    }
  } else {
    ids.push_back(a.theorem);
  }

  std::vector<check::Verdict> verdicts;
  try {
    for (const std::string& id : ids) verdicts.push_back(check::check(id, opt));
  } catch (const Error& e) {
    err << "check: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "check: " << e.what() << "\n";
    return kUsage;
  }

  bool all_ok = std::all_of(verdicts.begin(), verdicts.end(), [](const check::Verdict& v) { return v.verified; });
  if (a.format == "json") {
    if (a.all) {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& v : verdicts) arr.push_back(check::to_json(v));
      out << arr.dump(2) << "\n";
    } else {
      out << check::to_json(verdicts.front()).dump(2) << "\n";
    }
  } else {
    for (const auto& v : verdicts) out << check::to_text(v);
  }
  return all_ok ? kTrue : kFalse;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (!part.empty()) out.push_back(part);
  }
  return out;
}

int run_eval(const EvalArgs& a, std::ostream& out, std::ostream& err) {
  if (a.stmt.empty() == a.file.empty()) {
    err << "eval: give exactly one of --stmt or --file\n";
    return kUsage;
  }
  lang::EvalOptions eo;
  if (a.semantics == "free") {
    eo.betweenness = lang::Betweenness::free;
  } else if (a.semantics != "interval") {
    err << "eval: semantics must be interval or free\n";
    return kUsage;
  }

  LoadedModel lm;
  try {
    lm = load_model(read_model_file(a.model));
  } catch (const ModelLoadError& e) {
    err << "eval: " << e.what() << "\n";
    return kModel;
  }

  std::string src = a.stmt;
  if (!a.file.empty()) {
    std::ifstream in(a.file);
    if (!in) {
      err << "eval: cannot open '" << a.file << "'\n";
      return kUsage;
    }
    std::stringstream ss;
    ss << in.rdbuf();
    src = ss.str();
    while (!src.empty() && (src.back() == '\n' || src.back() == '\r')) src.pop_back();
  }

  for (const std::string& b : a.binds) {
    auto eq = b.find('=');
    if (eq == std::string::npos || eq == 0) {
      err << "eval: --bind expects NAME=P,Q,...\n";
      return kUsage;
    }
    std::vector<lang::Referent> refs;
    for (const std::string& n : split_commas(b.substr(eq + 1))) {
      auto it = lm.env.names.find(n);
      if (it == lm.env.names.end()) {
        err << "eval: --bind names unknown point '" << n << "'\n";
        return kModel;
      }
      refs.push_back(it->second);
    }
    lm.env.vars[b.substr(0, eq)] = std::move(refs);
  }

  try {
    bool v = lang::evaluate(lang::parse(src), lm.universe, lm.env, eo);
    out << (v ? "true" : "false") << "\n";
    return v ? kTrue : kFalse;
  } catch (const lang::SyntaxError& e) {
    err << "eval: " << e.what() << "\n";
  } catch (const lang::EvalError& e) {
    err << "eval: " << e.what() << "\n";
  }
  return kUsage;
}

int run_parse(const std::string& stmt, bool ast, std::ostream& out, std::ostream& err) {
  try {
    lang::Formula f = lang::parse(stmt);
    out << lang::pretty(f) << "\n";
    if (ast) out << lang::ast_dump(f);
    return kTrue;
  } catch (const lang::SyntaxError& e) {
    err << e.what() << "\n";
    return kUsage;
  }
}

int run_map(const MapArgs& a, std::ostream& out, std::ostream& err) {
  check::MapSearch s;
  try {
    s = check::map_search(a.rows, a.cols, a.countries, a.exhaustive);
  } catch (const std::invalid_argument& e) {
    err << "map: " << e.what() << "\n";
    return kUsage;
  }
  std::string tag = "complete" + std::to_string(a.countries);
  out << "partitions: " << s.partitions << (a.exhaustive || !s.first ? "" : " (stopped at first)") << "\n";
  if (!s.first) {
    out << tag << ": none found\n";
    return kTrue;
  }
  out << tag << ": " << s.complete << " found\n";
  for (int r = 0; r < a.rows; ++r) {
    out << " ";
    for (int c = 0; c < a.cols; ++c) out << " " << (*s.first)[static_cast<std::size_t>(r * a.cols + c)];
    out << "\n";
  }
  // Five or more mutually line-adjacent countries contradict the map theorem.
  return a.countries >= 5 ? kFalse : kTrue;
}

int run_render(const std::string& model, const std::string& format, std::ostream& out, std::ostream& err) {
  if (format != "dot") {
    err << "render: only --format dot is supported\n";
    return kUsage;
  }
  try {
    ModelFile m = read_model_file(model);
    load_model(m);
    out << render_dot(m);
    return kTrue;
  } catch (const ModelLoadError& e) {
    err << "render: " << e.what() << "\n";
    return kModel;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite model checker for seriate-set geometry", "seriate"};
  app.require_subcommand(1);

  CheckArgs ca;
  auto* check_cmd = app.add_subcommand("check", "Exhaustively check a theorem within bounds");
  check_cmd->add_option("--theorem", ca.theorem, "Theorem id, e.g. Th1.6 or FiveMap");
  check_cmd->add_flag("--all", ca.all, "Check every registered theorem");
  check_cmd->add_option("--semantics", ca.semantics, "interval | free | row-continuous | lattice-4");
  check_cmd->add_option("--max-points", ca.bounds.max_points, "Largest line or ring size");
  check_cmd->add_option("--rows", ca.bounds.rows, "Grid rows");
  check_cmd->add_option("--cols", ca.bounds.cols, "Grid columns");
  check_cmd->add_option("--max-path", ca.bounds.max_path, "Longest path, in points");
  check_cmd->add_option("--countries", ca.bounds.countries, "Country count for FiveMap");
  check_cmd->add_option("--jobs", ca.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  check_cmd->add_option("--format", ca.format, "text | json")->check(CLI::IsMember({"text", "json"}));
  check_cmd->add_flag("--timing", ca.timing, "Report elapsed_ms");

  EvalArgs ea;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a statement against a model file");
  eval_cmd->add_option("--model", ea.model, "Model JSON file")->required();
  eval_cmd->add_option("--stmt", ea.stmt, "Statement text");
  eval_cmd->add_option("--file", ea.file, "File holding the statement");
  eval_cmd->add_option("--bind", ea.binds, "Extra variable NAME=P,Q,... (repeatable)");
  eval_cmd->add_option("--semantics", ea.semantics, "interval | free");

  std::string parse_stmt;
  bool parse_ast = false;
  auto* parse_cmd = app.add_subcommand("parse", "Parse and pretty-print a statement");
  parse_cmd->add_option("--stmt", parse_stmt, "Statement text")->required();
  parse_cmd->add_flag("--ast", parse_ast, "Also dump the syntax tree");

  MapArgs ma;
  auto* map_cmd = app.add_subcommand("map", "Search grid partitions for pairwise line-adjacent countries");
  map_cmd->add_option("--rows", ma.rows, "Grid rows");
  map_cmd->add_option("--cols", ma.cols, "Grid columns");
  map_cmd->add_option("--countries", ma.countries, "Number of countries");
  map_cmd->add_flag("--exhaustive", ma.exhaustive, "Visit every partition instead of stopping at the first hit");

  std::string render_model, render_format = "dot";
  auto* render_cmd = app.add_subcommand("render", "Emit a DOT diagram of a model file");
  render_cmd->add_option("--model", render_model, "Model JSON file")->required();
  render_cmd->add_option("--format", render_format, "dot");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kTrue;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kTrue;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  if (check_cmd->parsed()) return run_check(ca, out, err);
  if (eval_cmd->parsed()) return run_eval(ea, out, err);
  if (parse_cmd->parsed()) return run_parse(parse_stmt, parse_ast, out, err);
  if (map_cmd->parsed()) return run_map(ma, out, err);
  return run_render(render_model, render_format, out, err);
}

}  // namespace seriate::cli
