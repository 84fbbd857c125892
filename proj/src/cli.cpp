#include "usc/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "usc/io.hpp"

namespace usc {

namespace {

struct Common {
  std::string format = "text";
  bool strict = false;
  int enum_cap = kDefaultEnumCap;
};

void add_common(CLI::App* sub, Common& common) {
  sub->add_option("--format", common.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  sub->add_flag("--strict", common.strict,
                "exit 1 on negative domain verdicts");
  sub->add_option("--enum-cap", common.enum_cap,
                  "subset-enumeration cap on the worker count");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(std::vector<ParseIssue>{{path, "cannot open file"}});
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// One stage per group, except that --stages N keeps the first N-1 groups
// and merges the rest into a final stage; --stages 1 is one-stage DA.
std::vector<Mask> stage_layout(const MarketInstance& inst, int stages) {
  const auto& groups = inst.partition.groups;
  int g = (int)groups.size();
  if (stages < 1 || stages > std::max(g, 1))
    throw std::invalid_argument("--stages must lie in 1.." +
                                std::to_string(std::max(g, 1)));
  std::vector<Mask> layout;
  for (int k = 0; k < stages - 1; ++k) layout.push_back(groups[k]);
  Mask rest = 0;
  for (int k = stages - 1; k < g; ++k) rest |= groups[k];
  if (rest || layout.empty()) layout.push_back(rest ? rest : 0);
  if (layout.size() == 1 && layout[0] == 0 && inst.n_workers() == 0)
    layout[0] = 0;
  return layout;
}

int cmd_check(const std::string& file, const Common& common,
              std::ostream& out) {
  InstanceDocument doc = parse_instance(read_file(file));
  MarketInstance inst = doc.build_market();
  ConditionReport report = build_condition_report(inst, common.enum_cap);
  if (common.format == "json")
    out << condition_report_to_json(inst, report).dump(2) << "\n";
  else
    out << render_condition_report(inst, report);
  if (common.strict)
    for (const FirmConditionReport& fr : report.firms)
      if (!fr.usc.holds) return 1;
  return 0;
}

int cmd_da(const std::string& file, int stages, bool one_stage,
           const Common& common, std::ostream& out) {
  InstanceDocument doc = parse_instance(read_file(file));
  MarketInstance inst = doc.build_market();
  if (one_stage) stages = 1;
  MechanismTrace trace =
      stages > 0 ? multi_stage_da(inst, stage_layout(inst, stages))
                 : multi_stage_da(inst);
  bool stable = is_stable(inst, trace.result);
  if (common.format == "json") {
    nlohmann::json j = trace_to_json(inst, trace);
    j["stable"] = stable;
    out << j.dump(2) << "\n";
  } else {
    out << render_trace(inst, trace);
    out << "stable: " << (stable ? "yes" : "no") << "\n";
  }
  return common.strict && !stable ? 1 : 0;
}

int cmd_stable(const std::string& file, bool enumerate,
               const std::string& verify_file, const Common& common,
               std::ostream& out) {
  InstanceDocument doc = parse_instance(read_file(file));
  MarketInstance inst = doc.build_market();
  if (!verify_file.empty()) {
    Matching eta = parse_matching(read_file(verify_file), inst);
    auto ir = find_ir_violation(inst, eta);
    auto block = find_blocking_coalition(inst, eta);
    bool stable = !ir && !block;
    if (common.format == "json") {
      nlohmann::json j;
      j["matching"] = matching_to_json(inst, eta);
      j["stable"] = stable;
      if (ir) j["ir_violation"] = ir->message;
      if (block) {
        j["blocking_firm"] = inst.firms[block->firm];
        nlohmann::json names = nlohmann::json::array();
        for_each_member(block->coalition,
                        [&](int w) { names.push_back(inst.workers[w]); });
        j["blocking_coalition"] = std::move(names);
      }
      out << j.dump(2) << "\n";
    } else {
      out << render_matching(inst, eta) << "\n";
      if (ir) out << "not individually rational: " << ir->message << "\n";
      if (block)
        out << "blocked by (" << inst.firms[block->firm] << ", "
            << set_names(inst.workers, block->coalition) << ")\n";
      out << "stable: " << (stable ? "yes" : "no") << "\n";
    }
    return common.strict && !stable ? 1 : 0;
  }
  (void)enumerate;  // enumeration is also the default behaviour
  EnumerationCaps caps;
  caps.max_workers = common.enum_cap < caps.max_workers ? common.enum_cap
                                                        : caps.max_workers;
  std::vector<Matching> all = enumerate_stable_matchings(inst, caps);
  if (common.format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const Matching& eta : all) j.push_back(matching_to_json(inst, eta));
    nlohmann::json root;
    root["stable_matchings"] = std::move(j);
    out << root.dump(2) << "\n";
  } else {
    out << "stable matchings: " << all.size() << "\n";
    for (const Matching& eta : all)
      out << "  " << render_matching(inst, eta) << "\n";
  }
  return common.strict && all.empty() ? 1 : 0;
}

int cmd_school(const std::string& file, const Common& common,
               std::ostream& out) {
  InstanceDocument doc = parse_instance(read_file(file));
  MarketInstance inst = doc.build_market();
  MechanismTrace one = multi_stage_da(inst, {inst.all_workers()});
  MechanismTrace staged = multi_stage_da(inst);
  auto one_block = find_blocking_coalition(inst, one.result);
  auto staged_block = find_blocking_coalition(inst, staged.result);
  bool staged_stable = is_stable(inst, staged.result);
  if (common.format == "json") {
    nlohmann::json j;
    j["one_stage"] = trace_to_json(inst, one);
    j["one_stage_stable"] = is_stable(inst, one.result);
    if (one_block) {
      j["one_stage_blocking_firm"] = inst.firms[one_block->firm];
      nlohmann::json names = nlohmann::json::array();
      for_each_member(one_block->coalition,
                      [&](int w) { names.push_back(inst.workers[w]); });
      j["one_stage_blocking_coalition"] = std::move(names);
    }
    j["two_stage"] = trace_to_json(inst, staged);
    j["two_stage_stable"] = staged_stable;
    out << j.dump(2) << "\n";
  } else {
    out << "== one-stage ==\n" << render_trace(inst, one);
    if (one_block)
      out << "blocked by (" << inst.firms[one_block->firm] << ", "
          << set_names(inst.workers, one_block->coalition) << ")\n";
    else
      out << "stable: yes\n";
    out << "== staged ==\n" << render_trace(inst, staged);
    if (staged_block)
      out << "blocked by (" << inst.firms[staged_block->firm] << ", "
          << set_names(inst.workers, staged_block->coalition) << ")\n";
    out << "stable: " << (staged_stable ? "yes" : "no") << "\n";
  }
  return common.strict && !staged_stable ? 1 : 0;
}

SalaryVector parse_query_arg(const std::string& text,
                             const std::vector<std::string>& names) {
  SalaryVector p(names.size(), Rational(0));
  std::vector<bool> seen(names.size(), false);
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t eq = item.find('=');
    if (eq == std::string::npos)
      throw ParseError(std::vector<ParseIssue>{{"--demand", "expected name=rational pairs"}});
    std::string name = item.substr(0, eq);
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end())
      throw ParseError(std::vector<ParseIssue>{{"--demand", "unknown worker " + name}});
    size_t w = it - names.begin();
    p[w] = Rational::parse(item.substr(eq + 1));
    seen[w] = true;
  }
  for (size_t w = 0; w < names.size(); ++w)
    if (!seen[w])
      throw ParseError(std::vector<ParseIssue>{{"--demand", "missing salary for " + names[w]}});
  return p;
}

int cmd_ql(const std::string& file, const std::string& demand_query,
           bool relations, bool theorem3, const Common& common,
           std::ostream& out) {
  InstanceDocument doc = parse_instance(read_file(file));
  if (!doc.quasilinear)
    throw ParseError(std::vector<ParseIssue>{{"quasilinear", "instance has no quasilinear block"}});
  const QuasilinearBlock& block = *doc.quasilinear;
  nlohmann::json jout;
  bool all_symmetric = true;

  if (!demand_query.empty() || (!relations && !theorem3)) {
    std::vector<SalaryVector> queries = block.queries;
    if (!demand_query.empty())
      queries = {parse_query_arg(demand_query, block.workers)};
    jout["demand"] = nlohmann::json::array();
    for (const NamedValuation& nv : block.valuations) {
      for (const SalaryVector& p : queries) {
        DemandResult res = demand(nv.valuation, p);
        if (common.format == "json") {
          nlohmann::json j;
          j["valuation"] = nv.name;
          nlohmann::json ps = nlohmann::json::object();
          for (size_t w = 0; w < p.size(); ++w)
            ps[block.workers[w]] = p[w].str();
          j["salaries"] = std::move(ps);
          j["surplus"] = res.surplus.str();
          nlohmann::json opt = nlohmann::json::array();
          for (Mask x : res.optima) {
            nlohmann::json names = nlohmann::json::array();
            for_each_member(x,
                            [&](int w) { names.push_back(block.workers[w]); });
            opt.push_back(std::move(names));
          }
          j["optima"] = std::move(opt);
          jout["demand"].push_back(std::move(j));
        } else {
          out << nv.name << ": " << render_demand(block.workers, p, res)
              << "\n";
        }
      }
    }
  }

  if (relations || theorem3) {
    if (common.format == "json") jout["valuations"] = nlohmann::json::object();
    for (const NamedValuation& nv : block.valuations) {
      QlSymmetryReport report = verify_ql_symmetry(nv.valuation);
      all_symmetric = all_symmetric && report.symmetric;
      if (common.format == "json")
        jout["valuations"][nv.name] =
            ql_symmetry_to_json(block.workers, report);
      else
        out << "valuation " << nv.name << ":\n"
            << render_ql_symmetry(block.workers, report);
    }
  }

  if (common.format == "json") out << jout.dump(2) << "\n";
  return common.strict && !all_symmetric ? 1 : 0;
}

int cmd_generate(const std::string& config_file, const std::string& out_file,
                 std::ostream& out) {
  GeneratorConfig cfg = parse_generator_config(read_file(config_file));
  InstanceDocument doc = generate_instance(cfg);
  std::string text = serialize_instance(doc);
  if (out_file.empty() || out_file == "-") {
    out << text;
  } else {
    std::ofstream os(out_file);
    if (!os) throw ParseError(std::vector<ParseIssue>{{out_file, "cannot open for writing"}});
    os << text;
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"two-sided matching workbench: choice conditions, staged "
               "deferred acceptance, stability, school rules, quasi-linear "
               "demand"};
  app.require_subcommand(1);

  Common common;
  if (const char* env = std::getenv("USC_ENUM_CAP")) {
    try {
      common.enum_cap = std::stoi(env);
    } catch (const std::exception&) {
      err << "ignoring bad USC_ENUM_CAP value\n";
    }
  }

  std::string file, verify_file, demand_query, config_file, out_file;
  int stages = 0;
  bool one_stage = false, enumerate = false, relations = false,
       theorem3 = false;

  CLI::App* check = app.add_subcommand("check", "condition report per firm");
  check->add_option("file", file, "instance file")->required();
  add_common(check, common);

  CLI::App* da = app.add_subcommand("da", "run deferred acceptance");
  da->add_option("file", file, "instance file")->required();
  da->add_option("--stages", stages, "number of stages (merges later groups)");
  da->add_flag("--one-stage", one_stage, "single stage, all workers at once");
  add_common(da, common);

  CLI::App* stable =
      app.add_subcommand("stable", "verify or enumerate stable matchings");
  stable->add_option("file", file, "instance file")->required();
  stable->add_flag("--enumerate", enumerate,
                   "list all stable matchings (default)");
  stable->add_option("--verify", verify_file, "matching file to verify");
  add_common(stable, common);

  CLI::App* school =
      app.add_subcommand("school", "run both mechanisms on school rules");
  school->add_option("file", file, "instance file")->required();
  add_common(school, common);

  CLI::App* ql = app.add_subcommand("ql", "quasi-linear demand and relations");
  ql->add_option("file", file, "instance file")->required();
  ql->add_option("--demand", demand_query,
                 "salary query, e.g. \"s=7,u=2\"");
  ql->add_flag("--relations", relations, "detect relations with witnesses");
  ql->add_flag("--theorem3", theorem3, "report table symmetry");
  add_common(ql, common);

  CLI::App* gen = app.add_subcommand("generate", "write a random instance");
  gen->add_option("config", config_file, "generator config file")->required();
  gen->add_option("--out", out_file, "output path (default stdout)");
  add_common(gen, common);

  std::vector<const char*> argv;
  argv.push_back("usc");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse((int)argv.size(), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg;
    int code = app.exit(e, msg, msg);
    if (code == 0) {
      out << msg.str();  // --help and friends
      return 0;
    }
    err << msg.str();
    return 2;
  }

  try {
    if (*check) return cmd_check(file, common, out);
    if (*da) return cmd_da(file, stages, one_stage, common, out);
    if (*stable)
      return cmd_stable(file, enumerate, verify_file, common, out);
    if (*school) return cmd_school(file, common, out);
    if (*ql)
      return cmd_ql(file, demand_query, relations, theorem3, common, out);
    if (*gen) return cmd_generate(config_file, out_file, out);
  } catch (const ParseError& e) {
    for (const ParseIssue& issue : e.issues())
      err << "error: " << issue.path << ": " << issue.message << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "no subcommand selected\n";
  return 2;
}

}  // namespace usc
