#include "usc/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace usc {

using nlohmann::json;

namespace {

std::string join_issues(const std::vector<ParseIssue>& issues) {
  std::ostringstream os;
  for (size_t i = 0; i < issues.size(); ++i) {
    if (i) os << "; ";
    os << issues[i].path << ": " << issues[i].message;
  }
  return os.str();
}

struct Collector {
  std::vector<ParseIssue> issues;
  void add(std::string path, std::string msg) {
    issues.push_back({std::move(path), std::move(msg)});
  }
  void throw_if_any() {
    if (!issues.empty()) throw ParseError(std::move(issues));
  }
};

std::vector<std::string> parse_name_array(const json& j, const std::string& path,
                                          Collector& c) {
  std::vector<std::string> out;
  if (!j.is_array()) {
    c.add(path, "expected an array of names");
    return out;
  }
  for (size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) {
      c.add(path + "[" + std::to_string(i) + "]", "expected a name string");
      continue;
    }
    std::string name = j[i].get<std::string>();
    if (std::find(out.begin(), out.end(), name) != out.end())
      c.add(path + "[" + std::to_string(i) + "]", "duplicate name " + name);
    out.push_back(std::move(name));
  }
  return out;
}

int resolve(const std::vector<std::string>& names, const std::string& name) {
  auto it = std::find(names.begin(), names.end(), name);
  return it == names.end() ? -1 : (int)(it - names.begin());
}

Mask parse_worker_set(const json& j, const std::string& path,
                      const std::vector<std::string>& workers, Collector& c) {
  Mask m = 0;
  if (!j.is_array()) {
    c.add(path, "expected an array of worker names");
    return m;
  }
  for (size_t i = 0; i < j.size(); ++i) {
    std::string p = path + "[" + std::to_string(i) + "]";
    if (!j[i].is_string()) {
      c.add(p, "expected a worker name");
      continue;
    }
    int w = resolve(workers, j[i].get<std::string>());
    if (w < 0) {
      c.add(p, "unknown worker " + j[i].get<std::string>());
      continue;
    }
    if (contains(m, w)) c.add(p, "worker listed twice");
    m = with(m, w);
  }
  return m;
}

Rational parse_rational_field(const json& j, const std::string& path,
                              Collector& c) {
  try {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
  } catch (const std::exception& e) {
    c.add(path, e.what());
    return Rational(0);
  }
  c.add(path, "expected a rational as \"p/q\" string or integer");
  return Rational(0);
}

void parse_quasilinear(const json& j, InstanceDocument& doc, Collector& c) {
  QuasilinearBlock block;
  if (!j.is_object()) {
    c.add("quasilinear", "expected an object");
    return;
  }
  block.workers = parse_name_array(j.value("workers", json::array()),
                                   "quasilinear.workers", c);
  int n = (int)block.workers.size();
  if (n > kDefaultEnumCap) {
    c.add("quasilinear.workers", "too many workers");
    return;
  }

  // Canonical subset key: member names sorted lexicographically, joined
  // with commas; the empty set is "".
  auto key_of = [&](Mask m) {
    std::vector<std::string> names;
    for_each_member(m, [&](int w) { names.push_back(block.workers[w]); });
    std::sort(names.begin(), names.end());
    std::string key;
    for (size_t i = 0; i < names.size(); ++i) {
      if (i) key += ",";
      key += names[i];
    }
    return key;
  };
  auto mask_of = [&](const std::string& key) {
    Mask m = 0;
    if (key.empty()) return std::optional<Mask>(0);
    std::stringstream ss(key);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
      int w = resolve(block.workers, piece);
      if (w < 0 || contains(m, w)) return std::optional<Mask>();
      m = with(m, w);
    }
    return std::optional<Mask>(m);
  };

  if (!j.contains("valuations") || !j["valuations"].is_object()) {
    c.add("quasilinear.valuations", "expected an object of valuations");
  } else {
    for (auto& [vname, table] : j["valuations"].items()) {
      std::string vpath = "quasilinear.valuations." + vname;
      Valuation v = Valuation::zeros(n);
      if (!table.is_object()) {
        c.add(vpath, "expected a subset-to-rational table");
        continue;
      }
      std::vector<bool> seen(std::size_t{1} << n, false);
      for (auto& [key, cell] : table.items()) {
        auto m = mask_of(key);
        if (!m) {
          c.add(vpath + "[\"" + key + "\"]", "unknown subset key");
          continue;
        }
        if (seen[*m]) {
          c.add(vpath + "[\"" + key + "\"]", "subset valued twice");
          continue;
        }
        seen[*m] = true;
        v(*m) = parse_rational_field(cell, vpath + "[\"" + key + "\"]", c);
      }
      for (Mask m = 0; m < (Mask)(1 << n); ++m)
        if (!seen[m])
          c.add(vpath, "valuation is partial: missing subset \"" +
                           key_of(m) + "\"");
      block.valuations.push_back({vname, std::move(v)});
    }
  }

  if (j.contains("queries")) {
    if (!j["queries"].is_array()) {
      c.add("quasilinear.queries", "expected an array of salary vectors");
    } else {
      for (size_t i = 0; i < j["queries"].size(); ++i) {
        std::string qpath = "quasilinear.queries[" + std::to_string(i) + "]";
        const json& q = j["queries"][i];
        if (!q.is_object()) {
          c.add(qpath, "expected a name-to-rational object");
          continue;
        }
        SalaryVector p(n, Rational(0));
        std::vector<bool> seen(n, false);
        for (auto& [name, cell] : q.items()) {
          int w = resolve(block.workers, name);
          if (w < 0) {
            c.add(qpath + "." + name, "unknown worker");
            continue;
          }
          seen[w] = true;
          p[w] = parse_rational_field(cell, qpath + "." + name, c);
        }
        for (int w = 0; w < n; ++w)
          if (!seen[w])
            c.add(qpath, "missing salary for worker " + block.workers[w]);
        block.queries.push_back(std::move(p));
      }
    }
  }
  doc.quasilinear = std::move(block);
}

}  // namespace

ParseError::ParseError(std::vector<ParseIssue> issues)
    : std::runtime_error(join_issues(issues)), issues_(std::move(issues)) {}

InstanceDocument parse_instance(const std::string& text) {
  Collector c;
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    c.add("$", e.what());
    c.throw_if_any();
  }
  if (!root.is_object()) {
    c.add("$", "instance file must be a JSON object");
    c.throw_if_any();
  }
  static const char* known_keys[] = {"workers",    "firms",  "groups",
                                     "worker_prefs", "firm_prefs", "school",
                                     "quasilinear"};
  for (auto& [key, _] : root.items()) {
    if (std::find_if(std::begin(known_keys), std::end(known_keys),
                     [&](const char* k) { return key == k; }) ==
        std::end(known_keys))
      c.add(key, "unknown top-level field");
  }

  InstanceDocument doc;
  doc.workers = parse_name_array(root.value("workers", json::array()),
                                 "workers", c);
  doc.firms = parse_name_array(root.value("firms", json::array()), "firms", c);
  c.throw_if_any();  // names are the basis for everything else

  int n = (int)doc.workers.size(), m = (int)doc.firms.size();
  if (n > 31) {
    c.add("workers", "too many workers");
    c.throw_if_any();
  }

  const json& groups = root.value("groups", json::array());
  if (!groups.is_array()) {
    c.add("groups", "expected an array of name arrays");
  } else {
    for (size_t k = 0; k < groups.size(); ++k)
      doc.groups.push_back(parse_worker_set(
          groups[k], "groups[" + std::to_string(k) + "]", doc.workers, c));
  }

  const json& wp = root.value("worker_prefs", json::object());
  if (!wp.is_object()) {
    c.add("worker_prefs", "expected an object");
  } else {
    doc.worker_prefs.assign(n, {});
    std::vector<bool> seen(n, false);
    for (auto& [name, list] : wp.items()) {
      int w = resolve(doc.workers, name);
      std::string path = "worker_prefs." + name;
      if (w < 0) {
        c.add(path, "unknown worker");
        continue;
      }
      seen[w] = true;
      if (!list.is_array()) {
        c.add(path, "expected an array of firm names");
        continue;
      }
      for (size_t i = 0; i < list.size(); ++i) {
        std::string p = path + "[" + std::to_string(i) + "]";
        if (!list[i].is_string()) {
          c.add(p, "expected a firm name");
          continue;
        }
        int f = resolve(doc.firms, list[i].get<std::string>());
        if (f < 0)
          c.add(p, "unknown firm " + list[i].get<std::string>());
        else
          doc.worker_prefs[w].ranked.push_back(f);
      }
    }
    for (int w = 0; w < n; ++w)
      if (!seen[w])
        c.add("worker_prefs", "missing entry for worker " + doc.workers[w]);
  }

  const json& fp = root.value("firm_prefs", json::object());
  const json& school = root.value("school", json::object());
  if (!fp.is_object()) c.add("firm_prefs", "expected an object");
  if (!school.is_object()) c.add("school", "expected an object");
  c.throw_if_any();

  for (auto& [name, _] : fp.items())
    if (resolve(doc.firms, name) < 0)
      c.add("firm_prefs." + name, "unknown firm");
  for (auto& [name, _] : school.items())
    if (resolve(doc.firms, name) < 0)
      c.add("school." + name, "unknown firm");
  if (!school.empty() && doc.groups.size() != 2)
    c.add("school", "school rules need exactly two groups");

  for (int f = 0; f < m; ++f) {
    const std::string& name = doc.firms[f];
    bool in_fp = fp.contains(name), in_school = school.contains(name);
    if (in_fp && in_school) {
      c.add("firm_prefs." + name, "firm also appears under school");
      continue;
    }
    if (!in_fp && !in_school) {
      c.add("firm_prefs", "missing entry for firm " + name);
      continue;
    }
    if (in_fp) {
      std::string path = "firm_prefs." + name;
      const json& list = fp[name];
      FirmPreference pref;
      if (!list.is_array()) {
        c.add(path, "expected an array of worker-name arrays");
      } else {
        for (size_t i = 0; i < list.size(); ++i)
          pref.ranked.push_back(parse_worker_set(
              list[i], path + "[" + std::to_string(i) + "]", doc.workers, c));
      }
      doc.firm_specs.emplace_back(std::move(pref));
    } else {
      std::string path = "school." + name;
      const json& obj = school[name];
      SchoolRuleSpec spec;
      if (!obj.is_object()) {
        c.add(path, "expected an object with priority/capacity/ceiling");
      } else {
        for (auto& [key, _] : obj.items())
          if (key != "priority" && key != "capacity" && key != "ceiling")
            c.add(path + "." + key, "unknown field");
        Mask prio = parse_worker_set(obj.value("priority", json::array()),
                                     path + ".priority", doc.workers, c);
        (void)prio;
        if (obj.contains("priority") && obj["priority"].is_array())
          for (const auto& entry : obj["priority"])
            if (entry.is_string()) {
              int w = resolve(doc.workers, entry.get<std::string>());
              if (w >= 0) spec.priority.push_back(w);
            }
        if (!obj.contains("capacity") || !obj["capacity"].is_number_integer())
          c.add(path + ".capacity", "expected an integer capacity");
        else
          spec.capacity = obj["capacity"].get<int>();
        if (!obj.contains("ceiling"))
          c.add(path + ".ceiling", "expected a rational ceiling");
        else
          spec.ceiling =
              parse_rational_field(obj["ceiling"], path + ".ceiling", c);
      }
      doc.firm_specs.emplace_back(std::move(spec));
    }
  }

  if (root.contains("quasilinear"))
    parse_quasilinear(root["quasilinear"], doc, c);

  c.throw_if_any();

  // Semantic pass over the assembled market.
  MarketInstance inst = doc.build_market();
  for (const ValidationIssue& issue : validate_instance(inst))
    c.add(issue.location, issue.message);
  c.throw_if_any();
  return doc;
}

InstanceDocument load_instance(const std::string& file_path) {
  std::ifstream in(file_path);
  if (!in)
    throw ParseError({{file_path, "cannot open file"}});
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str());
}

std::string serialize_instance(const InstanceDocument& doc) {
  json root = json::object();
  root["workers"] = doc.workers;
  root["firms"] = doc.firms;
  root["groups"] = json::array();
  for (Mask g : doc.groups) {
    json names = json::array();
    for_each_member(g, [&](int w) { names.push_back(doc.workers[w]); });
    root["groups"].push_back(std::move(names));
  }
  root["worker_prefs"] = json::object();
  for (size_t w = 0; w < doc.worker_prefs.size(); ++w) {
    json list = json::array();
    for (int f : doc.worker_prefs[w].ranked) list.push_back(doc.firms[f]);
    root["worker_prefs"][doc.workers[w]] = std::move(list);
  }
  json fp = json::object(), school = json::object();
  for (size_t f = 0; f < doc.firm_specs.size(); ++f) {
    if (const auto* pref = std::get_if<FirmPreference>(&doc.firm_specs[f])) {
      json list = json::array();
      for (Mask x : pref->ranked) {
        json names = json::array();
        for_each_member(x, [&](int w) { names.push_back(doc.workers[w]); });
        list.push_back(std::move(names));
      }
      fp[doc.firms[f]] = std::move(list);
    } else {
      const auto& spec = std::get<SchoolRuleSpec>(doc.firm_specs[f]);
      json obj = json::object();
      obj["priority"] = json::array();
      for (int w : spec.priority) obj["priority"].push_back(doc.workers[w]);
      obj["capacity"] = spec.capacity;
      obj["ceiling"] = spec.ceiling.str();
      school[doc.firms[f]] = std::move(obj);
    }
  }
  if (!fp.empty() || school.empty()) root["firm_prefs"] = std::move(fp);
  if (!school.empty()) root["school"] = std::move(school);

  if (doc.quasilinear) {
    const QuasilinearBlock& block = *doc.quasilinear;
    json q = json::object();
    q["workers"] = block.workers;
    auto key_of = [&](Mask m) {
      std::vector<std::string> names;
      for_each_member(m, [&](int w) { names.push_back(block.workers[w]); });
      std::sort(names.begin(), names.end());
      std::string key;
      for (size_t i = 0; i < names.size(); ++i) {
        if (i) key += ",";
        key += names[i];
      }
      return key;
    };
    q["valuations"] = json::object();
    for (const NamedValuation& nv : block.valuations) {
      json table = json::object();
      for (Mask x = 0; x < (Mask)nv.valuation.value.size(); ++x)
        table[key_of(x)] = nv.valuation(x).str();
      q["valuations"][nv.name] = std::move(table);
    }
    if (!block.queries.empty()) {
      q["queries"] = json::array();
      for (const SalaryVector& p : block.queries) {
        json obj = json::object();
        for (size_t w = 0; w < p.size(); ++w)
          obj[block.workers[w]] = p[w].str();
        q["queries"].push_back(std::move(obj));
      }
    }
    root["quasilinear"] = std::move(q);
  }
  return root.dump(2) + "\n";
}

Matching parse_matching(const std::string& text, const MarketInstance& inst) {
  Collector c;
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    c.add("$", e.what());
    c.throw_if_any();
  }
  if (!root.is_object()) {
    c.add("$", "matching file must be a firm-to-workers object");
    c.throw_if_any();
  }
  std::vector<Mask> holdings(inst.n_firms(), 0);
  Mask assigned = 0;
  for (auto& [name, list] : root.items()) {
    int f = resolve(inst.firms, name);
    if (f < 0) {
      c.add(name, "unknown firm");
      continue;
    }
    if (!list.is_array()) {
      c.add(name, "expected an array of worker names");
      continue;
    }
    for (const auto& entry : list) {
      if (!entry.is_string()) {
        c.add(name, "expected worker names");
        continue;
      }
      int w = resolve(inst.workers, entry.get<std::string>());
      if (w < 0) {
        c.add(name, "unknown worker " + entry.get<std::string>());
        continue;
      }
      if (contains(assigned, w)) {
        c.add(name, "worker " + inst.workers[w] + " assigned twice");
        continue;
      }
      assigned = with(assigned, w);
      holdings[f] = with(holdings[f], w);
    }
  }
  c.throw_if_any();
  return Matching::from_assignments(holdings, inst.n_workers());
}

GeneratorConfig parse_generator_config(const std::string& text) {
  Collector c;
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    c.add("$", e.what());
    c.throw_if_any();
  }
  if (!root.is_object()) {
    c.add("$", "generator config must be a JSON object");
    c.throw_if_any();
  }
  GeneratorConfig cfg;
  try {
    if (root.contains("family"))
      cfg.family = family_from_name(root["family"].get<std::string>());
    cfg.seed = root.value("seed", cfg.seed);
    cfg.firms = root.value("firms", cfg.firms);
    if (root.contains("group_sizes"))
      cfg.group_sizes = root["group_sizes"].get<std::vector<int>>();
    cfg.max_ranked_subsets =
        root.value("max_ranked_subsets", cfg.max_ranked_subsets);
    cfg.max_attempts = root.value("max_attempts", cfg.max_attempts);
    cfg.value_min = root.value("value_min", cfg.value_min);
    cfg.value_max = root.value("value_max", cfg.value_max);
    cfg.max_capacity = root.value("max_capacity", cfg.max_capacity);
  } catch (const std::exception& e) {
    c.add("$", e.what());
  }
  if (cfg.firms < 1) c.add("firms", "need at least one firm");
  for (int s : cfg.group_sizes)
    if (s < 0) c.add("group_sizes", "group sizes must be non-negative");
  if (cfg.value_min > cfg.value_max)
    c.add("value_min", "empty value range");
  c.throw_if_any();
  return cfg;
}

// --- rendering -----------------------------------------------------------

std::string set_names(const std::vector<std::string>& names, Mask m) {
  std::string out = "{";
  bool first = true;
  for_each_member(m, [&](int w) {
    if (!first) out += ", ";
    out += names[w];
    first = false;
  });
  return out + "}";
}

std::string render_matching(const MarketInstance& inst, const Matching& eta) {
  std::string out;
  for (int f = 0; f < inst.n_firms(); ++f) {
    if (f) out += " | ";
    out += inst.firms[f] + ": " + set_names(inst.workers, eta.workers_of(f));
  }
  if (inst.n_firms()) out += " | ";
  out += "unmatched: " + set_names(inst.workers, eta.unmatched());
  return out;
}

nlohmann::json matching_to_json(const MarketInstance& inst,
                                const Matching& eta) {
  json obj = json::object();
  for (int f = 0; f < inst.n_firms(); ++f) {
    json list = json::array();
    for_each_member(eta.workers_of(f),
                    [&](int w) { list.push_back(inst.workers[w]); });
    obj[inst.firms[f]] = std::move(list);
  }
  return obj;
}

std::string render_trace(const MarketInstance& inst,
                         const MechanismTrace& trace) {
  std::ostringstream os;
  for (size_t s = 0; s < trace.stages.size(); ++s) {
    const StageRecord& stage = trace.stages[s];
    os << "stage " << s + 1 << " (proposers: "
       << set_names(inst.workers, stage.proposers) << ")\n";
    for (size_t r = 0; r < stage.rounds.size(); ++r) {
      const RoundRecord& round = stage.rounds[r];
      os << "  round " << r + 1 << ":";
      bool wrote = false;
      for (int f = 0; f < inst.n_firms(); ++f) {
        const FirmRoundRecord& fr = round.firms[f];
        if (!fr.active) continue;
        os << (wrote ? "; " : " ") << inst.firms[f] << " <- "
           << set_names(inst.workers, fr.considered) << " keeps "
           << set_names(inst.workers, fr.held);
        if (fr.rejected)
          os << ", rejects " << set_names(inst.workers, fr.rejected);
        wrote = true;
      }
      if (round.exits) {
        os << (wrote ? "; " : " ") << "exits: "
           << set_names(inst.workers, round.exits);
        wrote = true;
      }
      if (!wrote) os << " (nothing happened)";
      os << "\n";
    }
    for (const std::string& w : stage.warnings)
      os << "  warning: " << w << "\n";
    if (!stage.rounds.empty() && s + 1 < trace.stages.size()) {
      os << "  holdings:";
      for (int f = 0; f < inst.n_firms(); ++f)
        os << (f ? " | " : " ") << inst.firms[f] << ": "
           << set_names(inst.workers,
                        stage.rounds.back().firms[f].held);
      os << "\n";
    }
  }
  os << "final: " << render_matching(inst, trace.result) << "\n";
  return os.str();
}

nlohmann::json trace_to_json(const MarketInstance& inst,
                             const MechanismTrace& trace) {
  json stages = json::array();
  auto name_set = [&](Mask m) {
    json list = json::array();
    for_each_member(m, [&](int w) { list.push_back(inst.workers[w]); });
    return list;
  };
  for (const StageRecord& stage : trace.stages) {
    json js;
    js["proposers"] = name_set(stage.proposers);
    js["rounds"] = json::array();
    for (const RoundRecord& round : stage.rounds) {
      json jr;
      jr["firms"] = json::object();
      for (int f = 0; f < inst.n_firms(); ++f) {
        const FirmRoundRecord& fr = round.firms[f];
        if (!fr.active) continue;
        json jf;
        jf["considered"] = name_set(fr.considered);
        jf["keeps"] = name_set(fr.held);
        jf["rejects"] = name_set(fr.rejected);
        jr["firms"][inst.firms[f]] = std::move(jf);
      }
      jr["exits"] = name_set(round.exits);
      js["rounds"].push_back(std::move(jr));
    }
    js["warnings"] = stage.warnings;
    stages.push_back(std::move(js));
  }
  json out;
  out["stages"] = std::move(stages);
  out["final"] = matching_to_json(inst, trace.result);
  return out;
}

std::string describe_witness(const std::vector<std::string>& names,
                             const RelationWitness& wit) {
  return names[wit.w] + " is a " + relation_name(wit.kind) + " to " +
         names[wit.w_prime] + " in context " + set_names(names, wit.context);
}

namespace {

std::string vector_str(const DemandVector& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

std::string verdict_str(const std::vector<std::string>& names,
                        const ConditionVerdict& v) {
  if (v.holds) return "holds";
  return "violated (" + describe_witness(names, *v.counterexample) + ")";
}

}  // namespace

std::string render_condition_report(const MarketInstance& inst,
                                    const ConditionReport& report) {
  std::ostringstream os;
  for (int f = 0; f < (int)report.firms.size(); ++f) {
    const FirmConditionReport& fr = report.firms[f];
    os << "firm " << inst.firms[f] << ":\n";
    os << "  substitutes: " << verdict_str(inst.workers, fr.substitutes)
       << "\n";
    os << "  usc: " << verdict_str(inst.workers, fr.usc) << "\n";
    if (fr.sscc)
      os << "  sscc: " << verdict_str(inst.workers, *fr.sscc) << "\n";
    os << "  demand vectors:";
    for (const DemandVector& v : fr.demand_vectors) os << " " << vector_str(v);
    os << "\n";
  }
  os << "union demand vectors:";
  for (const DemandVector& v : report.union_vectors) os << " " << vector_str(v);
  os << "\n";
  if (report.union_minor) {
    os << "unimodularity: violated by minor [";
    for (size_t i = 0; i < report.union_minor->rows.size(); ++i) {
      if (i) os << ", ";
      os << vector_str(report.union_minor->rows[i]);
    }
    os << "] with determinant " << report.union_minor->determinant << "\n";
  } else {
    os << "unimodularity: all square minors in {-1, 0, 1}\n";
  }
  return os.str();
}

nlohmann::json condition_report_to_json(const MarketInstance& inst,
                                        const ConditionReport& report) {
  auto witness_json = [&](const RelationWitness& wit) {
    json w;
    w["w"] = inst.workers[wit.w];
    w["w_prime"] = inst.workers[wit.w_prime];
    w["kind"] = relation_name(wit.kind);
    json ctx = json::array();
    for_each_member(wit.context,
                    [&](int i) { ctx.push_back(inst.workers[i]); });
    w["context"] = std::move(ctx);
    return w;
  };
  auto verdict_json = [&](const ConditionVerdict& v) {
    json out;
    out["holds"] = v.holds;
    if (!v.holds) out["counterexample"] = witness_json(*v.counterexample);
    return out;
  };
  json firms = json::object();
  for (int f = 0; f < (int)report.firms.size(); ++f) {
    const FirmConditionReport& fr = report.firms[f];
    json jf;
    jf["substitutes"] = verdict_json(fr.substitutes);
    jf["usc"] = verdict_json(fr.usc);
    if (fr.sscc) jf["sscc"] = verdict_json(*fr.sscc);
    jf["demand_vectors"] = fr.demand_vectors;
    firms[inst.firms[f]] = std::move(jf);
  }
  json out;
  out["firms"] = std::move(firms);
  out["union_demand_vectors"] = report.union_vectors;
  if (report.union_minor) {
    json minor;
    minor["rows"] = report.union_minor->rows;
    minor["determinant"] = report.union_minor->determinant;
    out["non_unimodular_minor"] = std::move(minor);
  }
  return out;
}

namespace {

std::string salary_str(const std::vector<std::string>& names,
                       const SalaryVector& p) {
  std::string out = "(";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) out += ", ";
    out += names[i] + "=" + p[i].str();
  }
  return out + ")";
}

}  // namespace

std::string render_demand(const std::vector<std::string>& names,
                          const SalaryVector& p, const DemandResult& res) {
  std::string out = "demand at " + salary_str(names, p) + ": surplus " +
                    res.surplus.str() + ", optima";
  for (size_t i = 0; i < res.optima.size(); ++i) {
    out += i ? ", " : " ";
    out += set_names(names, res.optima[i]);
  }
  return out;
}

std::string render_ql_symmetry(const std::vector<std::string>& names,
                               const QlSymmetryReport& report) {
  std::ostringstream os;
  const QlRelationTable& t = report.table;
  bool any = false;
  for (int w = 0; w < t.n; ++w)
    for (int w2 = 0; w2 < t.n; ++w2) {
      if (w == w2) continue;
      for (Relation kind : {Relation::kSubstitute, Relation::kComplement}) {
        const auto& slot =
            (kind == Relation::kSubstitute ? t.substitute : t.complement)[w][w2];
        if (!slot) continue;
        any = true;
        os << "  " << names[w] << " is a " << relation_name(kind) << " to "
           << names[w2] << " (high " << salary_str(names, slot->high)
           << ", low " << salary_str(names, slot->low) << ")\n";
      }
    }
  if (!any) os << "  no substitute or complement relations found\n";
  os << "  symmetric: " << (report.symmetric ? "yes" : "NO") << "\n";
  for (const auto& asym : report.asymmetries)
    os << "  asymmetry: " << names[asym.w] << " -> " << names[asym.w_prime]
       << " " << relation_name(asym.kind) << " found, reverse missing\n";
  return os.str();
}

nlohmann::json ql_symmetry_to_json(const std::vector<std::string>& names,
                                   const QlSymmetryReport& report) {
  json relations = json::array();
  const QlRelationTable& t = report.table;
  auto salary_json = [&](const SalaryVector& p) {
    json obj = json::object();
    for (size_t i = 0; i < p.size(); ++i) obj[names[i]] = p[i].str();
    return obj;
  };
  for (int w = 0; w < t.n; ++w)
    for (int w2 = 0; w2 < t.n; ++w2) {
      if (w == w2) continue;
      for (Relation kind : {Relation::kSubstitute, Relation::kComplement}) {
        const auto& slot =
            (kind == Relation::kSubstitute ? t.substitute : t.complement)[w][w2];
        if (!slot) continue;
        json r;
        r["w"] = names[w];
        r["w_prime"] = names[w2];
        r["kind"] = relation_name(kind);
        r["high"] = salary_json(slot->high);
        r["low"] = salary_json(slot->low);
        relations.push_back(std::move(r));
      }
    }
  json out;
  out["relations"] = std::move(relations);
  out["symmetric"] = report.symmetric;
  return out;
}

}  // namespace usc
