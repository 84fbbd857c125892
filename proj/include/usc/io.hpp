#pragma once
// Instance files (JSON), matching files, generator configs, and the text /
// JSON renderings of results.

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "usc/conditions.hpp"
#include "usc/document.hpp"
#include "usc/generator.hpp"
#include "usc/mechanisms.hpp"
#include "usc/quasilinear.hpp"
#include "usc/stability.hpp"

namespace usc {

struct ParseIssue {
  std::string path;  // JSON-ish location, e.g. "firm_prefs.f1[2]"
  std::string message;
};

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(std::vector<ParseIssue> issues);
  const std::vector<ParseIssue>& issues() const { return issues_; }

 private:
  std::vector<ParseIssue> issues_;
};

// Parses and validates; throws ParseError carrying every issue found.
InstanceDocument parse_instance(const std::string& text);
InstanceDocument load_instance(const std::string& file_path);

std::string serialize_instance(const InstanceDocument& doc);

// Matching files are firm-name -> worker-name-list objects; workers left
// out are unmatched.
Matching parse_matching(const std::string& text, const MarketInstance& inst);

GeneratorConfig parse_generator_config(const std::string& text);

// --- rendering -----------------------------------------------------------

std::string set_names(const std::vector<std::string>& names, Mask m);

std::string render_matching(const MarketInstance& inst, const Matching& eta);
nlohmann::json matching_to_json(const MarketInstance& inst,
                                const Matching& eta);

std::string render_trace(const MarketInstance& inst,
                         const MechanismTrace& trace);
nlohmann::json trace_to_json(const MarketInstance& inst,
                             const MechanismTrace& trace);

std::string describe_witness(const std::vector<std::string>& names,
                             const RelationWitness& wit);
std::string render_condition_report(const MarketInstance& inst,
                                    const ConditionReport& report);
nlohmann::json condition_report_to_json(const MarketInstance& inst,
                                        const ConditionReport& report);

std::string render_demand(const std::vector<std::string>& names,
                          const SalaryVector& p, const DemandResult& res);
std::string render_ql_symmetry(const std::vector<std::string>& names,
                               const QlSymmetryReport& report);
nlohmann::json ql_symmetry_to_json(const std::vector<std::string>& names,
                                   const QlSymmetryReport& report);

}  // namespace usc
