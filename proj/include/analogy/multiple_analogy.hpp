#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "analogy/case_studies.hpp"
#include "analogy/core_model.hpp"

namespace analogy {

// A decidable property of an instance: an aspect holding a symbol, a numeric
// value inside a closed range, or an exact value.
struct Condition {
  enum class Kind { HasSymbol, InRange, Equals };

  std::string name;
  std::string aspect;
  Kind kind = Kind::HasSymbol;
  std::string symbol;
  double low = 0.0;
  double high = 0.0;
  FeatureValue value;

  bool satisfied_by(const Instance& inst) const;
};

// A corpus element declared as a possible source: the interpretation it
// speaks for, the search round in which it becomes available, and the
// sub-hypotheses its use presupposes.
struct SourceEntry {
  std::string id;
  std::string supports;
  std::size_t round = 1;
  std::vector<std::string> presupposes;
};

struct Problem {
  std::string id;
  std::vector<Condition> evidence;
  std::vector<Condition> conditions;
  std::vector<SourceEntry> sources;
  std::map<std::string, std::string> interpretations;
  std::vector<std::pair<std::string, std::string>> sub_hypotheses;  // name, statement
  std::vector<std::string> checkers;

  const SourceEntry* source(std::string_view id) const;
};

struct ProblemDocument {
  KnowledgeBase kb;
  Problem problem;
};

ProblemDocument load_problem(std::string_view text);
ProblemDocument load_problem_file(const std::string& path);

struct SourceMatch {
  std::string source;
  std::vector<std::string> satisfied;    // positive analogy
  std::vector<std::string> unsatisfied;  // negative analogy
};

// Throws Specification when a condition names an unknown aspect or tests it
// with the wrong shape.
std::vector<SourceMatch> match_conditions(const Problem& problem, const KnowledgeBase& kb,
                                          std::span<const Instance> corpus);

enum class SourceRole { Generation, Justification };
std::string_view to_string(SourceRole r);

using SourceSupport = std::pair<std::string, std::string>;  // source id, interpretation

struct Hypothesis {
  std::string id;
  std::map<std::string, std::set<std::string>> support;
  std::map<std::string, std::set<SourceRole>> provenance;

  std::size_t score(const std::string& interpretation) const;
  // Interpretations by score, then name.
  std::vector<std::pair<std::string, std::size_t>> ranking() const;
  // "(h_a) or (h_b)".
  std::string reading() const;
};

Hypothesis form_hypothesis(const Problem& problem, std::span<const SourceSupport> sources);
Hypothesis corroborate(Hypothesis h, std::span<const SourceSupport> new_sources);

struct TraceStep {
  std::size_t iteration = 0;
  std::vector<SourceMatch> candidates;
  std::optional<Hypothesis> hypothesis;
  std::vector<CorroborationReport> reports;
  std::vector<std::string> open_sub_hypotheses;
};

std::vector<TraceStep> heuristic_loop(const Problem& problem, const KnowledgeBase& kb,
                                      std::size_t max_iterations, const EulerSettings& checks = {});

}  // namespace analogy
