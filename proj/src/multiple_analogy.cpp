#include "analogy/multiple_analogy.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace analogy {

using nlohmann::json;

bool Condition::satisfied_by(const Instance& inst) const {
  const FeatureValue* v = inst.find(aspect);
  if (!v) return false;
  switch (kind) {
    case Kind::HasSymbol: return is_symbolic(*v) && std::get<SymbolSet>(*v).contains(symbol);
    case Kind::InRange: {
      if (!is_numeric(*v)) return false;
      double x = std::get<double>(*v);
      return low <= x && x <= high;
    }
    case Kind::Equals: return *v == value;
  }
  return false;
}

const SourceEntry* Problem::source(std::string_view id) const {
  for (const auto& s : sources)
    if (s.id == id) return &s;
  return nullptr;
}

std::string_view to_string(SourceRole r) {
  return r == SourceRole::Generation ? "generation" : "justification";
}

namespace {

[[noreturn]] void bad_spec(const std::string& path, const std::string& msg) {
  throw AnalogyError(ErrorKind::Specification, path, path + ": " + msg);
}

void check_condition(const Condition& c, const KnowledgeBase& kb, const std::string& path) {
  const AspectSchema* a = kb.aspect(c.aspect);
  if (!a) bad_spec(path, "condition '" + c.name + "' references unknown aspect '" + c.aspect + "'");
  bool numeric = a->kind == AspectKind::Numeric;
  bool ok = true;
  switch (c.kind) {
    case Condition::Kind::HasSymbol: ok = !numeric; break;
    case Condition::Kind::InRange: ok = numeric; break;
    case Condition::Kind::Equals: ok = numeric == is_numeric(c.value); break;
  }
  if (!ok) bad_spec(path, "condition '" + c.name + "' does not fit the kind of aspect '" + c.aspect + "'");
}

Condition parse_condition(const json& j, const std::string& path) {
  if (!j.is_object()) bad_spec(path, "expected an object");
  Condition c;
  if (!j.contains("name") || !j["name"].is_string()) bad_spec(path, "missing condition name");
  if (!j.contains("aspect") || !j["aspect"].is_string()) bad_spec(path, "missing condition aspect");
  c.name = j["name"].get<std::string>();
  c.aspect = j["aspect"].get<std::string>();
  if (auto it = j.find("has"); it != j.end()) {
    if (!it->is_string()) bad_spec(path + "/has", "expected a symbol");
    c.kind = Condition::Kind::HasSymbol;
    c.symbol = it->get<std::string>();
  } else if (auto it = j.find("range"); it != j.end()) {
    if (!it->is_array() || it->size() != 2 || !(*it)[0].is_number() || !(*it)[1].is_number())
      bad_spec(path + "/range", "expected [low, high]");
    c.kind = Condition::Kind::InRange;
    c.low = (*it)[0].get<double>();
    c.high = (*it)[1].get<double>();
  } else if (auto it = j.find("equals"); it != j.end()) {
    c.kind = Condition::Kind::Equals;
    if (it->is_number()) {
      c.value = it->get<double>();
    } else if (it->is_array()) {
      SymbolSet set;
      for (const auto& s : *it) {
        if (!s.is_string()) bad_spec(path + "/equals", "expected symbols");
        set.insert(s.get<std::string>());
      }
      c.value = std::move(set);
    } else {
      bad_spec(path + "/equals", "expected a number or an array of symbols");
    }
  } else {
    bad_spec(path, "condition needs one of 'has', 'range', 'equals'");
  }
  return c;
}

std::vector<Condition> parse_conditions(const json& j, const std::string& path, const KnowledgeBase& kb) {
  if (!j.is_array()) bad_spec(path, "expected an array of conditions");
  std::vector<Condition> out;
  std::set<std::string> names;
  for (std::size_t k = 0; k < j.size(); ++k) {
    std::string cpath = path + "/" + std::to_string(k);
    Condition c = parse_condition(j[k], cpath);
    if (!names.insert(c.name).second) bad_spec(cpath, "duplicate condition name '" + c.name + "'");
    check_condition(c, kb, cpath);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

ProblemDocument load_problem(std::string_view text) {
  ProblemDocument doc{load_knowledge_base(text), {}};
  json j = json::parse(text);  // already validated as JSON by the KB loader
  Problem& p = doc.problem;

  auto target = j.find("target");
  if (target == j.end() || !target->is_object()) bad_spec("/target", "missing target object");
  if (!target->contains("id") || !(*target)["id"].is_string()) bad_spec("/target", "missing target id");
  p.id = (*target)["id"].get<std::string>();
  if (target->contains("evidence")) p.evidence = parse_conditions((*target)["evidence"], "/target/evidence", doc.kb);

  if (!j.contains("conditions")) bad_spec("/conditions", "missing conditions");
  p.conditions = parse_conditions(j["conditions"], "/conditions", doc.kb);

  if (auto it = j.find("interpretations"); it != j.end()) {
    if (!it->is_object()) bad_spec("/interpretations", "expected an object");
    for (const auto& [name, text_value] : it->items())
      p.interpretations[name] = text_value.is_string() ? text_value.get<std::string>() : "";
  }
  if (auto it = j.find("sub_hypotheses"); it != j.end()) {
    if (!it->is_array()) bad_spec("/sub_hypotheses", "expected an array");
    for (std::size_t k = 0; k < it->size(); ++k) {
      const json& h = (*it)[k];
      std::string path = "/sub_hypotheses/" + std::to_string(k);
      if (!h.is_object() || !h.contains("name") || !h["name"].is_string())
        bad_spec(path, "expected {name, statement}");
      p.sub_hypotheses.emplace_back(h["name"].get<std::string>(), h.value("statement", std::string{}));
    }
  }
  if (auto it = j.find("sources"); it != j.end()) {
    if (!it->is_array()) bad_spec("/sources", "expected an array");
    for (std::size_t k = 0; k < it->size(); ++k) {
      const json& s = (*it)[k];
      std::string path = "/sources/" + std::to_string(k);
      if (!s.is_object() || !s.contains("id") || !s["id"].is_string() || !s.contains("supports") ||
          !s["supports"].is_string())
        bad_spec(path, "expected {id, supports}");
      SourceEntry e{s["id"].get<std::string>(), s["supports"].get<std::string>(), 1, {}};
      if (!doc.kb.instance(e.id)) bad_spec(path, "unknown source instance '" + e.id + "'");
      if (p.source(e.id)) bad_spec(path, "duplicate source '" + e.id + "'");
      if (s.contains("round")) {
        if (!s["round"].is_number_unsigned() || s["round"].get<std::size_t>() == 0)
          bad_spec(path + "/round", "expected a positive integer");
        e.round = s["round"].get<std::size_t>();
      }
      if (s.contains("presupposes")) {
        for (const auto& h : s["presupposes"]) {
          if (!h.is_string()) bad_spec(path + "/presupposes", "expected names");
          auto name = h.get<std::string>();
          bool known = std::any_of(p.sub_hypotheses.begin(), p.sub_hypotheses.end(),
                                   [&](const auto& sh) { return sh.first == name; });
          if (!known) bad_spec(path + "/presupposes", "unknown sub-hypothesis '" + name + "'");
          e.presupposes.push_back(name);
        }
      }
      p.sources.push_back(std::move(e));
    }
  }
  if (auto it = j.find("checkers"); it != j.end()) {
    if (!it->is_array()) bad_spec("/checkers", "expected an array");
    auto known = corroboration_check_names();
    for (const auto& c : *it) {
      if (!c.is_string() || std::find(known.begin(), known.end(), c.get<std::string>()) == known.end())
        bad_spec("/checkers", "unknown checker " + c.dump());
      p.checkers.push_back(c.get<std::string>());
    }
  }
  return doc;
}

ProblemDocument load_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw AnalogyError(ErrorKind::Parse, path, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_problem(buf.str());
}

std::vector<SourceMatch> match_conditions(const Problem& problem, const KnowledgeBase& kb,
                                          std::span<const Instance> corpus) {
  for (std::size_t k = 0; k < problem.conditions.size(); ++k)
    check_condition(problem.conditions[k], kb, "/conditions/" + std::to_string(k));

  std::vector<SourceMatch> out;
  for (const auto& inst : corpus) {
    SourceMatch m{inst.id, {}, {}};
    for (const auto& c : problem.conditions) (c.satisfied_by(inst) ? m.satisfied : m.unsatisfied).push_back(c.name);
    if (!m.satisfied.empty()) out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end(), [](const SourceMatch& a, const SourceMatch& b) {
    if (a.satisfied.size() != b.satisfied.size()) return a.satisfied.size() > b.satisfied.size();
    return a.source < b.source;
  });
  return out;
}

std::size_t Hypothesis::score(const std::string& interpretation) const {
  auto it = support.find(interpretation);
  return it == support.end() ? 0 : it->second.size();
}

std::vector<std::pair<std::string, std::size_t>> Hypothesis::ranking() const {
  std::vector<std::pair<std::string, std::size_t>> out;
  for (const auto& [name, sources] : support) out.emplace_back(name, sources.size());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
  return out;
}

std::string Hypothesis::reading() const {
  std::string out;
  for (const auto& [name, _] : support) {
    if (!out.empty()) out += " or ";
    out += "(" + name + ")";
  }
  return out;
}

namespace {

void record(Hypothesis& h, std::span<const SourceSupport> sources, SourceRole role) {
  for (const auto& [source, interpretation] : sources) {
    h.support[interpretation].insert(source);
    h.provenance[source].insert(role);
  }
}

}  // namespace

Hypothesis form_hypothesis(const Problem& problem, std::span<const SourceSupport> sources) {
  if (sources.empty())
    throw AnalogyError(ErrorKind::CannotForm, problem.id, "a hypothesis needs at least one source");
  Hypothesis h;
  h.id = "H(" + problem.id + ")";
  record(h, sources, SourceRole::Generation);
  return h;
}

Hypothesis corroborate(Hypothesis h, std::span<const SourceSupport> new_sources) {
  record(h, new_sources, SourceRole::Justification);
  return h;
}

std::vector<TraceStep> heuristic_loop(const Problem& problem, const KnowledgeBase& kb,
                                      std::size_t max_iterations, const EulerSettings& checks) {
  if (problem.conditions.empty())
    throw AnalogyError(ErrorKind::Specification, problem.id, "problem declares no condition of solvability");
  if (max_iterations == 0) throw AnalogyError(ErrorKind::Domain, "max_iterations", "needs at least one iteration");

  std::vector<TraceStep> trace;
  std::set<std::string> consulted;
  std::set<std::string> presupposed;
  std::vector<SourceSupport> generation;
  std::optional<Hypothesis> h;

  for (std::size_t it = 1; it <= max_iterations; ++it) {
    TraceStep step;
    step.iteration = it;

    std::vector<Instance> visible;
    for (const auto& inst : kb.instances) {
      if (inst.id == problem.id || consulted.contains(inst.id)) continue;
      const SourceEntry* entry = problem.source(inst.id);
      if (entry && entry->round > it) continue;
      visible.push_back(inst);
    }
    if (!visible.empty()) step.candidates = match_conditions(problem, kb, visible);

    std::vector<SourceSupport> found;
    for (const auto& m : step.candidates) {
      consulted.insert(m.source);
      if (const SourceEntry* entry = problem.source(m.source)) {
        found.emplace_back(entry->id, entry->supports);
        presupposed.insert(entry->presupposes.begin(), entry->presupposes.end());
      }
    }

    if (!found.empty()) {
      if (!h) {
        h = form_hypothesis(problem, found);
        generation = found;
        for (const auto& name : problem.checkers) {
          auto reports = run_corroboration_check(name, checks);
          step.reports.insert(step.reports.end(), reports.begin(), reports.end());
        }
      } else {
        // New sources refine; the generating sources are tested again
        // against the enlarged knowledge and so justify as well.
        h = corroborate(std::move(*h), found);
        h = corroborate(std::move(*h), generation);
      }
    }

    for (const auto& [name, _] : problem.sub_hypotheses)
      if (presupposed.contains(name)) step.open_sub_hypotheses.push_back(name);
    step.hypothesis = h;

    const bool exhausted = step.candidates.empty();
    trace.push_back(std::move(step));
    if (exhausted) break;
  }
  return trace;
}

}  // namespace analogy
