#include "analogy/cli.hpp"

#include <algorithm>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "analogy/case_studies.hpp"
#include "analogy/core_model.hpp"
#include "analogy/determination.hpp"
#include "analogy/multiple_analogy.hpp"
#include "analogy/report.hpp"
#include "analogy/selection_probability.hpp"
#include "analogy/similarity.hpp"
#include "analogy/typicality.hpp"

namespace analogy::cli {

namespace {

struct Options {
  std::string kb_path;
  std::string problem_path;
  std::string format = "table";
  std::size_t K = 10000;
  std::size_t product_K = 100000;
  std::size_t n = 10000;
  std::vector<double> grid{0.1, 0.5, 1.0, 1.5};
  std::optional<double> tolerance;
  std::string rule;
  std::string index = "city-block";
  std::string local = "ratio";
  double alpha = 1.0, beta = 1.0, gamma = 1.0;
  std::string target, source, connection, concept_id, aspect;
  std::size_t relevant = 1;
  std::size_t blocks = kDefaultHorizon;
  std::size_t max_iterations = 10;
};

// Result of one subcommand: its reports and whether every verdict held.
struct Outcome {
  std::vector<Report> reports;
  bool checks_failed = false;
};

std::string join(const auto& items, std::string_view sep = ", ") {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += sep;
    out += s;
  }
  return out;
}

std::string braces(const auto& items) { return "{" + join(items) + "}"; }

std::int64_t as_int(std::size_t v) { return static_cast<std::int64_t>(v); }

Outcome cmd_sim(const Options& o) {
  auto kb = load_knowledge_base_file(o.kb_path);
  Report r;
  const bool contrast = o.index == "contrast";
  r.title = "pairwise " + o.index + (contrast ? "" : " (" + o.local + " locals)");
  r.columns.push_back("");
  for (const auto& i : kb.instances) r.columns.push_back(i.id);

  auto locals = LocalAssignment::uniform_symbolic(parse_local_index(o.local));
  std::optional<GlobalIndexKind> kind;
  if (!contrast) kind = parse_global_index(o.index);
  ContrastWeights w{o.alpha, o.beta, o.gamma, {}};

  for (const auto& a : kb.instances) {
    std::vector<Cell> row{a.id};
    for (const auto& b : kb.instances) {
      try {
        row.emplace_back(contrast ? contrast_model(kb, a, b, w) : global_sim(*kind, kb, a, b, locals));
      } catch (const AnalogyError& e) {
        if (e.kind() != ErrorKind::DisjointDescription && e.kind() != ErrorKind::InapplicableModel) throw;
        row.emplace_back(std::string("n/a"));
      }
    }
    r.rows.push_back(std::move(row));
  }
  return {{r}, false};
}

Outcome cmd_audit(const Options& o) {
  auto kb = load_knowledge_base_file(o.kb_path);
  auto triples = ordered_triples(kb.instances);
  if (triples.empty()) throw AnalogyError(ErrorKind::Domain, o.kb_path, "audit needs at least three instances");
  auto locals = LocalAssignment::uniform_symbolic(parse_local_index(o.local));
  auto audit = audit_metric_axioms(parse_global_index(o.index), kb, locals, triples);

  Report r;
  r.title = "metric axioms: " + o.index + " over " + o.local + " locals";
  r.columns = {"axiom", "result", "triples", "witness", "detail"};
  for (const auto& res : audit.results) {
    std::string witness = res.witness ? "(" + join(*res.witness) + ")" : "";
    r.rows.push_back({std::string(to_string(res.axiom)), std::string(res.passed ? "pass" : "violated"),
                      as_int(res.checked), witness, res.detail});
  }
  std::ostringstream tol;
  tol << "tolerance " << kAxiomTolerance << "; violations are findings, not errors";
  r.notes.push_back(tol.str());
  return {{r}, false};
}

Outcome cmd_rank(const Options& o) {
  auto kb = load_knowledge_base_file(o.kb_path);
  const Instance& target = kb.require_instance(o.target);
  std::vector<Instance> candidates;
  for (const auto& i : kb.instances)
    if (i.id != target.id && !shared_aspects(i, target).empty()) candidates.push_back(i);

  Report r;
  r.title = "sources for " + target.id + " (j = " + std::to_string(o.relevant) + ")";
  r.columns = {"rank", "source", "s", "m", "degree", "pr(s,j)"};
  std::size_t rank = 0;
  for (const auto& rs : rank_sources(target, candidates, o.relevant)) {
    r.rows.push_back({as_int(++rank), rs.source->id, as_int(rs.counts.matched), as_int(rs.counts.shared),
                      degree_of_similarity(rs.counts.matched, rs.counts.shared), rs.probability});
  }
  return {{r}, false};
}

Outcome cmd_determine(const Options& o) {
  auto kb = load_knowledge_base_file(o.kb_path);
  Report r;
  r.title = "connections";
  r.columns = {"connection", "P", "Q", "declared", "verified", "consulted", "witness"};
  for (const auto& c : kb.connections) {
    auto v = check_dependency(kb, c);
    std::string witness = v.witness ? "(" + v.witness->first + ", " + v.witness->second + ")" : "";
    r.rows.push_back({c.id, braces(c.determinants), c.dependent, std::string(to_string(c.status)),
                      std::string(v.consulted ? to_string(v.status) : "unverifiable"), as_int(v.consulted),
                      witness});
  }
  return {{r}, false};
}

Report conclusion_report(const AnalogicalConclusion& c) {
  Report r;
  r.title = "conclusion";
  r.columns = {"target", "aspect", "value", "modality", "rule", "sources", "basis", "agreement", "note"};
  r.rows.push_back({c.target, c.aspect, format_value(c.value), std::string(to_string(c.modality)),
                    std::string(to_string(c.rule)), join(c.provenance.sources), c.provenance.basis,
                    std::string(to_string(c.agreement)), c.provenance.note});
  return r;
}

Outcome cmd_infer(const Options& o) {
  auto kb = load_knowledge_base_file(o.kb_path);
  const Instance& source = kb.require_instance(o.source);
  const Instance& target = kb.require_instance(o.target);
  if (o.rule == "typ") {
    const Concept* c = kb.concept_by_id(o.concept_id);
    if (!c) throw AnalogyError(ErrorKind::Validation, o.concept_id, "unknown concept '" + o.concept_id + "'");
    return {{conclusion_report(apply_typ(kb, *c, source, target, o.aspect))}, false};
  }
  auto view = with_verified_connections(kb);
  const Connection* c = view.connection(o.connection);
  if (!c) throw AnalogyError(ErrorKind::Validation, o.connection, "unknown connection '" + o.connection + "'");
  auto conclusion = o.rule == "det1" ? apply_det1(view, *c, source, target) : apply_det2(view, *c, source, target);
  return {{conclusion_report(conclusion)}, false};
}

Outcome cmd_typicality(const Options& o) {
  auto kb = load_knowledge_base_file(o.kb_path);
  Report r;
  r.title = "typicality";
  r.columns = {"concept", "order", "exceptions", "maximal", "typical"};
  for (const auto& c : kb.concepts) {
    if (!o.concept_id.empty() && c.id != o.concept_id) continue;
    auto valid = validate_order(c);
    if (!valid.valid) {
      r.rows.push_back({c.id, "antisymmetry violated by (" + valid.witness->first + ", " + valid.witness->second + ")",
                        std::string(), std::string(), std::string()});
      continue;
    }
    r.rows.push_back({c.id, std::string("valid"), braces(exceptions(c)), braces(maximal_members(c)),
                      braces(typical_examples(c))});
  }
  return {{r}, false};
}

Report corroboration_table(const std::string& title, const std::vector<CorroborationReport>& reports) {
  Report r;
  r.title = title;
  r.columns = {"check", "truncation", "grid", "residual", "tolerance", "result"};
  bool all = true;
  for (const auto& c : reports) {
    std::vector<std::string> g;
    for (double x : c.grid) {
      std::ostringstream os;
      os << x;
      g.push_back(os.str());
    }
    r.rows.push_back({c.check, as_int(c.truncation), join(g, ","), c.max_residual, c.tolerance,
                      std::string(c.passed() ? "PASS" : "FAIL")});
    all = all && c.passed();
  }
  r.passed = all;
  return r;
}

EulerSettings euler_settings(const Options& o) {
  EulerSettings s;
  s.n = o.n;
  s.factors = o.K;
  s.product_factors = o.product_K;
  s.grid = o.grid;
  if (o.tolerance) {
    s.c1.shift = *o.tolerance;
    s.c1.double_angle = *o.tolerance;
  }
  return s;
}

Outcome cmd_euler(const Options& o) {
  auto reports = euler_reports(euler_settings(o));
  Report r = corroboration_table("Euler: basel value and corroboration (C1, C2)", reports);
  return {{r}, !*r.passed};
}

Outcome cmd_grandi(const Options& o) {
  Outcome out;
  const GroupingScheme pairs{{}, 2};
  const GroupingScheme shifted{{1}, 2};
  auto a = regroup_series(SeriesId::Grandi, pairs, o.blocks);
  auto b = regroup_series(SeriesId::Grandi, shifted, o.blocks);

  Report inf;
  inf.title = "grandi series 1 - 1 + 1 - ... regrouped over " + std::to_string(o.blocks) + " blocks";
  inf.columns = {"scheme", "first blocks", "stabilized", "value"};
  auto head = [](const RegroupResult& r) {
    std::vector<std::string> out;
    for (std::size_t k = 0; k < std::min<std::size_t>(4, r.block_sums.size()); ++k) {
      std::ostringstream os;
      os << r.block_sums[k];
      out.push_back(os.str());
    }
    return join(out) + ", ...";
  };
  inf.rows.push_back({std::string("(1-1)+(1-1)+..."), head(a), a.stabilized, a.value});
  inf.rows.push_back({std::string("1-(1-1)-(1-1)-..."), head(b), b.stabilized, b.value});
  inf.passed = a.stabilized && b.stabilized && a.value == 0.0 && b.value == 1.0;
  inf.notes.push_back("two bracketings of one series stabilise to different values: C = 1 = 0");

  const std::vector<double> c{1, -1, 1, -1, 1};
  Report fin;
  fin.title = "finite control c = 1 - 1 + 1 - 1 + 1";
  fin.columns = {"blocks", "regrouped", "plain", "equal"};
  bool equal = true;
  for (const std::vector<std::size_t>& scheme : {std::vector<std::size_t>{2, 2, 1}, std::vector<std::size_t>{1, 2, 2}}) {
    auto f = finite_regroup_control(c, scheme);
    std::vector<std::string> lens;
    for (auto l : scheme) lens.push_back(std::to_string(l));
    fin.rows.push_back({"(" + join(lens) + ")", f.regrouped, f.plain, f.regrouped == f.plain});
    equal = equal && f.regrouped == f.plain;
  }
  fin.passed = equal;
  out.reports = {inf, fin};
  out.checks_failed = !(*inf.passed && *fin.passed);
  return out;
}

Outcome cmd_multi(const Options& o) {
  auto doc = load_problem_file(o.problem_path);
  const Problem& p = doc.problem;
  auto trace = heuristic_loop(p, doc.kb, o.max_iterations, euler_settings(o));
  Outcome out;

  Report steps;
  steps.title = "heuristic loop for " + p.id;
  steps.columns = {"iteration", "candidate", "satisfied", "unsatisfied", "hypothesis", "open sub-hypotheses"};
  for (const auto& s : trace) {
    std::string reading = s.hypothesis ? s.hypothesis->reading() : "";
    if (s.candidates.empty())
      steps.rows.push_back({as_int(s.iteration), std::string("-"), std::string(), std::string(), reading,
                            join(s.open_sub_hypotheses)});
    for (const auto& m : s.candidates)
      steps.rows.push_back({as_int(s.iteration), m.source, braces(m.satisfied), braces(m.unsatisfied), reading,
                            join(s.open_sub_hypotheses)});
  }
  out.reports.push_back(steps);

  const std::optional<Hypothesis>& h = trace.back().hypothesis;
  if (h) {
    Report support;
    support.title = "support for " + h->id + ": " + h->reading();
    support.columns = {"interpretation", "sources", "score", "meaning"};
    for (const auto& [name, score] : h->ranking()) {
      auto it = p.interpretations.find(name);
      support.rows.push_back({name, braces(h->support.at(name)), as_int(score),
                              it == p.interpretations.end() ? std::string() : it->second});
    }
    out.reports.push_back(support);

    Report roles;
    roles.title = "provenance roles";
    roles.columns = {"source", "roles"};
    for (const auto& [source, rs] : h->provenance) {
      std::vector<std::string> names;
      for (auto role : rs) names.emplace_back(to_string(role));
      roles.rows.push_back({source, braces(names)});
    }
    out.reports.push_back(roles);
  }

  std::vector<CorroborationReport> checks;
  for (const auto& s : trace) checks.insert(checks.end(), s.reports.begin(), s.reports.end());
  if (!checks.empty()) {
    Report r = corroboration_table("corroboration of " + p.id, checks);
    out.checks_failed = !*r.passed;
    out.reports.push_back(r);
  }
  if (!trace.back().open_sub_hypotheses.empty()) {
    Report open;
    open.title = "open sub-hypotheses";
    open.columns = {"name", "statement"};
    for (const auto& [name, statement] : p.sub_hypotheses)
      if (std::find(trace.back().open_sub_hypotheses.begin(), trace.back().open_sub_hypotheses.end(), name) !=
          trace.back().open_sub_hypotheses.end())
        open.rows.push_back({name, statement});
    out.reports.push_back(open);
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Analogical inference toolkit"};
  app.require_subcommand(1, 1);
  app.add_option("--format", o.format, "table or structured")
      ->check(CLI::IsMember({"table", "structured"}));

  auto kb_opt = [&](CLI::App* sub) { sub->add_option("--kb", o.kb_path, "knowledge-base document")->required(); };
  auto* sim = app.add_subcommand("sim", "pairwise similarity matrix");
  kb_opt(sim);
  sim->add_option("--index", o.index)->check(CLI::IsMember({"city-block", "euclidean", "smc", "contrast"}));
  sim->add_option("--local", o.local, "symbolic local index")->check(CLI::IsMember({"ratio", "overlap"}));
  sim->add_option("--alpha", o.alpha)->check(CLI::NonNegativeNumber);
  sim->add_option("--beta", o.beta)->check(CLI::NonNegativeNumber);
  sim->add_option("--gamma", o.gamma)->check(CLI::NonNegativeNumber);

  auto* audit = app.add_subcommand("audit", "metric-axiom audit over all ordered triples");
  kb_opt(audit);
  audit->add_option("--index", o.index)->check(CLI::IsMember({"city-block", "euclidean", "smc"}));
  audit->add_option("--local", o.local)->check(CLI::IsMember({"ratio", "overlap"}));

  auto* rank = app.add_subcommand("rank", "rank sources for a target");
  kb_opt(rank);
  rank->add_option("--target", o.target)->required();
  rank->add_option("--j", o.relevant, "number of relevant aspects");

  auto* determine = app.add_subcommand("determine", "verify connections");
  kb_opt(determine);

  auto* infer = app.add_subcommand("infer", "apply DET1, DET2 or TYP");
  kb_opt(infer);
  infer->add_option("--rule", o.rule)->required()->check(CLI::IsMember({"det1", "det2", "typ"}));
  infer->add_option("--source", o.source)->required();
  infer->add_option("--target", o.target)->required();
  infer->add_option("--connection", o.connection);
  infer->add_option("--concept", o.concept_id);
  infer->add_option("--aspect", o.aspect);

  auto* typ = app.add_subcommand("typicality", "exceptions, maximal and typical members");
  kb_opt(typ);
  typ->add_option("--concept", o.concept_id);

  auto numeric_opts = [&](CLI::App* sub) {
    sub->add_option("--K", o.K, "product truncation")->check(CLI::PositiveNumber);
    sub->add_option("--product-K", o.product_K, "truncation of the product-vs-sine check")->check(CLI::PositiveNumber);
    sub->add_option("--n", o.n, "series truncation")->check(CLI::Range(std::size_t{5}, std::size_t{1} << 40));
    sub->add_option("--grid", o.grid, "comma-separated evaluation points")->delimiter(',');
    sub->add_option("--tolerance", o.tolerance, "tolerance for the shift and double-angle checks");
  };
  auto* euler = app.add_subcommand("euler", "basel value with C1/C2 corroboration");
  numeric_opts(euler);

  auto* grandi = app.add_subcommand("grandi", "regrouping contradiction and finite control");
  grandi->add_option("--blocks", o.blocks)->check(CLI::PositiveNumber);

  auto* multi = app.add_subcommand("multi", "multiple-analogy workflow on a problem document");
  multi->add_option("--problem", o.problem_path)->required();
  multi->add_option("--max-iterations", o.max_iterations)->check(CLI::PositiveNumber);
  numeric_opts(multi);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  if (infer->parsed()) {
    bool det = o.rule != "typ";
    if (det && o.connection.empty()) {
      err << "--rule " << o.rule << " needs --connection\n";
      return kExitUsage;
    }
    if (!det && (o.concept_id.empty() || o.aspect.empty())) {
      err << "--rule typ needs --concept and --aspect\n";
      return kExitUsage;
    }
  }

  Outcome result;
  try {
    if (sim->parsed()) result = cmd_sim(o);
    else if (audit->parsed()) result = cmd_audit(o);
    else if (rank->parsed()) result = cmd_rank(o);
    else if (determine->parsed()) result = cmd_determine(o);
    else if (infer->parsed()) result = cmd_infer(o);
    else if (typ->parsed()) result = cmd_typicality(o);
    else if (euler->parsed()) result = cmd_euler(o);
    else if (grandi->parsed()) result = cmd_grandi(o);
    else if (multi->parsed()) result = cmd_multi(o);
  } catch (const AnalogyError& e) {
    err << "error [" << to_string(e.kind()) << "]";
    if (!e.path().empty()) err << " at " << e.path();
    err << ": " << e.what() << "\n";
    return kExitInputError;
  }

  out << (o.format == "structured" ? render_structured(result.reports) : render_table(result.reports));
  return result.checks_failed ? kExitCheckFailed : kExitOk;
}

}  // namespace analogy::cli
