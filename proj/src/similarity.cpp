#include "analogy/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>
#include <unordered_map>

namespace analogy {

std::string_view to_string(LocalIndexKind k) {
  switch (k) {
    case LocalIndexKind::SetComplementRatio: return "ratio";
    case LocalIndexKind::OverlapIndicator: return "overlap";
    case LocalIndexKind::NormalizedNumericDifference: return "numeric";
  }
  return "ratio";
}

std::string_view to_string(GlobalIndexKind k) {
  switch (k) {
    case GlobalIndexKind::CityBlock: return "city-block";
    case GlobalIndexKind::Euclidean: return "euclidean";
    case GlobalIndexKind::SimpleMatching: return "smc";
  }
  return "city-block";
}

LocalIndexKind parse_local_index(std::string_view s) {
  if (s == "ratio" || s == "i") return LocalIndexKind::SetComplementRatio;
  if (s == "overlap" || s == "ii") return LocalIndexKind::OverlapIndicator;
  if (s == "numeric" || s == "iii") return LocalIndexKind::NormalizedNumericDifference;
  throw AnalogyError(ErrorKind::Domain, std::string(s), "unknown local index '" + std::string(s) + "'");
}

GlobalIndexKind parse_global_index(std::string_view s) {
  if (s == "city-block") return GlobalIndexKind::CityBlock;
  if (s == "euclidean") return GlobalIndexKind::Euclidean;
  if (s == "smc") return GlobalIndexKind::SimpleMatching;
  throw AnalogyError(ErrorKind::Domain, std::string(s), "unknown global index '" + std::string(s) + "'");
}

std::string_view to_string(MetricAxiom a) {
  switch (a) {
    case MetricAxiom::Symmetry: return "symmetry";
    case MetricAxiom::TriangleInequality: return "triangle-inequality";
    case MetricAxiom::Minimality: return "minimality";
  }
  return "symmetry";
}

double local_sim(LocalIndexKind kind, const FeatureValue& a, const FeatureValue& b,
                 const AspectSchema& aspect) {
  if (kind == LocalIndexKind::NormalizedNumericDifference) {
    if (aspect.kind != AspectKind::Numeric || !is_numeric(a) || !is_numeric(b))
      throw AnalogyError(ErrorKind::Type, aspect.name,
                         "numeric difference needs numeric values on '" + aspect.name + "'");
    double ul = aspect.range();
    if (!(ul > 0.0))
      throw AnalogyError(ErrorKind::UndefinedRatio, aspect.name, "aspect '" + aspect.name + "' has zero range");
    return std::abs(std::get<double>(a) - std::get<double>(b)) / ul;
  }

  if (!is_symbolic(a) || !is_symbolic(b))
    throw AnalogyError(ErrorKind::Type, aspect.name,
                       std::string(to_string(kind)) + " index needs symbol sets on '" + aspect.name + "'");
  const auto& sa = std::get<SymbolSet>(a);
  const auto& sb = std::get<SymbolSet>(b);
  std::size_t common = 0;
  for (const auto& s : sa) common += sb.contains(s) ? 1 : 0;

  if (kind == LocalIndexKind::OverlapIndicator) return common == 0 ? 0.0 : 1.0;

  std::size_t united = sa.size() + sb.size() - common;
  if (united == 0)
    throw AnalogyError(ErrorKind::UndefinedRatio, aspect.name,
                       "both symbol sets on '" + aspect.name + "' are empty");
  return static_cast<double>(united - common) / static_cast<double>(united);
}

LocalIndexKind LocalAssignment::for_aspect(const AspectSchema& aspect) const {
  if (auto it = per_aspect.find(aspect.name); it != per_aspect.end()) return it->second;
  return aspect.kind == AspectKind::Numeric ? LocalIndexKind::NormalizedNumericDifference
                                            : symbolic_default;
}

double city_block(std::span<const double> locals) {
  if (locals.empty()) throw AnalogyError(ErrorKind::DisjointDescription, "", "no local indices to combine");
  double sum = 0.0;
  for (double x : locals) sum += x;
  return sum / static_cast<double>(locals.size());
}

double euclidean(std::span<const double> locals) {
  if (locals.empty()) throw AnalogyError(ErrorKind::DisjointDescription, "", "no local indices to combine");
  double sum = 0.0;
  for (double x : locals) sum += x * x;
  return std::sqrt(sum / static_cast<double>(locals.size()));
}

double simple_matching(const MatchingCounts& c) {
  std::size_t total = c.agree_positive + c.disagree_positive + c.disagree_negative + c.agree_negative;
  if (total == 0) throw AnalogyError(ErrorKind::DisjointDescription, "", "no coded features");
  return static_cast<double>(c.agree_positive + c.agree_negative) / static_cast<double>(total);
}

MatchingCounts matching_counts(const KnowledgeBase& kb, const Instance& a, const Instance& b) {
  MatchingCounts counts;
  auto names = shared_aspects(a, b);
  if (names.empty())
    throw AnalogyError(ErrorKind::DisjointDescription, a.id + "," + b.id,
                       "instances '" + a.id + "' and '" + b.id + "' share no assigned aspect");
  for (const auto& name : names) {
    const AspectSchema& aspect = kb.require_aspect(name);
    if (aspect.kind != AspectKind::Symbolic || !aspect.positive)
      throw AnalogyError(ErrorKind::Coding, name, "aspect '" + name + "' has no binary coding");
    auto positive = [&](const Instance& inst) {
      const auto& set = std::get<SymbolSet>(*inst.find(name));
      if (set.size() != 1)
        throw AnalogyError(ErrorKind::Coding, inst.id + "/" + name,
                           "binary aspect '" + name + "' of '" + inst.id + "' must hold exactly one symbol");
      return *set.begin() == *aspect.positive;
    };
    bool pa = positive(a);
    bool pb = positive(b);
    if (pa == pb) {
      ++(pa ? counts.agree_positive : counts.agree_negative);
    } else {
      ++(pa ? counts.disagree_positive : counts.disagree_negative);
    }
  }
  return counts;
}

double global_sim(GlobalIndexKind kind, const KnowledgeBase& kb, const Instance& a,
                  const Instance& b, const LocalAssignment& locals) {
  if (kind == GlobalIndexKind::SimpleMatching) return simple_matching(matching_counts(kb, a, b));

  auto names = shared_aspects(a, b);
  if (names.empty())
    throw AnalogyError(ErrorKind::DisjointDescription, a.id + "," + b.id,
                       "instances '" + a.id + "' and '" + b.id + "' share no assigned aspect");
  std::vector<double> values;
  values.reserve(names.size());
  for (const auto& name : names) {
    const AspectSchema& aspect = kb.require_aspect(name);
    values.push_back(local_sim(locals.for_aspect(aspect), *a.find(name), *b.find(name), aspect));
  }
  return kind == GlobalIndexKind::CityBlock ? city_block(values) : euclidean(values);
}

std::vector<InstanceTriple> ordered_triples(std::span<const Instance> instances) {
  std::vector<InstanceTriple> out;
  const std::size_t n = instances.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (i != j && j != k && i != k) out.push_back({&instances[i], &instances[j], &instances[k]});
  return out;
}

bool AxiomReport::all_passed() const {
  return std::all_of(results.begin(), results.end(), [](const AxiomResult& r) { return r.passed; });
}

AxiomReport audit_metric_axioms(GlobalIndexKind kind, const KnowledgeBase& kb,
                                const LocalAssignment& locals,
                                std::span<const InstanceTriple> sample) {
  if (sample.empty()) throw AnalogyError(ErrorKind::Domain, "", "audit sample is empty");

  std::map<std::pair<const Instance*, const Instance*>, double> cache;
  auto sim = [&](const Instance* x, const Instance* y) {
    auto [it, inserted] = cache.try_emplace({x, y}, 0.0);
    if (inserted) it->second = global_sim(kind, kb, *x, *y, locals);
    return it->second;
  };

  AxiomReport report;
  report.kind = kind;
  report.results[0].axiom = MetricAxiom::Symmetry;
  report.results[1].axiom = MetricAxiom::TriangleInequality;
  report.results[2].axiom = MetricAxiom::Minimality;
  auto fail = [](AxiomResult& r, const InstanceTriple& t, std::string detail) {
    if (!r.passed) return;
    r.passed = false;
    r.witness = std::array<std::string, 3>{t[0]->id, t[1]->id, t[2]->id};
    r.detail = std::move(detail);
  };
  auto fmt = [](double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
  };

  for (const auto& t : sample) {
    const Instance* a = t[0];
    const Instance* b = t[1];
    const Instance* c = t[2];
    double ab = sim(a, b), ba = sim(b, a), bc = sim(b, c), ac = sim(a, c), aa = sim(a, a);

    auto& sym = report.results[0];
    ++sym.checked;
    if (std::abs(ab - ba) > kAxiomTolerance)
      fail(sym, t, "SIM(A,B)=" + fmt(ab) + " but SIM(B,A)=" + fmt(ba));

    auto& tri = report.results[1];
    ++tri.checked;
    if (ab + bc < ac - kAxiomTolerance)
      fail(tri, t, "SIM(A,B)+SIM(B,C)=" + fmt(ab + bc) + " < SIM(A,C)=" + fmt(ac));

    auto& min = report.results[2];
    ++min.checked;
    if (std::abs(aa) > kAxiomTolerance)
      fail(min, t, "SIM(A,A)=" + fmt(aa) + " is not 0");
    else if (ab < aa - kAxiomTolerance)
      fail(min, t, "SIM(A,B)=" + fmt(ab) + " < SIM(A,A)=" + fmt(aa));
  }
  return report;
}

double ContrastWeights::f(const SymbolSet& features) const {
  double total = 0.0;
  for (const auto& s : features) {
    auto it = salience.find(s);
    total += it == salience.end() ? 1.0 : it->second;
  }
  return total;
}

double contrast_model(const SymbolSet& a, const SymbolSet& b, const ContrastWeights& w) {
  if (w.alpha < 0 || w.beta < 0 || w.gamma < 0)
    throw AnalogyError(ErrorKind::Domain, "", "contrast weights must be nonnegative");
  SymbolSet common, a_only, b_only;
  for (const auto& s : a) (b.contains(s) ? common : a_only).insert(s);
  for (const auto& s : b)
    if (!a.contains(s)) b_only.insert(s);
  return w.alpha * w.f(common) - w.beta * w.f(a_only) - w.gamma * w.f(b_only);
}

SymbolSet feature_set(const KnowledgeBase& kb, const Instance& inst, const Instance& other) {
  SymbolSet out;
  for (const auto& name : shared_aspects(inst, other)) {
    if (kb.require_aspect(name).kind != AspectKind::Symbolic) continue;
    for (const auto& s : std::get<SymbolSet>(*inst.find(name))) out.insert(name + "=" + s);
  }
  return out;
}

double contrast_model(const KnowledgeBase& kb, const Instance& a, const Instance& b,
                      const ContrastWeights& w) {
  auto names = shared_aspects(a, b);
  bool symbolic = std::any_of(names.begin(), names.end(), [&](const std::string& n) {
    return kb.require_aspect(n).kind == AspectKind::Symbolic;
  });
  if (!symbolic)
    throw AnalogyError(ErrorKind::InapplicableModel, a.id + "," + b.id,
                       "contrast model needs shared symbolic aspects");
  return contrast_model(feature_set(kb, a, b), feature_set(kb, b, a), w);
}

std::string EditOperationSet::label() const {
  std::string out;
  auto add = [&](bool on, const char* name) {
    if (!on) return;
    if (!out.empty()) out += "+";
    out += name;
  };
  add(substitution, "substitution");
  add(reversal, "reversal");
  add(sign_flip, "sign-flip");
  return out.empty() ? "none" : out;
}

std::vector<EditOperationSet> all_operation_sets() {
  std::vector<EditOperationSet> out;
  for (int mask = 1; mask < 8; ++mask)
    out.push_back({(mask & 1) != 0, (mask & 2) != 0, (mask & 4) != 0});
  return out;
}

namespace {

void check_alphabet(std::string_view s) {
  for (std::size_t k = 0; k < s.size(); ++k)
    if (s[k] != '+' && s[k] != '-')
      throw AnalogyError(ErrorKind::Alphabet, std::string(s),
                         "symbol '" + std::string(1, s[k]) + "' at position " + std::to_string(k + 1) +
                             " is outside {+,-}");
}

char flip(char c) { return c == '+' ? '-' : '+'; }

}  // namespace

std::optional<std::size_t> transformational_distance(std::string_view from, std::string_view to,
                                                     const EditOperationSet& ops,
                                                     std::size_t max_depth) {
  check_alphabet(from);
  check_alphabet(to);
  if (!ops.any()) throw AnalogyError(ErrorKind::Domain, "", "no edit operation enabled");
  if (from.size() != to.size())
    throw AnalogyError(ErrorKind::Domain, "", "strings must have equal length");
  if (from == to) return 0;

  std::unordered_map<std::string, std::size_t> depth{{std::string(from), 0}};
  std::deque<std::string> frontier{std::string(from)};
  while (!frontier.empty()) {
    std::string current = std::move(frontier.front());
    frontier.pop_front();
    std::size_t d = depth[current];
    if (d == max_depth)
      throw AnalogyError(ErrorKind::DepthExhausted, std::string(from) + "->" + std::string(to),
                         "no transformation within " + std::to_string(max_depth) + " operations");

    std::vector<std::string> next;
    if (ops.substitution) {
      for (std::size_t k = 0; k < current.size(); ++k) {
        std::string s = current;
        s[k] = flip(s[k]);
        next.push_back(std::move(s));
      }
    }
    if (ops.reversal) next.emplace_back(current.rbegin(), current.rend());
    if (ops.sign_flip) {
      std::string s = current;
      for (char& c : s) c = flip(c);
      next.push_back(std::move(s));
    }
    for (auto& s : next) {
      if (depth.contains(s)) continue;
      if (s == to) return d + 1;
      depth.emplace(s, d + 1);
      frontier.push_back(std::move(s));
    }
  }
  return std::nullopt;
}

}  // namespace analogy
