#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "analogy/core_model.hpp"

namespace analogy {

// Per-aspect comparison formulas. The ratio and numeric forms behave as
// distances (0 = identical); the overlap indicator is a similarity.
enum class LocalIndexKind {
  SetComplementRatio,         // (|a∪b| - |a∩b|) / |a∪b|
  OverlapIndicator,           // 0 if a∩b = ∅, else 1
  NormalizedNumericDifference // |a - b| / ul
};

enum class GlobalIndexKind { CityBlock, Euclidean, SimpleMatching };

std::string_view to_string(LocalIndexKind k);
std::string_view to_string(GlobalIndexKind k);
LocalIndexKind parse_local_index(std::string_view s);
GlobalIndexKind parse_global_index(std::string_view s);

double local_sim(LocalIndexKind kind, const FeatureValue& a, const FeatureValue& b,
                 const AspectSchema& aspect);

// Per-aspect choice of local index. Aspects without an entry fall back to
// `symbolic_default` or the normalised numeric difference.
struct LocalAssignment {
  std::map<std::string, LocalIndexKind> per_aspect;
  LocalIndexKind symbolic_default = LocalIndexKind::SetComplementRatio;

  LocalIndexKind for_aspect(const AspectSchema& aspect) const;

  static LocalAssignment uniform_symbolic(LocalIndexKind k) {
    LocalAssignment a;
    a.symbolic_default = k;
    return a;
  }
};

double city_block(std::span<const double> locals);
double euclidean(std::span<const double> locals);

struct MatchingCounts {
  std::size_t agree_positive = 0;     // alpha
  std::size_t disagree_positive = 0;  // beta
  std::size_t disagree_negative = 0;  // gamma
  std::size_t agree_negative = 0;     // delta
};

double simple_matching(const MatchingCounts& c);

// Binary coding of every shared aspect; requires symbolic aspects with a
// declared positive symbol and singleton values.
MatchingCounts matching_counts(const KnowledgeBase& kb, const Instance& a, const Instance& b);

double global_sim(GlobalIndexKind kind, const KnowledgeBase& kb, const Instance& a,
                  const Instance& b, const LocalAssignment& locals = {});

using InstanceTriple = std::array<const Instance*, 3>;

// All ordered triples of pairwise distinct instances.
std::vector<InstanceTriple> ordered_triples(std::span<const Instance> instances);

enum class MetricAxiom { Symmetry, TriangleInequality, Minimality };
std::string_view to_string(MetricAxiom a);

struct AxiomResult {
  MetricAxiom axiom = MetricAxiom::Symmetry;
  bool passed = true;
  std::size_t checked = 0;
  // First violating triple (ids) and the values that broke the axiom.
  std::optional<std::array<std::string, 3>> witness;
  std::string detail;
};

struct AxiomReport {
  GlobalIndexKind kind = GlobalIndexKind::CityBlock;
  std::array<AxiomResult, 3> results;
  bool all_passed() const;
};

inline constexpr double kAxiomTolerance = 1e-12;

AxiomReport audit_metric_axioms(GlobalIndexKind kind, const KnowledgeBase& kb,
                                const LocalAssignment& locals,
                                std::span<const InstanceTriple> sample);

// Additive salience: f(X) = sum of weights, 1 for unlisted symbols.
struct ContrastWeights {
  double alpha = 1.0;
  double beta = 1.0;
  double gamma = 1.0;
  std::map<std::string, double> salience;

  double f(const SymbolSet& features) const;
};

double contrast_model(const SymbolSet& a, const SymbolSet& b, const ContrastWeights& w);

// Features are "aspect=symbol" tokens over the shared symbolic aspects.
SymbolSet feature_set(const KnowledgeBase& kb, const Instance& inst, const Instance& other);
double contrast_model(const KnowledgeBase& kb, const Instance& a, const Instance& b,
                      const ContrastWeights& w);

struct EditOperationSet {
  bool substitution = true;
  bool reversal = false;
  bool sign_flip = false;

  bool any() const { return substitution || reversal || sign_flip; }
  std::string label() const;
};

// Every nonempty operation set, in a fixed order.
std::vector<EditOperationSet> all_operation_sets();

// Minimum number of enabled operations turning `from` into `to` over the
// alphabet {+,-}. nullopt when `to` is outside the reachable space; throws
// DepthExhausted when the search is cut off at `max_depth`.
std::optional<std::size_t> transformational_distance(std::string_view from, std::string_view to,
                                                     const EditOperationSet& ops,
                                                     std::size_t max_depth = 64);

}  // namespace analogy
