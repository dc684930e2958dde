#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "analogy/error.hpp"

namespace analogy {

enum class AspectKind { Symbolic, Numeric };

struct AspectSchema {
  std::string name;
  AspectKind kind = AspectKind::Symbolic;
  // Numeric aspects only.
  double lower = 0.0;
  double upper = 0.0;
  // Symbolic aspects only: the symbol coding "positive" for the simple
  // matching coefficient.
  std::optional<std::string> positive;

  // |upper - lower|, the normaliser of the numeric local index.
  double range() const { return upper > lower ? upper - lower : lower - upper; }

  bool operator==(const AspectSchema&) const = default;
};

using SymbolSet = std::set<std::string>;
using FeatureValue = std::variant<SymbolSet, double>;

inline bool is_symbolic(const FeatureValue& v) { return std::holds_alternative<SymbolSet>(v); }
inline bool is_numeric(const FeatureValue& v) { return std::holds_alternative<double>(v); }

std::string format_value(const FeatureValue& v);

struct Instance {
  std::string id;
  std::map<std::string, FeatureValue> values;

  const FeatureValue* find(std::string_view aspect) const;
  bool assigns(std::string_view aspect) const { return find(aspect) != nullptr; }

  bool operator==(const Instance&) const = default;
};

// Aspects assigned in both instances, in name order.
std::vector<std::string> shared_aspects(const Instance& a, const Instance& b);

enum class ConnectionStatus { Total, Incomplete, Unverified };

std::string_view to_string(ConnectionStatus s);

// A dependence [P,Q] of aspect Q on the aspect set P.
struct Connection {
  std::string id;
  std::set<std::string> determinants;  // P
  std::string dependent;               // Q
  ConnectionStatus status = ConnectionStatus::Unverified;

  bool operator==(const Connection&) const = default;
};

// A set of examples with a typicality order; (lower, upper) in `order`
// reads "lower is below upper".
struct Concept {
  std::string id;
  std::set<std::string> members;
  std::set<std::pair<std::string, std::string>> order;
  std::map<std::string, std::set<std::string>> relevant;

  bool operator==(const Concept&) const = default;
};

struct KnowledgeBase {
  std::vector<AspectSchema> schema;
  std::vector<Instance> instances;
  std::vector<Connection> connections;
  std::vector<Concept> concepts;
  // Non-fatal load diagnostics (collapsed duplicate symbols etc.).
  std::vector<std::string> warnings;

  const AspectSchema* aspect(std::string_view name) const;
  const Instance* instance(std::string_view id) const;
  const Connection* connection(std::string_view id) const;
  const Concept* concept_by_id(std::string_view id) const;

  const AspectSchema& require_aspect(std::string_view name) const;
  const Instance& require_instance(std::string_view id) const;
};

KnowledgeBase load_knowledge_base(std::string_view text);
KnowledgeBase load_knowledge_base_file(const std::string& path);

// Canonical JSON form: every list sorted by its id or name.
std::string serialize_knowledge_base(const KnowledgeBase& kb);

// Equality up to list ordering; warnings are ignored.
bool equivalent(const KnowledgeBase& a, const KnowledgeBase& b);

struct MatchCounts {
  std::size_t matched = 0;  // i
  std::size_t shared = 0;   // m
  bool operator==(const MatchCounts&) const = default;
};

// Counts exact value matches over the mutually assigned aspects.
MatchCounts instance_match_counts(const Instance& a, const Instance& b);

}  // namespace analogy
