#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "analogy/core_model.hpp"

namespace analogy {

enum class Modality { Deductive, Plausible };
enum class InferenceRule { Det1, Det2, Typ, Sim };
// How a projected value relates to what the knowledge base already says
// about the target.
enum class Agreement { Novel, Consistent, Conflict };

std::string_view to_string(Modality m);
std::string_view to_string(InferenceRule r);
std::string_view to_string(Agreement a);

struct Provenance {
  std::vector<std::string> sources;
  std::string basis;  // connection or concept id
  std::string note;
};

struct AnalogicalConclusion {
  std::string target;
  std::string aspect;
  FeatureValue value;
  Modality modality = Modality::Plausible;
  InferenceRule rule = InferenceRule::Sim;
  Provenance provenance;
  Agreement agreement = Agreement::Novel;
};

// Outcome of checking [P,Q] as a functional dependency over the KB.
struct ConnectionVerification {
  ConnectionStatus status = ConnectionStatus::Unverified;
  std::size_t consulted = 0;  // instances assigning all of P and Q
  // Two instances equal on P but different on Q.
  std::optional<std::pair<std::string, std::string>> witness;
  // Induced P-values -> Q-value map; for an incomplete connection the
  // first value seen is kept.
  std::map<std::vector<FeatureValue>, FeatureValue> induced;
};

ConnectionVerification check_dependency(const KnowledgeBase& kb, const Connection& c);

// Total or incomplete; throws Unverifiable when no instance assigns P and Q.
ConnectionStatus verify_connection(const KnowledgeBase& kb, const Connection& c);

// Copy of `kb` with every verifiable connection's status replaced by its
// verified one. Unverifiable connections stay unverified.
KnowledgeBase with_verified_connections(const KnowledgeBase& kb);

// Strong rule: requires P(S) = P(T) and a connection that verifies total.
AnalogicalConclusion apply_det1(const KnowledgeBase& kb, const Connection& c, const Instance& source,
                                const Instance& target);

// Weak rule: same premises, always plausible.
AnalogicalConclusion apply_det2(const KnowledgeBase& kb, const Connection& c, const Instance& source,
                                const Instance& target);

}  // namespace analogy
