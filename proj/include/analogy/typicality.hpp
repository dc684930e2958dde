#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "analogy/core_model.hpp"
#include "analogy/determination.hpp"

namespace analogy {

// Reflexive-transitive closure of a concept's typicality order.
class TypicalityOrder {
 public:
  explicit TypicalityOrder(const Concept& c);

  const std::vector<std::string>& members() const { return members_; }
  // lower ⊑ upper in the closure (reflexive).
  bool below(const std::string& lower, const std::string& upper) const;
  bool comparable(const std::string& a, const std::string& b) const;

  // Distinct members related both ways, if any.
  std::optional<std::pair<std::string, std::string>> antisymmetry_witness() const;

  std::set<std::pair<std::string, std::string>> closure_pairs() const;

 private:
  std::size_t index(const std::string& id) const;

  std::vector<std::string> members_;
  std::vector<std::vector<bool>> reach_;
};

struct OrderValidation {
  bool valid = true;
  std::optional<std::pair<std::string, std::string>> witness;
};

OrderValidation validate_order(const Concept& c);

// Members incomparable with every other member.
std::set<std::string> exceptions(const Concept& c);

// Members with no distinct member above them.
std::set<std::string> maximal_members(const Concept& c);

// Maximal members that are not exceptions.
std::set<std::string> typical_examples(const Concept& c);

AnalogicalConclusion apply_typ(const KnowledgeBase& kb, const Concept& c, const Instance& source,
                               const Instance& target, const std::string& aspect);

}  // namespace analogy
