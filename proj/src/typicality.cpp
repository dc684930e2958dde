#include "analogy/typicality.hpp"

#include <algorithm>

namespace analogy {

TypicalityOrder::TypicalityOrder(const Concept& c) : members_(c.members.begin(), c.members.end()) {
  const std::size_t n = members_.size();
  reach_.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) reach_[i][i] = true;
  for (const auto& [lo, hi] : c.order) reach_[index(lo)][index(hi)] = true;
  // Warshall.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (reach_[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (reach_[k][j]) reach_[i][j] = true;
}

std::size_t TypicalityOrder::index(const std::string& id) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), id);
  if (it == members_.end() || *it != id)
    throw AnalogyError(ErrorKind::Validation, id, "'" + id + "' is not a member of the concept");
  return static_cast<std::size_t>(it - members_.begin());
}

bool TypicalityOrder::below(const std::string& lower, const std::string& upper) const {
  return reach_[index(lower)][index(upper)];
}

bool TypicalityOrder::comparable(const std::string& a, const std::string& b) const {
  return below(a, b) || below(b, a);
}

std::optional<std::pair<std::string, std::string>> TypicalityOrder::antisymmetry_witness() const {
  for (std::size_t i = 0; i < members_.size(); ++i)
    for (std::size_t j = i + 1; j < members_.size(); ++j)
      if (reach_[i][j] && reach_[j][i]) return std::make_pair(members_[i], members_[j]);
  return std::nullopt;
}

std::set<std::pair<std::string, std::string>> TypicalityOrder::closure_pairs() const {
  std::set<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i < members_.size(); ++i)
    for (std::size_t j = 0; j < members_.size(); ++j)
      if (reach_[i][j]) out.emplace(members_[i], members_[j]);
  return out;
}

OrderValidation validate_order(const Concept& c) {
  auto witness = TypicalityOrder(c).antisymmetry_witness();
  return {!witness.has_value(), witness};
}

std::set<std::string> exceptions(const Concept& c) {
  TypicalityOrder order(c);
  std::set<std::string> out;
  for (const auto& e : order.members()) {
    bool isolated = std::none_of(order.members().begin(), order.members().end(),
                                 [&](const std::string& other) { return other != e && order.comparable(e, other); });
    if (isolated) out.insert(e);
  }
  return out;
}

std::set<std::string> maximal_members(const Concept& c) {
  TypicalityOrder order(c);
  std::set<std::string> out;
  for (const auto& e : order.members()) {
    bool dominated = std::any_of(order.members().begin(), order.members().end(),
                                 [&](const std::string& other) { return other != e && order.below(e, other); });
    if (!dominated) out.insert(e);
  }
  return out;
}

std::set<std::string> typical_examples(const Concept& c) {
  auto maximal = maximal_members(c);
  auto excluded = exceptions(c);
  std::set<std::string> out;
  std::set_difference(maximal.begin(), maximal.end(), excluded.begin(), excluded.end(),
                      std::inserter(out, out.end()));
  return out;
}

AnalogicalConclusion apply_typ(const KnowledgeBase& kb, const Concept& c, const Instance& source,
                               const Instance& target, const std::string& aspect) {
  (void)kb;
  auto premise = [&](const std::string& what) {
    return AnalogyError(ErrorKind::RuleInapplicable, c.id + "/" + source.id, "TYP premise failed: " + what);
  };
  if (!c.members.contains(source.id)) throw premise("'" + source.id + "' is not a member of '" + c.id + "'");
  if (!c.members.contains(target.id)) throw premise("'" + target.id + "' is not a member of '" + c.id + "'");
  if (!validate_order(c).valid) throw premise("order of '" + c.id + "' is not antisymmetric");
  if (!typical_examples(c).contains(source.id)) throw premise("tipex(" + source.id + ") does not hold");
  if (!TypicalityOrder(c).below(target.id, source.id))
    throw premise(target.id + " is not below " + source.id);
  auto rel = c.relevant.find(source.id);
  if (rel == c.relevant.end() || !rel->second.contains(aspect))
    throw premise("relevant(" + aspect + ", " + source.id + ") does not hold");
  const FeatureValue* v = source.find(aspect);
  if (!v) throw premise("'" + source.id + "' does not assign '" + aspect + "'");

  AnalogicalConclusion out;
  out.target = target.id;
  out.aspect = aspect;
  out.value = *v;
  out.modality = Modality::Plausible;
  out.rule = InferenceRule::Typ;
  out.provenance.sources = {source.id};
  out.provenance.basis = c.id;
  if (const FeatureValue* existing = target.find(aspect))
    out.agreement = *existing == *v ? Agreement::Consistent : Agreement::Conflict;
  return out;
}

}  // namespace analogy
