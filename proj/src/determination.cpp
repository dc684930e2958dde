#include "analogy/determination.hpp"

namespace analogy {

std::string_view to_string(Modality m) {
  return m == Modality::Deductive ? "deductive" : "plausible";
}

std::string_view to_string(InferenceRule r) {
  switch (r) {
    case InferenceRule::Det1: return "DET1";
    case InferenceRule::Det2: return "DET2";
    case InferenceRule::Typ: return "TYP";
    case InferenceRule::Sim: return "SIM";
  }
  return "SIM";
}

std::string_view to_string(Agreement a) {
  switch (a) {
    case Agreement::Novel: return "novel";
    case Agreement::Consistent: return "consistent";
    case Agreement::Conflict: return "conflict";
  }
  return "novel";
}

namespace {

std::optional<std::vector<FeatureValue>> determinant_values(const Instance& inst, const Connection& c) {
  std::vector<FeatureValue> key;
  key.reserve(c.determinants.size());
  for (const auto& p : c.determinants) {
    const FeatureValue* v = inst.find(p);
    if (!v) return std::nullopt;
    key.push_back(*v);
  }
  return key;
}

}  // namespace

ConnectionVerification check_dependency(const KnowledgeBase& kb, const Connection& c) {
  ConnectionVerification out;
  std::map<std::vector<FeatureValue>, std::string> first_holder;
  for (const auto& inst : kb.instances) {
    auto key = determinant_values(inst, c);
    const FeatureValue* q = inst.find(c.dependent);
    if (!key || !q) continue;
    ++out.consulted;
    auto [it, inserted] = out.induced.try_emplace(*key, *q);
    if (inserted) {
      first_holder.emplace(*key, inst.id);
    } else if (!(it->second == *q) && !out.witness) {
      out.witness = std::make_pair(first_holder.at(*key), inst.id);
    }
  }
  if (out.consulted > 0) out.status = out.witness ? ConnectionStatus::Incomplete : ConnectionStatus::Total;
  return out;
}

ConnectionStatus verify_connection(const KnowledgeBase& kb, const Connection& c) {
  auto v = check_dependency(kb, c);
  if (v.consulted == 0)
    throw AnalogyError(ErrorKind::Unverifiable, c.id,
                       "no instance assigns every aspect of connection '" + c.id + "'");
  return v.status;
}

KnowledgeBase with_verified_connections(const KnowledgeBase& kb) {
  KnowledgeBase view = kb;
  for (auto& c : view.connections) c.status = check_dependency(kb, c).status;
  return view;
}

namespace {

AnalogicalConclusion project(const Connection& c, const Instance& source, const Instance& target,
                             InferenceRule rule) {
  for (const auto& p : c.determinants) {
    const FeatureValue* vs = source.find(p);
    const FeatureValue* vt = target.find(p);
    if (!vs || !vt || !(*vs == *vt))
      throw AnalogyError(ErrorKind::RuleInapplicable, source.id + "," + target.id + "/" + p,
                         "P(S) != P(T): '" + source.id + "' and '" + target.id + "' differ on '" + p + "'");
  }
  const FeatureValue* q = source.find(c.dependent);
  if (!q)
    throw AnalogyError(ErrorKind::RuleInapplicable, source.id + "/" + c.dependent,
                       "source '" + source.id + "' does not assign '" + c.dependent + "'");

  AnalogicalConclusion out;
  out.target = target.id;
  out.aspect = c.dependent;
  out.value = *q;
  out.rule = rule;
  out.provenance.sources = {source.id};
  out.provenance.basis = c.id;
  if (const FeatureValue* existing = target.find(c.dependent))
    out.agreement = *existing == *q ? Agreement::Consistent : Agreement::Conflict;
  return out;
}

}  // namespace

AnalogicalConclusion apply_det1(const KnowledgeBase& kb, const Connection& c, const Instance& source,
                                const Instance& target) {
  if (c.status != ConnectionStatus::Total)
    throw AnalogyError(ErrorKind::ModalityViolation, c.id,
                       "DET1 needs a total connection; '" + c.id + "' is " + std::string(to_string(c.status)));
  auto v = check_dependency(kb, c);
  if (v.status != ConnectionStatus::Total)
    throw AnalogyError(ErrorKind::ModalityViolation, c.id,
                       "connection '" + c.id + "' does not verify total against the knowledge base");
  auto out = project(c, source, target, InferenceRule::Det1);
  out.modality = Modality::Deductive;
  return out;
}

AnalogicalConclusion apply_det2(const KnowledgeBase& kb, const Connection& c, const Instance& source,
                                const Instance& target) {
  (void)kb;
  auto out = project(c, source, target, InferenceRule::Det2);
  out.modality = Modality::Plausible;
  if (c.status == ConnectionStatus::Unverified) out.provenance.note = "connection unverified";
  if (out.agreement == Agreement::Conflict)
    out.provenance.note += std::string(out.provenance.note.empty() ? "" : "; ") +
                           "conflicts with stored value, result needs revision";
  return out;
}

}  // namespace analogy
