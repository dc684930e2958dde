#include "analogy/core_model.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace analogy {

using nlohmann::json;

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Validation: return "validation";
    case ErrorKind::DisjointDescription: return "disjoint-description";
    case ErrorKind::UndefinedRatio: return "undefined-ratio";
    case ErrorKind::Type: return "type";
    case ErrorKind::Coding: return "coding";
    case ErrorKind::InapplicableModel: return "inapplicable-model";
    case ErrorKind::Alphabet: return "alphabet";
    case ErrorKind::DepthExhausted: return "depth-exhausted";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::RuleInapplicable: return "rule-inapplicable";
    case ErrorKind::ModalityViolation: return "modality-violation";
    case ErrorKind::Unverifiable: return "unverifiable";
    case ErrorKind::CannotForm: return "cannot-form";
    case ErrorKind::Specification: return "specification";
    case ErrorKind::SchemeMismatch: return "scheme-mismatch";
  }
  return "unknown";
}

std::string_view to_string(ConnectionStatus s) {
  switch (s) {
    case ConnectionStatus::Total: return "total";
    case ConnectionStatus::Incomplete: return "incomplete";
    case ConnectionStatus::Unverified: return "unverified";
  }
  return "unverified";
}

std::string format_value(const FeatureValue& v) {
  if (const auto* x = std::get_if<double>(&v)) {
    std::ostringstream os;
    os << *x;
    return os.str();
  }
  std::string out = "{";
  bool first = true;
  for (const auto& s : std::get<SymbolSet>(v)) {
    if (!first) out += ", ";
    out += s;
    first = false;
  }
  return out + "}";
}

const FeatureValue* Instance::find(std::string_view aspect) const {
  auto it = values.find(std::string(aspect));
  return it == values.end() ? nullptr : &it->second;
}

std::vector<std::string> shared_aspects(const Instance& a, const Instance& b) {
  std::vector<std::string> out;
  for (const auto& [name, _] : a.values) {
    if (b.assigns(name)) out.push_back(name);
  }
  return out;
}

const AspectSchema* KnowledgeBase::aspect(std::string_view name) const {
  for (const auto& a : schema)
    if (a.name == name) return &a;
  return nullptr;
}

const Instance* KnowledgeBase::instance(std::string_view id) const {
  for (const auto& i : instances)
    if (i.id == id) return &i;
  return nullptr;
}

const Connection* KnowledgeBase::connection(std::string_view id) const {
  for (const auto& c : connections)
    if (c.id == id) return &c;
  return nullptr;
}

const Concept* KnowledgeBase::concept_by_id(std::string_view id) const {
  for (const auto& c : concepts)
    if (c.id == id) return &c;
  return nullptr;
}

const AspectSchema& KnowledgeBase::require_aspect(std::string_view name) const {
  if (const auto* a = aspect(name)) return *a;
  throw AnalogyError(ErrorKind::Validation, std::string(name),
                     "unknown aspect '" + std::string(name) + "'");
}

const Instance& KnowledgeBase::require_instance(std::string_view id) const {
  if (const auto* i = instance(id)) return *i;
  throw AnalogyError(ErrorKind::Validation, std::string(id),
                     "unknown instance '" + std::string(id) + "'");
}

namespace {

[[noreturn]] void invalid(const std::string& path, const std::string& msg) {
  throw AnalogyError(ErrorKind::Validation, path, path + ": " + msg);
}

const json& require_field(const json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) invalid(path, std::string("missing field '") + key + "'");
  return *it;
}

std::string require_string(const json& obj, const char* key, const std::string& path) {
  const json& v = require_field(obj, key, path);
  if (!v.is_string() || v.get<std::string>().empty())
    invalid(path + "/" + key, "expected a nonempty string");
  return v.get<std::string>();
}

const json& optional_array(const json& doc, const char* key) {
  static const json empty = json::array();
  auto it = doc.find(key);
  if (it == doc.end() || it->is_null()) return empty;
  if (!it->is_array()) invalid(std::string("/") + key, "expected an array");
  return *it;
}

AspectSchema parse_aspect(const json& j, const std::string& path) {
  if (!j.is_object()) invalid(path, "expected an object");
  AspectSchema a;
  a.name = require_string(j, "name", path);
  std::string kind = require_string(j, "kind", path);
  if (kind == "symbolic" || kind == "symbolic-set") {
    a.kind = AspectKind::Symbolic;
    if (j.contains("lower") || j.contains("upper"))
      invalid(path, "symbolic aspect '" + a.name + "' cannot declare bounds");
    if (auto it = j.find("positive"); it != j.end()) {
      if (!it->is_string()) invalid(path + "/positive", "expected a string");
      a.positive = it->get<std::string>();
    }
  } else if (kind == "numeric") {
    a.kind = AspectKind::Numeric;
    const json& lo = require_field(j, "lower", path);
    const json& hi = require_field(j, "upper", path);
    if (!lo.is_number()) invalid(path + "/lower", "expected a number");
    if (!hi.is_number()) invalid(path + "/upper", "expected a number");
    a.lower = lo.get<double>();
    a.upper = hi.get<double>();
    if (!(a.upper > a.lower))
      invalid(path, "numeric aspect '" + a.name + "' needs upper > lower");
    if (j.contains("positive")) invalid(path, "numeric aspect cannot declare a positive symbol");
  } else {
    invalid(path + "/kind", "unknown aspect kind '" + kind + "'");
  }
  return a;
}

FeatureValue parse_value(const json& j, const AspectSchema& aspect, const std::string& path,
                         std::vector<std::string>& warnings) {
  if (aspect.kind == AspectKind::Numeric) {
    if (!j.is_number()) invalid(path, "aspect '" + aspect.name + "' expects a number");
    double x = j.get<double>();
    if (x < aspect.lower || x > aspect.upper) {
      std::ostringstream os;
      os << "value " << x << " for aspect '" << aspect.name << "' outside [" << aspect.lower
         << ", " << aspect.upper << "]";
      invalid(path, os.str());
    }
    return x;
  }
  if (!j.is_array()) invalid(path, "aspect '" + aspect.name + "' expects an array of symbols");
  SymbolSet set;
  for (std::size_t k = 0; k < j.size(); ++k) {
    if (!j[k].is_string()) invalid(path + "/" + std::to_string(k), "expected a string symbol");
    if (!set.insert(j[k].get<std::string>()).second)
      warnings.push_back(path + ": duplicate symbol '" + j[k].get<std::string>() + "' collapsed");
  }
  return set;
}

std::set<std::string> parse_name_set(const json& j, const std::string& path) {
  if (!j.is_array()) invalid(path, "expected an array of names");
  std::set<std::string> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    if (!j[k].is_string()) invalid(path + "/" + std::to_string(k), "expected a string");
    out.insert(j[k].get<std::string>());
  }
  return out;
}

ConnectionStatus parse_status(const std::string& s, const std::string& path) {
  if (s == "total") return ConnectionStatus::Total;
  if (s == "incomplete") return ConnectionStatus::Incomplete;
  if (s == "unverified") return ConnectionStatus::Unverified;
  invalid(path, "unknown connection status '" + s + "'");
}

}  // namespace

KnowledgeBase load_knowledge_base(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw AnalogyError(ErrorKind::Parse, "", std::string("malformed document: ") + e.what());
  }
  if (!doc.is_object()) throw AnalogyError(ErrorKind::Parse, "", "document must be a JSON object");

  KnowledgeBase kb;
  auto schema_it = doc.find("schema");
  if (schema_it == doc.end() || !schema_it->is_array()) invalid("/schema", "missing schema array");

  for (std::size_t k = 0; k < schema_it->size(); ++k) {
    std::string path = "/schema/" + std::to_string(k);
    AspectSchema a = parse_aspect((*schema_it)[k], path);
    if (kb.aspect(a.name)) invalid(path, "duplicate aspect '" + a.name + "'");
    kb.schema.push_back(std::move(a));
  }

  const json& instances = optional_array(doc, "instances");
  for (std::size_t k = 0; k < instances.size(); ++k) {
    std::string path = "/instances/" + std::to_string(k);
    const json& j = instances[k];
    if (!j.is_object()) invalid(path, "expected an object");
    Instance inst;
    inst.id = require_string(j, "id", path);
    if (kb.instance(inst.id)) invalid(path, "duplicate instance id '" + inst.id + "'");
    if (auto it = j.find("values"); it != j.end()) {
      if (!it->is_object()) invalid(path + "/values", "expected an object");
      for (const auto& [name, value] : it->items()) {
        std::string vpath = path + "/values/" + name;
        const AspectSchema* a = kb.aspect(name);
        if (!a) invalid(vpath, "unknown aspect '" + name + "'");
        inst.values.emplace(name, parse_value(value, *a, vpath, kb.warnings));
      }
    }
    kb.instances.push_back(std::move(inst));
  }

  const json& connections = optional_array(doc, "connections");
  for (std::size_t k = 0; k < connections.size(); ++k) {
    std::string path = "/connections/" + std::to_string(k);
    const json& j = connections[k];
    if (!j.is_object()) invalid(path, "expected an object");
    Connection c;
    c.id = j.contains("id") ? require_string(j, "id", path) : "connection" + std::to_string(k);
    if (kb.connection(c.id)) invalid(path, "duplicate connection id '" + c.id + "'");
    c.determinants = parse_name_set(require_field(j, "P", path), path + "/P");
    if (c.determinants.empty()) invalid(path + "/P", "P must be nonempty");
    c.dependent = require_string(j, "Q", path);
    if (c.determinants.contains(c.dependent)) invalid(path, "Q must not belong to P");
    for (const auto& p : c.determinants)
      if (!kb.aspect(p)) invalid(path + "/P", "unknown aspect '" + p + "'");
    if (!kb.aspect(c.dependent)) invalid(path + "/Q", "unknown aspect '" + c.dependent + "'");
    if (j.contains("status")) c.status = parse_status(require_string(j, "status", path), path + "/status");
    kb.connections.push_back(std::move(c));
  }

  const json& concepts = optional_array(doc, "concepts");
  for (std::size_t k = 0; k < concepts.size(); ++k) {
    std::string path = "/concepts/" + std::to_string(k);
    const json& j = concepts[k];
    if (!j.is_object()) invalid(path, "expected an object");
    Concept c;
    c.id = require_string(j, "id", path);
    if (kb.concept_by_id(c.id)) invalid(path, "duplicate concept id '" + c.id + "'");
    c.members = parse_name_set(require_field(j, "members", path), path + "/members");
    for (const auto& m : c.members)
      if (!kb.instance(m)) invalid(path + "/members", "unknown instance '" + m + "'");
    if (auto it = j.find("order"); it != j.end()) {
      if (!it->is_array()) invalid(path + "/order", "expected an array of pairs");
      for (std::size_t p = 0; p < it->size(); ++p) {
        std::string ppath = path + "/order/" + std::to_string(p);
        const json& pair = (*it)[p];
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
          invalid(ppath, "expected a pair [lower, upper] of member ids");
        auto lo = pair[0].get<std::string>();
        auto hi = pair[1].get<std::string>();
        if (!c.members.contains(lo)) invalid(ppath, "'" + lo + "' is not a member");
        if (!c.members.contains(hi)) invalid(ppath, "'" + hi + "' is not a member");
        c.order.emplace(lo, hi);
      }
    }
    if (auto it = j.find("relevant"); it != j.end()) {
      if (!it->is_object()) invalid(path + "/relevant", "expected an object");
      for (const auto& [member, aspects] : it->items()) {
        std::string rpath = path + "/relevant/" + member;
        if (!c.members.contains(member)) invalid(rpath, "'" + member + "' is not a member");
        auto names = parse_name_set(aspects, rpath);
        for (const auto& n : names)
          if (!kb.aspect(n)) invalid(rpath, "unknown aspect '" + n + "'");
        c.relevant[member] = std::move(names);
      }
    }
    kb.concepts.push_back(std::move(c));
  }

  return kb;
}

KnowledgeBase load_knowledge_base_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw AnalogyError(ErrorKind::Parse, path, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_knowledge_base(buf.str());
}

namespace {

json value_to_json(const FeatureValue& v) {
  if (const auto* x = std::get_if<double>(&v)) return *x;
  json arr = json::array();
  for (const auto& s : std::get<SymbolSet>(v)) arr.push_back(s);
  return arr;
}

template <class T, class Key>
std::vector<T> sorted_by(std::vector<T> items, Key key) {
  std::sort(items.begin(), items.end(), [&](const T& a, const T& b) { return key(a) < key(b); });
  return items;
}

}  // namespace

std::string serialize_knowledge_base(const KnowledgeBase& kb) {
  json doc;
  doc["schema"] = json::array();
  for (const auto& a : sorted_by(kb.schema, [](const AspectSchema& a) { return a.name; })) {
    json j = {{"name", a.name}, {"kind", a.kind == AspectKind::Numeric ? "numeric" : "symbolic"}};
    if (a.kind == AspectKind::Numeric) {
      j["lower"] = a.lower;
      j["upper"] = a.upper;
    }
    if (a.positive) j["positive"] = *a.positive;
    doc["schema"].push_back(std::move(j));
  }
  doc["instances"] = json::array();
  for (const auto& i : sorted_by(kb.instances, [](const Instance& i) { return i.id; })) {
    json values = json::object();
    for (const auto& [name, v] : i.values) values[name] = value_to_json(v);
    doc["instances"].push_back({{"id", i.id}, {"values", std::move(values)}});
  }
  doc["connections"] = json::array();
  for (const auto& c : sorted_by(kb.connections, [](const Connection& c) { return c.id; })) {
    doc["connections"].push_back({{"id", c.id},
                                  {"P", c.determinants},
                                  {"Q", c.dependent},
                                  {"status", std::string(to_string(c.status))}});
  }
  doc["concepts"] = json::array();
  for (const auto& c : sorted_by(kb.concepts, [](const Concept& c) { return c.id; })) {
    json order = json::array();
    for (const auto& [lo, hi] : c.order) order.push_back({lo, hi});
    json relevant = json::object();
    for (const auto& [m, aspects] : c.relevant) relevant[m] = aspects;
    doc["concepts"].push_back(
        {{"id", c.id}, {"members", c.members}, {"order", std::move(order)}, {"relevant", std::move(relevant)}});
  }
  return doc.dump(2);
}

bool equivalent(const KnowledgeBase& a, const KnowledgeBase& b) {
  auto by_name = [](const AspectSchema& x) { return x.name; };
  auto by_id = [](const auto& x) { return x.id; };
  return sorted_by(a.schema, by_name) == sorted_by(b.schema, by_name) &&
         sorted_by(a.instances, by_id) == sorted_by(b.instances, by_id) &&
         sorted_by(a.connections, by_id) == sorted_by(b.connections, by_id) &&
         sorted_by(a.concepts, by_id) == sorted_by(b.concepts, by_id);
}

MatchCounts instance_match_counts(const Instance& a, const Instance& b) {
  MatchCounts counts;
  for (const auto& [name, va] : a.values) {
    const FeatureValue* vb = b.find(name);
    if (!vb) continue;
    ++counts.shared;
    if (va == *vb) ++counts.matched;
  }
  if (counts.shared == 0)
    throw AnalogyError(ErrorKind::DisjointDescription, a.id + "," + b.id,
                       "instances '" + a.id + "' and '" + b.id + "' share no assigned aspect");
  return counts;
}

}  // namespace analogy
