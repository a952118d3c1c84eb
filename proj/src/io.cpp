#include "seps/io.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "seps/error.hpp"

namespace seps {

using nlohmann::json;

namespace {

const std::set<std::string> kKinds = {"poset", "separation-system", "universe",
                                      "involution-poset", "bipartition-universe"};

std::vector<std::string> string_array(const json& j, const std::string& field) {
  if (!j.is_array()) throw Error(ErrorKind::ParseError, "'" + field + "' must be an array");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string())
      throw Error(ErrorKind::ParseError, "'" + field + "' entries must be strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

}  // namespace

Document parse_document(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  if (!j.is_object()) throw Error(ErrorKind::ParseError, "document must be a JSON object");

  Document doc;
  if (!j.contains("kind") || !j["kind"].is_string())
    throw Error(ErrorKind::ParseError, "missing 'kind'");
  doc.kind = j["kind"].get<std::string>();
  if (!kKinds.count(doc.kind))
    throw Error(ErrorKind::ParseError, "unknown kind '" + doc.kind + "'");

  if (doc.kind == "bipartition-universe") {
    if (!j.contains("ground")) throw Error(ErrorKind::ParseError, "missing 'ground'");
    doc.ground = string_array(j["ground"], "ground");
  } else {
    if (!j.contains("elements")) throw Error(ErrorKind::ParseError, "missing 'elements'");
    doc.elements = string_array(j["elements"], "elements");
    if (j.contains("relation")) {
      if (!j["relation"].is_array())
        throw Error(ErrorKind::ParseError, "'relation' must be an array");
      for (const auto& pair : j["relation"]) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() ||
            !pair[1].is_string())
          throw Error(ErrorKind::ParseError, "'relation' entries must be [a, b] pairs");
        doc.relation.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
      }
    }
    if (j.contains("involution")) {
      if (!j["involution"].is_object())
        throw Error(ErrorKind::ParseError, "'involution' must be an object");
      for (auto it = j["involution"].begin(); it != j["involution"].end(); ++it) {
        if (!it.value().is_string())
          throw Error(ErrorKind::ParseError, "'involution' values must be strings");
        doc.involution[it.key()] = it.value().get<std::string>();
      }
    }
  }
  if (j.contains("subsystem")) doc.subsystem = string_array(j["subsystem"], "subsystem");
  if (j.contains("valuation")) {
    if (!j["valuation"].is_object())
      throw Error(ErrorKind::ParseError, "'valuation' must be an object");
    for (auto it = j["valuation"].begin(); it != j["valuation"].end(); ++it) {
      if (!it.value().is_string())
        throw Error(ErrorKind::ParseError, "'valuation' values must be rational strings");
      doc.valuation[it.key()] = it.value().get<std::string>();
    }
  }
  if (j.contains("threshold")) {
    if (!j["threshold"].is_string())
      throw Error(ErrorKind::ParseError, "'threshold' must be a rational string");
    doc.threshold = j["threshold"].get<std::string>();
    Rat::from_string(doc.threshold);  // syntax check
  }
  return doc;
}

std::string serialize_document(const Document& doc) {
  json j;
  j["kind"] = doc.kind;
  if (doc.kind == "bipartition-universe") {
    j["ground"] = doc.ground;
  } else {
    j["elements"] = doc.elements;
    json rel = json::array();
    for (const auto& [a, b] : doc.relation) rel.push_back(json::array({a, b}));
    j["relation"] = rel;
    if (!doc.involution.empty()) {
      json inv = json::object();
      for (const auto& [a, b] : doc.involution) inv[a] = b;
      j["involution"] = inv;
    }
  }
  if (!doc.subsystem.empty()) j["subsystem"] = doc.subsystem;
  if (!doc.valuation.empty()) {
    json val = json::object();
    for (const auto& [a, v] : doc.valuation) val[a] = v;
    j["valuation"] = val;
  }
  if (!doc.threshold.empty()) j["threshold"] = doc.threshold;
  return j.dump(2) + "\n";
}

const Poset& LoadedStructure::order() const {
  if (universe) return universe->poset();
  if (system) return system->poset();
  return *poset;
}

namespace {

// Everything except the per-kind law checks; throws ParseError on malformed
// input, Error(InvalidPoset) if the relation is not an order.
LoadedStructure build_structure(const Document& doc, int max_elements) {
  LoadedStructure out;
  out.kind = doc.kind;

  if (doc.kind == "bipartition-universe") {
    if (doc.ground.empty())
      throw Error(ErrorKind::ParseError, "'ground' must be non-empty");
    std::set<std::string> seen(doc.ground.begin(), doc.ground.end());
    if (int(seen.size()) != int(doc.ground.size()))
      throw Error(ErrorKind::ParseError, "duplicate ground labels");
    out.bip = bipartition_universe(doc.ground, max_elements);
    out.universe = out.bip->uni;
    out.system = out.universe->system();
    out.poset = out.universe->poset();
  } else {
    if (doc.elements.empty())
      throw Error(ErrorKind::ParseError, "'elements' must be non-empty");
    std::set<std::string> seen;
    for (const auto& lab : doc.elements)
      if (!seen.insert(lab).second)
        throw Error(ErrorKind::ParseError, "duplicate element label '" + lab + "'");
    if (int(doc.elements.size()) > max_elements)
      throw Error(ErrorKind::SizeLimitExceeded, "too many elements");

    auto index = [&](const std::string& lab) {
      auto it = std::find(doc.elements.begin(), doc.elements.end(), lab);
      if (it == doc.elements.end())
        throw Error(ErrorKind::ParseError, "unknown element label '" + lab + "'");
      return int(it - doc.elements.begin());
    };

    std::vector<std::pair<int, int>> rel;
    for (const auto& [a, b] : doc.relation) rel.emplace_back(index(a), index(b));
    out.poset = Poset(int(doc.elements.size()), rel, doc.elements);

    bool needs_involution = doc.kind != "poset";
    if (needs_involution) {
      if (doc.involution.empty())
        throw Error(ErrorKind::ParseError, "kind '" + doc.kind + "' needs an involution");
      std::vector<int> inv(doc.elements.size(), -1);
      for (const auto& [a, b] : doc.involution) inv[index(a)] = index(b);
      for (size_t i = 0; i < inv.size(); ++i)
        if (inv[i] < 0)
          throw Error(ErrorKind::ParseError,
                      "involution missing for '" + doc.elements[i] + "'");
      out.system = SepSystem(*out.poset, inv);
    }
  }

  const Poset& p = out.order();
  if (!doc.subsystem.empty()) {
    Bitset members(p.size());
    for (const auto& lab : doc.subsystem) {
      int idx = p.index_of_label(lab);
      if (idx < 0)
        throw Error(ErrorKind::ParseError, "unknown subsystem label '" + lab + "'");
      members.set(idx);
    }
    out.subsystem = members;
  }
  if (!doc.valuation.empty()) {
    std::map<int, Rat> val;
    for (const auto& [lab, str] : doc.valuation) {
      int idx = p.index_of_label(lab);
      if (idx < 0)
        throw Error(ErrorKind::ParseError, "unknown valuation label '" + lab + "'");
      val[idx] = Rat::from_string(str);
    }
    out.valuation = std::move(val);
  }
  return out;
}

}  // namespace

LoadedStructure load_structure(const Document& doc, int max_elements) {
  LoadedStructure out = build_structure(doc, max_elements);
  if (out.system) {
    Report r = out.system->validate();
    if (!r.ok()) throw Error(ErrorKind::InvalidInvolution, r.problems.front());
  }
  if (doc.kind == "universe") {
    out.universe = Universe(*out.system);  // throws NotALattice
    Report r = out.universe->validate();
    if (!r.ok()) throw Error(ErrorKind::InvalidInvolution, r.problems.front());
  }
  if (out.subsystem && out.system) {
    Report r = validate_subsystem(out.universe ? out.universe->system() : *out.system,
                                  *out.subsystem);
    if (!r.ok()) throw Error(ErrorKind::InvalidInvolution, r.problems.front());
  }
  return out;
}

Report validate_document(const Document& doc, int max_elements) {
  Report report;
  LoadedStructure built;
  try {
    built = build_structure(doc, max_elements);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidPoset) {
      report.add(e.what());
      return report;
    }
    throw;  // malformed input, not a violated law
  }

  if (built.system) {
    Report r = built.system->validate();
    report.problems.insert(report.problems.end(), r.problems.begin(), r.problems.end());
    if (doc.kind == "universe") {
      if (!built.system->poset().is_lattice()) {
        report.add("not a lattice: some pair lacks a supremum or infimum");
      } else if (r.ok()) {
        Universe u(*built.system);
        Report ur = u.validate();
        report.problems.insert(report.problems.end(), ur.problems.begin(),
                               ur.problems.end());
      }
    }
    if (built.subsystem && report.ok()) {
      Report sr = validate_subsystem(*built.system, *built.subsystem);
      report.problems.insert(report.problems.end(), sr.problems.begin(),
                             sr.problems.end());
    }
  }
  return report;
}

namespace {

Document base_document(const Poset& p, const std::string& kind) {
  Document doc;
  doc.kind = kind;
  doc.elements = p.labels();
  for (int b = 0; b < p.size(); ++b)
    for (int a : p.lower_covers(b)) doc.relation.emplace_back(p.label(a), p.label(b));
  std::sort(doc.relation.begin(), doc.relation.end());
  return doc;
}

void attach_involution(Document& doc, const SepSystem& s) {
  for (int a = 0; a < s.size(); ++a)
    doc.involution[s.poset().label(a)] = s.poset().label(s.inv(a));
}

}  // namespace

Document document_of_poset(const Poset& p) { return base_document(p, "poset"); }

Document document_of_system(const SepSystem& s) {
  Document doc = base_document(s.poset(), "separation-system");
  attach_involution(doc, s);
  return doc;
}

Document document_of_universe(const Universe& u) {
  Document doc = base_document(u.poset(), "universe");
  attach_involution(doc, u.system());
  return doc;
}

Document document_of_involution_poset(const SepSystem& s) {
  Document doc = base_document(s.poset(), "involution-poset");
  attach_involution(doc, s);
  return doc;
}

Document document_of_bipartition(const BipartitionUniverse& b) {
  Document doc;
  doc.kind = "bipartition-universe";
  doc.ground = b.ground;
  return doc;
}

void attach_subsystem(Document& doc, const Poset& p, const Bitset& members) {
  for (int a = members.first(); a >= 0; a = members.next(a))
    doc.subsystem.push_back(p.label(a));
}

void attach_valuation(Document& doc, const Poset& p, const std::vector<Rat>& values) {
  for (int a = 0; a < p.size(); ++a) doc.valuation[p.label(a)] = values[a].to_string();
}

std::string witness_to_text(const Poset& p, const InducedWitness& w) {
  std::string out;
  for (int a = 0; a < p.size(); ++a)
    out += "  f(" + p.label(a) + ") = " + w.values[a].to_string() + "\n";
  out += "  k = " + w.threshold.to_string() + "\n";
  return out;
}

}  // namespace seps
