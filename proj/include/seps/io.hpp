#pragma once

// The document format shared by the CLI and the fixtures: one JSON object
// describing a poset / separation system / universe / involution poset /
// bipartition universe, with optional subsystem and valuation payloads.
// Labels are the public identity of elements; indices are internal.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "seps/order_induced.hpp"
#include "seps/poset.hpp"
#include "seps/rational.hpp"
#include "seps/sepsys.hpp"

namespace seps {

struct Document {
  std::string kind;  // poset | separation-system | universe | involution-poset
                     // | bipartition-universe
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> relation;  // pairs a <= b
  std::map<std::string, std::string> involution;
  std::vector<std::string> ground;  // bipartition-universe only
  std::vector<std::string> subsystem;
  std::map<std::string, std::string> valuation;  // label -> "p/q"
  std::string threshold;                         // "p/q", optional
};

Document parse_document(const std::string& json_text);  // throws ParseError
std::string serialize_document(const Document& doc);    // canonical bytes

struct LoadedStructure {
  std::string kind;
  std::optional<Poset> poset;        // every kind provides the order
  std::optional<SepSystem> system;   // kinds carrying an involution
  std::optional<Universe> universe;  // universe kinds
  std::optional<BipartitionUniverse> bip;
  std::optional<Bitset> subsystem;
  std::optional<std::map<int, Rat>> valuation;

  const Poset& order() const;
};

// Builds and fully validates; throws Error on any violated invariant.
LoadedStructure load_structure(const Document& doc,
                               int max_elements = kDefaultMaxElements);

// Staged validation for the `validate` command: structural problems (unknown
// labels, bad syntax) still throw ParseError, violated mathematical laws are
// returned as report lines.
Report validate_document(const Document& doc, int max_elements = kDefaultMaxElements);

// Serialization back out of the core types; relations are emitted as cover
// pairs, elements in index order, so output bytes are deterministic.
Document document_of_poset(const Poset& p);
Document document_of_system(const SepSystem& s);
Document document_of_universe(const Universe& u);
Document document_of_involution_poset(const SepSystem& s);
Document document_of_bipartition(const BipartitionUniverse& b);

void attach_subsystem(Document& doc, const Poset& p, const Bitset& members);
void attach_valuation(Document& doc, const Poset& p, const std::vector<Rat>& values);

std::string witness_to_text(const Poset& p, const InducedWitness& w);

}  // namespace seps
