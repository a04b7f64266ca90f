#include "forcinglab/io.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>

#include "forcinglab/errors.hpp"

namespace forcinglab::io {

namespace {

std::vector<std::string> string_list(const Json& j, const std::string& what) {
  if (!j.is_array()) throw InputError(what + " must be a list of strings");
  std::vector<std::string> out;
  for (const auto& item : j) {
    if (!item.is_string()) throw InputError(what + " must contain only strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> pair_list(
    const Json& j, const std::string& what) {
  if (!j.is_array()) throw InputError(what + " must be a list of pairs");
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_string() ||
        !item[1].is_string())
      throw InputError(what + " entries must be two-element string lists, got " +
                       item.dump());
    out.emplace_back(item[0].get<std::string>(), item[1].get<std::string>());
  }
  return out;
}

const Json& field(const Json& doc, const std::string& name,
                  const std::string& what) {
  if (!doc.is_object())
    throw InputError(what + " must be an object with a \"" + name + "\" field");
  auto it = doc.find(name);
  if (it == doc.end())
    throw InputError(what + " is missing the \"" + name + "\" field");
  return *it;
}

// Splits a ground-atom key such as "R(n0, n1)" into symbol and arguments.
std::pair<std::string, std::vector<std::string>> split_atom_key(
    const std::string& key) {
  auto open = key.find('(');
  if (open == std::string::npos || key.back() != ')')
    throw InputError("valuation: atom key '" + key +
                     "' is not of the form R(n0, ...)");
  std::string rel = key.substr(0, open);
  std::vector<std::string> args;
  std::string current;
  for (size_t i = open + 1; i + 1 < key.size(); ++i) {
    char c = key[i];
    if (c == ',') {
      args.push_back(current);
      current.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      current += c;
    }
  }
  args.push_back(current);
  return {rel, args};
}

}  // namespace

Json read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("'" + path + "' is not a valid document: " + e.what());
  }
  return doc;
}

Poset poset_from_json(const Json& doc) {
  auto elements = string_list(field(doc, "elements", "poset document"),
                              "poset \"elements\"");
  auto leq = pair_list(field(doc, "leq", "poset document"), "poset \"leq\"");
  return Poset::from_generators(std::move(elements), leq);
}

Signature signature_from_json(const Json& doc) {
  const Json& rels = field(doc, "relations", "signature document");
  if (!rels.is_object())
    throw InputError("signature \"relations\" must map symbols to arities");
  std::vector<std::pair<std::string, int>> relations;
  for (const auto& [symbol, arity] : rels.items()) {
    if (!arity.is_number_integer())
      throw InputError("signature: arity of '" + symbol + "' must be an integer");
    relations.emplace_back(symbol, arity.get<int>());
  }
  auto names = string_list(field(doc, "names", "signature document"),
                           "signature \"names\"");
  return Signature::create(std::move(relations), std::move(names));
}

AtomicValuation valuation_from_json(const Json& doc, RegularAlgebra algebra,
                                    bool regularize, const std::string& base_dir) {
  const Json& sig_field = field(doc, "signature", "valuation document");
  Signature sig = [&] {
    if (sig_field.is_string()) {
      std::filesystem::path p = sig_field.get<std::string>();
      if (p.is_relative() && !base_dir.empty())
        p = std::filesystem::path(base_dir) / p;
      return signature_from_json(read_document(p.string()));
    }
    return signature_from_json(sig_field);
  }();

  const Json& atoms_field = field(doc, "atoms", "valuation document");
  if (!atoms_field.is_object())
    throw InputError("valuation \"atoms\" must map atom keys to element lists");
  const Poset& poset = algebra.poset();
  std::map<GroundAtom, Mask> atoms;
  for (const auto& [key, value] : atoms_field.items()) {
    auto [rel, args] = split_atom_key(key);
    GroundAtom atom{sig.relation_index(rel), {}};
    for (const auto& a : args) atom.names.push_back(sig.name_index(a));
    auto members = string_list(value, "valuation atom '" + key + "'");
    if (!atoms.emplace(std::move(atom), poset.mask_of(members)).second)
      throw InputError("valuation: atom '" + key + "' appears twice");
  }
  return AtomicValuation::create(std::move(sig), std::move(algebra), atoms,
                                 regularize);
}

EpsStructure eps_from_json(const Json& doc) {
  auto nodes = string_list(field(doc, "nodes", "eps-structure document"),
                           "eps \"nodes\"");
  auto eps = pair_list(field(doc, "eps", "eps-structure document"), "eps \"eps\"");
  return EpsStructure::create(std::move(nodes), eps);
}

DenseFamily dense_family_from_json(const Json& doc, const Poset& poset) {
  const Json& sets = field(doc, "sets", "dense-family document");
  if (!sets.is_array()) throw InputError("dense-family \"sets\" must be a list");
  std::vector<Mask> masks;
  for (const auto& s : sets)
    masks.push_back(poset.mask_of(string_list(s, "dense set")));
  return DenseFamily::of(poset, std::move(masks));
}

NameSystem name_system_from_json(const Json& doc, RegularAlgebra algebra,
                                 bool regularize) {
  const Json& names = field(doc, "names", "name-system document");
  if (!names.is_array()) throw InputError("name-system \"names\" must be a list");
  const Poset& poset = algebra.poset();
  std::vector<RawName> raws;
  for (const auto& entry : names) {
    RawName raw;
    const Json& id = field(entry, "id", "name entry");
    if (!id.is_string()) throw InputError("name entry: \"id\" must be a string");
    raw.id = id.get<std::string>();
    const Json& stage = field(entry, "stage", "name entry");
    if (!stage.is_number_integer())
      throw InputError("name '" + raw.id + "': \"stage\" must be an integer");
    raw.stage = stage.get<int>();
    const Json& table = field(entry, "table", "name entry");
    if (!table.is_object())
      throw InputError("name '" + raw.id +
                       "': \"table\" must map ids to element lists");
    for (const auto& [key, value] : table.items())
      raw.table.emplace_back(
          key, poset.mask_of(string_list(value, "table value of '" + raw.id + "'")));
    raws.push_back(std::move(raw));
  }
  return NameSystem::create(std::move(algebra), raws, regularize);
}

std::vector<Formula> formulas_from_json(const Json& doc, const Signature& sig) {
  const Json* list = &doc;
  if (doc.is_object()) list = &field(doc, "formulas", "formula document");
  if (!list->is_array())
    throw InputError("formula document must be a list of formula strings");
  std::vector<Formula> out;
  for (const auto& item : *list) {
    if (!item.is_string())
      throw InputError("formula document must contain only strings");
    out.push_back(parse_formula(item.get<std::string>(), sig));
  }
  return out;
}

Json poset_to_json(const Poset& p) {
  Json doc;
  doc["elements"] = p.elements();
  Json leq = Json::array();
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b)
      if (a != b && p.leq(a, b)) leq.push_back({p.element(a), p.element(b)});
  doc["leq"] = std::move(leq);
  return doc;
}

Json eps_to_json(const EpsStructure& e) {
  Json doc;
  doc["nodes"] = e.nodes();
  Json eps = Json::array();
  for (auto [x, y] : e.pairs()) eps.push_back({e.node(x), e.node(y)});
  doc["eps"] = std::move(eps);
  return doc;
}

Json name_system_to_json(const NameSystem& s) {
  Json doc;
  Json names = Json::array();
  for (const auto& b : s.names()) {
    Json entry;
    entry["id"] = b.id;
    entry["stage"] = b.stage;
    Json table = Json::object();
    for (const auto& [key, value] : b.table)
      table[s.name(key).id] = s.algebra().poset().names_of(value);
    entry["table"] = std::move(table);
    names.push_back(std::move(entry));
  }
  doc["names"] = std::move(names);
  return doc;
}

}  // namespace forcinglab::io
