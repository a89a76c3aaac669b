#include "matvol/matroid_json.hpp"

#include <string>

#include "matvol/errors.hpp"

namespace matvol {

namespace {

using nlohmann::json;

const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw InvalidInput(std::string("missing field \"") + key + "\"");
  }
  return obj.at(key);
}

int int_field(const json& obj, const char* key) {
  const json& v = field(obj, key);
  if (!v.is_number_integer()) {
    throw InvalidInput(std::string("field \"") + key + "\" must be an integer");
  }
  return v.get<int>();
}

std::vector<std::vector<int>> int_lists(const json& v, const char* key) {
  if (!v.is_array()) {
    throw InvalidInput(std::string("field \"") + key + "\" must be a list");
  }
  std::vector<std::vector<int>> out;
  for (const auto& item : v) {
    if (!item.is_array()) {
      throw InvalidInput(std::string("entries of \"") + key +
                         "\" must be lists of integers");
    }
    std::vector<int> row;
    for (const auto& x : item) {
      if (!x.is_number_integer()) {
        throw InvalidInput(std::string("entries of \"") + key +
                           "\" must be lists of integers");
      }
      row.push_back(x.get<int>());
    }
    out.push_back(std::move(row));
  }
  return out;
}

Matroid from_constructor(const std::string& name, const json& params) {
  if (name == "uniform") {
    return uniform(int_field(params, "rank"), int_field(params, "ground_size"));
  }
  if (name == "schubert") {
    const json& bits = field(params, "bits");
    if (!bits.is_string()) throw InvalidInput("\"bits\" must be a string");
    return schubert(BinarySequence::parse(bits.get<std::string>()));
  }
  if (name == "graphic") {
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : int_lists(field(params, "edges"), "edges")) {
      if (e.size() != 2) throw InvalidInput("edges have two endpoints");
      edges.emplace_back(e[0], e[1]);
    }
    return graphic(int_field(params, "vertices"), edges);
  }
  if (name == "sparse_paving") {
    std::vector<Subset> hyperplanes;
    for (const auto& h : int_lists(field(params, "circuit_hyperplanes"),
                                   "circuit_hyperplanes")) {
      const Subset s = subset_of(h);
      if (cardinality(s) != static_cast<int>(h.size())) {
        throw InvalidInput("circuit-hyperplane lists an element twice");
      }
      hyperplanes.push_back(s);
    }
    return sparse_paving(int_field(params, "n"), int_field(params, "d"),
                         hyperplanes);
  }
  throw InvalidInput("unknown constructor \"" + name + "\"");
}

}  // namespace

Matroid matroid_from_json(const json& doc) {
  if (!doc.is_object()) throw InvalidInput("matroid document must be an object");
  try {
    if (doc.contains("constructor")) {
      const json& name = doc.at("constructor");
      if (!name.is_string()) throw InvalidInput("\"constructor\" must be a string");
      return from_constructor(name.get<std::string>(), field(doc, "params"));
    }
    return Matroid::from_basis_lists(int_field(doc, "ground_size"),
                                     int_lists(field(doc, "bases"), "bases"));
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed matroid document: ") + e.what());
  }
}

nlohmann::ordered_json matroid_to_json(const Matroid& m) {
  nlohmann::ordered_json doc;
  doc["ground_size"] = m.ground_size();
  auto bases = nlohmann::ordered_json::array();
  for (Subset b : m.bases()) bases.push_back(elements_of(b));
  doc["bases"] = std::move(bases);
  return doc;
}

}  // namespace matvol
